#pragma once

#include <cstddef>
#include <string>
#include <variant>

#include "nsv/core/distance.hpp"

namespace nsv {

struct RejectionSpec {};

struct McmcScaleAdaptive {
  double initial = 0.1;
};
struct McmcScaleFixed {
  double sigma = 0.1;
};

struct McmcSpec {
  std::size_t steps = 20;
  std::variant<McmcScaleAdaptive, McmcScaleFixed> scale = McmcScaleAdaptive{};
};

// global_rejection draws from the whole prior and keeps points near the live
// set; near_point samples a neighbourhood of a random live point and thins by
// local multiplicity. automatic starts global and drops to near_point once
// the trailing acceptance falls below 5%.
enum class DrawVariant { global_rejection, near_point, automatic };

struct RegionSpec {
  Norm norm = Norm::euclidean;
  std::size_t bootstrap_rounds = 50;
  DrawVariant draw_variant = DrawVariant::near_point;
  std::size_t update_interval = 1;
};

struct SamplerSpec {
  std::variant<RejectionSpec, McmcSpec, RegionSpec> kind = RejectionSpec{};
};

// Accepted forms: "rejection", "mcmc-adapt-<steps>", "mcmc-fixed-<sigma>-<steps>",
// "radfriends", "supfriends". Throws std::invalid_argument otherwise.
SamplerSpec parse_sampler_spec(const std::string& text);
std::string format_sampler_spec(const SamplerSpec& spec);

DrawVariant parse_draw_variant(const std::string& text);

}  // namespace nsv
