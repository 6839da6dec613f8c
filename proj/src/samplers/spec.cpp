#include "nsv/samplers/spec.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace nsv {

namespace {

[[noreturn]] void bad_sampler(const std::string& text) {
  throw std::invalid_argument("unknown sampler: " + text);
}

std::size_t parse_steps(const std::string& text, const char* first,
                        const char* last) {
  std::size_t steps = 0;
  const auto [ptr, ec] = std::from_chars(first, last, steps);
  if (ec != std::errc{} || ptr != last || steps == 0) bad_sampler(text);
  return steps;
}

}  // namespace

SamplerSpec parse_sampler_spec(const std::string& text) {
  if (text == "rejection") return {RejectionSpec{}};
  if (text == "radfriends") return {RegionSpec{.norm = Norm::euclidean}};
  if (text == "supfriends") return {RegionSpec{.norm = Norm::supremum}};

  constexpr std::string_view adapt = "mcmc-adapt-";
  if (text.rfind(adapt, 0) == 0) {
    McmcSpec spec;
    spec.steps = parse_steps(text, text.data() + adapt.size(),
                             text.data() + text.size());
    spec.scale = McmcScaleAdaptive{};
    return {spec};
  }

  constexpr std::string_view fixed = "mcmc-fixed-";
  if (text.rfind(fixed, 0) == 0) {
    // The sigma part may itself contain '-' (e.g. "1e-5"), so let strtod eat
    // as much as it can and require a "-<steps>" tail.
    const char* begin = text.c_str() + fixed.size();
    char* after_sigma = nullptr;
    const double sigma = std::strtod(begin, &after_sigma);
    if (after_sigma == begin || *after_sigma != '-' || !(sigma > 0.0)) {
      bad_sampler(text);
    }
    McmcSpec spec;
    spec.steps =
        parse_steps(text, after_sigma + 1, text.data() + text.size());
    spec.scale = McmcScaleFixed{sigma};
    return {spec};
  }
  bad_sampler(text);
}

std::string format_sampler_spec(const SamplerSpec& spec) {
  if (std::holds_alternative<RejectionSpec>(spec.kind)) return "rejection";
  if (const auto* mcmc = std::get_if<McmcSpec>(&spec.kind)) {
    std::ostringstream out;
    if (const auto* fixed = std::get_if<McmcScaleFixed>(&mcmc->scale)) {
      out << "mcmc-fixed-" << fixed->sigma << '-' << mcmc->steps;
    } else {
      out << "mcmc-adapt-" << mcmc->steps;
    }
    return out.str();
  }
  const auto& region = std::get<RegionSpec>(spec.kind);
  return region.norm == Norm::euclidean ? "radfriends" : "supfriends";
}

DrawVariant parse_draw_variant(const std::string& text) {
  if (text == "global" || text == "global_rejection") {
    return DrawVariant::global_rejection;
  }
  if (text == "near" || text == "near_point") return DrawVariant::near_point;
  if (text == "auto") return DrawVariant::automatic;
  throw std::invalid_argument("unknown draw variant: " + text);
}

}  // namespace nsv
