#include "nsv/samplers/mcmc.hpp"
#include "nsv/samplers/region.hpp"
#include "nsv/samplers/rejection.hpp"

namespace nsv {

std::unique_ptr<ConstrainedSampler> make_sampler(const SamplerSpec& spec,
                                                 std::uint64_t stall_budget) {
  if (std::holds_alternative<RejectionSpec>(spec.kind)) {
    return std::make_unique<RejectionSampler>(stall_budget);
  }
  if (const auto* mcmc = std::get_if<McmcSpec>(&spec.kind)) {
    return std::make_unique<McmcSampler>(*mcmc);
  }
  return std::make_unique<RegionSampler>(std::get<RegionSpec>(spec.kind),
                                         stall_budget);
}

}  // namespace nsv
