#pragma once

#include <stdexcept>
#include <string>

namespace nsv {

// Raised when a constrained sampler exhausts its budget without producing a
// point above the likelihood threshold.
class SamplerStalledError : public std::runtime_error {
 public:
  explicit SamplerStalledError(const std::string& detail)
      : std::runtime_error("sampler stalled: " + detail) {}

 protected:
  // For subclasses wrapping an already-prefixed message.
  struct Verbatim {};
  SamplerStalledError(Verbatim, const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace nsv
