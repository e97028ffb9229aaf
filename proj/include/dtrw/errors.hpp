#pragma once

#include <stdexcept>
#include <string>

namespace dtrw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonCommensurateDomain : Error { using Error::Error; };
struct TimeNotReachable : Error { using Error::Error; };
struct NonFiniteForce : Error { using Error::Error; };
struct StencilOutOfRange : Error { using Error::Error; };
struct ProbabilityOutOfRange : Error { using Error::Error; };
struct NegativeDirichletOnUnsplitRun : Error { using Error::Error; };
struct DegenerateGhost : Error { using Error::Error; };
struct NonFiniteField : Error { using Error::Error; };
struct NonPositivePhi : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DegenerateFit : Error { using Error::Error; };
struct ConfigInvalid : Error { using Error::Error; };

} // namespace dtrw
