#pragma once

#include <stdexcept>

namespace qsl {

// Construction / argument validation failures.
struct NotSquare : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotHermitian : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NotNormalized : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct DimensionMismatch : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct OutOfRange : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct NonPositiveSlope : std::invalid_argument { using std::invalid_argument::invalid_argument; };
struct UnknownVariant : std::invalid_argument { using std::invalid_argument::invalid_argument; };

// Domain conditions that make the requested quantity undefined.
struct ZeroSpread : std::domain_error { using std::domain_error::domain_error; };
struct Unrealizable : std::domain_error { using std::domain_error::domain_error; };

// Runtime failures.
struct NotReached : std::runtime_error { using std::runtime_error::runtime_error; };
struct IoError : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace qsl
