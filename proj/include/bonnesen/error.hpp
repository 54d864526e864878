#pragma once

#include <stdexcept>
#include <string>

namespace bonn {

struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : GeomError {
    using GeomError::GeomError;
};
struct Unsupported : GeomError {
    using GeomError::GeomError;
};
struct ZeroDirection : GeomError {
    using GeomError::GeomError;
};
struct DegenerateBody : GeomError {
    using GeomError::GeomError;
};
struct OutOfRange : GeomError {
    using GeomError::GeomError;
};
struct NonPositiveVolume : GeomError {
    using GeomError::GeomError;
};
struct NotATranslate : GeomError {
    using GeomError::GeomError;
};
struct PreconditionViolated : GeomError {
    using GeomError::GeomError;
};
struct DegenerateSample : GeomError {
    using GeomError::GeomError;
};

}  // namespace bonn
