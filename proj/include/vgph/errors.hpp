#pragma once

#include <stdexcept>
#include <string>

namespace vgph {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix inversion hit the determinant floor. Carries the offending magnitude.
class SingularError : public Error {
public:
    SingularError(const std::string& what, double det_magnitude)
        : Error(what), det_magnitude_(det_magnitude) {}
    double det_magnitude() const { return det_magnitude_; }

private:
    double det_magnitude_;
};

/// Non-finite values where finite ones were promised (training divergence,
/// exponential overflow, NaN inputs).
class NumericError : public Error {
public:
    using Error::Error;
};

/// Malformed file contents: bad magic, truncated records, invalid schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// Filesystem-level failures (missing file, short write).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace vgph
