#pragma once

#include <stdexcept>
#include <string>

namespace ddcosmo {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Disk pair is tangent, disjoint, or one contains the other.
class DegenerateGeometry : public Error {
public:
    using Error::Error;
};

/// Point lies on the slits {(x,0) : |x| >= 1} where the bipolar map is undefined.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Evaluation point is not inside the disk.
class OutsideDisk : public Error {
public:
    using Error::Error;
};

/// Strip samples live on different line rules.
class GridMismatch : public Error {
public:
    using Error::Error;
};

/// Doubling the panel count moved a matrix entry by more than the tolerance.
class QuadratureUnconverged : public Error {
public:
    using Error::Error;
};

/// Direct solve residual exceeded its threshold.
class SolveFailure : public Error {
public:
    using Error::Error;
};

/// Dense eigensolver did not converge.
class EigenFailure : public Error {
public:
    using Error::Error;
};

/// Partition-of-unity evaluation point lies in no other disk.
class NoCoveringDisk : public Error {
public:
    using Error::Error;
};

/// Hardy norm integrand summed to a negative value; the three-line samples
/// are not mutually consistent.
class NegativeNorm : public Error {
public:
    using Error::Error;
};

/// Configuration file is malformed or contains unknown keys.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A computed quantity violated a hard numerical guarantee.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

} // namespace ddcosmo
