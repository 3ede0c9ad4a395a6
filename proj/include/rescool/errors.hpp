#pragma once

#include <stdexcept>
#include <string>

namespace rescool {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

/// Post-selection requested on a branch whose probability is (numerically) zero.
class ZeroBranch : public Error {
public:
    using Error::Error;
};

class RestartCapExceeded : public Error {
public:
    using Error::Error;
};

/// The success-probability product diverges (a0 * c >= 1).
class DivergentTail : public Error {
public:
    using Error::Error;
};

/// A sweep produced no resolvable peak.
class FlatCurve : public Error {
public:
    using Error::Error;
};

class SizeCap : public Error {
public:
    using Error::Error;
};

class BadDimension : public Error {
public:
    using Error::Error;
};

/// epsilon0 is not tuned to E1 + 1 while strict resonance is requested.
class OffResonanceConfig : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace rescool
