#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hydrolim {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid parameter value (eps <= 0, bad axis, C <= 0, ...).
class ParameterError : public Error {
  public:
    using Error::Error;
};

/// Mean-zero gauge violated by the right-hand side of a pressure solve.
class GaugeError : public Error {
  public:
    using Error::Error;
};

/// Vertical antiderivative requested for data with nonzero z-mean; the
/// primitive would not be periodic. Carries the offending horizontal modes.
class PeriodicityError : public Error {
  public:
    PeriodicityError(const std::string& what, std::vector<std::pair<int, int>> modes)
        : Error(what), offending_modes(std::move(modes)) {}

    std::vector<std::pair<int, int>> offending_modes;
};

/// Two fields that must share a grid do not.
class GridMismatchError : public Error {
  public:
    using Error::Error;
};

/// Advective CFL number exceeded the configured limit.
class CflError : public Error {
  public:
    CflError(const std::string& what, double suggested)
        : Error(what), suggested_dt(suggested) {}

    double suggested_dt;
};

/// One sample of the norm history carried by a blow-up report.
struct BlowUpSample {
    double t;
    double umax;
    double l2;
};

/// Solution exceeded the blow-up threshold or produced NaN/Inf.
class BlowUpError : public Error {
  public:
    BlowUpError(const std::string& what, double t, std::vector<BlowUpSample> hist)
        : Error(what), time(t), history(std::move(hist)) {}

    double time;
    std::vector<BlowUpSample> history;
};

/// Manifest / configuration parse failure; line == 0 when not line-specific.
class ManifestError : public Error {
  public:
    ManifestError(const std::string& what, int line_number = 0)
        : Error(what), line(line_number) {}

    int line;
};

/// Input/output failure (missing file, short read, bad header).
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace hydrolim
