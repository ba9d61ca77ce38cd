#pragma once

#include <stdexcept>
#include <string>

namespace gbmhit {

/// Base class of every error raised by the library. `code()` is a stable
/// machine-readable identifier used by the command-line front end.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

  private:
    std::string code_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& what, std::string code = "domain")
        : Error(std::move(code), what) {}
};

/// Complex argument on the branch cut (-inf, 0].
class CutViolation : public DomainError {
  public:
    explicit CutViolation(const std::string& what) : DomainError(what, "cut_violation") {}
};

/// Argument outside the range where the implementation certifies accuracy.
class AccuracyError : public DomainError {
  public:
    explicit AccuracyError(const std::string& what) : DomainError(what, "accuracy_range") {}
};

class OverflowError : public DomainError {
  public:
    explicit OverflowError(const std::string& what) : DomainError(what, "overflow") {}
};

/// Moment requested beyond the integrability range of w.
class IntegrabilityError : public DomainError {
  public:
    explicit IntegrabilityError(const std::string& what) : DomainError(what, "integrability") {}
};

/// Operation called on a parameter branch it does not serve.
class BranchError : public DomainError {
  public:
    explicit BranchError(const std::string& what) : DomainError(what, "branch") {}
};

/// Numerical procedure failed to reach its tolerance. Carries the best value
/// and the achieved error estimate.
class NonConvergence : public Error {
  public:
    NonConvergence(const std::string& what, double value, double achieved_error,
                   std::string code = "nonconvergence")
        : Error(std::move(code), what), value_(value), achieved_(achieved_error) {}
    double value() const noexcept { return value_; }
    double achieved_error() const noexcept { return achieved_; }

  private:
    double value_;
    double achieved_;
};

/// Integrand sampled above its declared exponential envelope.
class EnvelopeViolation : public NonConvergence {
  public:
    EnvelopeViolation(const std::string& what, double value, double achieved_error)
        : NonConvergence(what, value, achieved_error, "envelope_violation") {}
};

/// Zero search found a different number of zeros than the counting rule.
class CountMismatch : public NonConvergence {
  public:
    CountMismatch(const std::string& what, int expected, int found)
        : NonConvergence(what, found, expected - found, "count_mismatch") {}
};

} // namespace gbmhit
