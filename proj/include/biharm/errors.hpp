#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace biharm {

/// Input outside the admissible domain of an operation (|z| >= 1, bad radius,
/// malformed numeric parameter, ...).  CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested at a point where the quantity is genuinely singular
/// (e.g. the kernel gradient on the diagonal z == w).
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

/// A hypothesis of the requested estimate is not satisfied (map not into the
/// closed disk, data not analytic, zero boundary data required, ...).  Carries
/// the name of the gate that failed.  CLI maps this to exit code 1.
class HypothesisError : public std::runtime_error {
public:
    HypothesisError(std::string gate, const std::string& what)
        : std::runtime_error(what), gate_(std::move(gate)) {}
    const std::string& gate() const { return gate_; }

private:
    std::string gate_;
};

/// Adaptive refinement hit its doubling cap before reaching the requested
/// tolerance.  Carries the best value seen and its error estimate so callers
/// can still report something useful.  CLI maps this to exit code 3.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::complex<double> best, double est_error)
        : std::runtime_error(what), best_(best), est_error_(est_error) {}
    std::complex<double> best() const { return best_; }
    double est_error() const { return est_error_; }

private:
    std::complex<double> best_;
    double est_error_;
};

/// Problem-file or report-file syntax/limit violation.  line == 0 means the
/// error is not tied to a specific line.  CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace biharm
