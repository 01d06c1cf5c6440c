#pragma once

#include <stdexcept>
#include <string>

namespace tdmv {

enum class ProcessKind { WhiteNoise, AR1 };

/// Whether a series (or a matrix estimated from one) describes price levels
/// or price increments.
enum class Layer { PriceLevel, IncrementLevel };

/// How an auto-covariance matrix was obtained.
enum class Provenance { True, Sampled, Cleaned, Averaged };

std::string to_string(ProcessKind k);
std::string to_string(Layer l);
std::string to_string(Provenance p);

ProcessKind process_kind_from_string(const std::string& s);
Layer layer_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);

/// Base class of all library errors. `kind()` is a stable machine-readable
/// tag used by the CLI when emitting structured errors.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

class LayerMismatchError : public Error {
public:
    explicit LayerMismatchError(const std::string& what) : Error("layer_mismatch", what) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error("size", what) {}
};

class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what)
        : Error("insufficient_data", what) {}
};

class DegenerateWindowError : public Error {
public:
    explicit DegenerateWindowError(const std::string& what)
        : Error("degenerate_window", what) {}
};

/// Thrown when a covariance matrix is numerically singular or indefinite.
/// Carries the 2-norm condition estimate that triggered the rejection.
class IllConditionedError : public Error {
public:
    IllConditionedError(const std::string& what, double condition_estimate)
        : Error("ill_conditioned", what), condition_(condition_estimate) {}
    double condition_estimate() const { return condition_; }

private:
    double condition_;
};

/// Thrown when the drift vector is (numerically) proportional to the ones
/// vector, so the target-return constraint adds nothing beyond
/// normalization. Callers should fall back to the global minimum strategy.
class DegenerateConstraintError : public Error {
public:
    explicit DegenerateConstraintError(const std::string& what)
        : Error("degenerate_constraint", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io", what) {}
};

}  // namespace tdmv
