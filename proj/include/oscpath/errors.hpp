#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace oscpath {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An instance description violates the path-system definition
/// (height ordering or height/time parity).
struct SpecError : Error {
    using Error::Error;
};

/// An operation was invoked with structurally incompatible arguments
/// (mismatched variable counts, windows or truncation degrees).
struct ContractError : Error {
    using Error::Error;
};

/// Evaluation settings fall below the bounds required for an exact result.
struct SettingsError : Error {
    using Error::Error;
};

/// Exact rational evaluation hit a vanishing denominator; the caller
/// should re-sample the evaluation point.
struct EvalError : Error {
    using Error::Error;
};

/// A computation exceeded its time budget, or a guard refused to start
/// an enumeration that would blow past desk scale.
struct BudgetError : Error {
    using Error::Error;
};

/// Malformed user input (height lists, rationals, flag values).
struct ParseError : Error {
    using Error::Error;
};

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw ContractError(msg);
}

}  // namespace detail

/// Cooperative wall-clock budget.  Default-constructed deadlines never
/// expire; long-running loops poll check() at coarse intervals.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double seconds) {
        Deadline d;
        d.when_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const {
        return when_ && std::chrono::steady_clock::now() > *when_;
    }

    void check(const char* what) const {
        if (expired()) throw BudgetError(std::string(what) + ": time budget exceeded");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> when_;
};

}  // namespace oscpath
