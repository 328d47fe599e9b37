#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace r2kit {

// Base error; exit_code() maps onto the CLI exit status.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual int exit_code() const { return 1; }
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
    int exit_code() const override { return 2; }
};

// Numerical breakdown; index carries the offending recurrence or pivot index when known.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what, std::optional<int> index = std::nullopt)
        : Error(index ? what + " (index " + std::to_string(*index) + ")" : what), index_(index) {}
    int exit_code() const override { return 3; }
    std::optional<int> index() const { return index_; }

private:
    std::optional<int> index_;
};

// A perturbation sequence fails a reduction condition.
class AdmissibilityError : public Error {
public:
    AdmissibilityError(const std::string& condition, int index, double residual)
        : Error("condition " + condition + " violated at n=" + std::to_string(index) +
                " (residual " + std::to_string(residual) + ")"),
          condition_(condition), index_(index), residual_(residual) {}
    const std::string& condition() const { return condition_; }
    int index() const { return index_; }
    double residual() const { return residual_; }

private:
    std::string condition_;
    int index_;
    double residual_;
};

}  // namespace r2kit
