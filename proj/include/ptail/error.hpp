#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptail {

// Estimator preconditions: thrown when fewer exceedances than the operation
// needs; carries the observed count.
class insufficient_exceedances : public std::runtime_error {
public:
    insufficient_exceedances(std::size_t got, std::size_t need)
        : std::runtime_error("insufficient exceedances: have " + std::to_string(got) +
                             ", need at least " + std::to_string(need)),
          count_(got) {}

    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

// Variance estimators need a minimum total sample size.
class insufficient_sample : public std::runtime_error {
public:
    insufficient_sample(std::size_t got, std::size_t need)
        : std::runtime_error("insufficient sample: n = " + std::to_string(got) +
                             ", need at least " + std::to_string(need)),
          count_(got) {}

    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

// Numeric integration did not reach the requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double value, double err_estimate)
        : std::runtime_error(what + " (value=" + std::to_string(value) +
                             ", err=" + std::to_string(err_estimate) + ")"),
          value_(value),
          err_(err_estimate) {}

    double value() const noexcept { return value_; }
    double err_estimate() const noexcept { return err_; }

private:
    double value_;
    double err_;
};

// Root bracket for the tail-value inversion does not contain the target.
class bracket_error : public std::domain_error {
    using std::domain_error::domain_error;
};

// More than half of the bootstrap replicates were unusable.
class unstable_bootstrap : public std::runtime_error {
public:
    unstable_bootstrap(std::size_t dropped, std::size_t total)
        : std::runtime_error("unstable bootstrap: " + std::to_string(dropped) + " of " +
                             std::to_string(total) + " replicates dropped"),
          dropped_(dropped),
          total_(total) {}

    std::size_t dropped() const noexcept { return dropped_; }
    std::size_t total() const noexcept { return total_; }

private:
    std::size_t dropped_;
    std::size_t total_;
};

// Config file problems; collects the offending keys.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& what, std::vector<std::string> keys = {})
        : std::runtime_error(what), keys_(std::move(keys)) {}

    const std::vector<std::string>& keys() const noexcept { return keys_; }

private:
    std::vector<std::string> keys_;
};

// Input data (file/column) problems.
class data_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ptail
