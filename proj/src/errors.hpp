#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace etasch {

// Bad call arguments (lengths, ranges, preconditions).
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside the mathematical domain (|E| >= 2, eta out of range, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested regime exists in the model but is not simulated (eta = 0 SDE).
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation blew up or failed to converge; carries location/diagnostic.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& what, long step = -1, double diagnostic = 0.0)
        : std::runtime_error(what), step_(step), diagnostic_(diagnostic) {}
    long step() const { return step_; }
    double diagnostic() const { return diagnostic_; }

private:
    long step_;
    double diagnostic_;
};

// An internal consistency check failed (non-monotone coupling, digest mismatch).
class integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Config rejected; collects every violation, not just the first.
class config_error : public std::runtime_error {
public:
    explicit config_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid config:";
        for (const auto& x : v) {
            s += "\n  - ";
            s += x;
        }
        return s;
    }
    std::vector<std::string> violations_;
};

} // namespace etasch
