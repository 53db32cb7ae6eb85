#ifndef NZFLOW_ERRORS_HPP
#define NZFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nzflow {

/// Malformed input data or a violated structural invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A theorem hypothesis does not hold for the given instance; the message
/// names the violated bound.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A required nowhere-zero flow provably does not exist (shown by exhaustion).
class FlowlessError : public std::runtime_error {
public:
    explicit FlowlessError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace nzflow

#endif
