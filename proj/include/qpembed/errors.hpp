#pragma once

#include <stdexcept>
#include <string>

namespace qpembed {

// Caller violated a documented precondition (bad prime, zero denominator, ...).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ParseError : UsageError {
    explicit ParseError(const std::string& msg) : UsageError(msg) {}
};

// Addition cancelled every known digit: the valuation of the result cannot
// be certified at the tracked precision.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotASquare : std::domain_error {
    explicit NotASquare(const std::string& msg) : std::domain_error(msg) {}
};

struct NotASimpleRoot : std::domain_error {
    explicit NotASimpleRoot(const std::string& msg) : std::domain_error(msg) {}
};

struct ZeroHasNoClass : std::domain_error {
    explicit ZeroHasNoClass(const std::string& msg) : std::domain_error(msg) {}
};

// A witness failed its own Gram verification; indicates a bug, never expected.
struct VerificationFailed : std::logic_error {
    explicit VerificationFailed(const std::string& msg) : std::logic_error(msg) {}
};

struct RetryBudgetExhausted : std::runtime_error {
    explicit RetryBudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// An oracle could neither certify nor refute within its budget.
struct Inconclusive : std::runtime_error {
    explicit Inconclusive(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qpembed
