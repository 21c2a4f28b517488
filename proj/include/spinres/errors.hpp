#pragma once

#include <stdexcept>
#include <string>

namespace spinres {

// Caller supplied malformed input (bad range, arity mismatch, unparseable value).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation is not defined for the given operands (e.g. composing two restrictions).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A substitution hit a zero of some coefficient denominator.
class EvaluationAtPole : public std::domain_error {
public:
    explicit EvaluationAtPole(const std::string& where)
        : std::domain_error("evaluation at pole: " + where) {}
};

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace spinres
