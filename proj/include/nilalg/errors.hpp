#pragma once

#include <stdexcept>
#include <string>

namespace nilalg {

enum class ErrorKind {
    MalformedScalar,
    EvaluationPole,
    PoleAtZero,
    DivisionByZero,
    MixedRadicand,
    DimensionMismatch,
    SingularMatrix,
    NotAnIdeal,
    ZeroAnnihilator,
    NotACocycle,
    ParseError,
    UnknownId,
    ExcludedParameter,
    ConstraintViolation,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace nilalg
