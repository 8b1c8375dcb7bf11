#pragma once

#include <stdexcept>
#include <string>

namespace bettikit {

// Base of everything a caller can meaningfully recover from.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class MixedFields : public Error {
public:
    explicit MixedFields(const std::string& msg = "operands live in different fields") : Error(msg) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

class BadCharacteristic : public Error {
public:
    explicit BadCharacteristic(const std::string& msg) : Error(msg) {}
};

class MixedRings : public Error {
public:
    explicit MixedRings(const std::string& msg = "operands live in different rings") : Error(msg) {}
};

class DegreeCapExceeded : public Error {
public:
    explicit DegreeCapExceeded(const std::string& msg) : Error(msg) {}
};

class UnitIdeal : public Error {
public:
    explicit UnitIdeal(const std::string& msg = "ideal is the unit ideal") : Error(msg) {}
};

class FieldTooSmall : public Error {
public:
    explicit FieldTooSmall(const std::string& msg) : Error(msg) {}
};

class ZeroDivisor : public Error {
public:
    explicit ZeroDivisor(const std::string& msg = "colon by the zero polynomial") : Error(msg) {}
};

class NotContained : public Error {
public:
    explicit NotContained(const std::string& msg = "ideal is not contained in the target") : Error(msg) {}
};

class NotRegularSequence : public Error {
public:
    explicit NotRegularSequence(const std::string& msg = "generators do not form a regular sequence") : Error(msg) {}
};

class InsufficientDegree : public Error {
public:
    explicit InsufficientDegree(const std::string& msg) : Error(msg) {}
};

class NotMonomial : public Error {
public:
    explicit NotMonomial(const std::string& msg = "ideal is not a monomial ideal") : Error(msg) {}
};

class InJA : public Error {
public:
    explicit InJA(const std::string& msg = "monomial lies in the pure-powers ideal") : Error(msg) {}
};

class ParameterOutOfRange : public Error {
public:
    explicit ParameterOutOfRange(const std::string& msg) : Error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class Infeasible : public Error {
public:
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};

class NoSqrtMinusOne : public Error {
public:
    explicit NoSqrtMinusOne(const std::string& msg) : Error(msg) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

class CharacteristicSensitive : public Error {
public:
    explicit CharacteristicSensitive(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

class UnknownVariable : public ParseError {
public:
    UnknownVariable(int line, int column, const std::string& name)
        : ParseError(line, column, "unknown variable '" + name + "'") {}
};

} // namespace bettikit
