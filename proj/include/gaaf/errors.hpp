#pragma once

#include <stdexcept>
#include <string>

namespace gaaf {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SignatureMismatch : Error {
    explicit SignatureMismatch(const std::string& msg) : Error(msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};

struct GradeOutOfRange : Error {
    explicit GradeOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NullVector : Error {
    explicit NullVector(const std::string& msg) : Error(msg) {}
};

struct FactorizationMismatch : Error {
    explicit FactorizationMismatch(const std::string& msg) : Error(msg) {}
};

struct NotUnit : Error {
    explicit NotUnit(const std::string& msg) : Error(msg) {}
};

struct NotUnitRotor : Error {
    explicit NotUnitRotor(const std::string& msg) : Error(msg) {}
};

struct NotEven : Error {
    explicit NotEven(const std::string& msg) : Error(msg) {}
};

struct NonEuclidean : Error {
    explicit NonEuclidean(const std::string& msg) : Error(msg) {}
};

struct MaskViolation : Error {
    explicit MaskViolation(const std::string& msg) : Error(msg) {}
};

struct Unstable : Error {
    explicit Unstable(const std::string& msg) : Error(msg) {}
};

struct CurveTooShort : Error {
    explicit CurveTooShort(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace gaaf
