#pragma once

#include <stdexcept>
#include <string>

namespace stabforge {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- field construction / arithmetic ----
struct NonPrimeCharacteristic : Error {
    using Error::Error;
};
struct DegreeOutOfRange : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NoBasisFound : Error {
    using Error::Error;
};

// ---- Pauli / stabilizer algebra ----
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotCommuting : Error {
    NotCommuting(std::size_t i, std::size_t j)
        : Error("generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute"),
          first(i),
          second(j) {}
    std::size_t first, second;
};
struct NotIndependent : Error {
    using Error::Error;
};
struct NotInNormalizer : Error {
    using Error::Error;
};
struct InvalidDimension : Error {
    using Error::Error;
};

// ---- classical codes ----
struct DuplicateEvaluationPoint : Error {
    using Error::Error;
};
struct ZeroMultiplier : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct WeightOutOfRange : Error {
    using Error::Error;
};
struct NotAGroup : Error {
    using Error::Error;
};
struct NotASubcode : Error {
    using Error::Error;
};
struct EmptyDifference : Error {
    using Error::Error;
};

// ---- concatenation ----
struct WrongInnerRate : Error {
    using Error::Error;
};
struct BadParameters : Error {
    using Error::Error;
};

// ---- numerics ----
struct DomainError : Error {
    using Error::Error;
};

// ---- shared guards ----
struct TooLarge : Error {
    using Error::Error;
};

}  // namespace stabforge
