#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ajcable {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
    NotDivisible() : Error("NotDivisible: no exact quotient") {}
};

class DivByZero : public Error {
public:
    DivByZero() : Error("DivByZero: division by the zero polynomial") {}
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("ZeroPolynomial: degree of the zero polynomial") {}
};

class PoleAtMinusOne : public Error {
public:
    PoleAtMinusOne() : Error("PoleAtMinusOne: denominator vanishes at t=-1") {}
};

class DenominatorVanishes : public Error {
public:
    explicit DenominatorVanishes(std::int64_t n)
        : Error("DenominatorVanishes: coefficient denominator is zero at n=" + std::to_string(n)), n_(n) {}
    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

class BadParams : public Error {
public:
    explicit BadParams(const std::string& why) : Error("BadParams: " + why) {}
};

class OddMCoefficient : public Error {
public:
    OddMCoefficient() : Error("OddMCoefficient: n-coefficient of an exponent is odd") {}
};

class BZero : public Error {
public:
    BZero() : Error("BZero: b(-1,M) vanishes identically") {}
};

class SystemTooSmall : public Error {
public:
    SystemTooSmall(std::size_t equations, std::size_t unknowns)
        : Error("SystemTooSmall: " + std::to_string(equations) + " equations for " +
                std::to_string(unknowns) + " unknowns") {}
};

}  // namespace ajcable
