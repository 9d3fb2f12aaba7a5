#pragma once

#include <string>

#include "charrel/unipoly.hpp"

namespace charrel {

/// Quotient of univariate polynomials in N, kept canonical: monic denominator,
/// gcd(num, den) = 1, zero represented as 0/1.
class RationalFunction {
  public:
    RationalFunction() : den_(UniPoly::constant(1)) {}
    RationalFunction(UniPoly num, UniPoly den);
    /* implicit */ RationalFunction(UniPoly num) : RationalFunction(std::move(num), UniPoly::constant(1)) {}
    static RationalFunction constant(BigRat c) { return RationalFunction(UniPoly::constant(std::move(c))); }
    static RationalFunction constant(long c) { return constant(BigRat(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == UniPoly::constant(1); }
    /// Numerator, requiring den == 1.
    const UniPoly& as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction&) const;
    RationalFunction operator-(const RationalFunction&) const;
    RationalFunction operator*(const RationalFunction&) const;
    RationalFunction operator/(const RationalFunction&) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    bool operator==(const RationalFunction&) const = default;

    /// Exact value at N = n; throws pole_error when the denominator vanishes.
    BigRat eval(long n) const;

    /// "N + 1", or "(4)/(N - 3)" with the denominator factored when possible.
    std::string str(const std::string& var = "N") const;

  private:
    void normalize();
    UniPoly num_, den_;
};

}  // namespace charrel
