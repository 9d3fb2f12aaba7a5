#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charrel/rational.hpp"

namespace charrel {

/// Dense univariate polynomial in the parameter N with exact rational
/// coefficients; coefficient index = degree.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRat> coeffs);

    static UniPoly constant(BigRat c);
    static UniPoly constant(long c) { return constant(BigRat(c)); }
    /// a*N + b
    static UniPoly linear(long a, long b);
    static UniPoly variable();  // N

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return c_; }
    const BigRat& coeff(int deg) const;
    BigRat leading() const;
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly&) const;
    UniPoly operator-(const UniPoly&) const;
    UniPoly operator*(const UniPoly&) const;
    UniPoly operator*(const BigRat&) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly&) const = default;

    BigRat eval(const BigRat& x) const;
    BigRat eval(long x) const { return eval(BigRat(x)); }

    UniPoly derivative() const;
    UniPoly monic() const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
    /// Exact division; throws internal_error if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& den) const;
    bool divides(const UniPoly& other) const;

    /// Monic gcd.
    static UniPoly gcd(UniPoly a, UniPoly b);

    /// Integer roots found by rational root bounds + evaluation, with
    /// multiplicity; used for factored display of the Prod(N-i) denominators.
    std::vector<std::pair<long, int>> integer_roots() const;

    /// "N^2 - 5*N + 6"
    std::string str(const std::string& var = "N") const;
    /// "(N - 2)*(N - 3)" when it splits into integer-rooted linear factors,
    /// otherwise falls back to str().
    std::string str_factored(const std::string& var = "N") const;

  private:
    void trim();
    std::vector<BigRat> c_;
};

/// Unique polynomial of degree <= degree_bound through the first
/// degree_bound+1 points; every remaining point must lie on it, otherwise an
/// interpolation_mismatch is thrown. Abscissae must be distinct.
UniPoly lagrange_interpolate(const std::vector<std::pair<long, BigRat>>& points, int degree_bound);

}  // namespace charrel
