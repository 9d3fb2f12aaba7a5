#pragma once

#include <map>
#include <string>
#include <vector>

#include "charrel/partition.hpp"
#include "charrel/ratfun.hpp"

namespace charrel {

/// Multiset of class variables t_lambda; exponent list kept with the largest
/// class first (largest in the partition order).
class Monomial {
  public:
    Monomial() = default;
    static Monomial one() { return {}; }
    static Monomial var(Partition p, int exp = 1);

    bool is_one() const { return exps_.empty(); }
    int total_degree() const;
    int exponent_of(const Partition& p) const;
    const std::vector<std::pair<Partition, int>>& exps() const { return exps_; }
    std::vector<Partition> variables() const;

    Monomial operator*(const Monomial&) const;
    /// Whether this divides other (componentwise exponents).
    bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    static Monomial lcm(const Monomial&, const Monomial&);

    bool operator==(const Monomial&) const = default;

    /// Lexicographic order, the largest class variable most significant.
    static bool lex_less(const Monomial& a, const Monomial& b);
    /// Total degree first, then lex.
    static bool graded_lex_less(const Monomial& a, const Monomial& b);

    std::string str() const;  // "t_(3)^2*t_(2)", "1" for the empty monomial

  private:
    std::vector<std::pair<Partition, int>> exps_;  // descending partitions, exponents > 0
};

struct MonomialGradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::graded_lex_less(a, b);
    }
};

/// Polynomial in class variables t_lambda over the field Q(N). Canonical
/// storage: no zero coefficients, keys in graded-then-lex order.
class RelationPoly {
  public:
    using TermMap = std::map<Monomial, RationalFunction, MonomialGradedLexLess>;

    RelationPoly() = default;
    static RelationPoly constant(RationalFunction c);
    static RelationPoly constant(long c) { return constant(RationalFunction::constant(c)); }
    static RelationPoly variable(const Partition& p);
    static RelationPoly term(Monomial m, RationalFunction c);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    RationalFunction coefficient(const Monomial& m) const;
    std::vector<Partition> variables() const;
    int total_degree() const;

    void add_term(const Monomial& m, const RationalFunction& c);

    RelationPoly operator-() const;
    RelationPoly operator+(const RelationPoly&) const;
    RelationPoly operator-(const RelationPoly&) const;
    RelationPoly operator*(const RelationPoly&) const;
    RelationPoly operator*(const RationalFunction& s) const;
    RelationPoly& operator+=(const RelationPoly& o) { return *this = *this + o; }
    RelationPoly& operator-=(const RelationPoly& o) { return *this = *this - o; }
    RelationPoly& operator*=(const RelationPoly& o) { return *this = *this * o; }
    RelationPoly pow(int e) const;
    bool operator==(const RelationPoly&) const = default;

    /// Substitutes N = n and every variable from the assignment; every
    /// variable of the polynomial must be assigned.
    BigRat eval(long n, const std::map<Partition, BigRat>& assignment) const;

    /// Replaces variables by whole polynomials; unmapped variables persist.
    RelationPoly substitute(const std::map<Partition, RelationPoly>& repl) const;

    /// Terms printed in decreasing lex order (the layout used for the T tables).
    std::string str() const;

  private:
    TermMap terms_;
};

/// Spec-surface aliases.
BigRat relpoly_eval(const RelationPoly& p, long n, const std::map<Partition, BigRat>& assignment);

}  // namespace charrel
