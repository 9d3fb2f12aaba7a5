#pragma once

#include <string>
#include <vector>

#include "charrel/relpoly.hpp"
#include "charrel/tpoly.hpp"

namespace charrel {

/// Lexicographic order with variable precedence descending in the partition
/// order: the largest class variable is eliminated first.
struct LexOrder {
    bool less(const Monomial& a, const Monomial& b) const { return Monomial::lex_less(a, b); }
};

/// Leading term under the order; the polynomial must be nonzero.
std::pair<Monomial, RationalFunction> leading_term(const RelationPoly& f, const LexOrder& order);

/// Full normal form of f modulo the basis: no term of the result is divisible
/// by any basis leading term.
RelationPoly reduce(const RelationPoly& f, const std::vector<RelationPoly>& basis,
                    const LexOrder& order);

/// Unique reduced Groebner basis: monic leading coefficients, pairwise
/// tail-reduced, sorted by leading monomial.
std::vector<RelationPoly> buchberger(std::vector<RelationPoly> gens, const LexOrder& order);

/// Generators of the zero-set ideal: t_() - 1, the relation polynomials
/// t_lambda - T_lambda for every non-cycle lambda with norm <= cap, and the
/// monomials t_lambda for lambda in the vanishing set.
struct ZeroSetIdeal {
    int norm_cap = 0;
    std::vector<Partition> vanishing;
    std::vector<RelationPoly> generators;

    static ZeroSetIdeal make(int norm_cap, const std::vector<Partition>& vanishing,
                             TPolyBuilder& builder);
};

/// A polynomial in a single class variable with Q(N) coefficients.
struct UniVarQN {
    Partition variable;
    std::vector<RationalFunction> coeffs;  // index = exponent in t_variable

    int degree() const;
    bool is_zero() const { return degree() < 0; }
    std::string str() const;
};

/// Square-free factor together with its classification per the zero-set
/// taxonomy.
struct FactorFinding {
    enum class Kind { forced_zero, square_condition, linear_forcing, curve_model };
    UniVarQN factor;
    int multiplicity = 1;
    Kind kind = Kind::forced_zero;
    // square_condition: rho^2 = value/..., square iff square_quantity(n) is a
    // perfect square, where square_quantity = class_size_poly^2 * value.
    RationalFunction value;            // linear root r(N) or the t^2 constant
    RationalFunction square_quantity;  // square_condition only
    RationalFunction omega_value;      // linear_forcing only: class size * r
    std::vector<RationalFunction> curve;  // curve_model: coeffs by power of omega, monic
};

struct UnivariateFinding {
    RelationPoly element;
    UniVarQN poly;
    std::vector<FactorFinding> factors;
};

struct AnalysisReport {
    int norm_cap = 0;
    std::vector<Partition> vanishing;
    std::vector<RelationPoly> basis;
    std::vector<UnivariateFinding> univariate;
};

AnalysisReport analyze_zero_set(const std::vector<Partition>& vanishing, int norm_cap,
                                TPolyBuilder& builder);

}  // namespace charrel
