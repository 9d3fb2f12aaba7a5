#include "charrel/tpoly.hpp"

#include "charrel/errors.hpp"

namespace charrel {

namespace {

Partition cycle(int len) { return len <= 1 ? Partition{} : Partition({len}); }

RelationPoly constant_one() { return RelationPoly::constant(1); }

}  // namespace

const RelationPoly& TPolyBuilder::expr_for(const Partition& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second.expr;

    RelationPoly expr;
    if (lambda.is_identity()) {
        expr = constant_one();
    } else if (lambda.is_cycle()) {
        expr = RelationPoly::variable(lambda);
    } else {
        int r = lambda.smallest_part();
        Partition y = lambda.without_one(r);
        const auto& counts = conn_.products(cycle(r), y);
        auto lead_it = counts.find(lambda);
        if (lead_it == counts.end())
            throw internal_error("t_poly: product profile misses lambda itself");
        const UniPoly& lead = lead_it->second;

        RelationPoly acc = RelationPoly::variable(cycle(r));
        acc = acc * expr_for(y);
        acc = acc * RationalFunction(class_size_poly(cycle(r)));
        for (auto& [mu, c] : counts) {
            if (mu == lambda) continue;
            acc -= expr_for(mu) * RationalFunction(c);
        }
        expr = acc * (RationalFunction::constant(1) / RationalFunction(lead));
        validate(lambda, expr);
    }
    return memo_.emplace(lambda, TPolynomial{lambda, std::move(expr)}).first->second.expr;
}

const TPolynomial& TPolyBuilder::t_poly(const Partition& lambda) {
    if (lambda.norm() < 1) throw input_error("t_poly: norm must be >= 1");
    expr_for(lambda);
    return memo_.at(lambda);
}

RelationPoly TPolyBuilder::display_form(const Partition& lambda) {
    return RelationPoly::variable(lambda) - t_poly(lambda).expr;
}

RationalFunction TPolyBuilder::leading_cycle_coeff(const Partition& lambda) const {
    if (lambda.norm() < 1 || lambda.is_cycle())
        throw input_error("leading_cycle_coeff: non-cycle with norm >= 1 required");
    int k = lambda.norm(), s = lambda.supp();
    int num_parts = 0;
    BigInt part_prod = 1;
    for (auto [part, mult] : lambda.multiplicities()) {
        num_parts += mult;
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
        part_prod *= pw;
    }
    BigRat scalar = make_rat(factorial(s - 1) * part_prod, factorial(k + 1));
    if (num_parts % 2 == 1) scalar = -scalar;
    UniPoly den = UniPoly::constant(1);
    for (int i = k + 1; i <= s - 1; ++i) den = den * UniPoly::linear(1, -i);
    return RationalFunction(UniPoly::constant(scalar), den);
}

RelationPoly TPolyBuilder::f_poly(const Partition& x, const Partition& y) {
    const auto& counts = conn_.products(x, y);
    RelationPoly lhs = RelationPoly::variable(x) * RelationPoly::variable(y) *
                       RationalFunction(class_size_poly(x));
    RelationPoly rhs;
    RelationPoly t_id = RelationPoly::variable(Partition{});
    for (auto& [mu, c] : counts) rhs += t_id * RelationPoly::variable(mu) * RationalFunction(c);
    return lhs - rhs;
}

void TPolyBuilder::validate(const Partition& lambda, const RelationPoly& expr) const {
    int k = lambda.norm(), s = lambda.supp();
    Partition top = cycle(k + 1);
    int top_terms = 0;
    for (auto& [m, c] : expr.terms()) {
        if (c.num().degree() > c.den().degree())
            throw internal_error("T invariant: numerator degree exceeds denominator at " +
                                 lambda.str());
        int weight = 0, support = 0;
        for (auto& [p, e] : m.exps()) {
            if (!p.is_cycle())
                throw internal_error("T invariant: non-cycle variable in T_" + lambda.str());
            weight += e * p.norm();
            support += e * p.supp();
        }
        if (weight > k || (k - weight) % 2 != 0)
            throw internal_error("T invariant: weight bound/parity violated at " + lambda.str());
        if (support > s)
            throw internal_error("T invariant: support bound violated at " + lambda.str());
        int e_top = m.exponent_of(top);
        if (e_top > 0) {
            ++top_terms;
            if (e_top != 1 || m.total_degree() != 1)
                throw internal_error("T invariant: t_(k+1) term not linear at " + lambda.str());
        }
    }
    if (top_terms != 1)
        throw internal_error("T invariant: expected exactly one t_(k+1) term at " + lambda.str());
    RationalFunction expected = -leading_cycle_coeff(lambda);
    if (expr.coefficient(Monomial::var(top)) != expected)
        throw internal_error("T invariant: t_(k+1) coefficient disagrees with the closed formula at " +
                             lambda.str());
}

RelationPoly TPolyBuilder::t_poly_general(const Partition& lambda,
                                          const std::map<int, Partition>& basis) {
    int kmax = lambda.norm();
    if (kmax < 1) throw input_error("t_poly_general: norm must be >= 1");
    for (int k = 1; k <= kmax; ++k) {
        auto it = basis.find(k);
        if (it == basis.end())
            throw input_error("t_poly_general: basis missing norm " + std::to_string(k));
        if (it->second.norm() != k)
            throw input_error("t_poly_general: basis class " + it->second.str() +
                              " has norm " + std::to_string(it->second.norm()) + ", expected " +
                              std::to_string(k));
    }
    if (basis.at(1) != cycle(2))
        throw input_error("t_poly_general: basis(1) must be (2)");

    // tilde[(k+1)]: the cycle ratio written in the basis variables.
    std::map<Partition, RelationPoly> tilde;
    tilde[cycle(2)] = RelationPoly::variable(basis.at(1));
    for (int k = 2; k <= kmax; ++k) {
        const Partition& C = basis.at(k);
        RelationPoly exprC = (C.is_cycle()) ? RelationPoly::variable(C) : t_poly(C).expr;
        Monomial top = Monomial::var(cycle(k + 1));
        RationalFunction L = exprC.coefficient(top);
        if (L.is_zero()) throw internal_error("t_poly_general: vanishing top coefficient");
        RelationPoly rest = exprC - RelationPoly::term(top, L);
        RelationPoly rest_sub = rest.substitute(tilde);
        tilde[cycle(k + 1)] =
            (RelationPoly::variable(C) - rest_sub) * (RationalFunction::constant(1) / L);
    }
    return t_poly(lambda).expr.substitute(tilde);
}

}  // namespace charrel
