#pragma once

#include <map>

#include "charrel/connection.hpp"
#include "charrel/relpoly.hpp"

namespace charrel {

/// T_lambda in solved form: a polynomial in the cycle variables
/// t_(2),...,t_(norm+1) whose evaluation at (n, cycle ratios of chi) is
/// rho_chi(lambda). The printed table layout is t_lambda - expr; see
/// display_form.
struct TPolynomial {
    Partition lambda;
    RelationPoly expr;
};

class TPolyBuilder {
  public:
    explicit TPolyBuilder(ConnectionEngine& conn) : conn_(conn) {}

    /// Requires norm >= 1. Cycles give T_(k) = t_(k).
    const TPolynomial& t_poly(const Partition& lambda);

    /// t_lambda - expr: the relation polynomial every ratio vector satisfies,
    /// in the layout the T tables print.
    RelationPoly display_form(const Partition& lambda);

    /// The coefficient of t_(norm+1) in display_form(lambda):
    /// (-1)^{sum a_i} (supp-1)! prod lambda_i^{a_i}
    ///   / ((norm+1)! prod_{i=norm+1}^{supp-1} (N-i)).
    /// The solved expression carries the opposite sign. Requires a non-cycle.
    RationalFunction leading_cycle_coeff(const Partition& lambda) const;

    /// F_{x,y} = |x| t_x t_y - t_() sum_mu count_mu(N) t_mu.
    RelationPoly f_poly(const Partition& x, const Partition& y);

    /// Rewrites t_poly(lambda) over an arbitrary class basis: basis[k] must
    /// have norm k for every 1 <= k <= norm(lambda), and basis[1] = (2).
    RelationPoly t_poly_general(const Partition& lambda, const std::map<int, Partition>& basis);

    ConnectionEngine& connections() { return conn_; }

  private:
    const RelationPoly& expr_for(const Partition& lambda);
    void validate(const Partition& lambda, const RelationPoly& expr) const;

    ConnectionEngine& conn_;
    std::map<Partition, TPolynomial> memo_;
};

}  // namespace charrel
