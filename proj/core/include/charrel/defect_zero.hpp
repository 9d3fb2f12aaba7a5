#pragma once

#include <map>
#include <utility>

#include "charrel/connection.hpp"
#include "charrel/unipoly.hpp"
#include "charrel/young.hpp"

namespace charrel {

/// k-th Catalan number (2k)!/((k+1)!k!).
BigInt catalan(int k);

/// Delta(a, b) = prod_{i=1}^{b} (a - i(i+1)/2); Delta(., 0) = 1.
BigRat delta_value(const BigRat& a, int b);
/// Delta(N, b) as a polynomial.
UniPoly delta_poly(int b);

/// Q_i(N) = prod_{a=1}^{i-1} (N - a). Spec surface requires i >= 2; values
/// i in {0, 1} give the empty product, which the recurrences need.
UniPoly q_poly(int i);

/// P_lambda for the staircase (2-defect-zero) characters psi_k and
/// P~_lambda for the octagonal (3-defect-zero, (2)-vanishing) characters
/// tau_n, both via the class-sum recurrences with exact symbolic connection
/// counts, with all structural properties checked at construction.
class DefectZeroEngine {
  public:
    explicit DefectZeroEngine(ConnectionEngine& conn) : conn_(conn) {}

    /// Zero polynomial iff lambda has an even part.
    const UniPoly& staircase_p(const Partition& lambda);

    /// P_lambda(n)/Q_supp(n) at n = k(k+1)/2; requires n >= supp.
    BigRat staircase_ratio(int k, const Partition& lambda);

    /// (numerator, denominator) of rho_k((2r+1)): ((-2)^{-r} C(r) Delta(N,r),
    /// Q_{2r+1}(N)).
    std::pair<UniPoly, UniPoly> staircase_cycle_closed(int r) const;

    /// Closed forms of P_(2r+1,3) and P_(2r+1,5); second must be 3 or 5.
    UniPoly staircase_two_part_closed(int r, int second) const;

    /// Zero polynomial iff lambda has a part divisible by 3 or odd norm.
    const UniPoly& octagonal_p(const Partition& lambda);

    BigRat octagonal_ratio(int n, const Partition& lambda);

    static YoungDiagram staircase_shape(int k);
    /// k(3k-2) or k(3k+2); outputs k and the sign when requested.
    static bool is_octagonal(int n, int* k_out = nullptr, int* sign_out = nullptr);
    static YoungDiagram octagonal_shape(int n);

    ConnectionEngine& connections() { return conn_; }

  private:
    UniPoly build_staircase(const Partition& lambda);
    UniPoly build_octagonal(const Partition& lambda);
    void check_staircase(const Partition& lambda, const UniPoly& p) const;
    void check_octagonal(const Partition& lambda, const UniPoly& p) const;

    ConnectionEngine& conn_;
    std::map<Partition, UniPoly> stair_;
    std::map<Partition, UniPoly> octa_;
};

/// Asserts the lower bounds on rho((2^2)) and rho((3^2)) for every
/// irreducible of the table; throws falsification_alarm on a violation.
struct LowerBoundReport {
    int n;
    int checked;
};
LowerBoundReport ratio_lower_bounds(const CharTable& table);

}  // namespace charrel
