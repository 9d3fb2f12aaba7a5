#include "charrel/defect_zero.hpp"

#include <algorithm>

#include "charrel/errors.hpp"
#include "charrel/ratfun.hpp"

namespace charrel {

BigInt catalan(int k) {
    if (k < 0) throw input_error("catalan: negative index");
    return factorial(2 * k) / (factorial(k + 1) * factorial(k));
}

BigRat delta_value(const BigRat& a, int b) {
    if (b < 0) throw input_error("delta: negative length");
    BigRat acc(1);
    for (int i = 1; i <= b; ++i) acc *= a - BigRat(i * (i + 1) / 2);
    return acc;
}

UniPoly delta_poly(int b) {
    if (b < 0) throw input_error("delta: negative length");
    UniPoly acc = UniPoly::constant(1);
    for (int i = 1; i <= b; ++i) acc = acc * UniPoly::linear(1, -i * (i + 1) / 2);
    return acc;
}

UniPoly q_poly(int i) {
    if (i < 0) throw input_error("q_poly: negative index");
    UniPoly acc = UniPoly::constant(1);
    for (int a = 1; a <= i - 1; ++a) acc = acc * UniPoly::linear(1, -a);
    return acc;
}

namespace {

bool has_even_part(const Partition& p) {
    for (int part : p.parts())
        if (part % 2 == 0) return true;
    return false;
}

bool octagonal_vanishes(const Partition& p) {
    if (p.norm() % 2 == 1) return true;  // self-conjugate shape, odd class
    for (int part : p.parts())
        if (part % 3 == 0) return true;  // 3-defect zero
    return false;
}

BigRat neg2_pow(int r) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(r));
    BigRat q = make_rat(1, pw);
    if (r % 2 == 1) q = -q;
    return q;
}

}  // namespace

const UniPoly& DefectZeroEngine::staircase_p(const Partition& lambda) {
    auto it = stair_.find(lambda);
    if (it != stair_.end()) return it->second;
    UniPoly p = build_staircase(lambda);
    check_staircase(lambda, p);
    return stair_.emplace(lambda, std::move(p)).first->second;
}

UniPoly DefectZeroEngine::build_staircase(const Partition& lambda) {
    if (lambda.is_identity()) return UniPoly::constant(1);
    if (has_even_part(lambda)) return UniPoly{};
    int r = lambda.smallest_part();  // odd, >= 3
    Partition ybar = lambda.without_one(r).with_one(r - 1);
    const auto& counts = conn_.products(Partition({2}), ybar);
    auto lead = counts.find(lambda);
    if (lead == counts.end()) throw internal_error("staircase recurrence misses lambda");
    RationalFunction acc;
    for (auto& [sigma, c] : counts) {
        if (sigma == lambda || has_even_part(sigma)) continue;
        acc += RationalFunction(c) * RationalFunction(staircase_p(sigma)) /
               RationalFunction(q_poly(sigma.supp()));
    }
    RationalFunction p = -(acc * RationalFunction(q_poly(lambda.supp()))) /
                         RationalFunction(lead->second);
    return p.as_polynomial();
}

void DefectZeroEngine::check_staircase(const Partition& lambda, const UniPoly& p) const {
    if (lambda.is_identity() || has_even_part(lambda)) return;
    int s = lambda.supp(), norm = lambda.norm();
    if (p.degree() != s - 1 - norm / 2)
        throw internal_error("P_" + lambda.str() + ": degree " + std::to_string(p.degree()) +
                             " != supp-1-norm/2");
    BigRat lead = neg2_pow(norm / 2);
    for (auto [part, mult] : lambda.multiplicities())
        for (int i = 0; i < mult; ++i) lead *= BigRat(catalan((part - 1) / 2));
    if (p.leading() != lead)
        throw internal_error("P_" + lambda.str() + ": leading coefficient mismatch");
    int lambda1 = lambda.parts().front();
    for (int k = 1;; ++k) {
        long n = static_cast<long>(k) * (k + 1) / 2;
        bool excluded = (n < s) || (2 * k - 1 < lambda1);
        if (!excluded) break;
        if (p.eval(n) != 0)
            throw internal_error("P_" + lambda.str() + ": fails to vanish at n=" +
                                 std::to_string(n));
    }
}

BigRat DefectZeroEngine::staircase_ratio(int k, const Partition& lambda) {
    if (k < 1) throw input_error("staircase_ratio: k must be >= 1");
    long n = static_cast<long>(k) * (k + 1) / 2;
    if (n < lambda.supp())
        throw input_error("staircase_ratio: n=" + std::to_string(n) + " below supp of " +
                          lambda.str());
    const UniPoly& p = staircase_p(lambda);
    BigRat den = q_poly(lambda.supp()).eval(n);
    if (den == 0) throw internal_error("staircase_ratio: Q vanished in the valid range");
    return p.eval(n) / den;
}

std::pair<UniPoly, UniPoly> DefectZeroEngine::staircase_cycle_closed(int r) const {
    if (r < 1) throw input_error("staircase_cycle_closed: r must be >= 1");
    UniPoly num = delta_poly(r) * (neg2_pow(r) * BigRat(catalan(r)));
    return {num, q_poly(2 * r + 1)};
}

UniPoly DefectZeroEngine::staircase_two_part_closed(int r, int second) const {
    if (second != 3 && second != 5)
        throw input_error("staircase_two_part_closed: second part must be 3 or 5");
    if (r < 1) throw input_error("staircase_two_part_closed: r must be >= 1");
    if (second == 3) {
        // (x^2 - (12r^2+19r+8)/(r+2) x + (2r+1)(2r+3)(r+1)) C(r)C(1)/(-2)^{r+1} Delta(x,r)
        BigRat b = make_rat(12L * r * r + 19L * r + 8, r + 2);
        BigRat c(static_cast<long>(2 * r + 1) * (2 * r + 3) * (r + 1));
        UniPoly quad({c, -b, BigRat(1)});
        return delta_poly(r) * quad * (neg2_pow(r + 1) * BigRat(catalan(r)) * BigRat(catalan(1)));
    }
    BigRat b = make_rat(30L * r * r + 49L * r + 27, r + 3);
    BigRat c = make_rat(20L * r * r * r * r + 120L * r * r * r + 265L * r * r + 228L * r + 69, r + 3);
    BigRat d = make_rat(static_cast<long>(2 * r + 1) * (r + 1) * (2 * r + 3), 1) *
               make_rat(static_cast<long>(r + 2) * (2 * r + 5), 2);
    UniPoly cubic({-d, c, -b, BigRat(1)});
    return delta_poly(r) * cubic * (neg2_pow(r + 2) * BigRat(catalan(r)) * BigRat(catalan(2)));
}

const UniPoly& DefectZeroEngine::octagonal_p(const Partition& lambda) {
    auto it = octa_.find(lambda);
    if (it != octa_.end()) return it->second;
    UniPoly p = build_octagonal(lambda);
    check_octagonal(lambda, p);
    return octa_.emplace(lambda, std::move(p)).first->second;
}

UniPoly DefectZeroEngine::build_octagonal(const Partition& lambda) {
    if (lambda.is_identity()) return UniPoly::constant(1);
    if (octagonal_vanishes(lambda)) return UniPoly{};
    Partition pivot, ybar;
    bool has_two = std::find(lambda.parts().begin(), lambda.parts().end(), 2) !=
                   lambda.parts().end();
    if (has_two) {
        pivot = Partition({2});
        ybar = lambda.without_one(2);
    } else {
        pivot = Partition({3});
        int t = lambda.smallest_part();  // >= 4, not divisible by 3
        ybar = lambda.without_one(t).with_one(t - 2);
    }
    const auto& counts = conn_.products(pivot, ybar);
    auto lead = counts.find(lambda);
    if (lead == counts.end()) throw internal_error("octagonal recurrence misses lambda");
    RationalFunction acc;
    for (auto& [sigma, c] : counts) {
        if (sigma == lambda || octagonal_vanishes(sigma)) continue;
        acc += RationalFunction(c) * RationalFunction(octagonal_p(sigma)) /
               RationalFunction(q_poly(sigma.supp()));
    }
    RationalFunction p = -(acc * RationalFunction(q_poly(lambda.supp()))) /
                         RationalFunction(lead->second);
    return p.as_polynomial();
}

void DefectZeroEngine::check_octagonal(const Partition& lambda, const UniPoly& p) const {
    if (lambda.is_identity() || octagonal_vanishes(lambda)) return;
    if (p.degree() > lambda.norm())
        throw internal_error("P~_" + lambda.str() + ": degree exceeds the norm");
    int s = lambda.supp(), lambda1 = lambda.parts().front();
    for (int k = 1; k * (3 * k - 2) <= s || 6 * k - 5 <= lambda1; ++k) {
        long nplus = static_cast<long>(k) * (3 * k + 2);
        long nminus = static_cast<long>(k) * (3 * k - 2);
        if ((6 * k - 1 < lambda1 || nplus < s) && p.eval(nplus) != 0)
            throw internal_error("P~_" + lambda.str() + ": fails to vanish at n=" +
                                 std::to_string(nplus));
        if ((6 * k - 5 < lambda1 || nminus < s) && p.eval(nminus) != 0)
            throw internal_error("P~_" + lambda.str() + ": fails to vanish at n=" +
                                 std::to_string(nminus));
    }
}

BigRat DefectZeroEngine::octagonal_ratio(int n, const Partition& lambda) {
    if (!is_octagonal(n)) throw input_error(std::to_string(n) + " is not generalized octagonal");
    if (n < lambda.supp())
        throw input_error("octagonal_ratio: n below supp of " + lambda.str());
    BigRat den = q_poly(lambda.supp()).eval(n);
    return octagonal_p(lambda).eval(n) / den;
}

YoungDiagram DefectZeroEngine::staircase_shape(int k) {
    if (k < 1) throw input_error("staircase_shape: k must be >= 1");
    std::vector<int> rows;
    for (int i = k; i >= 1; --i) rows.push_back(i);
    return YoungDiagram(std::move(rows));
}

bool DefectZeroEngine::is_octagonal(int n, int* k_out, int* sign_out) {
    for (int k = 1; k * (3 * k - 2) <= n; ++k) {
        for (int sign : {-1, +1}) {
            if (k * (3 * k + 2 * sign) == n) {
                if (k_out) *k_out = k;
                if (sign_out) *sign_out = sign;
                return true;
            }
        }
    }
    return false;
}

YoungDiagram DefectZeroEngine::octagonal_shape(int n) {
    int k = 0, sign = 0;
    if (!is_octagonal(n, &k, &sign))
        throw input_error(std::to_string(n) + " is not generalized octagonal");
    std::vector<int> rows;
    if (sign < 0) {
        // (3k-2, 3k-4, ..., k+2, k, (k-1)^2, ..., 1^2)
        for (int p = 3 * k - 2; p >= k + 2; p -= 2) rows.push_back(p);
        rows.push_back(k);
        for (int p = k - 1; p >= 1; --p) {
            rows.push_back(p);
            rows.push_back(p);
        }
    } else {
        // (3k, 3k-2, ..., k+2, k^2, (k-1)^2, ..., 1^2)
        for (int p = 3 * k; p >= k + 2; p -= 2) rows.push_back(p);
        for (int p = k; p >= 1; --p) {
            rows.push_back(p);
            rows.push_back(p);
        }
    }
    YoungDiagram shape(std::move(rows));
    if (shape.n() != n) throw internal_error("octagonal shape has wrong size");
    return shape;
}

LowerBoundReport ratio_lower_bounds(const CharTable& table) {
    long n = table.n();
    if (n < 6) throw input_error("ratio_lower_bounds: n must be >= 6");
    Partition two_two({2, 2}), three_three({3, 3});
    BigRat bound22 = -make_rat(4 * n - 6, (n - 2) * (n - 3));
    BigRat bound33 =
        -make_rat(BigInt(36) * n * n * n * n * n - BigInt(324) * n * n * n * n +
                      BigInt(1200) * n * n * n - BigInt(1791) * n * n - BigInt(120) * n + 3600,
                  BigInt(4) * n * (n - 1) * (n - 2) * (n - 3) * (n - 4) * (n - 5));
    int c22 = table.class_index(two_two), c33 = table.class_index(three_three);
    for (size_t i = 0; i < table.shapes().size(); ++i) {
        if (!(ratio(table, static_cast<int>(i), c22) > bound22))
            throw falsification_alarm("rho((2^2)) bound violated by shape " +
                                      table.shapes()[i].str() + " at n=" + std::to_string(n));
        if (!(ratio(table, static_cast<int>(i), c33) > bound33))
            throw falsification_alarm("rho((3^2)) bound violated by shape " +
                                      table.shapes()[i].str() + " at n=" + std::to_string(n));
    }
    return {static_cast<int>(n), static_cast<int>(table.shapes().size())};
}

}  // namespace charrel
