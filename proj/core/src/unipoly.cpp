#include "charrel/unipoly.hpp"

#include <algorithm>
#include <cstdlib>

#include "charrel/errors.hpp"

namespace charrel {

UniPoly::UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(BigRat c) {
    UniPoly p;
    if (c != 0) p.c_ = {std::move(c)};
    return p;
}

UniPoly UniPoly::linear(long a, long b) { return UniPoly({BigRat(b), BigRat(a)}); }

UniPoly UniPoly::variable() { return UniPoly({BigRat(0), BigRat(1)}); }

const BigRat& UniPoly::coeff(int deg) const {
    static const BigRat zero(0);
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(deg)];
}

BigRat UniPoly::leading() const { return c_.empty() ? BigRat(0) : c_.back(); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const BigRat& s) const {
    if (s == 0) return {};
    UniPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

BigRat UniPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    UniPoly r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigRat(static_cast<long>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * (BigRat(1) / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw input_error("polynomial division by zero");
    UniPoly rem = num, quot;
    quot.c_.assign(num.c_.size(), BigRat(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        BigRat factor = rem.leading() / den.leading();
        quot.c_[static_cast<size_t>(shift)] += factor;
        for (size_t i = 0; i < den.c_.size(); ++i)
            rem.c_[i + static_cast<size_t>(shift)] -= factor * den.c_[i];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& den) const {
    auto [q, r] = divmod(*this, den);
    if (!r.is_zero()) throw internal_error("exact_div: nonzero remainder");
    return q;
}

bool UniPoly::divides(const UniPoly& other) const {
    if (is_zero()) return other.is_zero();
    return divmod(other, *this).second.is_zero();
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return {};
    return a.monic();
}

std::vector<std::pair<long, int>> UniPoly::integer_roots() const {
    std::vector<std::pair<long, int>> out;
    if (is_zero() || is_constant()) return out;
    UniPoly rest = *this;
    int low = 0;
    while (rest.coeff(low) == 0) ++low;
    if (low > 0) {
        out.emplace_back(0, low);
        for (int i = 0; i < low; ++i) rest = rest.exact_div(UniPoly::linear(1, 0));
    }
    // Small-window probe; the roots we ever print come from Prod(N-i) style
    // factors with i bounded by a support, so this covers them all.
    for (long root = -512; root <= 512 && !rest.is_constant(); ++root) {
        if (root == 0) continue;
        int mult = 0;
        while (!rest.is_constant() && rest.eval(root) == 0) {
            rest = rest.exact_div(UniPoly::linear(1, -root));
            ++mult;
        }
        if (mult > 0) out.emplace_back(root, mult);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string rat_str(const BigRat& q) { return q.get_str(); }

}  // namespace

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const BigRat& c = coeff(d);
        if (c == 0) continue;
        BigRat a = c > 0 ? c : BigRat(-c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        bool unit = (a == 1 && d > 0);
        if (!unit) out += rat_str(a);
        if (d > 0) {
            if (!unit) out += "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::string UniPoly::str_factored(const std::string& var) const {
    if (is_zero() || is_constant()) return str(var);
    auto roots = integer_roots();
    int total = 0;
    for (auto [root, mult] : roots) total += mult;
    if (total != degree()) return str(var);
    std::string out;
    if (leading() != 1) out += rat_str(leading()) + "*";
    for (auto [root, mult] : roots) {
        std::string factor =
            root == 0 ? var : (root > 0 ? var + " - " + std::to_string(root) : var + " + " + std::to_string(-root));
        for (int i = 0; i < mult; ++i) {
            if (!out.empty() && out.back() != '*') out += "*";
            out += "(" + factor + ")";
        }
    }
    return out;
}

UniPoly lagrange_interpolate(const std::vector<std::pair<long, BigRat>>& points, int degree_bound) {
    if (degree_bound < 0) throw input_error("lagrange_interpolate: negative degree bound");
    size_t need = static_cast<size_t>(degree_bound) + 1;
    if (points.size() < need)
        throw input_error("lagrange_interpolate: need " + std::to_string(need) + " points, got " +
                          std::to_string(points.size()));
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw input_error("lagrange_interpolate: duplicate abscissa");

    UniPoly acc;
    for (size_t i = 0; i < need; ++i) {
        UniPoly basis = UniPoly::constant(1);
        BigRat denom(1);
        for (size_t j = 0; j < need; ++j) {
            if (i == j) continue;
            basis = basis * UniPoly::linear(1, -points[j].first);
            denom *= BigRat(points[i].first - points[j].first);
        }
        acc = acc + basis * (points[i].second / denom);
    }
    for (size_t i = need; i < points.size(); ++i) {
        if (acc.eval(points[i].first) != points[i].second)
            throw interpolation_mismatch("extra point x=" + std::to_string(points[i].first) +
                                         " off the degree-" + std::to_string(degree_bound) +
                                         " interpolant");
    }
    return acc;
}

}  // namespace charrel
