#include "charrel/relpoly.hpp"

#include <algorithm>

#include "charrel/errors.hpp"

namespace charrel {

Monomial Monomial::var(Partition p, int exp) {
    if (exp < 0) throw input_error("negative exponent");
    Monomial m;
    if (exp > 0) m.exps_.emplace_back(std::move(p), exp);
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [p, e] : exps_) d += e;
    return d;
}

int Monomial::exponent_of(const Partition& p) const {
    for (auto& [q, e] : exps_)
        if (q == p) return e;
    return 0;
}

std::vector<Partition> Monomial::variables() const {
    std::vector<Partition> out;
    out.reserve(exps_.size());
    for (auto& [p, e] : exps_) out.push_back(p);
    return out;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < exps_.size() || j < o.exps_.size()) {
        if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first > o.exps_[j].first)) {
            r.exps_.push_back(exps_[i++]);
        } else if (i == exps_.size() || o.exps_[j].first > exps_[i].first) {
            r.exps_.push_back(o.exps_[j++]);
        } else {
            r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (auto& [p, e] : exps_)
        if (other.exponent_of(p) < e) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    if (!divides(other)) throw internal_error("monomial quotient: not divisible");
    Monomial r;
    for (auto& [p, e] : other.exps_) {
        int rem = e - exponent_of(p);
        if (rem > 0) r.exps_.emplace_back(p, rem);
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.exps_.size() || j < b.exps_.size()) {
        if (j == b.exps_.size() || (i < a.exps_.size() && a.exps_[i].first > b.exps_[j].first)) {
            r.exps_.push_back(a.exps_[i++]);
        } else if (i == a.exps_.size() || b.exps_[j].first > a.exps_[i].first) {
            r.exps_.push_back(b.exps_[j++]);
        } else {
            r.exps_.emplace_back(a.exps_[i].first, std::max(a.exps_[i].second, b.exps_[j].second));
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::lex_less(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.exps_.size() && j < b.exps_.size()) {
        const auto& [pa, ea] = a.exps_[i];
        const auto& [pb, eb] = b.exps_[j];
        if (pa == pb) {
            if (ea != eb) return ea < eb;
            ++i, ++j;
        } else if (pa > pb) {
            // a has a positive exponent on a larger variable than b does
            return false;
        } else {
            return true;
        }
    }
    return i == a.exps_.size() && j < b.exps_.size();
}

bool Monomial::graded_lex_less(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return lex_less(a, b);
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (auto& [p, e] : exps_) {
        if (!out.empty()) out += "*";
        out += "t_" + p.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

RelationPoly RelationPoly::constant(RationalFunction c) { return term(Monomial::one(), std::move(c)); }

RelationPoly RelationPoly::variable(const Partition& p) {
    return term(Monomial::var(p), RationalFunction::constant(1));
}

RelationPoly RelationPoly::term(Monomial m, RationalFunction c) {
    RelationPoly r;
    r.add_term(m, c);
    return r;
}

RationalFunction RelationPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

std::vector<Partition> RelationPoly::variables() const {
    std::vector<Partition> out;
    for (auto& [m, c] : terms_)
        for (auto& p : m.variables())
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

int RelationPoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void RelationPoly::add_term(const Monomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RelationPoly RelationPoly::operator-() const {
    RelationPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

RelationPoly RelationPoly::operator+(const RelationPoly& o) const {
    RelationPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

RelationPoly RelationPoly::operator-(const RelationPoly& o) const {
    RelationPoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

RelationPoly RelationPoly::operator*(const RelationPoly& o) const {
    RelationPoly r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

RelationPoly RelationPoly::operator*(const RationalFunction& s) const {
    RelationPoly r;
    if (s.is_zero()) return r;
    for (auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

RelationPoly RelationPoly::pow(int e) const {
    if (e < 0) throw input_error("negative power of a polynomial");
    RelationPoly r = constant(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

BigRat RelationPoly::eval(long n, const std::map<Partition, BigRat>& assignment) const {
    BigRat acc(0);
    for (auto& [m, c] : terms_) {
        BigRat v = c.eval(n);  // throws pole_error on a denominator root
        for (auto& [p, e] : m.exps()) {
            auto it = assignment.find(p);
            if (it == assignment.end())
                throw input_error("eval: no assignment for variable t_" + p.str());
            for (int i = 0; i < e; ++i) v *= it->second;
        }
        acc += v;
    }
    return acc;
}

RelationPoly RelationPoly::substitute(const std::map<Partition, RelationPoly>& repl) const {
    RelationPoly out;
    for (auto& [m, c] : terms_) {
        RelationPoly prod = RelationPoly::constant(c);
        for (auto& [p, e] : m.exps()) {
            auto it = repl.find(p);
            RelationPoly base = it == repl.end() ? RelationPoly::variable(p) : it->second;
            prod *= base.pow(e);
        }
        out += prod;
    }
    return out;
}

std::string RelationPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ordered;
    for (auto& kv : terms_) ordered.push_back(&kv);
    std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        return Monomial::lex_less(b->first, a->first);
    });
    std::string out;
    for (auto* kv : ordered) {
        const auto& [m, c] = *kv;
        if (!out.empty()) out += " + ";
        bool unit_coeff = (c == RationalFunction::constant(1));
        if (m.is_one()) {
            out += c.is_polynomial() ? c.str() : "(" + c.num().str() + ")/(" + c.den().str_factored() + ")";
        } else if (unit_coeff) {
            out += m.str();
        } else if (c.is_polynomial() && c.num().is_constant()) {
            out += c.num().str() + "*" + m.str();
        } else if (c.is_polynomial()) {
            out += "(" + c.num().str() + ")*" + m.str();
        } else {
            out += "(" + c.num().str() + ")/(" + c.den().str_factored() + ")*" + m.str();
        }
    }
    return out;
}

BigRat relpoly_eval(const RelationPoly& p, long n, const std::map<Partition, BigRat>& assignment) {
    return p.eval(n, assignment);
}

}  // namespace charrel
