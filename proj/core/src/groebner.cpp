#include "charrel/groebner.hpp"

#include <algorithm>

#include "charrel/errors.hpp"

namespace charrel {

std::pair<Monomial, RationalFunction> leading_term(const RelationPoly& f, const LexOrder& order) {
    if (f.is_zero()) throw internal_error("leading term of the zero polynomial");
    const Monomial* best = nullptr;
    const RationalFunction* coeff = nullptr;
    for (auto& [m, c] : f.terms()) {
        if (!best || order.less(*best, m)) {
            best = &m;
            coeff = &c;
        }
    }
    return {*best, *coeff};
}

RelationPoly reduce(const RelationPoly& f, const std::vector<RelationPoly>& basis,
                    const LexOrder& order) {
    std::vector<std::pair<Monomial, RationalFunction>> lts;
    lts.reserve(basis.size());
    for (auto& g : basis) {
        if (g.is_zero()) throw input_error("reduce: zero basis element");
        lts.push_back(leading_term(g, order));
    }
    RelationPoly rem, p = f;
    while (!p.is_zero()) {
        auto [m, c] = leading_term(p, order);
        bool reduced = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!lts[i].first.divides(m)) continue;
            Monomial q = lts[i].first.quotient_of(m);
            RationalFunction factor = c / lts[i].second;
            p -= basis[i] * factor * RelationPoly::term(q, RationalFunction::constant(1));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return rem;
}

namespace {

RelationPoly make_monic(const RelationPoly& f, const LexOrder& order) {
    auto [m, c] = leading_term(f, order);
    return f * (RationalFunction::constant(1) / c);
}

RelationPoly spoly(const RelationPoly& f, const RelationPoly& g, const LexOrder& order) {
    auto [mf, cf] = leading_term(f, order);
    auto [mg, cg] = leading_term(g, order);
    Monomial l = Monomial::lcm(mf, mg);
    RelationPoly a = f * (RationalFunction::constant(1) / cf) *
                     RelationPoly::term(mf.quotient_of(l), RationalFunction::constant(1));
    RelationPoly b = g * (RationalFunction::constant(1) / cg) *
                     RelationPoly::term(mg.quotient_of(l), RationalFunction::constant(1));
    return a - b;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (auto& [p, e] : a.exps())
        if (b.exponent_of(p) > 0) return false;
    return true;
}

}  // namespace

std::vector<RelationPoly> buchberger(std::vector<RelationPoly> gens, const LexOrder& order) {
    std::vector<RelationPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(make_monic(g, order));

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto lcm_of = [&](size_t i, size_t j) {
        return Monomial::lcm(leading_term(basis[i], order).first,
                             leading_term(basis[j], order).first);
    };
    std::vector<Pair> queue;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) queue.push_back({i, j, lcm_of(i, j)});

    while (!queue.empty()) {
        // Normal strategy: smallest lcm first.
        size_t pick = 0;
        for (size_t k = 1; k < queue.size(); ++k)
            if (order.less(queue[k].lcm, queue[pick].lcm)) pick = k;
        Pair pr = queue[static_cast<size_t>(pick)];
        queue.erase(queue.begin() + static_cast<long>(pick));

        Monomial mi = leading_term(basis[pr.i], order).first;
        Monomial mj = leading_term(basis[pr.j], order).first;
        if (coprime(mi, mj)) continue;  // first Buchberger criterion

        RelationPoly r = reduce(spoly(basis[pr.i], basis[pr.j], order), basis, order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        size_t idx = basis.size() - 1;
        for (size_t i = 0; i < idx; ++i) queue.push_back({i, idx, lcm_of(i, idx)});
    }

    // Minimalize: drop elements whose leading term another leading term
    // properly divides; among equal leading terms keep the first.
    std::vector<RelationPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial mi = leading_term(basis[i], order).first;
        bool keep = true;
        for (size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            Monomial mj = leading_term(basis[j], order).first;
            if (!mj.divides(mi)) continue;
            if (mi == mj)
                keep = i < j;
            else
                keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<RelationPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<RelationPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        RelationPoly r = others.empty() ? minimal[i] : reduce(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(make_monic(r, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const RelationPoly& a, const RelationPoly& b) {
        return order.less(leading_term(a, order).first, leading_term(b, order).first);
    });
    return reduced;
}

ZeroSetIdeal ZeroSetIdeal::make(int norm_cap, const std::vector<Partition>& vanishing,
                                TPolyBuilder& builder) {
    ZeroSetIdeal ideal;
    ideal.norm_cap = norm_cap;
    ideal.vanishing = vanishing;
    std::vector<Partition> ring = classes_with_norm_at_most(norm_cap);
    for (auto& v : vanishing)
        if (std::find(ring.begin(), ring.end(), v) == ring.end())
            throw input_error("vanishing class " + v.str() + " outside norm cap " +
                              std::to_string(norm_cap));
    // t_() normalized to 1; the identity variable is the least in the order.
    ideal.generators.push_back(RelationPoly::variable(Partition{}) - RelationPoly::constant(1));
    for (auto& lambda : ring)
        if (!lambda.is_cycle()) ideal.generators.push_back(builder.display_form(lambda));
    for (auto& v : vanishing) ideal.generators.push_back(RelationPoly::variable(v));
    return ideal;
}

int UniVarQN::degree() const {
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
        if (!coeffs[static_cast<size_t>(d)].is_zero()) return d;
    return -1;
}

std::string UniVarQN::str() const {
    std::string var = "t_" + variable.str();
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const auto& c = coeffs[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += c.str();
        } else {
            std::string pw = var + (d > 1 ? "^" + std::to_string(d) : "");
            if (c == RationalFunction::constant(1))
                out += pw;
            else
                out += "(" + c.str() + ")*" + pw;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

using QN = std::vector<RationalFunction>;  // dense in the class variable

int qn_deg(const QN& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (!p[static_cast<size_t>(d)].is_zero()) return d;
    return -1;
}

void qn_trim(QN& p) { p.resize(static_cast<size_t>(qn_deg(p) + 1)); }

QN qn_monic(QN p) {
    int d = qn_deg(p);
    if (d < 0) return p;
    RationalFunction inv = RationalFunction::constant(1) / p[static_cast<size_t>(d)];
    for (auto& c : p) c *= inv;
    return p;
}

QN qn_divmod(QN num, const QN& den, QN* rem_out) {
    int dd = qn_deg(den);
    if (dd < 0) throw input_error("univariate division by zero");
    QN quot(num.size(), RationalFunction());
    while (qn_deg(num) >= dd) {
        int shift = qn_deg(num) - dd;
        RationalFunction f = num[static_cast<size_t>(qn_deg(num))] / den[static_cast<size_t>(dd)];
        quot[static_cast<size_t>(shift)] += f;
        for (int i = 0; i <= dd; ++i)
            num[static_cast<size_t>(i + shift)] -= f * den[static_cast<size_t>(i)];
        qn_trim(num);
    }
    if (rem_out) *rem_out = num;
    qn_trim(quot);
    return quot;
}

QN qn_gcd(QN a, QN b) {
    while (qn_deg(b) >= 0) {
        QN r;
        qn_divmod(a, b, &r);
        a = std::move(b);
        b = std::move(r);
    }
    return qn_monic(std::move(a));
}

QN qn_derivative(const QN& p) {
    QN d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * RationalFunction::constant(static_cast<long>(i)));
    qn_trim(d);
    return d;
}

FactorFinding classify_factor(const Partition& var, const QN& f, int multiplicity) {
    FactorFinding out;
    out.factor.variable = var;
    out.factor.coeffs = f;
    out.multiplicity = multiplicity;
    int d = qn_deg(f);
    RationalFunction csp{class_size_poly(var)};
    if (d == 1 && f[0].is_zero()) {
        out.kind = FactorFinding::Kind::forced_zero;
        return out;
    }
    if (d == 1) {
        out.kind = FactorFinding::Kind::linear_forcing;
        out.value = -f[0];  // monic: t - r
        out.omega_value = csp * out.value;
        return out;
    }
    if (d == 2 && f[1].is_zero()) {
        out.kind = FactorFinding::Kind::square_condition;
        out.value = -f[0];  // t^2 = value
        out.square_quantity = csp * csp * out.value;
        return out;
    }
    out.kind = FactorFinding::Kind::curve_model;
    // Substitute t = y / |lambda|(N) and normalize monic in y: coefficient of
    // y^e becomes f_e * csp^{d-e} / f_d.
    out.curve.resize(static_cast<size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) {
        RationalFunction c = f[static_cast<size_t>(e)];
        for (int i = 0; i < d - e; ++i) c *= csp;
        out.curve[static_cast<size_t>(e)] = c / f[static_cast<size_t>(d)];
    }
    return out;
}

}  // namespace

AnalysisReport analyze_zero_set(const std::vector<Partition>& vanishing, int norm_cap,
                                TPolyBuilder& builder) {
    AnalysisReport report;
    report.norm_cap = norm_cap;
    report.vanishing = vanishing;
    ZeroSetIdeal ideal = ZeroSetIdeal::make(norm_cap, vanishing, builder);
    LexOrder order;
    report.basis = buchberger(ideal.generators, order);

    for (auto& g : report.basis) {
        auto vars = g.variables();
        if (vars.size() != 1) continue;
        const Partition& var = vars[0];
        if (var.is_identity()) continue;
        UnivariateFinding finding;
        finding.element = g;
        finding.poly.variable = var;
        int dmax = 0;
        for (auto& [m, c] : g.terms()) dmax = std::max(dmax, m.exponent_of(var));
        finding.poly.coeffs.assign(static_cast<size_t>(dmax) + 1, RationalFunction());
        for (auto& [m, c] : g.terms())
            finding.poly.coeffs[static_cast<size_t>(m.exponent_of(var))] = c;

        // Square-free decomposition over Q(N) by repeated gcd. The monomial
        // factor t is split off each square-free part so t*(t^2+c) reports as
        // forced-zero or square-condition, the way the case analyses read.
        QN p = qn_monic(finding.poly.coeffs);
        int mult = 1;
        while (qn_deg(p) > 0) {
            QN g1 = qn_gcd(p, qn_derivative(p));
            QN s = qn_divmod(p, g1, nullptr);
            QN s1 = qn_divmod(s, qn_gcd(s, g1), nullptr);
            if (qn_deg(s1) > 0) {
                if (s1[0].is_zero() && qn_deg(s1) > 1) {
                    QN tfac = {RationalFunction(), RationalFunction::constant(1)};
                    finding.factors.push_back(classify_factor(var, tfac, mult));
                    s1.erase(s1.begin());
                    finding.factors.push_back(classify_factor(var, s1, mult));
                } else {
                    finding.factors.push_back(classify_factor(var, s1, mult));
                }
            }
            p = std::move(g1);
            ++mult;
        }
        report.univariate.push_back(std::move(finding));
    }
    return report;
}

}  // namespace charrel
