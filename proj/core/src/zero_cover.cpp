#include "charrel/zero_cover.hpp"

#include <algorithm>
#include <bit>

#include "charrel/errors.hpp"

namespace charrel {

int Bitset::count() const {
    int c = 0;
    for (uint64_t word : w_) c += std::popcount(word);
    return c;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

bool Bitset::all_set() const {
    for (int i = 0; i < nbits_; ++i)
        if (!test(i)) return false;
    return true;
}

ZeroProfileSet zero_profiles(const CharTable& table, std::optional<int> norm_cap) {
    ZeroProfileSet out;
    out.n = table.n();
    out.norm_cap = norm_cap;
    for (size_t j = 0; j < table.classes().size(); ++j) {
        int norm = table.classes()[j].norm();
        if (norm < 1) continue;
        if (norm_cap && norm > *norm_cap) continue;
        out.target_class_idx.push_back(static_cast<int>(j));
    }
    int bits = static_cast<int>(out.target_class_idx.size());
    for (size_t i = 0; i < table.shapes().size(); ++i) {
        ZeroProfile p;
        p.shape_idx = static_cast<int>(i);
        p.zeros = Bitset(bits);
        for (int b = 0; b < bits; ++b) {
            if (table.value(static_cast<int>(i), out.target_class_idx[static_cast<size_t>(b)]) == 0) {
                p.zeros.set(b);
                ++p.zero_count;
            }
        }
        out.profiles.push_back(std::move(p));
    }
    return out;
}

std::string CoverResult::str() const {
    std::string label = norm_cap ? "Z_" + std::to_string(*norm_cap) + "(" + std::to_string(n) + ")"
                                 : "Z(" + std::to_string(n) + ")";
    switch (status) {
        case Status::no_cover:
            return label + ": no cover exists";
        case Status::exceeds_limit:
            return label + " > " + std::to_string(value);
        case Status::found: {
            std::string out = label + " = " + std::to_string(value) + "  witness:";
            for (auto& w : witness) out += " (" + w.str() + ")";
            return out;
        }
    }
    return label;
}

namespace {

struct CoverSearch {
    const std::vector<const ZeroProfile*>& candidates;
    // coverers[b]: candidate indices whose zero set contains target bit b, in
    // candidate order.
    std::vector<std::vector<int>> coverers;
    int nbits;

    bool dfs(Bitset covered, std::vector<int>& chosen, int remaining) {
        if (covered.all_set()) return true;
        if (remaining == 0) return false;
        // Most constrained uncovered class first.
        int best_bit = -1;
        size_t best_cnt = 0;
        for (int b = 0; b < nbits; ++b) {
            if (covered.test(b)) continue;
            size_t cnt = coverers[static_cast<size_t>(b)].size();
            if (cnt == 0) return false;
            if (best_bit < 0 || cnt < best_cnt) {
                best_bit = b;
                best_cnt = cnt;
            }
        }
        for (int ci : coverers[static_cast<size_t>(best_bit)]) {
            if (std::find(chosen.begin(), chosen.end(), ci) != chosen.end()) continue;
            Bitset next = covered;
            next |= candidates[static_cast<size_t>(ci)]->zeros;
            chosen.push_back(ci);
            if (dfs(next, chosen, remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

CoverResult min_cover(const CharTable& table, std::optional<int> norm_cap, int limit) {
    if (limit < 1 || limit > 4)
        throw resource_guard_error("min_cover: limit must be between 1 and 4");
    ZeroProfileSet set = zero_profiles(table, norm_cap);
    CoverResult res;
    res.n = table.n();
    res.norm_cap = norm_cap;

    std::vector<const ZeroProfile*> candidates;
    for (auto& p : set.profiles)
        if (p.zero_count > 0) candidates.push_back(&p);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const ZeroProfile* a, const ZeroProfile* b) {
                         return a->zero_count > b->zero_count;
                     });

    int nbits = static_cast<int>(set.target_class_idx.size());
    Bitset everything(nbits);
    for (auto* c : candidates) everything |= c->zeros;
    if (!everything.all_set()) {
        res.status = CoverResult::Status::no_cover;
        return res;
    }

    CoverSearch search{candidates, {}, nbits};
    search.coverers.resize(static_cast<size_t>(nbits));
    for (size_t ci = 0; ci < candidates.size(); ++ci)
        for (int b = 0; b < nbits; ++b)
            if (candidates[ci]->zeros.test(b))
                search.coverers[static_cast<size_t>(b)].push_back(static_cast<int>(ci));

    for (int size = 1; size <= limit; ++size) {
        std::vector<int> chosen;
        if (search.dfs(Bitset(nbits), chosen, size)) {
            res.status = CoverResult::Status::found;
            res.value = size;
            for (int ci : chosen)
                res.witness.push_back(
                    table.shapes()[static_cast<size_t>(candidates[static_cast<size_t>(ci)]->shape_idx)]);
            return res;
        }
    }
    res.status = CoverResult::Status::exceeds_limit;
    res.value = limit;
    return res;
}

CoverResult z_k(const CharTable& table, int k, int limit) { return min_cover(table, k, limit); }

bool pair_zero_condition(const Partition& a, const Partition& b, int n) {
    Partition p2({2}), p3({3}), p22({2, 2});
    auto is_pair = [&](const Partition& u, const Partition& v) {
        return (a == u && b == v) || (a == v && b == u);
    };
    if (is_pair(p3, p22)) return is_perfect_square(BigInt(n) * (n - 1) / 2);
    // Proof version of the congruence conditions (see ledger): zeros at
    // {(2),(2^2)} force omega((3)) = -n(n-1)/6 integral, zeros at {(2),(3)}
    // force omega((2^2)) = n(n-1)/4 integral.
    if (is_pair(p2, p22)) return n % 3 == 0 || n % 3 == 1;
    if (is_pair(p2, p3)) return n % 4 == 0 || n % 4 == 1;
    throw input_error("pair_zero_condition: unsupported pair " + a.str() + ", " + b.str());
}

namespace {

bool contains(const std::vector<Partition>& set, const Partition& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

bool subset_of(const std::vector<Partition>& a, const std::vector<Partition>& b) {
    for (auto& p : a)
        if (!contains(b, p)) return false;
    return true;
}

// The ten square quantities of the allowed-case list (ii).
bool square_case_holds(long n) {
    auto q = [&](long num, long den) { return make_rat(num, den); };
    std::vector<BigRat> quantities = {
        q(6 * n * n + 74 * n - 600, 4),   q(38 * n * n + 34 * n - 192, 28),
        q(8 * n - 45, 1),                 q(8 * n - 15, 1),
        q(6 * n * n - 30 * n + 40, 4),    q(6 * n * n - 70 * n + 120, 4),
        q(11 * n * n - 245 * n + 1350, 8), q(2 * n * n + 22 * n - 48, 4),
        q(6 * n * n + 2 * n - 24, 4),     q(n * n - n, 2)};
    for (auto& v : quantities)
        if (is_integer(v) && is_perfect_square(v.get_num())) return true;
    return false;
}

struct CaseContext {
    const CharTable& table;
    int shape_idx;
    long n;
    const std::vector<Partition>& C;

    BigRat rho(const Partition& cls) const {
        return ratio(table, shape_idx, table.class_index(cls));
    }
    bool has_class(const Partition& cls) const { return cls.supp() <= n; }
};

std::vector<std::string> matched_cases(const CaseContext& ctx) {
    std::vector<std::string> hits;
    const long n = ctx.n;
    Partition p2({2}), p3({3}), p22({2, 2}), p4({4}), p32({3, 2}), p222({2, 2, 2}), p5({5}),
        p42({4, 2}), p33({3, 3}), p322({3, 2, 2}), p2222({2, 2, 2, 2});

    // (i) exactly two of {(2),(3),(2^2)} vanish and the pair condition holds.
    {
        std::vector<Partition> small = {p2, p3, p22}, in;
        for (auto& p : small)
            if (contains(ctx.C, p)) in.push_back(p);
        if (in.size() == 2 && pair_zero_condition(in[0], in[1], static_cast<int>(n)))
            hits.push_back("i");
    }
    if (square_case_holds(n)) hits.push_back("ii");
    if (ctx.has_class(p3)) {
        BigRat r3 = ctx.rho(p3);
        BigRat den3 = BigRat(2) * n * (n - 1) * (n - 2);
        if (r3 == make_rat(n * n - 25 * n + 60, 1) / den3 && (n % 3 == 0 || n % 3 == 1))
            hits.push_back("iii");
        if (r3 == -make_rat(n * n - 33 * n + 140, 1) / den3 && (n % 3 == 1 || n % 3 == 2) &&
            subset_of(ctx.C, {p2, p4, p32, p222, p42, p2222}))
            hits.push_back("iv");
        if (r3 == make_rat(12 * (n - 5), 1) / (BigRat(n) * (n - 1) * (n - 2)) &&
            subset_of(ctx.C, {p2, p4, p32, p222, p42, p322}) && (n % 4 == 0 || n % 4 == 1) &&
            ctx.has_class(p22) &&
            ctx.rho(p22) ==
                -make_rat(2 * n * n + 46 * n - 240, 1) / (BigRat(n) * (n - 1) * (n - 2) * (n - 3)))
            hits.push_back("v");
        if (r3 == -make_rat(9 * n * n - 129 * n + 420, 1) / (BigRat(4) * n * (n - 1) * (n - 2)) &&
            (n % 4 == 0 || n % 4 == 1))
            hits.push_back("vi");
        // The sporadic linear forcing rho((3)) = 1/((n-2)(n-5)) survives only
        // at the finitely many n where omega((3)) = n(n-1)/(3(n-5)) is an
        // integer; those characters fall outside the infinite-n cases.
        if (n != 2 && n != 5 && r3 == make_rat(1, (n - 2) * (n - 5)) &&
            is_integer(make_rat(n * (n - 1), 3 * (n - 5))))
            hits.push_back("sporadic-linear");
    }
    {
        std::vector<Partition> base = {p2, p4, p32, p222};
        std::vector<Partition> l4 = {p5, p42, p33, p322, p2222};
        int meet = 0;
        for (auto& p : l4)
            if (contains(ctx.C, p)) ++meet;
        if (subset_of(base, ctx.C) && meet <= 1) hits.push_back("vii");
    }
    if (subset_of(ctx.C, {p3, p32, p33, p322})) hits.push_back("viii");
    if (subset_of(ctx.C, {p22, p4, p42, p322})) hits.push_back("ix");
    return hits;
}

}  // namespace

ScanReport forbidden_set_scan(const CharTable& table) {
    ScanReport report;
    report.n = table.n();
    report.norm_cap = 4;
    std::vector<Partition> l4;
    for (auto& cls : classes_with_norm_at_most(4))
        if (cls.supp() <= table.n()) l4.push_back(cls);

    for (size_t i = 0; i < table.shapes().size(); ++i) {
        ScanEntry entry;
        entry.shape_idx = static_cast<int>(i);
        for (auto& cls : l4)
            if (table.value(static_cast<int>(i), table.class_index(cls)) == 0)
                entry.vanishing.push_back(cls);
        size_t z = entry.vanishing.size();
        if (z < 4) continue;
        // Number of subsets of size >= 4.
        long long total = 0;
        for (size_t j = 4; j <= z; ++j) total += binomial(static_cast<int>(z), static_cast<int>(j)).get_si();
        entry.subset_count = total;
        entry.matched_cases =
            matched_cases(CaseContext{table, static_cast<int>(i), table.n(), entry.vanishing});
        if (entry.matched_cases.empty())
            throw falsification_alarm("shape " + table.shapes()[i].str() + " of S_" +
                                      std::to_string(table.n()) +
                                      " vanishes on a set outside every allowed case");
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

YoungDiagram two_hooks_shape(const FamilyParams& p) {
    if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 || p.e < 0)
        throw input_error("two-hook family: parameters must be nonnegative");
    if (p.a - p.d - 2 + p.e < 0)
        throw input_error("two-hook family: a-d-2+e must be nonnegative");
    std::vector<int> rows;
    rows.push_back(static_cast<int>(p.a + p.b));
    rows.push_back(static_cast<int>(2 + p.c));
    for (long i = 0; i < p.d; ++i) rows.push_back(2);
    for (long i = 0; i < p.a - p.d - 2 + p.e; ++i) rows.push_back(1);
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    return YoungDiagram(std::move(rows));
}

BigRat oracle_omega(const YoungDiagram& shape, const Partition& cls) {
    int n = shape.n();
    BigRat rho = make_rat(mn_value(shape, PartitionOfN(cls, n)), hook_degree(shape));
    return BigRat(class_size(cls, n)) * rho;
}

}  // namespace

FamilyEval family_ratio(Family family, const FamilyParams& p, int min_scale, int oracle_max_n) {
    long scale = (family == Family::two_hooks_2 || family == Family::two_hooks_3) ? p.a : p.k;
    if (scale < min_scale)
        throw input_error("family scale parameter " + std::to_string(scale) +
                          " below the threshold " + std::to_string(min_scale));
    FamilyEval ev;
    switch (family) {
        case Family::two_hooks_2: {
            ev.shape = two_hooks_shape(p);
            ev.cls = Partition({2});
            long n = 2 * p.a + p.b + p.c + p.d + p.e;
            ev.n = static_cast<int>(n);
            ev.closed = make_rat(p.b - p.e, 2) * BigRat(n) +
                        make_rat((p.c + p.d + 1) * (-p.b + p.c - p.d + p.e), 2);
            break;
        }
        case Family::two_hooks_3: {
            ev.shape = two_hooks_shape(p);
            ev.cls = Partition({3});
            long n = 2 * p.a + p.b + p.c + p.d + p.e;
            ev.n = static_cast<int>(n);
            BigRat nn(n);
            ev.closed = nn * nn * nn / 12 - make_rat(p.c + p.d + 3, 4) * nn * nn +
                        (make_rat((p.b - p.e) * (p.b - p.e) + (p.c + p.d + 1) * (p.c + p.d + 1), 4) +
                         make_rat(5, 12)) *
                            nn -
                        make_rat((p.c + p.d + 1) * (p.b - p.c + p.d - p.e) * (p.b + p.c - p.d - p.e), 4);
            break;
        }
        case Family::two_rows: {
            size_t r = p.av.size();
            if (r == 0 || p.bv.size() != r) throw input_error("two_rows: need equal-length a,b lists");
            for (size_t i = 1; i < r; ++i)
                if (p.av[i - 1] <= p.av[i]) throw input_error("two_rows: a must be strictly decreasing");
            if (p.av.back() <= 0) throw input_error("two_rows: a must be positive");
            std::vector<int> rows;
            long n = 0, A = 0, B = 0, C = 0, D = 0, E = 0, F = 0, G = 0;
            for (size_t i = 0; i < r; ++i) {
                long row = p.av[i] * p.k + p.bv[i];
                rows.push_back(static_cast<int>(row));
                n += row;
                A += p.av[i];
                B += p.bv[i];
                C += p.av[i] * p.av[i];
                D += p.av[i] * p.bv[i];
                E += (2 * static_cast<long>(i) + 1) * p.av[i];
                F += (2 * static_cast<long>(i) + 1) * p.bv[i];
                G += p.bv[i] * p.bv[i];
            }
            ev.shape = YoungDiagram(std::move(rows));
            ev.cls = Partition({2});
            ev.n = static_cast<int>(n);
            BigRat nn(n);
            ev.closed = make_rat(C, 2 * A * A) * nn * nn +
                        (make_rat(2 * D - E, 2 * A) - make_rat(B * C, A * A)) * nn +
                        make_rat(C * B * B - A * (2 * D - E) * B + A * A * (G - F), 2 * A * A);
            break;
        }
        case Family::two_rows_cols: {
            size_t r = p.av.size();
            if (r == 0 || p.bv.size() != r || p.cv.size() != r)
                throw input_error("two_rows_cols: need equal-length a,b,c lists");
            std::vector<int> rows;
            long n = 0, A = 0, B = 0, D = 0, E = 0, F = -static_cast<long>(r) * static_cast<long>(r);
            for (size_t i = 0; i < r; ++i) {
                A += p.av[i];
                B += p.av[i] * (p.bv[i] - p.cv[i]);
                D += (2 * static_cast<long>(i) + 1) * (p.bv[i] - p.cv[i]);
                E += p.bv[i] * p.bv[i] - p.cv[i] * p.cv[i];
                F += p.bv[i] + p.cv[i];
                n += 2 * p.av[i] * p.k + p.bv[i] + p.cv[i];
            }
            n -= static_cast<long>(r) * static_cast<long>(r);
            for (size_t i = 0; i < r; ++i) rows.push_back(static_cast<int>(p.av[i] * p.k + p.bv[i]));
            // Column block: part r repeated a_r k + c_r - r times, then part j
            // repeated (a_j - a_{j+1}) k + c_j - c_{j+1} times for j < r.
            long rep_r = p.av[r - 1] * p.k + p.cv[r - 1] - static_cast<long>(r);
            if (rep_r < 0) throw input_error("two_rows_cols: column block negative");
            for (long i = 0; i < rep_r; ++i) rows.push_back(static_cast<int>(r));
            for (size_t j = r - 1; j >= 1; --j) {
                long rep = (p.av[j - 1] - p.av[j]) * p.k + p.cv[j - 1] - p.cv[j];
                if (rep < 0) throw input_error("two_rows_cols: column block negative");
                for (long i = 0; i < rep; ++i) rows.push_back(static_cast<int>(j));
            }
            std::sort(rows.begin(), rows.end(), std::greater<int>());
            ev.shape = YoungDiagram(std::move(rows));
            ev.cls = Partition({2});
            ev.n = static_cast<int>(n);
            BigRat nn(n);
            ev.closed = make_rat(B, 2 * A) * nn + make_rat(E - D, 2) - make_rat(B * F, 2 * A);
            break;
        }
    }
    if (ev.shape.n() != ev.n) throw internal_error("family shape size disagrees with n");
    if (ev.n > oracle_max_n)
        throw resource_guard_error("family oracle check at n=" + std::to_string(ev.n) +
                                   " exceeds the configured bound");
    ev.oracle = oracle_omega(ev.shape, ev.cls);
    if (ev.closed != ev.oracle)
        throw falsification_alarm("family formula disagrees with the character oracle at n=" +
                                  std::to_string(ev.n));
    return ev;
}

Family family_from_name(const std::string& name) {
    if (name == "two_hooks_2") return Family::two_hooks_2;
    if (name == "two_hooks_3") return Family::two_hooks_3;
    if (name == "two_rows") return Family::two_rows;
    if (name == "two_rows_cols") return Family::two_rows_cols;
    throw input_error("unknown family '" + name + "'");
}

}  // namespace charrel
