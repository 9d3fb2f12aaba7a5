#include "charrel/connection.hpp"

#include <algorithm>

#include "charrel/errors.hpp"
#include "charrel/perm.hpp"

namespace charrel {

BigInt ConnectionEngine::count_brute(const Partition& x, const Partition& y,
                                     const Partition& target, int n) const {
    int need = std::max({x.supp(), y.supp(), target.supp()});
    if (n < need) throw input_error("count_brute: n below the classes' support");
    if (class_size(x, n) > to_bigint(store_.config().enumeration_cap))
        throw resource_guard_error("count_brute: class of " + x.str() + " in S_" + std::to_string(n) +
                                   " exceeds the enumeration cap");
    Perm y0 = canonical_of_type(y, n);
    long long count = 0;
    for_each_in_class(x, n, [&](const Perm& p) {
        if (cycle_type(compose(p, y0)) == target) ++count;
    });
    return to_bigint(count);
}

BigInt ConnectionEngine::count_char_formula(const Partition& x, const Partition& y,
                                            const Partition& target, int n) {
    const CharTable& t = store_.table(n);
    int xi = t.class_index(x), yi = t.class_index(y), zi = t.class_index(target);
    BigRat sum(0);
    for (size_t i = 0; i < t.shapes().size(); ++i) {
        long long cx = t.value(static_cast<int>(i), xi), cy = t.value(static_cast<int>(i), yi),
                  cz = t.value(static_cast<int>(i), zi);
        if (cx == 0 || cy == 0 || cz == 0) continue;
        sum += make_rat(to_bigint(cx) * to_bigint(cy) * to_bigint(cz), to_bigint(t.degree(static_cast<int>(i))));
    }
    BigRat result = BigRat(class_size(x, n)) * BigRat(class_size(target, n)) * sum /
                    BigRat(factorial(n));
    if (!is_integer(result) || result < 0)
        throw internal_error("character-sum connection count is not a nonnegative integer");
    return result.get_num();
}

std::map<Partition, BigInt> ConnectionEngine::profile_at(const Partition& x, const Partition& y,
                                                         int n) {
    if (class_size(x, n) <= to_bigint(store_.config().enumeration_cap)) {
        std::map<Partition, BigInt> counts;
        Perm y0 = canonical_of_type(y, n);
        for_each_in_class(x, n, [&](const Perm& p) { counts[cycle_type(compose(p, y0))] += 1; });
        return counts;
    }
    // Enumeration too large; fall back to the character sum, which needs the
    // full table at this n.
    std::map<Partition, BigInt> counts;
    for (const Partition& z : partitions_of(n)) {
        if (z.supp() > x.supp() + y.supp()) continue;
        BigInt c = count_char_formula(x, y, z, n);
        if (c != 0) counts.emplace(z, std::move(c));
    }
    return counts;
}

const std::map<Partition, UniPoly>& ConnectionEngine::products(const Partition& x,
                                                               const Partition& y) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(x, y);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    std::map<Partition, UniPoly> polys;
    if (x.is_identity()) {
        polys.emplace(y, UniPoly::constant(1));
        return cache_.emplace(std::move(key), std::move(polys)).first->second;
    }

    int m = x.supp(), sy = y.supp();
    int n0 = sy + m;  // >= supp of every product and of both classes
    int samples = m + 2;
    std::vector<std::map<Partition, BigInt>> profiles;
    profiles.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) profiles.push_back(profile_at(x, y, n0 + i));

    std::vector<Partition> targets;
    for (auto& prof : profiles)
        for (auto& [z, c] : prof)
            if (std::find(targets.begin(), targets.end(), z) == targets.end()) targets.push_back(z);

    for (const Partition& z : targets) {
        // Degree = the maximal number of fresh points a configuration uses.
        int bound = std::min({m, z.supp(), z.supp() - sy + m});
        bound = std::max(bound, 0);
        std::vector<std::pair<long, BigRat>> pts;
        for (int i = 0; i < samples; ++i) {
            auto it = profiles[static_cast<size_t>(i)].find(z);
            pts.emplace_back(n0 + i, it == profiles[static_cast<size_t>(i)].end()
                                         ? BigRat(0)
                                         : BigRat(it->second));
        }
        UniPoly p = lagrange_interpolate(pts, bound);
        if (!p.is_zero()) polys.emplace(z, std::move(p));
    }
    return cache_.emplace(std::move(key), std::move(polys)).first->second;
}

UniPoly ConnectionEngine::count_poly(const Partition& x_cycle, const Partition& y,
                                     const Partition& target) {
    if (!x_cycle.is_cycle())
        throw input_error("count_poly: x must be a single cycle, got " + x_cycle.str());
    const auto& map = products(x_cycle, y);
    auto it = map.find(target);
    return it == map.end() ? UniPoly{} : it->second;
}

BigInt ConnectionEngine::count_brute(const ConnectionQuery& q) const {
    if (!q.n) throw input_error("count_brute: query needs a concrete n");
    return count_brute(q.x_class, q.y_class, q.target, *q.n);
}

BigInt ConnectionEngine::count_char_formula(const ConnectionQuery& q) {
    if (!q.n) throw input_error("count_char_formula: query needs a concrete n");
    return count_char_formula(q.x_class, q.y_class, q.target, *q.n);
}

UniPoly ConnectionEngine::count_poly(const ConnectionQuery& q) {
    return count_poly(q.x_class, q.y_class, q.target);
}

}  // namespace charrel
