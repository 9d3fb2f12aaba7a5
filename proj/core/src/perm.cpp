#include "charrel/perm.hpp"

#include <algorithm>
#include <numeric>

#include "charrel/errors.hpp"

namespace charrel {

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<int> parts;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        if (len > 1) parts.push_back(len);
    }
    return Partition(std::move(parts));
}

Perm canonical_of_type(const Partition& type, int n) {
    if (type.supp() > n) throw input_error("canonical_of_type: class does not fit in S_n");
    Perm p = identity_perm(n);
    int next = 0;
    for (int part : type.parts()) {
        for (int i = 0; i < part; ++i) p[static_cast<size_t>(next + i)] = next + (i + 1) % part;
        next += part;
    }
    return p;
}

namespace {

// Enumerates the class once each: the smallest unused point either takes one
// of the remaining fixed-point slots or anchors a cycle of one of the distinct
// remaining lengths; the rest of that cycle is an ordered choice of free
// points.
struct ClassEnum {
    int n;
    std::vector<int> remaining;  // multiset of cycle lengths, descending
    int fixed_slots;
    Perm perm;
    std::vector<char> used;
    const std::function<void(const Perm&)>* fn;

    void rec(int points_left) {
        if (points_left == 0) {
            (*fn)(perm);
            return;
        }
        int anchor = 0;
        while (used[static_cast<size_t>(anchor)]) ++anchor;
        used[static_cast<size_t>(anchor)] = 1;
        if (fixed_slots > 0) {
            --fixed_slots;
            rec(points_left - 1);
            ++fixed_slots;
        }
        for (size_t i = 0; i < remaining.size(); ++i) {
            if (i > 0 && remaining[i] == remaining[i - 1]) continue;
            int len = remaining[i];
            remaining.erase(remaining.begin() + static_cast<long>(i));
            std::vector<int> cycle(static_cast<size_t>(len));
            cycle[0] = anchor;
            extend(cycle, 1, points_left);
            remaining.insert(remaining.begin() + static_cast<long>(i), len);
        }
        used[static_cast<size_t>(anchor)] = 0;
    }

    void extend(std::vector<int>& cycle, int depth, int points_left) {
        int len = static_cast<int>(cycle.size());
        if (depth == len) {
            for (int i = 0; i < len; ++i)
                perm[static_cast<size_t>(cycle[static_cast<size_t>(i)])] =
                    cycle[static_cast<size_t>((i + 1) % len)];
            rec(points_left - len);
            for (int i = 0; i < len; ++i) {
                int v = cycle[static_cast<size_t>(i)];
                perm[static_cast<size_t>(v)] = v;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            cycle[static_cast<size_t>(depth)] = v;
            extend(cycle, depth + 1, points_left);
            used[static_cast<size_t>(v)] = 0;
        }
    }
};

}  // namespace

void for_each_in_class(const Partition& type, int n,
                       const std::function<void(const Perm&)>& fn) {
    if (type.supp() > n) throw input_error("for_each_in_class: class does not fit in S_n");
    ClassEnum e{n,
                type.parts(),
                n - type.supp(),
                identity_perm(n),
                std::vector<char>(static_cast<size_t>(n), 0),
                &fn};
    e.rec(n);
}

}  // namespace charrel
