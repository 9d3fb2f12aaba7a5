#pragma once

// Test-only oracles, kept independent of the library's Murnaghan-Nakayama
// path: the Frobenius coefficient formula
//   chi_lambda(mu) = [x^{lambda+delta}] Vandermonde(x) * prod_j p_{mu_j}(x)
// evaluated by direct assignment enumeration, plus small helpers for
// brute-force group sweeps.

#include <algorithm>
#include <vector>

#include "charrel/partition.hpp"
#include "charrel/perm.hpp"
#include "charrel/young.hpp"

namespace testing_oracles {

// Sign of the permutation sending i -> tau[i]; -1 exponent by inversions.
inline int perm_sign(const std::vector<int>& tau) {
    int inv = 0;
    for (size_t i = 0; i < tau.size(); ++i)
        for (size_t j = i + 1; j < tau.size(); ++j)
            if (tau[i] > tau[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

inline long long frobenius_char(const charrel::YoungDiagram& shape,
                                const charrel::PartitionOfN& cls) {
    const std::vector<int>& rows = shape.rows();
    int k = static_cast<int>(rows.size());
    std::vector<int> l(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) l[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)] + (k - 1 - i);
    std::vector<int> parts = cls.full_parts();  // includes the 1s

    long long total = 0;
    std::vector<int> sums(static_cast<size_t>(k), 0);
    // DFS over assignments of parts to the k variables; at a full assignment
    // the residual exponents l - sums must form a permutation of {0..k-1},
    // contributing the sign of the Vandermonde term tau(i) = k - residue_i.
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == parts.size()) {
            std::vector<int> tau(static_cast<size_t>(k));
            std::vector<char> seen(static_cast<size_t>(k), 0);
            for (int i = 0; i < k; ++i) {
                int e = l[static_cast<size_t>(i)] - sums[static_cast<size_t>(i)];
                if (e < 0 || e >= k || seen[static_cast<size_t>(e)]) return;
                seen[static_cast<size_t>(e)] = 1;
                tau[static_cast<size_t>(i)] = k - e;
            }
            total += perm_sign(tau);
            return;
        }
        for (int i = 0; i < k; ++i) {
            if (sums[static_cast<size_t>(i)] + parts[idx] > l[static_cast<size_t>(i)]) continue;
            sums[static_cast<size_t>(i)] += parts[idx];
            self(self, idx + 1);
            sums[static_cast<size_t>(i)] -= parts[idx];
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace testing_oracles
