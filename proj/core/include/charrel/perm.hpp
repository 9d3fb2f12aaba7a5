#pragma once

#include <functional>
#include <vector>

#include "charrel/partition.hpp"

namespace charrel {

/// Permutation of {0,...,n-1} as an image table.
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// Apply b first, then a.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Partition cycle_type(const Perm& p);

/// One representative with cycles on consecutive points starting at 0.
Perm canonical_of_type(const Partition& type, int n);

/// Calls fn for every element of the class `type` in S_n, each exactly once.
void for_each_in_class(const Partition& type, int n, const std::function<void(const Perm&)>& fn);

}  // namespace charrel
