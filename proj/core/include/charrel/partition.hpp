#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charrel/rational.hpp"

namespace charrel {

class UniPoly;

/// A conjugacy class label of a symmetric group: an integer partition with the
/// parts of size 1 omitted. The empty partition is the identity class. One
/// label stands for a class of S_n for every n >= supp().
class Partition {
  public:
    Partition() = default;
    /// Sorts decreasingly and drops parts equal to 1. Non-positive parts are
    /// rejected.
    explicit Partition(std::vector<int> parts);

    /// Accepts "3^2,2", "2,1,1", "id", "()" and "" (both mean the identity).
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool is_identity() const { return parts_.empty(); }
    bool is_cycle() const { return parts_.size() == 1; }

    /// Number of non-fixed points: sum of the listed parts.
    int supp() const;
    /// Minimal number of transpositions composing to an element of this type.
    int norm() const;

    /// (part, multiplicity) pairs, parts decreasing.
    std::vector<std::pair<int, int>> multiplicities() const;

    /// Smallest listed part; the partition must not be the identity.
    int smallest_part() const;

    /// Copy with one occurrence of `part` removed.
    Partition without_one(int part) const;
    /// Copy with `part` (>= 2) added.
    Partition with_one(int part) const;

    /// "(3^2,2)" with exponents for repeated parts; identity renders "()".
    std::string str() const;

    bool operator==(const Partition&) const = default;

    /// Total order: first by norm, ties by reverse dominance with the shorter
    /// list padded by 1s.
    std::strong_ordering operator<=>(const Partition& other) const;

  private:
    std::vector<int> parts_;  // weakly decreasing, every entry >= 2
};

/// A concrete class of a concrete S_n: `base` padded with n - supp ones.
struct PartitionOfN {
    Partition base;
    int n = 0;

    PartitionOfN(Partition b, int n_);
    /// Full part list including the 1s.
    std::vector<int> full_parts() const;
    std::string str() const;
    bool operator==(const PartitionOfN&) const = default;
};

/// Exact number of elements of cycle type `lambda` in S_n.
BigInt class_size(const Partition& lambda, int n);

/// Polynomial P with P(n) = class_size(lambda, n) for every n >= supp; degree
/// equals supp(lambda).
UniPoly class_size_poly(const Partition& lambda);

/// All classes of S_n (normalized partitions of n), sorted ascending; the
/// identity comes first. Count is p(n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n via the Euler pentagonal recurrence. Test oracle
/// for partitions_of, but also used by cache validation.
BigInt partition_count(int n);

/// All normalized partitions with 1 <= norm <= k, sorted ascending.
std::vector<Partition> classes_with_norm_at_most(int k);

}  // namespace charrel
