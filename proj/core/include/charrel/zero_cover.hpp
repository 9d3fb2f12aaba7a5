#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charrel/char_table.hpp"

namespace charrel {

/// Minimal fixed-size bitset over the targeted classes.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((static_cast<size_t>(nbits) + 63) / 64, 0) {}
    int size() const { return nbits_; }
    void set(int i) { w_[static_cast<size_t>(i) / 64] |= (uint64_t{1} << (i % 64)); }
    bool test(int i) const { return (w_[static_cast<size_t>(i) / 64] >> (i % 64)) & 1; }
    int count() const;
    Bitset& operator|=(const Bitset& o);
    bool all_set() const;
    bool operator==(const Bitset&) const = default;

  private:
    int nbits_ = 0;
    std::vector<uint64_t> w_;
};

/// Zero set of one irreducible over the targeted nonidentity classes.
struct ZeroProfile {
    int shape_idx = 0;
    Bitset zeros;
    int zero_count = 0;
};

struct ZeroProfileSet {
    int n = 0;
    std::optional<int> norm_cap;
    std::vector<int> target_class_idx;  // indices into table.classes()
    std::vector<ZeroProfile> profiles;  // one per irreducible, empties included
};

ZeroProfileSet zero_profiles(const CharTable& table, std::optional<int> norm_cap = {});

struct CoverResult {
    enum class Status { found, exceeds_limit, no_cover };
    int n = 0;
    std::optional<int> norm_cap;
    Status status = Status::no_cover;
    int value = 0;  // meaningful when status == found
    std::vector<YoungDiagram> witness;
    std::string str() const;
};

/// Exact minimum number of irreducibles whose zero sets cover all targeted
/// classes, searched up to `limit` (guarded at 4).
CoverResult min_cover(const CharTable& table, std::optional<int> norm_cap, int limit);
CoverResult z_k(const CharTable& table, int k, int limit);

/// Condition on n forced when a character vanishes on both classes of a
/// pair from {(2),(3),(2^2)}: a square condition for {(3),(2^2)}, integrality
/// congruences for the pairs containing (2).
bool pair_zero_condition(const Partition& a, const Partition& b, int n);

struct ScanEntry {
    int shape_idx = 0;
    std::vector<Partition> vanishing;  // maximal zero set within the norm cap
    long long subset_count = 0;        // number of size->=4 subsets
    std::vector<std::string> matched_cases;
};

struct ScanReport {
    int n = 0;
    int norm_cap = 4;
    std::vector<ScanEntry> entries;  // characters with >= 4 zeros in the cap
};

/// Classifies every character vanishing on >= 4 classes of L_{<=4} against
/// the allowed-case taxonomy; throws falsification_alarm when a maximal
/// vanishing set matches no case.
ScanReport forbidden_set_scan(const CharTable& table);

enum class Family { two_hooks_2, two_hooks_3, two_rows, two_rows_cols };

struct FamilyParams {
    long a = 0, b = 0, c = 0, d = 0, e = 0;  // two_hooks_2 / two_hooks_3
    long k = 0;                              // two_rows / two_rows_cols
    std::vector<long> av, bv, cv;
};

struct FamilyEval {
    YoungDiagram shape;
    int n = 0;
    Partition cls;
    BigRat closed;  // the closed formula for omega(cls)
    BigRat oracle;  // class size * mn / hook degree
};

/// Evaluates a family's closed character-ratio formula and verifies it
/// against the MN+hook oracle; throws falsification_alarm on a mismatch.
/// The scale parameter (a for the hook families, k for the row families)
/// must reach min_scale; oracle-verified equality is the ground truth at
/// whatever scale is requested.
FamilyEval family_ratio(Family family, const FamilyParams& params, int min_scale = 10,
                        int oracle_max_n = 200);

Family family_from_name(const std::string& name);

}  // namespace charrel
