#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charrel/partition.hpp"
#include "charrel/rational.hpp"

namespace charrel {

/// A partition of n in full form (1-parts kept), indexing an irreducible
/// character of S_n.
class YoungDiagram {
  public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);
    static YoungDiagram parse(std::string_view text);

    const std::vector<int>& rows() const { return rows_; }
    int n() const;
    YoungDiagram conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    /// First-column hook lengths, strictly decreasing.
    std::vector<int> beta_set() const;

    std::string str() const;  // "5,2,2"
    bool operator==(const YoungDiagram&) const = default;
    auto operator<=>(const YoungDiagram&) const = default;  // plain lex on rows

  private:
    std::vector<int> rows_;  // weakly decreasing, positive
};

/// chi(1) by the hook length formula.
BigInt hook_degree(const YoungDiagram& shape);

/// All ways to remove a border strip of the given length: (result, sign) with
/// sign = (-1)^height.
std::vector<std::pair<YoungDiagram, int>> border_strip_removals(const YoungDiagram& shape, int len);

/// Exact character value by the Murnaghan-Nakayama rule, removing the largest
/// remaining cycle first. Self-contained memo per call; use CharTable for
/// sweeps.
BigInt mn_value(const YoungDiagram& shape, const PartitionOfN& cls);

}  // namespace charrel
