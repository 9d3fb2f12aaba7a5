#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "charrel/char_table.hpp"
#include "charrel/partition.hpp"
#include "charrel/unipoly.hpp"

namespace charrel {

struct ConnectionQuery {
    Partition x_class;
    Partition y_class;
    Partition target;
    std::optional<int> n;  // empty = symbolic
};

/// Connection coefficients |{x' in x^{S_n} : x'y in target}| three ways:
/// direct enumeration, the class-algebra character sum, and as polynomials in
/// N by interpolation. Symbolic profiles are cached keyed by (x, y).
class ConnectionEngine {
  public:
    explicit ConnectionEngine(TableStore& store) : store_(store) {}

    /// Fixes one y and enumerates the class of x. Guards on class_size(x, n).
    BigInt count_brute(const Partition& x, const Partition& y, const Partition& target, int n) const;

    /// |x||z|/n! * sum over Irr of chi(x)chi(y)chi(z)/chi(1).
    BigInt count_char_formula(const Partition& x, const Partition& y, const Partition& target, int n);

    /// Every class of x'y with its count polynomial; valid for all
    /// n >= supp(y) + supp(x). Nonzero polynomials only.
    const std::map<Partition, UniPoly>& products(const Partition& x, const Partition& y);

    /// x must be a single cycle.
    UniPoly count_poly(const Partition& x_cycle, const Partition& y, const Partition& target);

    BigInt count_brute(const ConnectionQuery& q) const;
    BigInt count_char_formula(const ConnectionQuery& q);
    UniPoly count_poly(const ConnectionQuery& q);

    TableStore& tables() { return store_; }

  private:
    std::map<Partition, BigInt> profile_at(const Partition& x, const Partition& y, int n);

    TableStore& store_;
    std::mutex mu_;
    std::map<std::pair<Partition, Partition>, std::map<Partition, UniPoly>> cache_;
};

}  // namespace charrel
