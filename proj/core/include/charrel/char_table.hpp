#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "charrel/config.hpp"
#include "charrel/partition.hpp"
#include "charrel/young.hpp"

namespace charrel {

/// Exact integer character table of S_n. Classes ascend in the partition
/// order (identity first), shapes descend lexicographically ((n) first), so
/// the first column is the degree column and the first row the trivial
/// character.
class CharTable {
  public:
    int n() const { return n_; }
    const std::vector<Partition>& classes() const { return classes_; }
    const std::vector<YoungDiagram>& shapes() const { return shapes_; }

    long long value(int shape_idx, int class_idx) const {
        return values_[static_cast<size_t>(shape_idx)][static_cast<size_t>(class_idx)];
    }
    long long degree(int shape_idx) const { return value(shape_idx, 0); }

    int class_index(const Partition& cls) const;
    int shape_index(const YoungDiagram& shape) const;
    long long value(const YoungDiagram& shape, const Partition& cls) const;

    static CharTable build(int n, const Config& cfg = {});

    /// Text cache round-trip; load throws input_error on any corruption.
    void save(const std::string& path) const;
    static CharTable load(const std::string& path);

  private:
    friend class TableStore;
    void index();
    void validate() const;

    int n_ = 0;
    std::vector<Partition> classes_;
    std::vector<YoungDiagram> shapes_;
    std::vector<std::vector<long long>> values_;
    std::map<Partition, int> class_idx_;
    std::map<std::vector<int>, int> shape_idx_;
};

/// chi(cls)/chi(1)
BigRat ratio(const CharTable& t, int shape_idx, int class_idx);
BigRat ratio(const CharTable& t, const YoungDiagram& shape, const Partition& cls);

/// |cls| * chi(cls)/chi(1); always a rational integer, which is checked.
BigRat omega(const CharTable& t, int shape_idx, int class_idx);
BigRat omega(const CharTable& t, const YoungDiagram& shape, const Partition& cls);

/// All shapes of S_n in table order.
std::vector<YoungDiagram> all_shapes(int n);

/// Process-wide cache of tables, with optional disk persistence.
class TableStore {
  public:
    explicit TableStore(Config cfg = {});
    const CharTable& table(int n);
    const Config& config() const { return cfg_; }

  private:
    Config cfg_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<CharTable>> cache_;
};

}  // namespace charrel
