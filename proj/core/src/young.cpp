#include "charrel/young.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "charrel/errors.hpp"

namespace charrel {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (int r : rows_)
        if (r < 1) throw input_error("diagram rows must be positive");
    if (!std::is_sorted(rows_.rbegin(), rows_.rend()))
        throw input_error("diagram rows must be weakly decreasing");
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
    // Same token syntax as Partition::parse, but 1-rows are kept.
    std::string s(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    std::vector<int> rows;
    size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
        size_t comma = s.find_first_of(",.", pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        int part = 0, exponent = 1;
        size_t caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                part = std::stoi(tok);
            } else {
                part = std::stoi(tok.substr(0, caret));
                exponent = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw input_error("cannot parse diagram token '" + tok + "'");
        }
        for (int i = 0; i < exponent; ++i) rows.push_back(part);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    return YoungDiagram(std::move(rows));
}

int YoungDiagram::n() const {
    int s = 0;
    for (int r : rows_) s += r;
    return s;
}

YoungDiagram YoungDiagram::conjugate() const {
    std::vector<int> cols;
    if (rows_.empty()) return YoungDiagram{};
    cols.resize(static_cast<size_t>(rows_[0]), 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++cols[static_cast<size_t>(j)];
    return YoungDiagram(std::move(cols));
}

std::vector<int> YoungDiagram::beta_set() const {
    int k = static_cast<int>(rows_.size());
    std::vector<int> betas(rows_.size());
    for (int i = 0; i < k; ++i) betas[static_cast<size_t>(i)] = rows_[static_cast<size_t>(i)] + k - 1 - i;
    return betas;  // strictly decreasing
}

std::string YoungDiagram::str() const {
    std::string out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rows_[i]);
    }
    return out;
}

BigInt hook_degree(const YoungDiagram& shape) {
    const auto& rows = shape.rows();
    if (rows.empty()) return 1;
    std::vector<int> cols = shape.conjugate().rows();
    BigInt hooks = 1;
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = cols[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(shape.n()) / hooks;
}

std::vector<std::pair<YoungDiagram, int>> border_strip_removals(const YoungDiagram& shape, int len) {
    std::vector<std::pair<YoungDiagram, int>> out;
    if (len <= 0) throw input_error("border strip length must be positive");
    std::vector<int> betas = shape.beta_set();
    int k = static_cast<int>(betas.size());
    for (int i = 0; i < k; ++i) {
        int b = betas[static_cast<size_t>(i)];
        if (b < len) continue;
        int target = b - len;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            int v = betas[static_cast<size_t>(j)];
            if (v == target) occupied = true;
            if (v > target && v < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = betas;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> rows;
        for (int j = 0; j < k; ++j) {
            int row = nb[static_cast<size_t>(j)] - (k - 1 - j);
            if (row > 0) rows.push_back(row);
        }
        out.emplace_back(YoungDiagram(std::move(rows)), height % 2 == 0 ? 1 : -1);
    }
    return out;
}

namespace {

BigInt mn_rec(const YoungDiagram& shape, const std::vector<int>& parts, size_t idx,
              std::map<std::pair<std::vector<int>, size_t>, BigInt>& memo) {
    if (idx == parts.size()) return hook_degree(shape);
    auto key = std::make_pair(shape.rows(), idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (auto& [sub, sign] : border_strip_removals(shape, parts[idx]))
        total += sign * mn_rec(sub, parts, idx + 1, memo);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

BigInt mn_value(const YoungDiagram& shape, const PartitionOfN& cls) {
    if (shape.n() != cls.n)
        throw input_error("mn_value: shape of " + std::to_string(shape.n()) + " against class of " +
                          std::to_string(cls.n));
    std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;
    // Listed parts (all >= 2) removed in decreasing order; the all-1s tail is
    // the identity of the leftover shape, i.e. its degree.
    return mn_rec(shape, cls.base.parts(), 0, memo);
}

}  // namespace charrel
