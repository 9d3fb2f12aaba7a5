#include "charrel/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "charrel/errors.hpp"
#include "charrel/unipoly.hpp"

namespace charrel {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw input_error("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 1) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        text.remove_prefix(1);
        text.remove_suffix(1);
    }
    if (text.empty() || text == "id" || text == "1") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find_first_of(",.", pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        int part = 0, exponent = 1;
        size_t caret = tok.find('^');
        try {
            if (caret == std::string_view::npos) {
                part = std::stoi(std::string(tok));
            } else {
                part = std::stoi(std::string(tok.substr(0, caret)));
                exponent = std::stoi(std::string(tok.substr(caret + 1)));
            }
        } catch (const std::exception&) {
            throw input_error("cannot parse partition token '" + std::string(tok) + "'");
        }
        if (exponent < 0) throw input_error("negative exponent in partition");
        for (int i = 0; i < exponent; ++i) parts.push_back(part);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::supp() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::norm() const {
    int s = 0;
    for (int p : parts_) s += p - 1;
    return s;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

int Partition::smallest_part() const {
    if (parts_.empty()) throw input_error("identity class has no parts");
    return parts_.back();
}

Partition Partition::without_one(int part) const {
    std::vector<int> parts = parts_;
    auto it = std::find(parts.begin(), parts.end(), part);
    if (it == parts.end())
        throw input_error("partition " + str() + " has no part " + std::to_string(part));
    parts.erase(it);
    return Partition(std::move(parts));
}

Partition Partition::with_one(int part) const {
    std::vector<int> parts = parts_;
    parts.push_back(part);
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "(";
    bool first = true;
    for (auto [part, mult] : multiplicities()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(part);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    out += ")";
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    int na = norm(), nb = other.norm();
    if (na != nb) return na <=> nb;
    // Reverse dominance tiebreak, padding the shorter list with 1s. A smaller
    // part at the first difference means the larger partition.
    size_t len = std::max(parts_.size(), other.parts_.size());
    for (size_t i = 0; i < len; ++i) {
        int a = i < parts_.size() ? parts_[i] : 1;
        int b = i < other.parts_.size() ? other.parts_[i] : 1;
        if (a != b) return b <=> a;
    }
    return std::strong_ordering::equal;
}

PartitionOfN::PartitionOfN(Partition b, int n_) : base(std::move(b)), n(n_) {
    if (n < base.supp())
        throw input_error("n=" + std::to_string(n) + " below supp of " + base.str());
}

std::vector<int> PartitionOfN::full_parts() const {
    std::vector<int> parts = base.parts();
    parts.resize(parts.size() + static_cast<size_t>(n - base.supp()), 1);
    return parts;
}

std::string PartitionOfN::str() const { return base.str() + "@" + std::to_string(n); }

BigInt class_size(const Partition& lambda, int n) {
    if (n < lambda.supp())
        throw input_error("class_size: n=" + std::to_string(n) + " below supp of " + lambda.str());
    // n! / (prod lambda_i^{a_i} a_i! * (n-supp)!)
    BigInt num = factorial(n);
    BigInt den = factorial(n - lambda.supp());
    for (auto [part, mult] : lambda.multiplicities()) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
        den *= pw * factorial(mult);
    }
    return num / den;
}

UniPoly class_size_poly(const Partition& lambda) {
    // falling factorial N(N-1)...(N-supp+1) over prod lambda_i^{a_i} a_i!
    UniPoly p = UniPoly::constant(1);
    for (int i = 0; i < lambda.supp(); ++i) p = p * UniPoly::linear(1, -i);
    BigInt den = 1;
    for (auto [part, mult] : lambda.multiplicities()) {
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
        den *= pw * factorial(mult);
    }
    return p * BigRat(1, den);
}

namespace {

void gen_parts_at_least_2(int remaining, int max_part, std::vector<int>& acc,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 2; --p) {
        acc.push_back(p);
        gen_parts_at_least_2(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw input_error("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    // Normalized classes of S_n are exactly the partitions with parts >= 2 of
    // every m <= n (the rest of n is 1s).
    for (int m = 0; m <= n; ++m) gen_parts_at_least_2(m, m, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt partition_count(int n) {
    static std::map<int, BigInt> memo;  // small n only; no locking needed for our uses
    if (n < 0) return 0;
    if (n == 0) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (int k = 1;; ++k) {
        int g1 = k * (3 * k - 1) / 2;
        int g2 = k * (3 * k + 1) / 2;
        if (g1 > n && g2 > n) break;
        BigInt sign = (k % 2 == 1) ? 1 : -1;
        if (g1 <= n) total += sign * partition_count(n - g1);
        if (g2 <= n) total += sign * partition_count(n - g2);
    }
    memo[n] = total;
    return total;
}

std::vector<Partition> classes_with_norm_at_most(int k) {
    if (k < 1) throw input_error("classes_with_norm_at_most: k must be >= 1");
    std::vector<Partition> all;
    std::vector<int> acc;
    for (int m = 2; m <= 2 * k; ++m) gen_parts_at_least_2(m, m, acc, all);
    std::vector<Partition> out;
    for (auto& p : all)
        if (p.norm() >= 1 && p.norm() <= k) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace charrel
