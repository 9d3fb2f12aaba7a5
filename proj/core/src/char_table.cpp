#include "charrel/char_table.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "charrel/errors.hpp"

namespace charrel {

namespace {

void gen_full_partitions(int remaining, int max_part, std::vector<int>& acc,
                         std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_full_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw internal_error("character value overflow");
    return r;
}

// Interning pools + sharded memo shared by the parallel fill.
struct FillContext {
    std::mutex pool_mu;
    std::map<std::vector<int>, int> shape_ids;
    std::vector<std::vector<int>> shapes;
    std::map<std::vector<int>, int> suffix_ids;
    std::vector<std::vector<int>> suffixes;

    struct Shard {
        std::mutex mu;
        std::unordered_map<uint64_t, long long> map;
    };
    std::array<Shard, 16> shards;

    int intern_shape(const std::vector<int>& rows) {
        std::lock_guard<std::mutex> lock(pool_mu);
        auto [it, inserted] = shape_ids.emplace(rows, static_cast<int>(shapes.size()));
        if (inserted) shapes.push_back(rows);
        return it->second;
    }
    int intern_suffix(const std::vector<int>& parts) {
        std::lock_guard<std::mutex> lock(pool_mu);
        auto [it, inserted] = suffix_ids.emplace(parts, static_cast<int>(suffixes.size()));
        if (inserted) suffixes.push_back(parts);
        return it->second;
    }

    Shard& shard_for(uint64_t key) { return shards[key % shards.size()]; }
    bool lookup(uint64_t key, long long& out) {
        Shard& s = shard_for(key);
        std::lock_guard<std::mutex> lock(s.mu);
        auto it = s.map.find(key);
        if (it == s.map.end()) return false;
        out = it->second;
        return true;
    }
    void store(uint64_t key, long long val) {
        Shard& s = shard_for(key);
        std::lock_guard<std::mutex> lock(s.mu);
        s.map.emplace(key, val);  // idempotent: identical value on re-insert
    }
};

long long degree_ll(const YoungDiagram& d) {
    BigInt deg = hook_degree(d);
    if (!deg.fits_slong_p()) throw internal_error("degree exceeds 64 bits at n=" + std::to_string(d.n()));
    return deg.get_si();
}

// parts: remaining cycle lengths, descending, all >= 2; empty tail = identity.
long long fill_rec(FillContext& ctx, const YoungDiagram& shape, int shape_id,
                   const std::vector<int>& parts, size_t idx, int suffix_id) {
    uint64_t key = (static_cast<uint64_t>(shape_id) << 22) | static_cast<uint64_t>(suffix_id);
    long long cached;
    if (ctx.lookup(key, cached)) return cached;
    long long total = 0;
    if (idx == parts.size()) {
        total = degree_ll(shape);
    } else {
        std::vector<int> tail(parts.begin() + static_cast<long>(idx) + 1, parts.end());
        int tail_id = ctx.intern_suffix(tail);
        for (auto& [sub, sign] : border_strip_removals(shape, parts[idx])) {
            int sub_id = ctx.intern_shape(sub.rows());
            long long v = fill_rec(ctx, sub, sub_id, parts, idx + 1, tail_id);
            total = checked_add(total, sign > 0 ? v : -v);
        }
    }
    ctx.store(key, total);
    return total;
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::vector<YoungDiagram> all_shapes(int n) {
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    gen_full_partitions(n, n, acc, out);
    std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
        return b.rows() < a.rows();
    });
    return out;
}

void CharTable::index() {
    class_idx_.clear();
    shape_idx_.clear();
    for (size_t i = 0; i < classes_.size(); ++i) class_idx_[classes_[i]] = static_cast<int>(i);
    for (size_t i = 0; i < shapes_.size(); ++i) shape_idx_[shapes_[i].rows()] = static_cast<int>(i);
}

int CharTable::class_index(const Partition& cls) const {
    auto it = class_idx_.find(cls);
    if (it == class_idx_.end())
        throw input_error("class " + cls.str() + " not in S_" + std::to_string(n_));
    return it->second;
}

int CharTable::shape_index(const YoungDiagram& shape) const {
    auto it = shape_idx_.find(shape.rows());
    if (it == shape_idx_.end())
        throw input_error("shape " + shape.str() + " not in S_" + std::to_string(n_));
    return it->second;
}

long long CharTable::value(const YoungDiagram& shape, const Partition& cls) const {
    return value(shape_index(shape), class_index(cls));
}

CharTable CharTable::build(int n, const Config& cfg) {
    if (n < 1) throw input_error("table: n must be >= 1");
    CharTable t;
    t.n_ = n;
    t.classes_ = partitions_of(n);
    t.shapes_ = all_shapes(n);
    size_t rows = t.shapes_.size(), cols = t.classes_.size();
    t.values_.assign(rows, std::vector<long long>(cols, 0));

    factorial(n);  // warm the factorial cache before threads fan out

    FillContext ctx;
    std::vector<int> shape_ids(rows);
    for (size_t i = 0; i < rows; ++i) shape_ids[i] = ctx.intern_shape(t.shapes_[i].rows());

    unsigned hw = std::thread::hardware_concurrency();
    int threads = cfg.thread_count > 0 ? cfg.thread_count : static_cast<int>(hw ? hw : 1);
    threads = std::min<int>(threads, static_cast<int>(cols));

    std::atomic<size_t> next_col{0};
    std::atomic<bool> failed{false};
    std::string error_msg;
    std::mutex error_mu;

    auto worker = [&]() {
        try {
            for (;;) {
                size_t j = next_col.fetch_add(1);
                if (j >= cols || failed.load()) break;
                const std::vector<int>& parts = t.classes_[j].parts();
                int suffix_id = ctx.intern_suffix(parts);
                for (size_t i = 0; i < rows; ++i)
                    t.values_[i][j] =
                        fill_rec(ctx, t.shapes_[i], shape_ids[i], parts, 0, suffix_id);
            }
        } catch (const std::exception& e) {
            failed.store(true);
            std::lock_guard<std::mutex> lock(error_mu);
            if (error_msg.empty()) error_msg = e.what();
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw internal_error("table fill failed: " + error_msg);

    t.index();
    t.validate();
    return t;
}

void CharTable::validate() const {
    for (size_t i = 0; i < shapes_.size(); ++i) {
        if (values_[i][0] <= 0) throw internal_error("non-positive degree in table");
        if (to_bigint(values_[i][0]) != hook_degree(shapes_[i]))
            throw internal_error("degree column disagrees with the hook length formula");
    }
    if (n_ > 10) return;
    // Row and column orthogonality, exact.
    std::vector<BigInt> sizes;
    for (auto& cls : classes_) sizes.push_back(class_size(cls, n_));
    BigInt order = factorial(n_);
    for (size_t a = 0; a < shapes_.size(); ++a)
        for (size_t b = a; b < shapes_.size(); ++b) {
            BigInt acc = 0;
            for (size_t j = 0; j < classes_.size(); ++j)
                acc += sizes[j] * to_bigint(values_[a][j]) * to_bigint(values_[b][j]);
            if (acc != (a == b ? order : BigInt(0)))
                throw internal_error("row orthogonality failed at n=" + std::to_string(n_));
        }
    for (size_t j = 0; j < classes_.size(); ++j)
        for (size_t k = j; k < classes_.size(); ++k) {
            BigInt acc = 0;
            for (size_t i = 0; i < shapes_.size(); ++i)
                acc += to_bigint(values_[i][j]) * to_bigint(values_[i][k]);
            if (acc != (j == k ? order / sizes[j] : BigInt(0)))
                throw internal_error("column orthogonality failed at n=" + std::to_string(n_));
        }
}

void CharTable::save(const std::string& path) const {
    std::ostringstream payload;
    payload << "charrel-table v1\n";
    payload << "n " << n_ << "\n";
    payload << "classes " << classes_.size() << "\n";
    for (auto& c : classes_) payload << c.str() << "\n";
    payload << "shapes " << shapes_.size() << "\n";
    for (auto& s : shapes_) payload << s.str() << "\n";
    payload << "values\n";
    for (auto& row : values_) {
        for (size_t j = 0; j < row.size(); ++j) payload << (j ? " " : "") << row[j];
        payload << "\n";
    }
    std::string body = payload.str();
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw input_error("cannot write table cache " + path);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    out << body << "checksum " << buf << "\n";
}

CharTable CharTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open table cache " + path);
    std::ostringstream all;
    all << in.rdbuf();
    std::string text = all.str();
    size_t cpos = text.rfind("checksum ");
    if (cpos == std::string::npos || cpos == 0) throw input_error("table cache missing checksum");
    std::string body = text.substr(0, cpos);
    std::string sumline = text.substr(cpos);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(body)));
    if (sumline.find(buf) == std::string::npos)
        throw input_error("table cache checksum mismatch: " + path);

    std::istringstream is(body);
    std::string magic, version, word;
    is >> magic >> version;
    if (magic != "charrel-table" || version != "v1") throw input_error("bad table cache header");
    CharTable t;
    size_t nclasses = 0, nshapes = 0;
    is >> word >> t.n_ >> word >> nclasses;
    is.ignore();
    std::string line;
    for (size_t i = 0; i < nclasses; ++i) {
        std::getline(is, line);
        t.classes_.push_back(Partition::parse(line));
    }
    is >> word >> nshapes;
    is.ignore();
    for (size_t i = 0; i < nshapes; ++i) {
        std::getline(is, line);
        t.shapes_.push_back(YoungDiagram::parse(line));
    }
    is >> word;  // "values"
    t.values_.assign(nshapes, std::vector<long long>(nclasses));
    for (size_t i = 0; i < nshapes; ++i)
        for (size_t j = 0; j < nclasses; ++j)
            if (!(is >> t.values_[i][j])) throw input_error("truncated table cache " + path);
    if (BigInt(static_cast<long>(nclasses)) != partition_count(t.n_))
        throw input_error("table cache class count does not match p(n)");
    t.index();
    t.validate();
    return t;
}

BigRat ratio(const CharTable& t, int shape_idx, int class_idx) {
    return make_rat(to_bigint(t.value(shape_idx, class_idx)), to_bigint(t.degree(shape_idx)));
}

BigRat ratio(const CharTable& t, const YoungDiagram& shape, const Partition& cls) {
    return ratio(t, t.shape_index(shape), t.class_index(cls));
}

BigRat omega(const CharTable& t, int shape_idx, int class_idx) {
    BigRat w = BigRat(class_size(t.classes()[static_cast<size_t>(class_idx)], t.n())) *
               ratio(t, shape_idx, class_idx);
    if (!is_integer(w))
        throw internal_error("omega not an integer at shape " +
                             t.shapes()[static_cast<size_t>(shape_idx)].str() + ", class " +
                             t.classes()[static_cast<size_t>(class_idx)].str());
    return w;
}

BigRat omega(const CharTable& t, const YoungDiagram& shape, const Partition& cls) {
    return omega(t, t.shape_index(shape), t.class_index(cls));
}

TableStore::TableStore(Config cfg) : cfg_(std::move(cfg)) {}

const CharTable& TableStore::table(int n) {
    if (n < 1) throw input_error("table: n must be >= 1");
    if (n > cfg_.max_table_n)
        throw resource_guard_error("table n=" + std::to_string(n) + " above configured max " +
                                   std::to_string(cfg_.max_table_n));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;

    std::string path;
    if (!cfg_.cache_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg_.cache_dir, ec);
        path = cfg_.cache_dir + "/table_" + std::to_string(n) + ".txt";
        if (std::filesystem::exists(path)) {
            try {
                auto loaded = std::make_unique<CharTable>(CharTable::load(path));
                return *cache_.emplace(n, std::move(loaded)).first->second;
            } catch (const std::exception&) {
                // fall through and rebuild
            }
        }
    }
    auto built = std::make_unique<CharTable>(CharTable::build(n, cfg_));
    if (!path.empty()) {
        try {
            built->save(path);
        } catch (const std::exception&) {
            // cache write failure is not fatal
        }
    }
    return *cache_.emplace(n, std::move(built)).first->second;
}

}  // namespace charrel
