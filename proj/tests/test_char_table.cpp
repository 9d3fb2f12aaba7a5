#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "charrel/char_table.hpp"
#include "charrel/errors.hpp"
#include "charrel/perm.hpp"
#include "oracles.hpp"

using namespace charrel;
using testing_oracles::frobenius_char;

namespace {
TableStore store{Config{}};
}

TEST_CASE("hook degrees") {
    for (int n = 1; n <= 9; ++n) CHECK(hook_degree(YoungDiagram(std::vector<int>{n})) == 1);
    CHECK(hook_degree(YoungDiagram({2, 1})) == 2);
    CHECK(hook_degree(YoungDiagram({3, 2, 1})) == 16);
}

TEST_CASE("murnaghan-nakayama basics") {
    CHECK(mn_value(YoungDiagram({2, 1}), PartitionOfN(Partition({3}), 3)) == -1);
    // sign character
    for (int n = 2; n <= 8; ++n) {
        YoungDiagram sign(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& cls : partitions_of(n))
            CHECK(mn_value(sign, PartitionOfN(cls, n)) == (cls.norm() % 2 == 0 ? 1 : -1));
    }
    // the shape (5,2,2) of S_9 vanishes at (3) and (2^2)
    YoungDiagram s522({5, 2, 2});
    CHECK(mn_value(s522, PartitionOfN(Partition({3}), 9)) == 0);
    CHECK(mn_value(s522, PartitionOfN(Partition({2, 2}), 9)) == 0);
}

TEST_CASE("table matches the Frobenius coefficient oracle") {
    for (int n = 1; n <= 6; ++n) {
        const CharTable& t = store.table(n);
        for (size_t i = 0; i < t.shapes().size(); ++i)
            for (size_t j = 0; j < t.classes().size(); ++j)
                CHECK(t.value(static_cast<int>(i), static_cast<int>(j)) ==
                      frobenius_char(t.shapes()[i], PartitionOfN(t.classes()[j], n)));
    }
    // spot checks at n = 7
    const CharTable& t7 = store.table(7);
    for (size_t i = 0; i < t7.shapes().size(); i += 3)
        for (size_t j = 0; j < t7.classes().size(); j += 4)
            CHECK(t7.value(static_cast<int>(i), static_cast<int>(j)) ==
                  frobenius_char(t7.shapes()[i], PartitionOfN(t7.classes()[j], 7)));
}

TEST_CASE("small tables") {
    const CharTable& t1 = store.table(1);
    CHECK(t1.shapes().size() == 1);
    CHECK(t1.value(0, 0) == 1);
    const CharTable& t3 = store.table(3);
    REQUIRE(t3.shapes().size() == 3);
    CHECK(t3.degree(0) == 1);
    CHECK(t3.degree(1) == 2);
    CHECK(t3.degree(2) == 1);
    const CharTable& t9 = store.table(9);
    YoungDiagram s522({5, 2, 2});
    CHECK(t9.value(s522, Partition({3})) == 0);
    CHECK(t9.value(s522, Partition({2, 2})) == 0);
}

TEST_CASE("orthogonality holds at n = 8..10") {
    // build() validates row/column orthogonality internally for n <= 10
    for (int n = 8; n <= 10; ++n) CHECK_NOTHROW(store.table(n));
}

TEST_CASE("class-sum identity by direct group enumeration") {
    // |x^G| chi(x) chi(y) = chi(1) sum_{x' in x^G} chi(x' y) for S_n, n <= 7
    for (int n = 3; n <= 7; ++n) {
        const CharTable& t = store.table(n);
        for (const Partition& xcls : partitions_of(n)) {
            for (const Partition& ycls : partitions_of(n)) {
                Perm y = canonical_of_type(ycls, n);
                std::map<Partition, long long> bucket;
                for_each_in_class(xcls, n, [&](const Perm& x) { ++bucket[cycle_type(compose(x, y))]; });
                for (size_t i = 0; i < t.shapes().size(); ++i) {
                    BigInt lhs = class_size(xcls, n) * to_bigint(t.value(static_cast<int>(i), t.class_index(xcls))) *
                                 to_bigint(t.value(static_cast<int>(i), t.class_index(ycls)));
                    BigInt rhs = 0;
                    for (auto& [cls, cnt] : bucket)
                        rhs += to_bigint(cnt) * to_bigint(t.value(static_cast<int>(i), t.class_index(cls)));
                    rhs *= to_bigint(t.degree(static_cast<int>(i)));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("self-conjugate shapes vanish on odd classes") {
    for (int n = 2; n <= 9; ++n) {
        const CharTable& t = store.table(n);
        for (size_t i = 0; i < t.shapes().size(); ++i) {
            if (!t.shapes()[i].is_self_conjugate()) continue;
            for (size_t j = 0; j < t.classes().size(); ++j)
                if (t.classes()[j].norm() % 2 == 1)
                    CHECK(t.value(static_cast<int>(i), static_cast<int>(j)) == 0);
        }
    }
}

TEST_CASE("ratio and omega") {
    const CharTable& t3 = store.table(3);
    // trivial character: rho = 1, omega = class size
    for (size_t j = 0; j < t3.classes().size(); ++j) {
        CHECK(ratio(t3, 0, static_cast<int>(j)) == 1);
        CHECK(omega(t3, 0, static_cast<int>(j)) == BigRat(class_size(t3.classes()[j], 3)));
    }
    CHECK(ratio(t3, YoungDiagram({2, 1}), Partition({2})) == 0);
    CHECK(omega(t3, YoungDiagram({2, 1}), Partition({2})) == 0);
    // omega integrality across the full table at n = 10
    const CharTable& t10 = store.table(10);
    for (size_t i = 0; i < t10.shapes().size(); ++i)
        for (size_t j = 0; j < t10.classes().size(); ++j)
            CHECK_NOTHROW(omega(t10, static_cast<int>(i), static_cast<int>(j)));
}

TEST_CASE("degrees: hook formula vs MN at the identity") {
    for (int n = 1; n <= 12; ++n)
        for (const YoungDiagram& shape : all_shapes(n))
            CHECK(hook_degree(shape) == mn_value(shape, PartitionOfN(Partition{}, n)));
}

TEST_CASE("resource guard on the table size") {
    TableStore small{Config{.max_table_n = 5}};
    CHECK_NOTHROW(small.table(5));
    CHECK_THROWS_AS(small.table(6), resource_guard_error);
}

TEST_CASE("disk cache round trip and corruption detection") {
    const CharTable& t6 = store.table(6);
    std::string path = "test_table_cache.txt";
    t6.save(path);
    CharTable loaded = CharTable::load(path);
    CHECK(loaded.n() == 6);
    for (size_t i = 0; i < t6.shapes().size(); ++i)
        for (size_t j = 0; j < t6.classes().size(); ++j)
            CHECK(loaded.value(static_cast<int>(i), static_cast<int>(j)) ==
                  t6.value(static_cast<int>(i), static_cast<int>(j)));
    // tamper with one digit; the checksum must catch it
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    size_t pos = text.find("values\n") + 7;
    text[pos] = text[pos] == '1' ? '2' : '1';
    std::ofstream out(path);
    out << text;
    out.close();
    CHECK_THROWS_AS(CharTable::load(path), input_error);
    std::remove(path.c_str());
}

TEST_CASE("parallel fill equals single-threaded fill") {
    CharTable seq = CharTable::build(9, Config{.thread_count = 1});
    CharTable par = CharTable::build(9, Config{.thread_count = 4});
    for (size_t i = 0; i < seq.shapes().size(); ++i)
        for (size_t j = 0; j < seq.classes().size(); ++j)
            CHECK(seq.value(static_cast<int>(i), static_cast<int>(j)) ==
                  par.value(static_cast<int>(i), static_cast<int>(j)));
}
