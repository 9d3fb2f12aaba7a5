#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charrel/errors.hpp"
#include "charrel/ratfun.hpp"
#include "charrel/relpoly.hpp"
#include "charrel/unipoly.hpp"

using namespace charrel;

namespace {

UniPoly lin(long a, long b) { return UniPoly::linear(a, b); }

std::mt19937 rng(1234);

BigRat random_rat() {
    long num = std::uniform_int_distribution<long>(-6, 6)(rng);
    long den = std::uniform_int_distribution<long>(1, 5)(rng);
    return make_rat(num, den);
}

UniPoly random_unipoly(int max_deg) {
    int deg = std::uniform_int_distribution<int>(0, max_deg)(rng);
    std::vector<BigRat> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_rat());
    return UniPoly(c);
}

RelationPoly random_relpoly() {
    static const std::vector<Partition> vars = {Partition({2}), Partition({3}), Partition({2, 2})};
    RelationPoly p;
    int terms = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (auto& v : vars) {
            int e = std::uniform_int_distribution<int>(0, 2)(rng);
            m = m * Monomial::var(v, e);
        }
        p.add_term(m, RationalFunction(random_unipoly(2)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational function arithmetic") {
    RationalFunction a(UniPoly::constant(1), lin(1, -2));
    RationalFunction b(UniPoly::constant(1), lin(1, -3));
    RationalFunction sum = a + b;
    CHECK(sum == RationalFunction(lin(2, -5), lin(1, -2) * lin(1, -3)));

    RationalFunction x(lin(1, 0), UniPoly::constant(1));
    CHECK((x * RationalFunction()).is_zero());

    RationalFunction reduced(lin(1, -1) * lin(1, 1), lin(1, -1));
    CHECK(reduced == RationalFunction(lin(1, 1)));
    CHECK(reduced.is_polynomial());

    CHECK_THROWS_AS(a / RationalFunction(), input_error);
    CHECK(a.eval(4) == BigRat(1, 2));
    CHECK_THROWS_AS(a.eval(2), pole_error);
}

TEST_CASE("rational function canonical form is unique") {
    for (int trial = 0; trial < 300; ++trial) {
        UniPoly n1 = random_unipoly(3), d1 = random_unipoly(2);
        if (d1.is_zero()) continue;
        RationalFunction f(n1, d1);
        CHECK(f.den().is_monic());
        RationalFunction g(n1 * lin(3, 1), d1 * lin(3, 1));
        CHECK(f == g);
        CHECK((f - g).is_zero());
    }
}

TEST_CASE("relation polynomial arithmetic") {
    RelationPoly t2 = RelationPoly::variable(Partition({2}));
    RelationPoly t3 = RelationPoly::variable(Partition({3}));
    CHECK(t2 * t2 == RelationPoly::term(Monomial::var(Partition({2}), 2),
                                        RationalFunction::constant(1)));
    RelationPoly a = random_relpoly();
    CHECK((a - a).is_zero());
    RelationPoly sq = (t2 + t3) * (t2 + t3);
    CHECK(sq.coefficient(Monomial::var(Partition({2}), 2)) == RationalFunction::constant(1));
    CHECK(sq.coefficient(Monomial::var(Partition({2})) * Monomial::var(Partition({3}))) ==
          RationalFunction::constant(2));
    CHECK(sq.coefficient(Monomial::var(Partition({3}), 2)) == RationalFunction::constant(1));
    CHECK(sq.term_count() == 3);
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 1000; ++trial) {
        RelationPoly a = random_relpoly(), b = random_relpoly(), c = random_relpoly();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("relpoly evaluation") {
    std::map<Partition, BigRat> assign{{Partition({2}), make_rat(-1, 3)}};
    CHECK(RelationPoly{}.eval(10, assign) == 0);
    CHECK(RelationPoly::variable(Partition({2})).eval(7, assign) == make_rat(-1, 3));
    CHECK(relpoly_eval(RelationPoly::variable(Partition({2})), 7, assign) == make_rat(-1, 3));
    RelationPoly with_pole =
        RelationPoly::constant(RationalFunction(UniPoly::constant(1), lin(1, -4)));
    CHECK_THROWS_AS(with_pole.eval(4, assign), pole_error);
    CHECK_THROWS_AS(RelationPoly::variable(Partition({5})).eval(9, assign), input_error);
}

TEST_CASE("lagrange interpolation") {
    UniPoly sq = lagrange_interpolate({{0, BigRat(0)}, {1, BigRat(1)}, {2, BigRat(4)}}, 2);
    CHECK(sq == UniPoly({BigRat(0), BigRat(0), BigRat(1)}));
    CHECK(lagrange_interpolate({{5, BigRat(7)}}, 0) == UniPoly::constant(7));

    UniPoly csp = class_size_poly(Partition({3, 2}));
    std::vector<std::pair<long, BigRat>> pts;
    for (long n = 5; n <= 11; ++n) pts.emplace_back(n, BigRat(class_size(Partition({3, 2}), static_cast<int>(n))));
    CHECK(lagrange_interpolate(pts, 5) == csp);

    // degree bound too small: the consistency points expose it
    CHECK_THROWS_AS(lagrange_interpolate({{0, BigRat(0)}, {1, BigRat(1)}, {2, BigRat(4)}}, 1),
                    interpolation_mismatch);
    CHECK_THROWS_AS(lagrange_interpolate({{0, BigRat(0)}, {0, BigRat(1)}}, 1), input_error);
}

TEST_CASE("interpolation inverts evaluation") {
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly p = random_unipoly(8);
        std::vector<std::pair<long, BigRat>> pts;
        for (long x = 0; x <= 10; ++x) pts.emplace_back(x, p.eval(x));
        CHECK(lagrange_interpolate(pts, 8) == p);
    }
}

TEST_CASE("unipoly division and gcd") {
    UniPoly a = lin(1, -1) * lin(1, -2) * lin(1, -3);
    UniPoly b = lin(1, -2) * lin(2, 5);
    CHECK(UniPoly::gcd(a, b) == lin(1, -2));
    auto [q, r] = UniPoly::divmod(a, lin(1, -2));
    CHECK(r.is_zero());
    CHECK(q == lin(1, -1) * lin(1, -3));
    CHECK(a.exact_div(lin(1, -1)) == lin(1, -2) * lin(1, -3));
    CHECK_THROWS_AS(a.exact_div(lin(1, 5)), internal_error);
    CHECK(a.integer_roots() ==
          std::vector<std::pair<long, int>>{{1, 1}, {2, 1}, {3, 1}});
}

TEST_CASE("monomial orders") {
    Monomial t2 = Monomial::var(Partition({2}));
    Monomial t3 = Monomial::var(Partition({3}));
    Monomial t22 = Monomial::var(Partition({2, 2}));
    CHECK(Monomial::lex_less(t2, t3));
    CHECK(Monomial::lex_less(t3, t22));
    // lex: t_(3) beats any power of t_(2)
    CHECK(Monomial::lex_less(Monomial::var(Partition({2}), 5), t3));
    // graded: degree first
    CHECK(Monomial::graded_lex_less(t3, Monomial::var(Partition({2}), 2)));
    CHECK(Monomial::lcm(t2 * t3, t2 * t2) == t2 * t2 * t3);
    CHECK((t2 * t3).quotient_of(t2 * t3 * t22) == t22);
}
