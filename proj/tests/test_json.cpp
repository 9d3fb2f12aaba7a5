#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charrel/json_io.hpp"
#include "charrel/tpoly.hpp"

using namespace charrel;

namespace {
TableStore store{Config{}};
ConnectionEngine engine{store};
TPolyBuilder builder{engine};
}  // namespace

TEST_CASE("relation polynomials round-trip through the schema") {
    for (const Partition& lambda :
         {Partition({2, 2}), Partition({3, 2}), Partition({2, 2, 2}), Partition({3, 3})}) {
        RelationPoly display = builder.display_form(lambda);
        json j = to_json(display);
        CHECK(relpoly_from_json(j) == display);
        // schema shape: terms -> monomial pairs + num/den arrays
        REQUIRE(j.contains("terms"));
        for (auto& t : j["terms"]) {
            CHECK(t.contains("monomial"));
            CHECK(t.contains("num"));
            CHECK(t.contains("den"));
        }
        // serialized text is stable
        CHECK(to_json(relpoly_from_json(j)).dump() == j.dump());
    }
}

TEST_CASE("unipoly round trip") {
    UniPoly p({make_rat(1, 3), BigRat(0), BigRat(-7)});
    CHECK(unipoly_from_json(to_json(p)) == p);
    CHECK(unipoly_from_json(to_json(UniPoly{})) == UniPoly{});
}

TEST_CASE("cover and analysis reports serialize") {
    CoverResult res = min_cover(store.table(5), {}, 3);
    json j = to_json(res);
    CHECK(j["n"] == 5);
    CHECK(j["status"] == "found");
    CHECK(j["value"] == 3);
    CHECK(j["witness"].size() == 3);

    AnalysisReport rep = analyze_zero_set({Partition({2, 2}), Partition({4}), Partition({2, 2, 2})},
                                          4, builder);
    json ja = to_json(rep);
    CHECK(ja["cap"] == 4);
    CHECK(ja["basis"].size() == rep.basis.size());
}
