#include <doctest.h>

#include <string>

#include "stardec/errors.hpp"
#include "stardec/hardness.hpp"
#include "stardec/json_io.hpp"

using namespace stardec;
using stardec::io::json;

TEST_CASE("multiset forms and the shorter-encoding rule") {
    const IntMultiset flat = io::multiset_from_json(json::parse("[9,5,1]"), "sizes");
    CHECK(flat.size() == 3);
    CHECK(flat.sum() == 15);
    CHECK(io::multiset_to_json(flat) == json::parse("[9,5,1]"));

    const IntMultiset runs =
        io::multiset_from_json(json::parse("[[121,323],[26,1]]"), "sizes");
    CHECK(runs.size() == 324);
    CHECK(runs.sum() == 323 * 121 + 26);
    CHECK(io::multiset_to_json(runs) == json::parse("[[121,323],[26,1]]"));

    // Four equal values: one run, run-length wins. Three distinct: flat wins.
    IntMultiset ones;
    ones.add(1, 4);
    CHECK(io::multiset_to_json(ones) == json::parse("[[1,4]]"));

    // Mixed parsing is allowed: entries are values or [value,count] pairs.
    const IntMultiset mixed = io::multiset_from_json(json::parse("[9,[5,2]]"), "sizes");
    CHECK(mixed.size() == 3);

    CHECK_THROWS_AS(io::multiset_from_json(json::parse("[0]"), "sizes"), InputError);
    CHECK_THROWS_AS(io::multiset_from_json(json::parse("[[1,0]]"), "sizes"), InputError);
    CHECK_THROWS_AS(io::multiset_from_json(json::parse("[1.5]"), "sizes"), InputError);
    CHECK_THROWS_AS(io::multiset_from_json(json::parse("\"x\""), "sizes"), InputError);
}

TEST_CASE("multigraph forms") {
    const Multigraph explicit_g =
        io::multigraph_from_json(json::parse(R"({"n":3,"edges":[[0,1,2],[1,2,1]]})"));
    CHECK(explicit_g.n() == 3);
    CHECK(explicit_g.mu(0, 1) == 2);
    CHECK(explicit_g.mu(1, 2) == 1);
    CHECK(explicit_g.mu(0, 2) == 0);
    const json round = io::multigraph_to_json(explicit_g);
    const Multigraph back = io::multigraph_from_json(round);
    CHECK(back.mu(0, 1) == 2);
    CHECK(back.edge_total() == explicit_g.edge_total());

    const Multigraph complete_g =
        io::multigraph_from_json(json::parse(R"({"n":4,"lambda":2})"));
    CHECK(complete_g.mu(2, 3) == 2);
    CHECK(io::multigraph_to_json(complete_g) == json::parse(R"({"n":4,"lambda":2})"));

    CHECK_THROWS_AS(io::multigraph_from_json(json::parse(R"({"n":3})")), InputError);
    CHECK_THROWS_AS(
        io::multigraph_from_json(json::parse(R"({"n":3,"edges":[[0,0,1]]})")), InputError);
    CHECK_THROWS_AS(
        io::multigraph_from_json(json::parse(R"({"n":3,"edges":[[0,9,1]]})")), InputError);
    CHECK_THROWS_AS(
        io::multigraph_from_json(json::parse(R"({"n":3,"edges":[[0,1,-1]]})")), InputError);
}

TEST_CASE("center prescriptions omit empty vertices") {
    CenterSpec spec;
    spec.centers.assign(4, IntMultiset{});
    spec.centers[0].add(9);
    spec.centers[0].add(5);
    spec.centers[3].add(2, 4);
    const json j = io::centers_to_json(spec);
    CHECK(j.contains("0"));
    CHECK_FALSE(j.contains("1"));
    CHECK_FALSE(j.contains("2"));
    CHECK(j.contains("3"));

    const CenterSpec back = io::centers_from_json(j, 4);
    REQUIRE(back.centers.size() == 4);
    CHECK(back.centers[0] == spec.centers[0]);
    CHECK(back.centers[1].empty());
    CHECK(back.centers[3] == spec.centers[3]);

    CHECK_THROWS_AS(io::centers_from_json(json::parse(R"({"4":[1]})"), 4), InputError);
    CHECK_THROWS_AS(io::centers_from_json(json::parse(R"({"x":[1]})"), 4), InputError);
    CHECK_THROWS_AS(io::centers_from_json(json::parse(R"({"01":[1]})"), 4), InputError);
}

TEST_CASE("instances and stars round-trip") {
    DecompInstance inst;
    inst.lambda = 2;
    inst.n = 6;
    inst.sizes.add(4, 6);
    inst.sizes.add(3);
    inst.sizes.add(2);
    inst.sizes.add(1);
    const json j = io::instance_to_json(inst);
    const DecompInstance back = io::instance_from_json(j);
    CHECK(back.lambda == 2);
    CHECK(back.n == 6);
    CHECK(back.sizes == inst.sizes);

    std::vector<Star> stars = {{0, {2, 1, 3}}, {5, {0}}};
    const json sj = io::stars_to_json(stars);
    const std::vector<Star> sback = io::stars_from_json(sj, 6);
    REQUIRE(sback.size() == 2);
    CHECK(sback[0].center == 0);
    CHECK(sback[0].leaves == std::vector<int>{1, 2, 3});
    CHECK(sback[1].center == 5);

    CHECK_THROWS_AS(io::stars_from_json(json::parse(R"([{"center":0,"leaves":[6]}])"), 6),
                    InputError);
    CHECK_THROWS_AS(io::stars_from_json(json::parse(R"([{"center":0}])"), 6), InputError);
}

TEST_CASE("certificates carry the function and its evaluation") {
    RestrictionFunction f;
    f.f = {1, 0, 2};
    DeltaReport rep;
    rep.minus = 7;
    rep.plus = 5;
    rep.delta = -2;
    const json j = io::certificate_to_json(f, rep);
    CHECK(j["f"] == json::parse("[1,0,2]"));
    CHECK(j["demand"] == 7);
    CHECK(j["capacity"] == 5);
    CHECK(j["delta"] == -2);
}

TEST_CASE("tournament specs and matrices") {
    const TournamentSpec spec =
        io::tournament_spec_from_json(json::parse(R"({"lambda":2,"a":[3,2,1],"b":[1,1,0]})"));
    CHECK(spec.lambda == 2);
    CHECK(spec.a == std::vector<std::int64_t>{3, 2, 1});
    CHECK(spec.b == std::vector<std::int64_t>{1, 1, 0});

    Tournament t;
    t.n = 3;
    t.lambda = 2;
    t.out = {{0, 2, 1}, {0, 0, 1}, {1, 1, 0}};
    const json tj = io::tournament_to_json(t);
    const Tournament tback = io::tournament_from_json(tj);
    CHECK(tback.n == 3);
    CHECK(tback.lambda == 2);
    CHECK(tback.out == t.out);

    CHECK_THROWS_AS(io::tournament_spec_from_json(json::parse(R"({"lambda":2,"a":[1]})")),
                    InputError);
}

TEST_CASE("partition lists") {
    const ThreePartition tp = io::partition_from_text("2, 2,3");
    CHECK(tp.values == std::vector<std::int64_t>{2, 2, 3});
    CHECK(io::partition_from_json(json::parse("[2,2,3]")).values == tp.values);
    CHECK_THROWS_AS(io::partition_from_text("2,,3"), InputError);
    CHECK_THROWS_AS(io::partition_from_text("x"), InputError);
    CHECK_THROWS_AS(io::partition_from_text(""), InputError);
}

TEST_CASE("parsing failures point at their origin") {
    CHECK_THROWS_AS(io::parse_file("/nonexistent/input.json"), InputError);
    try {
        io::parse_text("{broken", "inline-arg");
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("inline-arg") != std::string::npos);
    }
}

TEST_CASE("dump format is stable") {
    const json j = json::parse(R"({"b":1,"a":[1,2]})");
    const std::string text = io::dump(j);
    CHECK(text.back() == '\n');
    CHECK(text.find("  \"a\"") != std::string::npos);
    CHECK(io::dump(j) == text);
}

TEST_CASE("hard-instance reports") {
    ThreePartition tp;
    tp.values = {2, 2, 3};
    const json odd = io::hard_odd_to_json(gen_hard_odd(3, tp));
    CHECK(odd["params"]["n"] == 162);
    CHECK(odd["params"]["m"] == 121);
    CHECK(odd["params"]["lambda"] == 3);
    CHECK(odd["instance"]["lambda"] == 3);
    CHECK(io::multiset_from_json(odd["instance"]["sizes"], "sizes").sum() == 39123);

    const EvenSearchOutcome out = gen_hard_even(2, tp);
    REQUIRE(out.params.has_value());
    const json even = io::hard_even_to_json(*out.params);
    CHECK(even["params"]["n"] == 85);
    CHECK(even["params"]["r"] == 77);
    CHECK(even["params"]["p"] == 11);
    CHECK(even["instance"]["lambda"] == 2);
}
