#include <doctest.h>

#include "qualgebra/json_io.hpp"

using namespace qlab;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("structure round-trip through the documented schema") {
    for (const auto& name : builtin_structure_names()) {
        any_structure s = builtin_structure(name);
        json j = to_json(s);
        any_structure back = structure_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(j.at("kind").get<std::string>() == kind_of(s));
    }
}

TEST_CASE("structure json carries row-major tables") {
    qualgebra p = p_qualgebra(1, 3);
    json j = to_json(any_structure(p));
    CHECK(j["n"] == 4);
    CHECK(j["kind"] == "qualgebra");
    CHECK(j["names"] == json::array({"p", "q", "r", "s"}));
    // row index = left argument: p <> q = s
    CHECK(j["diamond"][0][1] == 3);
    CHECK(j["lhd"][0][2] == 1);  // p lhd r = q
}

TEST_CASE("group structure json") {
    json j = to_json(any_structure(symmetric_group(3)));
    CHECK(j["kind"] == "group");
    group_table g = std::get<group_table>(structure_from_json(j));
    CHECK(g.size() == 6);
}

TEST_CASE("invalid structures are rejected on load") {
    json j = to_json(any_structure(p_qualgebra(1, 3)));
    j["diamond"][0][1] = 0;  // breaks the axioms
    CHECK_THROWS_AS(structure_from_json(j), error);
    j = json{{"kind", "nonsense"}, {"n", 1}};
    CHECK_THROWS_AS(structure_from_json(j), error);
}

TEST_CASE("diagram round-trip for every builtin") {
    for (const auto& name : builtin_diagram_names()) {
        diagram d = builtin_diagram(name);
        json j = to_json(d);
        diagram back = diagram_from_json(j);
        CHECK(to_json(back) == j);
        CHECK(validate(back).valid);
    }
}

TEST_CASE("move fixtures round-trip including boundaries") {
    for (const auto& id : all_move_ids()) {
        move_pair mp = move_fixture(id);
        diagram back = diagram_from_json(to_json(mp.lhs));
        REQUIRE(back.boundary.has_value());
        CHECK(back.boundary->inputs == mp.lhs.boundary->inputs);
        CHECK(back.boundary->outputs == mp.lhs.boundary->outputs);
    }
}

TEST_CASE("diagram json matches the documented shape") {
    diagram d = builtin_diagram("trefoil");
    json j = to_json(d);
    CHECK(j["crossings"][0]["sign"] == "+");
    CHECK(j["free_loops"] == 0);
    CHECK(j.contains("arcs"));
}

TEST_CASE("cocycle round-trip with big entries") {
    cocycle_pair cp = cocycle_pair::zero(cocycle_kind::qualgebra, 2);
    cp.chi[0][1] = bigint("123456789012345678901234567890");
    cp.lambda_sq[1][0] = -7;
    json j = to_json(cp);
    CHECK(j["chi"][0][1].is_string());
    cocycle_pair back = cocycle_from_json(j);
    CHECK(back.chi[0][1] == cp.chi[0][1]);
    CHECK(back.lambda_sq[1][0] == -7);
    cocycle_pair sq = cocycle_pair::zero(cocycle_kind::squandle, 3);
    sq.lambda_lin[2] = 5;
    CHECK(cocycle_from_json(to_json(sq)).lambda_lin[2] == 5);
}

TEST_CASE("cohomology result json shape") {
    cohomology_result r = second_cohomology(p_qualgebra(1, 3));
    json j = to_json(r);
    CHECK(j["z2_rank"] == 8);
    CHECK(j["b2_rank"] == 4);
    CHECK(j["h2"]["free_rank"] == 4);
    CHECK(j["h2"]["torsion"] == json::array({2}));
}

TEST_SUITE_END();
