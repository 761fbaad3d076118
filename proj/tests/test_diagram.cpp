#include <doctest.h>

#include <set>

#include "qualgebra/builtins.hpp"
#include "qualgebra/coloring.hpp"
#include "qualgebra/diagram.hpp"

using namespace qlab;

TEST_SUITE_BEGIN("diagram");

TEST_CASE("unknot is valid with one free loop") {
    diagram d = builtin_diagram("unknot");
    CHECK(validate(d).valid);
    CHECK(d.free_loops == 1);
    CHECK(d.arcs.empty());
}

TEST_CASE("theta_st has 3 arcs, one zip, one unzip, no crossings") {
    diagram d = builtin_diagram("theta_st");
    CHECK(validate(d).valid);
    CHECK(d.arcs.size() == 3);
    CHECK(d.crossings.empty());
    REQUIRE(d.vertices.size() == 2);
    int zips = 0, unzips = 0;
    for (const auto& v : d.vertices) (v.kind == vertex_kind::zip ? zips : unzips)++;
    CHECK(zips == 1);
    CHECK(unzips == 1);
}

TEST_CASE("theta_kt has 2 vertices and 6 crossings") {
    diagram d = builtin_diagram("theta_kt");
    CHECK(validate(d).valid);
    CHECK(d.vertices.size() == 2);
    CHECK(d.crossings.size() == 6);
    CHECK(d.arcs.size() == 9);
}

TEST_CASE("cuff fixtures") {
    diagram st = builtin_diagram("cuff_st");
    CHECK(validate(st).valid);
    CHECK(st.crossings.empty());
    CHECK(st.vertices.size() == 2);
    diagram hopf = builtin_diagram("cuff_hopf");
    CHECK(validate(hopf).valid);
    CHECK(hopf.crossings.size() == 2);
    CHECK(hopf.vertices.size() == 2);
}

TEST_CASE("trefoil is the classical 3-crossing closed diagram") {
    diagram d = builtin_diagram("trefoil");
    CHECK(validate(d).valid);
    CHECK(d.crossings.size() == 3);
    CHECK(d.vertices.empty());
}

TEST_CASE("unknown builtin name") {
    CHECK_THROWS_AS(builtin_diagram("borromean"), error);
}

TEST_CASE("double source is reported") {
    diagram d;
    d.arcs = {"a", "b", "c"};
    d.vertices.push_back({vertex_kind::unzip, "a", "b", "b"});  // b emitted twice
    d.vertices.push_back({vertex_kind::zip, "a", "b", "c"});
    d.arcs.push_back("dummy");
    validation_report rep = validate(d);
    CHECK_FALSE(rep.valid);
    bool found = false;
    for (const auto& p : rep.problems)
        if (p.find("DoubleSource") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("dangling arc is reported") {
    diagram d;
    d.arcs = {"a"};
    validation_report rep = validate(d);
    CHECK_FALSE(rep.valid);
    CHECK(rep.problems.front().find("DanglingArc") != std::string::npos);
}

TEST_CASE("all ten move fixtures are valid with matching port shapes") {
    for (const auto& id : all_move_ids()) {
        move_pair mp = move_fixture(id);
        CHECK(mp.id == id);
        CHECK(validate(mp.lhs).valid);
        CHECK(validate(mp.rhs).valid);
        REQUIRE(mp.lhs.boundary.has_value());
        REQUIRE(mp.rhs.boundary.has_value());
        CHECK(mp.lhs.boundary->inputs.size() == mp.rhs.boundary->inputs.size());
        CHECK(mp.lhs.boundary->outputs.size() == mp.rhs.boundary->outputs.size());
    }
    CHECK_THROWS_AS(move_fixture("R7"), error);
}

TEST_CASE("well-orienting the theta graph") {
    abstract_graph theta{2, {{0, 1}, {0, 1}, {0, 1}}};
    auto orient = well_orient(theta);
    std::vector<int> indeg(2, 0);
    for (auto [s, t] : orient) ++indeg[t];
    for (int v = 0; v < 2; ++v) CHECK((indeg[v] == 1 || indeg[v] == 2));
}

TEST_CASE("well-orienting the cuff graph (two loops and a bridge)") {
    abstract_graph cuff{2, {{0, 0}, {1, 1}, {0, 1}}};
    auto orient = well_orient(cuff);
    std::vector<int> indeg(2, 0);
    for (auto [s, t] : orient) ++indeg[t];
    for (int v = 0; v < 2; ++v) CHECK((indeg[v] == 1 || indeg[v] == 2));
}

TEST_CASE("well-orienting K4") {
    abstract_graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    auto orient = well_orient(k4);
    std::vector<int> indeg(4, 0);
    for (auto [s, t] : orient) ++indeg[t];
    for (int v = 0; v < 4; ++v) CHECK((indeg[v] == 1 || indeg[v] == 2));
}

TEST_CASE("non-trivalent graphs are rejected") {
    abstract_graph bad{2, {{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(well_orient(bad), error);
}

TEST_CASE("R1 insertion on the unknot's free loop") {
    diagram d = builtin_diagram("unknot");
    diagram kinked = apply_move(d, "R1+", move_dir::insert, {{}, -1, true});
    CHECK(kinked.free_loops == 0);
    CHECK(kinked.crossings.size() == 1);
    CHECK(kinked.arcs.size() == 1);
    // and back
    diagram back = apply_move(kinked, "R1+", move_dir::remove,
                              {{kinked.crossings[0].under_in}, -1, false});
    CHECK(back.free_loops == 1);
    CHECK(back.arcs.empty());
}

TEST_CASE("R2 poke and removal restore the original diagram") {
    diagram d = builtin_diagram("trefoil");
    diagram poked = apply_move(d, "R2", move_dir::insert, {{"x", "y"}, -1, false});
    CHECK(poked.crossings.size() == 5);
    CHECK(poked.arcs.size() == 5);
    diagram back = apply_move(poked, "R2", move_dir::remove, {{"x", "y"}, -1, false});
    CHECK(back.crossings.size() == 3);
    CHECK(back.arcs.size() == 3);
    std::set<std::string> names(back.arcs.begin(), back.arcs.end());
    CHECK(names == std::set<std::string>{"x", "y", "z"});
}

TEST_CASE("R5z insertion at theta_st's zip adds one crossing") {
    diagram d = builtin_diagram("theta_st");
    int zip_index = d.vertices[0].kind == vertex_kind::zip ? 0 : 1;
    diagram moved = apply_move(d, "R5z", move_dir::insert, {{}, zip_index, false});
    CHECK(moved.crossings.size() == 1);
    CHECK(moved.vertices.size() == 2);
    diagram back = apply_move(moved, "R5z", move_dir::remove, {{}, zip_index, false});
    CHECK(back.crossings.empty());
}

TEST_CASE("R5z insertion preserves the coloring count on theta_st") {
    diagram d = builtin_diagram("theta_st");
    int zip_index = d.vertices[0].kind == vertex_kind::zip ? 0 : 1;
    diagram moved = apply_move(d, "R5z", move_dir::insert, {{}, zip_index, false});
    for (elem qs : {0, 3}) {
        qualgebra p = p_qualgebra(qs, 1);
        CHECK(count_colorings(p, d, color_mode::qualgebra) ==
              count_colorings(p, moved, color_mode::qualgebra));
    }
}

TEST_CASE("R1 insertion preserves counts for any structure") {
    diagram d = builtin_diagram("unknot");
    diagram kinked = apply_move(d, "R1+", move_dir::insert, {{}, -1, true});
    qualgebra p = p_qualgebra(0, 0);
    CHECK(count_colorings(p, d, color_mode::qualgebra) ==
          count_colorings(p, kinked, color_mode::qualgebra));
}

namespace {

// shape fingerprint stable under arc renaming
std::tuple<size_t, size_t, size_t, int, int> shape_of(const qlab::diagram& d) {
    int zips = 0, pos = 0;
    for (const auto& v : d.vertices) zips += v.kind == qlab::vertex_kind::zip;
    for (const auto& k : d.crossings) pos += k.sign > 0;
    return {d.arcs.size(), d.crossings.size(), d.vertices.size(), zips, pos};
}

}  // namespace

TEST_CASE("round-trips of every rewritable move on suitable hosts") {
    // host with vertices, crossings and arcs to exercise all patterns
    diagram theta = builtin_diagram("theta_kt");
    auto base_shape = shape_of(theta);
    for (const auto& id : {"R1+", "R1-", "R5z", "R5u", "R6z", "R6u", "R2", "R4z", "R4u"}) {
        auto sites = enumerate_sites(theta, id, move_dir::insert);
        for (const auto& site : sites) {
            diagram moved = apply_move(theta, id, move_dir::insert, site);
            CHECK(validate(moved).valid);
            auto undo_sites = enumerate_sites(moved, id, move_dir::remove);
            REQUIRE_FALSE(undo_sites.empty());
            // some removal site restores the original shape
            bool restored = false;
            for (const auto& undo : undo_sites) {
                diagram back = apply_move(moved, id, move_dir::remove, undo);
                if (shape_of(back) == base_shape) restored = true;
            }
            CHECK(restored);
        }
    }
}

TEST_CASE("apply_move rejects bad sites") {
    diagram d = builtin_diagram("trefoil");
    CHECK_THROWS_AS(apply_move(d, "R1+", move_dir::insert, {{"nope"}, -1, false}), error);
    CHECK_THROWS_AS(apply_move(d, "R5z", move_dir::insert, {{}, 0, false}), error);
    CHECK_THROWS_AS(apply_move(d, "R2", move_dir::insert, {{"x", "x"}, -1, false}), error);
    CHECK_THROWS_AS(apply_move(d, "R3", move_dir::insert, {{}, -1, false}), error);
}

TEST_CASE("fresh arc identifiers are deterministic") {
    diagram d = builtin_diagram("trefoil");
    diagram a = apply_move(d, "R1+", move_dir::insert, {{"x"}, -1, false});
    diagram b = apply_move(d, "R1+", move_dir::insert, {{"x"}, -1, false});
    CHECK(a.arcs == b.arcs);
}

TEST_SUITE_END();
