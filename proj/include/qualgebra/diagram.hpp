#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qualgebra/errors.hpp"

namespace qlab {

// Oriented crossing. sign +1: under_out = under_in lhd over; sign -1:
// under_out = under_in lhd_inv over. The over strand passes through unbroken,
// so `over` may reference any arc any number of times across the diagram.
struct crossing {
    int sign = +1;
    std::string over, under_in, under_out;
};

enum class vertex_kind { zip, unzip };

// Trivalent vertex of a well-oriented diagram. `solo` is the lone arc on one
// side (zip: the outgoing arc; unzip: the incoming one); pair_left/pair_right
// are the two co-oriented arcs. The coloring rule is always
// solo = pair_left <> pair_right.
struct vertex {
    vertex_kind kind = vertex_kind::zip;
    std::string solo, pair_left, pair_right;
};

struct boundary_spec {
    std::vector<std::string> inputs;   // arcs whose source is the boundary
    std::vector<std::string> outputs;  // arcs whose sink is the boundary
};

// Purely combinatorial diagram code; planarity is not represented. Closed
// components without special points are counted in free_loops.
struct diagram {
    std::vector<std::string> arcs;
    std::vector<crossing> crossings;
    std::vector<vertex> vertices;
    int free_loops = 0;
    std::optional<boundary_spec> boundary;

    bool has_arc(const std::string& id) const;
};

struct validation_report {
    bool valid = true;
    std::vector<std::string> problems;  // "Code: detail" lines
};

// Slot accounting: every arc must occur exactly once as a source slot and
// exactly once as a sink slot.
validation_report validate(const diagram& d);
void ensure_valid(const diagram& d);  // throws the first problem

// 3-valent abstract graph; loops and multi-edges allowed.
struct abstract_graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Orientation with every vertex in-degree 1 or 2, found by repeatedly
// extracting maximal paths. Edge i of the result is edge i of the input,
// oriented first -> second.
std::vector<std::pair<int, int>> well_orient(const abstract_graph& g);

// unknot, trefoil, theta_st, theta_kt, cuff_st, cuff_hopf
diagram builtin_diagram(const std::string& name);
const std::vector<std::string>& builtin_diagram_names();

// Local move on tangles; lhs and rhs share the boundary port layout.
struct move_pair {
    std::string id;
    diagram lhs, rhs;
};

// R1+, R1-, R2, R3, R4z, R4u, R5z, R5u, R6z, R6u
move_pair move_fixture(const std::string& move_id);
const std::vector<std::string>& all_move_ids();

enum class move_dir { insert, remove };

// Site of a local move application.
//   R1  insert: arcs = {arc} to kink (or on_free_loop); remove: arcs =
//       {under_in arc of the kink} (the single arc for a closed kink).
//   R2  insert: arcs = {moving arc, passed-under arc}; remove: arcs = {first
//       under_in arc, over arc}.
//   R4  insert (one crossing to two) / remove: vertex + arcs = {strand's first
//       under_in arc}.
//   R5  insert/remove: vertex only.
//   R6  insert (one crossing to two) / remove: vertex only.
struct move_site {
    std::vector<std::string> arcs;
    int vertex = -1;
    bool on_free_loop = false;
};

diagram apply_move(const diagram& d, const std::string& move_id, move_dir dir,
                   const move_site& site);

// All sites at which apply_move would succeed.
std::vector<move_site> enumerate_sites(const diagram& d, const std::string& move_id,
                                       move_dir dir);

}  // namespace qlab
