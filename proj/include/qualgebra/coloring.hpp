#pragma once

#include <map>
#include <string>
#include <vector>

#include "qualgebra/algebra.hpp"
#include "qualgebra/diagram.hpp"

namespace qlab {

enum class color_mode { qualgebra, isosceles, squandle };

std::string to_string(color_mode m);
color_mode color_mode_from_string(const std::string& s);

// Arc -> carrier element. Free loops appear as pseudo-arcs "loop0", "loop1", ...
struct coloring {
    std::map<std::string, elem> assignment;
    color_mode mode = color_mode::qualgebra;
};

using boundary_fix = std::map<std::string, elem>;

// Complete list of valid colorings extending `fix`, sorted lexicographically
// by arc identifier then color index.
std::vector<coloring> enumerate_colorings(const qualgebra& s, const diagram& d,
                                          color_mode mode, const boundary_fix& fix = {});
std::vector<coloring> enumerate_colorings(const squandle& s, const diagram& d,
                                          const boundary_fix& fix = {});
// Bare quandles color only vertex-free diagrams.
std::vector<coloring> enumerate_colorings(const quandle& s, const diagram& d,
                                          const boundary_fix& fix = {});

long long count_colorings(const qualgebra& s, const diagram& d, color_mode mode);
long long count_colorings(const squandle& s, const diagram& d);
long long count_colorings(const quandle& s, const diagram& d);
long long count_isosceles(const qualgebra& s, const diagram& d);

// Test-only reference path: no constraint propagation, plain product scan
// over all arc assignments.
long long brute_force_count(const qualgebra& s, const diagram& d, color_mode mode);
long long brute_force_count(const squandle& s, const diagram& d);

// Move-fixture topologicality: for every boundary port coloring the number of
// lhs extensions must equal the number of rhs extensions.
struct topo_verdict {
    bool ok = true;
    std::vector<elem> witness;  // port colors (inputs then outputs) of a counterexample
    std::string detail;
};
topo_verdict check_topological(const qualgebra& s, const move_pair& mp, color_mode mode);
topo_verdict check_topological(const squandle& s, const move_pair& mp);

// Boundary port colorings mapped to extension counts; shared by
// check_topological and the Boltzmann checker.
std::map<std::vector<elem>, long long> boundary_profile(const qualgebra& s,
                                                        const diagram& d, color_mode mode);
std::map<std::vector<elem>, long long> boundary_profile(const squandle& s,
                                                        const diagram& d);

}  // namespace qlab
