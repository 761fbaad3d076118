#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qualgebra/algebra.hpp"

namespace qlab {

using any_structure = std::variant<quandle, qualgebra, squandle, group_table>;

std::string kind_of(const any_structure& s);

// The non-trivial 4-element qualgebra P_{qs,qq}: carrier {p,q,r,s},
// x lhd r = tau(x) (tau swaps p and q), diamond determined by the choices
// qs = q<>s and qq = q<>q, both in {p,q,s}.
qualgebra p_qualgebra(elem qs, elem qq);

// The non-trivial 4-element squandles on the same quandle: r^2 = s^2 = s,
// q^2 = q2 in {p,q,s}, p^2 = tau(q2).
squandle sq4_squandle(elem q2);

// Size-4 sub-squandle of the group squandle of S3 (identity plus the
// transpositions).
squandle s3_two_squandle();

// Size-8 sub-squandle of the group squandle of S4 formed by the 3-cycles.
squandle s4_three_cycle_squandle();

// Registry. Structure names:
//   P_qs-{p|q|s}_qq-{p|q|s}   the nine 4-element qualgebras
//   SQ4_{s3sq|q2-p|q2-q|q2-s} the four 4-element squandles
//   GQ_s3, GQ_s4              group qualgebras of S3, S4
//   GSQ_s3, GSQ_s4            group squandles of S3, S4
//   SQ_s4c3                   the 3-cycle sub-squandle of S4
any_structure builtin_structure(const std::string& name);
const std::vector<std::string>& builtin_structure_names();

// The thirteen size-4 structures of the classification (registry core).
std::vector<std::string> core_builtin_names();

// The squandle (Q, lhd, a -> a<>a) underlying a qualgebra.
squandle squandle_of(const qualgebra& q);

}  // namespace qlab
