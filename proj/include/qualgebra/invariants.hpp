#pragma once

#include <map>
#include <string>

#include "qualgebra/cohomology.hpp"
#include "qualgebra/coloring.hpp"
#include "qualgebra/diagram.hpp"

namespace qlab {

// Multiset of colored-diagram weights, also readable as the Laurent
// polynomial sum_C t^W(D,C) (exponent -> coefficient).
struct weight_multiset {
    std::map<bigint, long long> counts;
    long long total() const;
    std::string polynomial() const;  // e.g. "3 + 2*t^2 + t^-1"
    bool operator==(const weight_multiset&) const = default;
};

// Weight of one colored diagram: +chi(under_in, over) at positive crossings,
// -chi(under_out, over) at negative ones, +lambda at unzip vertices and
// -lambda at zip vertices.
bigint weight(const diagram& d, const coloring& c, const cocycle_pair& cp);

// Refuses non-cocycles: weights from non-cocycles are not invariants.
weight_multiset compute_weight_multiset(const qualgebra& s, const cocycle_pair& cp,
                                        const diagram& d);
weight_multiset compute_weight_multiset(const squandle& s, const cocycle_pair& cp,
                                        const diagram& d);

// Move-fixture Boltzmann check: per boundary coloring, the weight multisets of
// lhs and rhs extensions must coincide.
struct boltzmann_verdict {
    bool ok = true;
    std::vector<elem> witness;
    std::string detail;
};
boltzmann_verdict check_boltzmann(const qualgebra& s, const cocycle_pair& cp,
                                  const move_pair& mp);
boltzmann_verdict check_boltzmann(const squandle& s, const cocycle_pair& cp,
                                  const move_pair& mp);

// weight(d, c, cp1 + cp2) == weight(d, c, cp1) + weight(d, c, cp2)
bool linearity_check(const diagram& d, const coloring& c, const cocycle_pair& cp1,
                     const cocycle_pair& cp2);

}  // namespace qlab
