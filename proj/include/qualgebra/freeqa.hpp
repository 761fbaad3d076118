#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qualgebra/errors.hpp"

namespace qlab {

// The word a0 op1 a1 op2 a2 ... over lhd (+1) and lhd_inv (-1), left
// associated.
struct ld_term {
    std::string head;
    std::vector<std::pair<int, std::string>> ops;  // (sign, generator)

    bool operator==(const ld_term&) const = default;
    auto operator<=>(const ld_term&) const = default;
};

std::string to_string(const ld_term& t);       // a<+b<-c syntax
ld_term parse_term(const std::string& text);   // inverse of the above

bool is_reduced(const ld_term& t);
ld_term reduce_term(ld_term t);  // leftmost-innermost; idempotent

// t applied to t2 under lhd (sign +1) or lhd_inv (-1), expanded via the
// conjugation expansion into a single unreduced term.
ld_term term_apply(const ld_term& t, int sign, const ld_term& t2);

// t is a tail of tp: tp = prefix lhd t with the head of the prefix distinct
// from the head of t at the junction. Both terms must be reduced.
bool is_tail(const ld_term& t, const ld_term& tp);

// t1 <> t2 <> ... <> tn with every factor reduced
using product_form = std::vector<ld_term>;

std::string to_string(const product_form& p);     // factors joined by '*'
product_form parse_product(const std::string& text);

// One semi-commutativity rewrite at factor position i (1-based):
// positive: (ti, ti+1) -> (ti+1, red(ti lhd ti+1));
// negative: (ti, ti+1) -> (red(ti+1 lhd_inv ti), ti).
product_form shift(const product_form& p, int i, bool positive);

// Group-word image: lhd becomes conjugation, <> becomes multiplication.
using free_word = std::vector<std::pair<std::string, int>>;  // (generator, +-1)
free_word to_free_group(const product_form& p);
std::string to_string(const free_word& w);

struct shift_step {
    int position = 0;
    bool positive = true;
};
struct equivalence_result {
    bool equivalent = false;
    std::vector<shift_step> path;  // witness when equivalent
    int depth = 0;
};
// Breadth-first search over shift applications up to `depth`.
equivalence_result bounded_equivalence(const product_form& p, const product_form& q,
                                       int depth);

struct tail_check_report {
    bool ok = true;
    std::string detail;
    int steps_checked = 0;
};
// For a two-factor product: walks positive (and, mirrored, negative) shift
// orbits to `depth`, verifying no factor ever equals the single-generator
// term g and that the tail relation persists along positive steps once
// established.
tail_check_report tail_invariant_check(const product_form& p, const std::string& g,
                                       int depth);

}  // namespace qlab
