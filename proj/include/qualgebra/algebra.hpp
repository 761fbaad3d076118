#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qualgebra/errors.hpp"

namespace qlab {

// Elements of a finite carrier are dense indices 0..n-1; display names are
// metadata only.
using elem = int;
using perm = std::vector<elem>;                 // x -> image
using unary_table = std::vector<elem>;          // a -> f(a)
using binary_table = std::vector<std::vector<elem>>;  // row index = left argument

struct carrier {
    int n = 0;
    std::vector<std::string> names;  // empty, or exactly n distinct names

    carrier() = default;
    explicit carrier(int size) : n(size) {}
    carrier(int size, std::vector<std::string> display_names);

    std::string name_of(elem a) const;
    std::optional<elem> index_of(const std::string& name) const;
};

perm compose(const perm& f, const perm& g);  // x -> g(f(x)), maps written on the right
perm inverse(const perm& p);
bool is_permutation(const perm& p);
std::vector<int> cycle_type(const perm& p);  // sorted cycle lengths

// A finite quandle: lhd verified against Q_SD, Q_Inv, Q_Idem; lhd_inv derived
// by inverting each right-translation column.
class quandle {
public:
    quandle(carrier c, binary_table lhd);

    int size() const { return carrier_.n; }
    const carrier& base() const { return carrier_; }

    elem lhd(elem a, elem b) const { return lhd_[a][b]; }
    elem lhd_inv(elem a, elem b) const { return lhd_inv_[a][b]; }
    // sign >= 0 applies lhd, sign < 0 applies lhd_inv
    elem apply(elem a, int sign, elem b) const {
        return sign >= 0 ? lhd_[a][b] : lhd_inv_[a][b];
    }

    const binary_table& lhd_table() const { return lhd_; }
    const binary_table& lhd_inv_table() const { return lhd_inv_; }

    // right translation S_a : x -> x lhd a
    perm translation(elem a) const;
    bool is_trivial() const;  // a lhd b = a everywhere

private:
    carrier carrier_;
    binary_table lhd_;
    binary_table lhd_inv_;
};

// Quandle plus a binary diamond verified against QA_Comp, QA_D, QA_Comm
// (Q_SD re-checked as a consistency guard).
class qualgebra {
public:
    qualgebra(quandle q, binary_table diamond);

    int size() const { return quandle_.size(); }
    const quandle& base_quandle() const { return quandle_; }
    const carrier& base() const { return quandle_.base(); }

    elem lhd(elem a, elem b) const { return quandle_.lhd(a, b); }
    elem lhd_inv(elem a, elem b) const { return quandle_.lhd_inv(a, b); }
    elem apply(elem a, int sign, elem b) const { return quandle_.apply(a, sign, b); }
    elem diamond(elem a, elem b) const { return diamond_[a][b]; }
    const binary_table& diamond_table() const { return diamond_; }

    bool is_trivial() const { return quandle_.is_trivial(); }

private:
    quandle quandle_;
    binary_table diamond_;
};

// Quandle plus a unary squaring map verified against SQ_1, SQ_2.
class squandle {
public:
    squandle(quandle q, unary_table square);

    int size() const { return quandle_.size(); }
    const quandle& base_quandle() const { return quandle_; }
    const carrier& base() const { return quandle_.base(); }

    elem lhd(elem a, elem b) const { return quandle_.lhd(a, b); }
    elem lhd_inv(elem a, elem b) const { return quandle_.lhd_inv(a, b); }
    elem apply(elem a, int sign, elem b) const { return quandle_.apply(a, sign, b); }
    elem square(elem a) const { return square_[a]; }
    const unary_table& square_table() const { return square_; }

    bool is_trivial() const { return quandle_.is_trivial(); }

private:
    quandle quandle_;
    unary_table square_;
};

// Multiplication table of a finite group, with unit and inverses verified.
struct group_table {
    carrier base;
    binary_table mul;
    elem unit = 0;
    unary_table inv;

    group_table(carrier c, binary_table m, elem u, unary_table i);
    int size() const { return base.n; }
    elem times(elem a, elem b) const { return mul[a][b]; }
};

qualgebra group_qualgebra(const group_table& g);  // lhd = conjugation, diamond = product
squandle group_squandle(const group_table& g);    // lhd = conjugation, square = a*a

// Smallest subset containing seed and closed under all structure operations,
// together with the induced sub-structure re-indexed on 0..k-1.
struct sub_qualgebra {
    std::vector<elem> members;  // sorted indices into the ambient carrier
    qualgebra structure;
};
struct sub_squandle {
    std::vector<elem> members;
    squandle structure;
};
sub_qualgebra closure(const qualgebra& q, const std::set<elem>& seed);
sub_squandle closure(const squandle& s, const std::set<elem>& seed);

// Right translation S_a, Fix(a), Stab(a) and the sub-structure generated by a.
struct local_data {
    perm translation;
    std::vector<elem> fix;        // { x : x lhd a = x }
    std::vector<elem> stab;       // { x : a lhd x = a }
    std::vector<elem> generated;  // Q_a
};
local_data compute_local_data(const qualgebra& q, elem a);
local_data compute_local_data(const squandle& s, elem a);

// Carrier bijection intertwining all operation tables, or nullopt. Prunes by
// per-element invariant fingerprints before the backtracking search.
std::optional<perm> find_isomorphism(const qualgebra& a, const qualgebra& b);
std::optional<perm> find_isomorphism(const squandle& a, const squandle& b);
std::optional<perm> find_isomorphism(const quandle& a, const quandle& b);

// Low-level search shared by the overloads above and by classify: a bijection
// f with f(T(a,b)) = T'(f(a),f(b)) for every paired binary table and
// f(u(a)) = u'(f(a)) for every paired unary table.
std::optional<perm> find_table_isomorphism(
    int n,
    const std::vector<const binary_table*>& binaries_a,
    const std::vector<const binary_table*>& binaries_b,
    const std::vector<const unary_table*>& unaries_a,
    const std::vector<const unary_table*>& unaries_b);

binary_table trivial_lhd(int n);
quandle trivial_quandle(int n);
binary_table dihedral_lhd(int n);  // a lhd b = 2b - a mod n
group_table symmetric_group(int n);
group_table cyclic_group(int n);

}  // namespace qlab
