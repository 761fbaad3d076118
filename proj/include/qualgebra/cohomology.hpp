#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qualgebra/algebra.hpp"

namespace qlab {

using bigint = mpz_class;

// Dense exact integer matrix. No floating point anywhere in this module.
class int_matrix {
public:
    int_matrix() = default;
    int_matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bigint& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const bigint& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static int_matrix identity(int n);
    static int_matrix from_rows(const std::vector<std::vector<long long>>& rows);

    int_matrix operator*(const int_matrix& o) const;
    bool operator==(const int_matrix& o) const = default;
    bool is_zero() const;

    void swap_rows(int i, int j);
    void negate_row(int i);
    void add_row_multiple(int dst, int src, const bigint& k);  // row dst += k * row src
    void swap_cols(int i, int j);
    void negate_col(int i);
    void add_col_multiple(int dst, int src, const bigint& k);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<bigint> a_;
};

// Rows form a basis of { x : m x = 0 } over Z, in row Hermite form for
// deterministic output.
int_matrix integer_kernel(const int_matrix& m);

// u * m * v = d with d diagonal, d1 | d2 | ..., u and v unimodular.
struct snf_result {
    int_matrix d, u, v;
};
snf_result smith_normal_form(const int_matrix& m);

bigint determinant(const int_matrix& m);  // via SNF; used to certify unimodularity

// Row Hermite normal form H = t * m (t unimodular); zero rows dropped.
struct hnf_result {
    int_matrix h, t;
};
hnf_result row_hnf(const int_matrix& m);

// Integer solution x of x * basis = target where the rows of `basis` are
// linearly independent; nullopt if target is outside the lattice.
std::optional<std::vector<bigint>> lattice_solve(const int_matrix& basis,
                                                 const std::vector<bigint>& target);

// Balanced reduction of v modulo the lattice spanned by the rows of `basis`;
// keeps representative entries small.
std::vector<bigint> reduce_mod_lattice(std::vector<bigint> v, const int_matrix& basis);

struct abelian_group_presentation {
    long long free_rank = 0;
    std::vector<bigint> torsion;  // invariant factors d1 | d2 | ..., each >= 2
};
std::string to_string(const abelian_group_presentation& g);

// Coefficient ring: Z when modulus == 0, else Z/m.
struct coeff_ring {
    unsigned long modulus = 0;
    bool is_integers() const { return modulus == 0; }
};

enum class cocycle_kind { qualgebra, squandle };

// (chi, lambda) weight data; lambda is n x n for qualgebras and length n for
// squandles.
struct cocycle_pair {
    cocycle_kind kind = cocycle_kind::qualgebra;
    int n = 0;
    std::vector<std::vector<bigint>> chi;
    std::vector<std::vector<bigint>> lambda_sq;  // qualgebra lambda(a,b)
    std::vector<bigint> lambda_lin;              // squandle lambda(a)

    static cocycle_pair zero(cocycle_kind kind, int n);
    cocycle_pair operator+(const cocycle_pair& o) const;
    cocycle_pair operator-() const;
};

// Flat variable order: chi(0,0)..chi(n-1,n-1), then lambda entries.
std::vector<bigint> flatten(const cocycle_pair& cp);
cocycle_pair unflatten(cocycle_kind kind, int n, const std::vector<bigint>& v);

// Linear system whose integer kernel is Z^2. `core` holds the defining axiom
// rows; `consistency` the redundant quandle rows kept as a cross-check block.
struct cocycle_system_t {
    int_matrix core;
    int_matrix consistency;
    int chi_cols = 0;
    int lambda_cols = 0;
};
cocycle_system_t cocycle_system(const qualgebra& q);
cocycle_system_t cocycle_system(const squandle& s);

std::vector<cocycle_pair> coboundary_generators(const qualgebra& q);
std::vector<cocycle_pair> coboundary_generators(const squandle& s);

struct check_result {
    bool ok = true;
    std::string detail;
};
check_result is_cocycle(const qualgebra& q, const cocycle_pair& cp);
check_result is_cocycle(const squandle& s, const cocycle_pair& cp);
bool is_coboundary(const qualgebra& q, const cocycle_pair& cp);
bool is_coboundary(const squandle& s, const cocycle_pair& cp);

struct cohomology_result {
    abelian_group_presentation h2;
    long long z2_rank = 0;  // over Z: rank of Z^2; over Z/m: rank of the lifted kernel lattice
    long long b2_rank = 0;  // over Z: rank of B^2 inside Z^2
    std::vector<cocycle_pair> torsion_representatives;
    std::vector<cocycle_pair> free_representatives;
};
cohomology_result second_cohomology(const qualgebra& q, coeff_ring coeff = {});
cohomology_result second_cohomology(const squandle& s, coeff_ring coeff = {});

}  // namespace qlab
