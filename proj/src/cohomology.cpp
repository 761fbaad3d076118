#include "qualgebra/cohomology.hpp"

#include <algorithm>
#include <cstdlib>

#include "qualgebra/errors.hpp"

namespace qlab {

int_matrix int_matrix::identity(int n) {
    int_matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int_matrix int_matrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return int_matrix(0, 0);
    int_matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw bad_input("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

int_matrix int_matrix::operator*(const int_matrix& o) const {
    if (cols_ != o.rows_) throw bad_input("matrix product shape mismatch");
    int_matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const bigint& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

bool int_matrix::is_zero() const {
    for (const bigint& x : a_)
        if (x != 0) return false;
    return true;
}

void int_matrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}
void int_matrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}
void int_matrix::add_row_multiple(int dst, int src, const bigint& k) {
    if (k == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}
void int_matrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}
void int_matrix::negate_col(int i) {
    for (int r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
}
void int_matrix::add_col_multiple(int dst, int src, const bigint& k) {
    if (k == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

namespace {

// Bring `a` to row echelon form with unimodular row operations, tracking the
// transform in `u` (u_in * a_in = a_out invariant, with u initialised to I).
// Returns the rank; pivot rows end up first, zero rows last. Pivots are made
// positive and entries above them reduced into [0, pivot).
int echelonize_rows(int_matrix& a, int_matrix& u) {
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        while (true) {
            int best = -1;
            for (int i = r; i < a.rows(); ++i) {
                if (a.at(i, col) == 0) continue;
                if (best < 0 || mpz_cmpabs(a.at(i, col).get_mpz_t(),
                                       a.at(best, col).get_mpz_t()) < 0)
                    best = i;
            }
            if (best < 0) break;  // column clear below r
            a.swap_rows(best, r);
            u.swap_rows(best, r);
            bool clean = true;
            for (int i = r + 1; i < a.rows(); ++i) {
                if (a.at(i, col) == 0) continue;
                bigint q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(),
                           a.at(r, col).get_mpz_t());
                a.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (a.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < a.rows() && a.at(r, col) != 0) {
            if (a.at(r, col) < 0) {
                a.negate_row(r);
                u.negate_row(r);
            }
            for (int i = 0; i < r; ++i) {
                bigint q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(),
                           a.at(r, col).get_mpz_t());
                a.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
            ++r;
        }
    }
    return r;
}

int_matrix take_rows(const int_matrix& m, int from, int count) {
    int_matrix out(count, m.cols());
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(from + i, j);
    return out;
}

int_matrix transpose(const int_matrix& m) {
    int_matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

}  // namespace

hnf_result row_hnf(const int_matrix& m) {
    int_matrix a = m;
    int_matrix u = int_matrix::identity(m.rows());
    int r = echelonize_rows(a, u);
    return {take_rows(a, 0, r), take_rows(u, 0, r)};
}

int_matrix integer_kernel(const int_matrix& m) {
    // Row-reduce m^T; rows of the transform that map to zero span the kernel.
    int_matrix a = transpose(m);
    int_matrix u = int_matrix::identity(a.rows());
    int r = echelonize_rows(a, u);
    int_matrix basis = take_rows(u, r, a.rows() - r);
    if (basis.rows() == 0) return int_matrix(0, m.cols());
    int_matrix t = int_matrix::identity(basis.rows());
    echelonize_rows(basis, t);  // canonical deterministic form
    return basis;
}

snf_result smith_normal_form(const int_matrix& m) {
    snf_result res{m, int_matrix::identity(m.rows()), int_matrix::identity(m.cols())};
    int_matrix& d = res.d;
    const int nmin = std::min(d.rows(), d.cols());

    for (int t = 0; t < nmin; ++t) {
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < d.rows(); ++i)
                for (int j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (bi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(),
                                         d.at(bi, bj).get_mpz_t()) < 0) {
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) {
                bi = bj = t;  // submatrix is zero; done with this pivot
                break;
            }
            d.swap_rows(bi, t);
            res.u.swap_rows(bi, t);
            d.swap_cols(bj, t);
            res.v.swap_cols(bj, t);

            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                bigint q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                res.u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                bigint q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                res.v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot now alone in its row and column; enforce divisibility
            bool fixed = true;
            for (int i = t + 1; i < d.rows() && fixed; ++i)
                for (int j = t + 1; j < d.cols() && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        res.u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            res.u.negate_row(t);
        }
        if (d.at(t, t) == 0) break;  // all remaining entries are zero
    }
    return res;
}

bigint determinant(const int_matrix& m) {
    if (m.rows() != m.cols()) throw bad_input("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    int_matrix a = m;
    int sign = 1;
    bigint prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                bigint num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by Bareiss
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<bigint>> lattice_solve(const int_matrix& basis,
                                                 const std::vector<bigint>& target) {
    if (static_cast<int>(target.size()) != basis.cols())
        throw bad_input("lattice_solve dimension mismatch");
    hnf_result hnf = row_hnf(basis);
    std::vector<bigint> b = target;
    std::vector<bigint> y(hnf.h.rows(), 0);
    for (int i = 0; i < hnf.h.rows(); ++i) {
        int p = 0;
        while (p < hnf.h.cols() && hnf.h.at(i, p) == 0) ++p;
        if (p == hnf.h.cols()) continue;
        if (b[p] % hnf.h.at(i, p) != 0) return std::nullopt;
        y[i] = b[p] / hnf.h.at(i, p);
        if (y[i] != 0)
            for (int j = p; j < hnf.h.cols(); ++j) b[j] -= y[i] * hnf.h.at(i, j);
    }
    for (const bigint& x : b)
        if (x != 0) return std::nullopt;
    std::vector<bigint> out(basis.rows(), 0);
    for (int i = 0; i < hnf.t.rows(); ++i)
        for (int j = 0; j < basis.rows(); ++j) out[j] += y[i] * hnf.t.at(i, j);
    return out;
}

std::vector<bigint> reduce_mod_lattice(std::vector<bigint> v, const int_matrix& basis) {
    if (basis.rows() == 0) return v;
    hnf_result hnf = row_hnf(basis);
    for (int i = 0; i < hnf.h.rows(); ++i) {
        int p = 0;
        while (p < hnf.h.cols() && hnf.h.at(i, p) == 0) ++p;
        if (p == hnf.h.cols()) continue;
        const bigint& d = hnf.h.at(i, p);
        bigint q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v[p].get_mpz_t(), d.get_mpz_t());
        if (2 * r > d) q += 1;  // balanced remainder
        if (q != 0)
            for (int j = p; j < hnf.h.cols(); ++j) v[j] -= q * hnf.h.at(i, j);
    }
    return v;
}

std::string to_string(const abelian_group_presentation& g) {
    std::string s;
    for (const bigint& d : g.torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    if (g.free_rank > 0) {
        if (!s.empty()) s += " + ";
        s += g.free_rank == 1 ? "Z" : "Z^" + std::to_string(g.free_rank);
    }
    return s.empty() ? "0" : s;
}

cocycle_pair cocycle_pair::zero(cocycle_kind kind, int n) {
    cocycle_pair cp;
    cp.kind = kind;
    cp.n = n;
    cp.chi.assign(n, std::vector<bigint>(n, 0));
    if (kind == cocycle_kind::qualgebra)
        cp.lambda_sq.assign(n, std::vector<bigint>(n, 0));
    else
        cp.lambda_lin.assign(n, 0);
    return cp;
}

cocycle_pair cocycle_pair::operator+(const cocycle_pair& o) const {
    if (kind != o.kind || n != o.n) throw shape_mismatch("cocycle addition shape mismatch");
    cocycle_pair r = *this;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) r.chi[a][b] += o.chi[a][b];
    if (kind == cocycle_kind::qualgebra) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) r.lambda_sq[a][b] += o.lambda_sq[a][b];
    } else {
        for (int a = 0; a < n; ++a) r.lambda_lin[a] += o.lambda_lin[a];
    }
    return r;
}

cocycle_pair cocycle_pair::operator-() const {
    cocycle_pair r = *this;
    for (auto& row : r.chi)
        for (auto& x : row) x = -x;
    for (auto& row : r.lambda_sq)
        for (auto& x : row) x = -x;
    for (auto& x : r.lambda_lin) x = -x;
    return r;
}

std::vector<bigint> flatten(const cocycle_pair& cp) {
    std::vector<bigint> v;
    for (const auto& row : cp.chi) v.insert(v.end(), row.begin(), row.end());
    if (cp.kind == cocycle_kind::qualgebra)
        for (const auto& row : cp.lambda_sq) v.insert(v.end(), row.begin(), row.end());
    else
        v.insert(v.end(), cp.lambda_lin.begin(), cp.lambda_lin.end());
    return v;
}

cocycle_pair unflatten(cocycle_kind kind, int n, const std::vector<bigint>& v) {
    cocycle_pair cp = cocycle_pair::zero(kind, n);
    size_t idx = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cp.chi[a][b] = v[idx++];
    if (kind == cocycle_kind::qualgebra) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) cp.lambda_sq[a][b] = v[idx++];
    } else {
        for (int a = 0; a < n; ++a) cp.lambda_lin[a] = v[idx++];
    }
    if (idx != v.size()) throw shape_mismatch("cocycle vector length mismatch");
    return cp;
}

namespace {

struct row_builder {
    std::vector<std::vector<long long>> rows;
    int cols;
    explicit row_builder(int c) : cols(c) {}
    std::vector<long long>& fresh() {
        rows.emplace_back(cols, 0);
        return rows.back();
    }
    int_matrix build() const {
        int_matrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rows[i][j]);
        return m;
    }
};

}  // namespace

cocycle_system_t cocycle_system(const qualgebra& q) {
    const int n = q.size();
    const int nc = n * n;
    const int cols = 2 * nc;
    auto chi = [&](int a, int b) { return a * n + b; };
    auto lam = [&](int a, int b) { return nc + a * n + b; };

    row_builder core(cols);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // chi(a, b<>c) = chi(a,b) + chi(a lhd b, c)
                auto& r = core.fresh();
                r[chi(a, q.diamond(b, c))] += 1;
                r[chi(a, b)] -= 1;
                r[chi(q.lhd(a, b), c)] -= 1;
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // chi(a<>b, c) + lambda(a lhd c, b lhd c) = chi(a,c) + chi(b,c) + lambda(a,b)
                auto& r = core.fresh();
                r[chi(q.diamond(a, b), c)] += 1;
                r[lam(q.lhd(a, c), q.lhd(b, c))] += 1;
                r[chi(a, c)] -= 1;
                r[chi(b, c)] -= 1;
                r[lam(a, b)] -= 1;
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // chi(a,b) + lambda(a,b) = lambda(b, a lhd b)
            auto& r = core.fresh();
            r[chi(a, b)] += 1;
            r[lam(a, b)] += 1;
            r[lam(b, q.lhd(a, b))] -= 1;
        }

    row_builder cons(cols);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // quandle cocycle row: chi(a,b) + chi(a lhd b, c) = chi(a lhd c, b lhd c) + chi(a,c)
                auto& r = cons.fresh();
                r[chi(a, b)] += 1;
                r[chi(q.lhd(a, b), c)] += 1;
                r[chi(q.lhd(a, c), q.lhd(b, c))] -= 1;
                r[chi(a, c)] -= 1;
            }
    for (int a = 0; a < n; ++a) {
        auto& r = cons.fresh();
        r[chi(a, a)] += 1;
    }
    return {core.build(), cons.build(), nc, nc};
}

cocycle_system_t cocycle_system(const squandle& s) {
    const int n = s.size();
    const int nc = n * n;
    const int cols = nc + n;
    auto chi = [&](int a, int b) { return a * n + b; };
    auto lam = [&](int a) { return nc + a; };

    row_builder core(cols);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                auto& r = core.fresh();
                r[chi(a, b)] += 1;
                r[chi(s.lhd(a, b), c)] += 1;
                r[chi(s.lhd(a, c), s.lhd(b, c))] -= 1;
                r[chi(a, c)] -= 1;
            }
    for (int a = 0; a < n; ++a) {
        auto& r = core.fresh();
        r[chi(a, a)] += 1;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // chi(a, b^2) = chi(a,b) + chi(a lhd b, b)
            auto& r = core.fresh();
            r[chi(a, s.square(b))] += 1;
            r[chi(a, b)] -= 1;
            r[chi(s.lhd(a, b), b)] -= 1;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // chi(a^2, b) + lambda(a lhd b) = 2 chi(a,b) + lambda(a)
            auto& r = core.fresh();
            r[chi(s.square(a), b)] += 1;
            r[lam(s.lhd(a, b))] += 1;
            r[chi(a, b)] -= 2;
            r[lam(a)] -= 1;
        }
    return {core.build(), int_matrix(0, cols), nc, n};
}

std::vector<cocycle_pair> coboundary_generators(const qualgebra& q) {
    const int n = q.size();
    std::vector<cocycle_pair> out;
    for (int a = 0; a < n; ++a) {
        cocycle_pair cp = cocycle_pair::zero(cocycle_kind::qualgebra, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                cp.chi[x][y] = (q.lhd(x, y) == a ? 1 : 0) - (x == a ? 1 : 0);
                cp.lambda_sq[x][y] = (x == a ? 1 : 0) + (y == a ? 1 : 0) -
                                     (q.diamond(x, y) == a ? 1 : 0);
            }
        out.push_back(std::move(cp));
    }
    return out;
}

std::vector<cocycle_pair> coboundary_generators(const squandle& s) {
    const int n = s.size();
    std::vector<cocycle_pair> out;
    for (int a = 0; a < n; ++a) {
        cocycle_pair cp = cocycle_pair::zero(cocycle_kind::squandle, n);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y)
                cp.chi[x][y] = (s.lhd(x, y) == a ? 1 : 0) - (x == a ? 1 : 0);
            cp.lambda_lin[x] = 2 * (x == a ? 1 : 0) - (s.square(x) == a ? 1 : 0);
        }
        out.push_back(std::move(cp));
    }
    return out;
}

namespace {

void require_shape(cocycle_kind kind, int n, const cocycle_pair& cp) {
    if (cp.kind != kind || cp.n != n) throw shape_mismatch("cocycle shape mismatch");
    if (static_cast<int>(cp.chi.size()) != n) throw shape_mismatch("chi table shape");
    for (const auto& row : cp.chi)
        if (static_cast<int>(row.size()) != n) throw shape_mismatch("chi table shape");
    if (kind == cocycle_kind::qualgebra) {
        if (static_cast<int>(cp.lambda_sq.size()) != n)
            throw shape_mismatch("lambda table shape");
        for (const auto& row : cp.lambda_sq)
            if (static_cast<int>(row.size()) != n) throw shape_mismatch("lambda table shape");
    } else if (static_cast<int>(cp.lambda_lin.size()) != n) {
        throw shape_mismatch("lambda table shape");
    }
}

}  // namespace

check_result is_cocycle(const qualgebra& q, const cocycle_pair& cp) {
    require_shape(cocycle_kind::qualgebra, q.size(), cp);
    const int n = q.size();
    const auto& X = cp.chi;
    const auto& L = cp.lambda_sq;
    for (int a = 0; a < n; ++a) {
        if (X[a][a] != 0) return {false, "BWR1 fails at a=" + std::to_string(a)};
        for (int b = 0; b < n; ++b) {
            if (X[a][b] + L[a][b] != L[b][q.lhd(a, b)])
                return {false, "BWRV fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")"};
            for (int c = 0; c < n; ++c) {
                if (X[a][q.diamond(b, c)] != X[a][b] + X[q.lhd(a, b)][c])
                    return {false, "BWRIV fails"};
                if (X[q.diamond(a, b)][c] + L[q.lhd(a, c)][q.lhd(b, c)] !=
                    X[a][c] + X[b][c] + L[a][b])
                    return {false, "BWRVI fails"};
                if (X[a][b] + X[q.lhd(a, b)][c] != X[q.lhd(a, c)][q.lhd(b, c)] + X[a][c])
                    return {false, "BWR3 fails"};
            }
        }
    }
    return {true, ""};
}

check_result is_cocycle(const squandle& s, const cocycle_pair& cp) {
    require_shape(cocycle_kind::squandle, s.size(), cp);
    const int n = s.size();
    const auto& X = cp.chi;
    const auto& L = cp.lambda_lin;
    for (int a = 0; a < n; ++a) {
        if (X[a][a] != 0) return {false, "BWR1 fails at a=" + std::to_string(a)};
        for (int b = 0; b < n; ++b) {
            if (X[a][s.square(b)] != X[a][b] + X[s.lhd(a, b)][b])
                return {false, "squandle chi axiom fails"};
            if (X[s.square(a)][b] + L[s.lhd(a, b)] != 2 * X[a][b] + L[a])
                return {false, "squandle lambda axiom fails"};
            for (int c = 0; c < n; ++c)
                if (X[a][b] + X[s.lhd(a, b)][c] != X[s.lhd(a, c)][s.lhd(b, c)] + X[a][c])
                    return {false, "BWR3 fails"};
        }
    }
    return {true, ""};
}

namespace {

int_matrix stack_flat(const std::vector<cocycle_pair>& gens) {
    if (gens.empty()) return int_matrix(0, 0);
    std::vector<std::vector<bigint>> flat;
    for (const auto& g : gens) flat.push_back(flatten(g));
    int_matrix m(static_cast<int>(flat.size()), static_cast<int>(flat[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = flat[i][j];
    return m;
}

bool lattice_member(const int_matrix& basis, const std::vector<bigint>& v) {
    return lattice_solve(basis, v).has_value();
}

// Shared H^2 computation once the system, generators and kind are known.
cohomology_result h2_impl(const cocycle_system_t& sys,
                          const std::vector<cocycle_pair>& gens, cocycle_kind kind,
                          int n, coeff_ring coeff) {
    cohomology_result out;
    const int N = sys.chi_cols + sys.lambda_cols;

    int_matrix kernel;   // rows span the cocycle lattice (lifted to Z for Z/m)
    int_matrix relations;  // rows span the coboundary lattice inside it
    if (coeff.is_integers()) {
        kernel = integer_kernel(sys.core);
        relations = stack_flat(gens);
    } else {
        // Lift Z/m cocycles: x with (core)x = 0 mod m are the x-parts of the
        // kernel of [core | m I].
        const int R = sys.core.rows();
        int_matrix aug(R, N + R);
        for (int i = 0; i < R; ++i) {
            for (int j = 0; j < N; ++j) aug.at(i, j) = sys.core.at(i, j);
            aug.at(i, N + i) = static_cast<long>(coeff.modulus);
        }
        int_matrix k2 = integer_kernel(aug);
        kernel = int_matrix(k2.rows(), N);
        for (int i = 0; i < k2.rows(); ++i)
            for (int j = 0; j < N; ++j) kernel.at(i, j) = k2.at(i, j);
        {
            int_matrix t = int_matrix::identity(kernel.rows());
            echelonize_rows(kernel, t);
        }
        relations = int_matrix(static_cast<int>(gens.size()) + N, N);
        for (size_t i = 0; i < gens.size(); ++i) {
            auto flat = flatten(gens[i]);
            for (int j = 0; j < N; ++j) relations.at(static_cast<int>(i), j) = flat[j];
        }
        for (int j = 0; j < N; ++j)
            relations.at(static_cast<int>(gens.size()) + j, j) =
                static_cast<long>(coeff.modulus);
    }

    const int k = kernel.rows();
    out.z2_rank = k;

    // coboundary coordinates with respect to the kernel basis
    int_matrix coords(relations.rows(), k);
    for (int i = 0; i < relations.rows(); ++i) {
        std::vector<bigint> target(N);
        for (int j = 0; j < N; ++j) target[j] = relations.at(i, j);
        auto x = lattice_solve(kernel, target);
        if (!x)
            throw inconsistent_lattice(
                "a coboundary generator does not lie in the cocycle lattice");
        for (int j = 0; j < k; ++j) coords.at(i, j) = (*x)[j];
    }

    snf_result snf = smith_normal_form(coords);
    int rank = 0;
    for (int i = 0; i < std::min(coords.rows(), coords.cols()); ++i)
        if (snf.d.at(i, i) != 0) ++rank;
    out.b2_rank = rank;
    out.h2.free_rank = k - rank;
    for (int i = 0; i < rank; ++i)
        if (snf.d.at(i, i) >= 2) out.h2.torsion.push_back(snf.d.at(i, i));
    std::sort(out.h2.torsion.begin(), out.h2.torsion.end());

    // Representatives: with u*coords*v = d, the rows of v^-1 give a basis of
    // Z^k in which the coboundary lattice is diagonal.
    // w = v^-1; its rows are the Z^k basis in which the coboundary lattice is
    // diagonal, solved column by column via v * x = e.
    int_matrix w(k, k);
    for (int col = 0; col < k; ++col) {
        std::vector<bigint> e(k, 0);
        e[col] = 1;
        auto x = lattice_solve(transpose(snf.v), e);  // x * v^T = e  <=>  v x = e
        if (!x) throw inconsistent_lattice("SNF transform is not invertible");
        for (int i = 0; i < k; ++i) w.at(i, col) = (*x)[i];
    }

    int_matrix b_lattice = relations;
    auto emit = [&](int row) {
        std::vector<bigint> vec(N, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < N; ++j) vec[j] += w.at(row, i) * kernel.at(i, j);
        vec = reduce_mod_lattice(std::move(vec), b_lattice);
        return unflatten(kind, n, vec);
    };
    for (int i = 0; i < rank; ++i)
        if (snf.d.at(i, i) >= 2) out.torsion_representatives.push_back(emit(i));
    for (int i = rank; i < k; ++i) out.free_representatives.push_back(emit(i));
    return out;
}

}  // namespace

bool is_coboundary(const qualgebra& q, const cocycle_pair& cp) {
    require_shape(cocycle_kind::qualgebra, q.size(), cp);
    return lattice_member(stack_flat(coboundary_generators(q)), flatten(cp));
}

bool is_coboundary(const squandle& s, const cocycle_pair& cp) {
    require_shape(cocycle_kind::squandle, s.size(), cp);
    return lattice_member(stack_flat(coboundary_generators(s)), flatten(cp));
}

cohomology_result second_cohomology(const qualgebra& q, coeff_ring coeff) {
    return h2_impl(cocycle_system(q), coboundary_generators(q), cocycle_kind::qualgebra,
                   q.size(), coeff);
}

cohomology_result second_cohomology(const squandle& s, coeff_ring coeff) {
    return h2_impl(cocycle_system(s), coboundary_generators(s), cocycle_kind::squandle,
                   s.size(), coeff);
}

}  // namespace qlab
