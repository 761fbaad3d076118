#include "qualgebra/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace qlab {

carrier::carrier(int size, std::vector<std::string> display_names)
    : n(size), names(std::move(display_names)) {
    if (!names.empty()) {
        if (static_cast<int>(names.size()) != n)
            throw bad_input("carrier names must be empty or match the carrier size");
        std::set<std::string> seen(names.begin(), names.end());
        if (static_cast<int>(seen.size()) != n)
            throw bad_input("carrier names must be distinct");
    }
}

std::string carrier::name_of(elem a) const {
    if (!names.empty()) return names[a];
    return std::to_string(a);
}

std::optional<elem> carrier::index_of(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

perm compose(const perm& f, const perm& g) {
    perm r(f.size());
    for (size_t x = 0; x < f.size(); ++x) r[x] = g[f[x]];
    return r;
}

perm inverse(const perm& p) {
    perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<elem>(x);
    return r;
}

bool is_permutation(const perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (elem v : p) {
        if (v < 0 || v >= static_cast<elem>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> cycle_type(const perm& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    return lens;
}

namespace {

void check_table_shape(int n, const binary_table& t, const std::string& what) {
    if (static_cast<int>(t.size()) != n)
        throw bad_input(what + " table must have " + std::to_string(n) + " rows");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw bad_input(what + " table rows must have " + std::to_string(n) + " entries");
        for (elem v : row)
            if (v < 0 || v >= n) throw bad_input(what + " table entry out of range");
    }
}

void check_unary_shape(int n, const unary_table& t, const std::string& what) {
    if (static_cast<int>(t.size()) != n)
        throw bad_input(what + " table must have " + std::to_string(n) + " entries");
    for (elem v : t)
        if (v < 0 || v >= n) throw bad_input(what + " table entry out of range");
}

std::string wname(const carrier& c, elem a) { return c.name_of(a); }

}  // namespace

quandle::quandle(carrier c, binary_table lhd)
    : carrier_(std::move(c)), lhd_(std::move(lhd)) {
    const int n = carrier_.n;
    if (n < 1) throw bad_input("carrier must have at least one element");
    check_table_shape(n, lhd_, "lhd");

    lhd_inv_.assign(n, std::vector<elem>(n, -1));
    for (elem b = 0; b < n; ++b) {
        std::vector<bool> seen(n, false);
        for (elem a = 0; a < n; ++a) {
            elem v = lhd_[a][b];
            if (seen[v]) throw non_bijective_translation(b);
            seen[v] = true;
            lhd_inv_[v][b] = a;
        }
    }
    for (elem a = 0; a < n; ++a)
        if (lhd_[a][a] != a)
            throw axiom_violation("Q_Idem", {a, -1, -1},
                                  wname(carrier_, a) + " lhd " + wname(carrier_, a) +
                                      " != " + wname(carrier_, a));
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            if (lhd_inv_[lhd_[a][b]][b] != a || lhd_[lhd_inv_[a][b]][b] != a)
                throw axiom_violation("Q_Inv", {a, b, -1}, "lhd_inv is not inverse to lhd");
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            for (elem cc = 0; cc < n; ++cc)
                if (lhd_[lhd_[a][b]][cc] != lhd_[lhd_[a][cc]][lhd_[b][cc]])
                    throw axiom_violation(
                        "Q_SD", {a, b, cc},
                        "(" + wname(carrier_, a) + " lhd " + wname(carrier_, b) +
                            ") lhd " + wname(carrier_, cc) + " breaks self-distributivity");
}

perm quandle::translation(elem a) const {
    perm p(size());
    for (elem x = 0; x < size(); ++x) p[x] = lhd_[x][a];
    return p;
}

bool quandle::is_trivial() const {
    for (elem a = 0; a < size(); ++a)
        for (elem b = 0; b < size(); ++b)
            if (lhd_[a][b] != a) return false;
    return true;
}

qualgebra::qualgebra(quandle q, binary_table diamond)
    : quandle_(std::move(q)), diamond_(std::move(diamond)) {
    const int n = quandle_.size();
    const carrier& c = quandle_.base();
    check_table_shape(n, diamond_, "diamond");

    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b) {
            if (diamond_[a][b] != diamond_[b][quandle_.lhd(a, b)])
                throw axiom_violation("QA_Comm", {a, b, -1},
                                      wname(c, a) + " diamond " + wname(c, b) +
                                          " != " + wname(c, b) + " diamond (" +
                                          wname(c, a) + " lhd " + wname(c, b) + ")");
            for (elem cc = 0; cc < n; ++cc) {
                if (quandle_.lhd(a, diamond_[b][cc]) !=
                    quandle_.lhd(quandle_.lhd(a, b), cc))
                    throw axiom_violation("QA_Comp", {a, b, cc},
                                          wname(c, a) + " lhd (" + wname(c, b) +
                                              " diamond " + wname(c, cc) +
                                              ") breaks translation composability");
                if (quandle_.lhd(diamond_[a][b], cc) !=
                    diamond_[quandle_.lhd(a, cc)][quandle_.lhd(b, cc)])
                    throw axiom_violation("QA_D", {a, b, cc},
                                          "(" + wname(c, a) + " diamond " + wname(c, b) +
                                              ") lhd " + wname(c, cc) +
                                              " breaks distributivity");
            }
        }
    // Q_SD is implied by QA_Comp and QA_Comm; the quandle constructor already
    // verified it, so nothing further to do here.
}

squandle::squandle(quandle q, unary_table square)
    : quandle_(std::move(q)), square_(std::move(square)) {
    const int n = quandle_.size();
    const carrier& c = quandle_.base();
    check_unary_shape(n, square_, "square");

    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b) {
            if (quandle_.lhd(a, square_[b]) != quandle_.lhd(quandle_.lhd(a, b), b))
                throw axiom_violation("SQ_1", {a, b, -1},
                                      wname(c, a) + " lhd " + wname(c, b) +
                                          "^2 != (" + wname(c, a) + " lhd " +
                                          wname(c, b) + ") lhd " + wname(c, b));
            if (quandle_.lhd(square_[a], b) != square_[quandle_.lhd(a, b)])
                throw axiom_violation("SQ_2", {a, b, -1},
                                      wname(c, a) + "^2 lhd " + wname(c, b) +
                                          " != (" + wname(c, a) + " lhd " +
                                          wname(c, b) + ")^2");
        }
}

group_table::group_table(carrier c, binary_table m, elem u, unary_table i)
    : base(std::move(c)), mul(std::move(m)), unit(u), inv(std::move(i)) {
    const int n = base.n;
    if (n < 1) throw bad_input("group must have at least one element");
    check_table_shape(n, mul, "mul");
    check_unary_shape(n, inv, "inv");
    if (unit < 0 || unit >= n) throw bad_input("group unit out of range");
    for (elem a = 0; a < n; ++a)
        if (mul[unit][a] != a || mul[a][unit] != a)
            throw axiom_violation("G_Unit", {a, -1, -1}, "unit law fails");
    for (elem a = 0; a < n; ++a)
        if (mul[a][inv[a]] != unit || mul[inv[a]][a] != unit)
            throw axiom_violation("G_Inv", {a, -1, -1}, "inverse law fails");
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            for (elem cc = 0; cc < n; ++cc)
                if (mul[mul[a][b]][cc] != mul[a][mul[b][cc]])
                    throw axiom_violation("G_Assoc", {a, b, cc}, "associativity fails");
}

namespace {

binary_table conjugation_table(const group_table& g) {
    const int n = g.size();
    binary_table lhd(n, std::vector<elem>(n));
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            lhd[a][b] = g.times(g.times(g.inv[b], a), b);
    return lhd;
}

}  // namespace

qualgebra group_qualgebra(const group_table& g) {
    return qualgebra(quandle(g.base, conjugation_table(g)), g.mul);
}

squandle group_squandle(const group_table& g) {
    unary_table sq(g.size());
    for (elem a = 0; a < g.size(); ++a) sq[a] = g.times(a, a);
    return squandle(quandle(g.base, conjugation_table(g)), std::move(sq));
}

namespace {

template <typename NextFn>
std::vector<elem> close_under(int n, const std::set<elem>& seed, NextFn&& next) {
    if (seed.empty()) throw bad_input("closure seed must be nonempty");
    std::vector<bool> in(n, false);
    std::queue<elem> work;
    for (elem a : seed) {
        if (a < 0 || a >= n) throw bad_input("closure seed element out of range");
        if (!in[a]) {
            in[a] = true;
            work.push(a);
        }
    }
    std::vector<elem> members;
    while (!work.empty()) {
        elem a = work.front();
        work.pop();
        members.push_back(a);
        for (elem b = 0; b < n; ++b) {
            if (!in[b]) continue;
            for (elem v : next(a, b)) {
                if (!in[v]) {
                    in[v] = true;
                    work.push(v);
                }
            }
        }
    }
    std::vector<elem> sorted;
    for (elem a = 0; a < n; ++a)
        if (in[a]) sorted.push_back(a);
    return sorted;
}

carrier restricted_carrier(const carrier& c, const std::vector<elem>& members) {
    if (c.names.empty()) return carrier(static_cast<int>(members.size()));
    std::vector<std::string> names;
    for (elem a : members) names.push_back(c.names[a]);
    return carrier(static_cast<int>(members.size()), std::move(names));
}

}  // namespace

sub_qualgebra closure(const qualgebra& q, const std::set<elem>& seed) {
    auto members = close_under(q.size(), seed, [&](elem a, elem b) {
        return std::array<elem, 4>{q.lhd(a, b), q.lhd(b, a), q.diamond(a, b),
                                   q.diamond(b, a)};
    });
    std::vector<int> idx(q.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) idx[members[i]] = static_cast<int>(i);
    const int k = static_cast<int>(members.size());
    binary_table lhd(k, std::vector<elem>(k)), dia(k, std::vector<elem>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            lhd[i][j] = idx[q.lhd(members[i], members[j])];
            dia[i][j] = idx[q.diamond(members[i], members[j])];
        }
    return sub_qualgebra{members,
                         qualgebra(quandle(restricted_carrier(q.base(), members), lhd), dia)};
}

sub_squandle closure(const squandle& s, const std::set<elem>& seed) {
    auto members = close_under(s.size(), seed, [&](elem a, elem b) {
        return std::array<elem, 4>{s.lhd(a, b), s.lhd(b, a), s.square(a), s.square(b)};
    });
    std::vector<int> idx(s.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) idx[members[i]] = static_cast<int>(i);
    const int k = static_cast<int>(members.size());
    binary_table lhd(k, std::vector<elem>(k));
    unary_table sq(k);
    for (int i = 0; i < k; ++i) {
        sq[i] = idx[s.square(members[i])];
        for (int j = 0; j < k; ++j) lhd[i][j] = idx[s.lhd(members[i], members[j])];
    }
    return sub_squandle{members,
                        squandle(quandle(restricted_carrier(s.base(), members), lhd), sq)};
}

namespace {

template <typename S>
local_data local_data_impl(const S& s, elem a) {
    local_data out;
    out.translation = s.base_quandle().translation(a);
    for (elem x = 0; x < s.size(); ++x) {
        if (s.lhd(x, a) == x) out.fix.push_back(x);
        if (s.lhd(a, x) == a) out.stab.push_back(x);
    }
    out.generated = closure(s, {a}).members;
    return out;
}

}  // namespace

local_data compute_local_data(const qualgebra& q, elem a) { return local_data_impl(q, a); }
local_data compute_local_data(const squandle& s, elem a) { return local_data_impl(s, a); }

namespace {

// Per-element invariant fingerprint used to prune the isomorphism search.
std::vector<long long> element_fingerprint(
    int n, elem a,
    const std::vector<const binary_table*>& binaries,
    const std::vector<const unary_table*>& unaries) {
    std::vector<long long> fp;
    for (const binary_table* t : binaries) {
        const binary_table& T = *t;
        fp.push_back(T[a][a] == a ? 1 : 0);
        int row_self = 0, col_self = 0, row_fix = 0, col_fix = 0;
        for (elem x = 0; x < n; ++x) {
            if (T[a][x] == a) ++row_self;
            if (T[x][a] == x) ++col_self;
            if (T[a][x] == x) ++row_fix;
            if (T[x][a] == a) ++col_fix;
        }
        fp.push_back(row_self);
        fp.push_back(col_self);
        fp.push_back(row_fix);
        fp.push_back(col_fix);
        // multiplicity profiles of row a and column a
        std::vector<int> rc(n, 0), cc(n, 0);
        for (elem x = 0; x < n; ++x) {
            ++rc[T[a][x]];
            ++cc[T[x][a]];
        }
        std::sort(rc.begin(), rc.end());
        std::sort(cc.begin(), cc.end());
        for (int v : rc) fp.push_back(v);
        for (int v : cc) fp.push_back(v);
    }
    for (const unary_table* t : unaries) {
        const unary_table& u = *t;
        fp.push_back(u[a] == a ? 1 : 0);
        // steps until the forward orbit of a repeats
        std::vector<int> when(n, -1);
        elem x = a;
        int step = 0;
        while (when[x] < 0) {
            when[x] = step++;
            x = u[x];
        }
        fp.push_back(step);
        fp.push_back(step - when[x]);  // eventual cycle length
    }
    return fp;
}

struct iso_searcher {
    int n;
    const std::vector<const binary_table*>& ba;
    const std::vector<const binary_table*>& bb;
    const std::vector<const unary_table*>& ua;
    const std::vector<const unary_table*>& ub;
    std::vector<std::vector<elem>> candidates;  // per element of A
    perm fwd;
    perm bwd;

    bool assign(elem a, elem b, std::vector<std::pair<elem, elem>>& trail) {
        if (fwd[a] >= 0) return fwd[a] == b;
        if (bwd[b] >= 0) return false;
        fwd[a] = b;
        bwd[b] = a;
        trail.emplace_back(a, b);
        // propagate images of already-determined products
        for (size_t t = 0; t < ba.size(); ++t) {
            const binary_table& A = *ba[t];
            const binary_table& B = *bb[t];
            for (elem x = 0; x < n; ++x) {
                if (fwd[x] < 0) continue;
                if (!assign(A[a][x], B[b][fwd[x]], trail)) return false;
                if (!assign(A[x][a], B[fwd[x]][b], trail)) return false;
            }
        }
        for (size_t t = 0; t < ua.size(); ++t)
            if (!assign((*ua[t])[a], (*ub[t])[b], trail)) return false;
        return true;
    }

    void undo(std::vector<std::pair<elem, elem>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [a, b] = trail.back();
            trail.pop_back();
            fwd[a] = -1;
            bwd[b] = -1;
        }
    }

    bool search(std::vector<std::pair<elem, elem>>& trail) {
        elem pick = -1;
        size_t best = SIZE_MAX;
        for (elem a = 0; a < n; ++a) {
            if (fwd[a] >= 0) continue;
            size_t live = 0;
            for (elem b : candidates[a])
                if (bwd[b] < 0) ++live;
            if (live < best) {
                best = live;
                pick = a;
            }
        }
        if (pick < 0) return true;  // everything assigned
        for (elem b : candidates[pick]) {
            if (bwd[b] >= 0) continue;
            size_t mark = trail.size();
            if (assign(pick, b, trail) && search(trail)) return true;
            undo(trail, mark);
        }
        return false;
    }
};

}  // namespace

std::optional<perm> find_table_isomorphism(
    int n,
    const std::vector<const binary_table*>& binaries_a,
    const std::vector<const binary_table*>& binaries_b,
    const std::vector<const unary_table*>& unaries_a,
    const std::vector<const unary_table*>& unaries_b) {
    std::vector<std::vector<long long>> fa(n), fb(n);
    for (elem a = 0; a < n; ++a) {
        fa[a] = element_fingerprint(n, a, binaries_a, unaries_a);
        fb[a] = element_fingerprint(n, a, binaries_b, unaries_b);
    }
    {
        auto sa = fa, sb = fb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    iso_searcher s{n, binaries_a, binaries_b, unaries_a, unaries_b, {}, {}, {}};
    s.candidates.resize(n);
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            if (fa[a] == fb[b]) s.candidates[a].push_back(b);
    s.fwd.assign(n, -1);
    s.bwd.assign(n, -1);
    std::vector<std::pair<elem, elem>> trail;
    if (s.search(trail)) return s.fwd;
    return std::nullopt;
}

std::optional<perm> find_isomorphism(const qualgebra& a, const qualgebra& b) {
    if (a.size() != b.size()) throw kind_mismatch("qualgebras have different sizes");
    return find_table_isomorphism(a.size(), {&a.base_quandle().lhd_table(), &a.diamond_table()},
                                  {&b.base_quandle().lhd_table(), &b.diamond_table()}, {}, {});
}

std::optional<perm> find_isomorphism(const squandle& a, const squandle& b) {
    if (a.size() != b.size()) throw kind_mismatch("squandles have different sizes");
    return find_table_isomorphism(a.size(), {&a.base_quandle().lhd_table()},
                                  {&b.base_quandle().lhd_table()}, {&a.square_table()},
                                  {&b.square_table()});
}

std::optional<perm> find_isomorphism(const quandle& a, const quandle& b) {
    if (a.size() != b.size()) throw kind_mismatch("quandles have different sizes");
    return find_table_isomorphism(a.size(), {&a.lhd_table()}, {&b.lhd_table()}, {}, {});
}

binary_table trivial_lhd(int n) {
    binary_table t(n, std::vector<elem>(n));
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b) t[a][b] = a;
    return t;
}

quandle trivial_quandle(int n) { return quandle(carrier(n), trivial_lhd(n)); }

binary_table dihedral_lhd(int n) {
    binary_table t(n, std::vector<elem>(n));
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
    return t;
}

namespace {

std::string perm_cycle_name(const perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<elem>(i)) {
            seen[i] = true;
            continue;
        }
        out += "(";
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "Id" : out;
}

}  // namespace

group_table symmetric_group(int n) {
    std::vector<perm> elems;
    perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int m = static_cast<int>(elems.size());
    std::map<perm, int> index;
    for (int i = 0; i < m; ++i) index[elems[i]] = i;

    std::vector<std::string> names;
    for (const perm& q : elems) names.push_back(perm_cycle_name(q));
    binary_table mul(m, std::vector<elem>(m));
    unary_table inv(m);
    for (int i = 0; i < m; ++i) {
        inv[i] = index[inverse(elems[i])];
        for (int j = 0; j < m; ++j) mul[i][j] = index[compose(elems[i], elems[j])];
    }
    perm id(n);
    std::iota(id.begin(), id.end(), 0);
    int unit = index[id];
    return group_table(carrier(m, std::move(names)), std::move(mul), unit, std::move(inv));
}

group_table cyclic_group(int n) {
    binary_table mul(n, std::vector<elem>(n));
    unary_table inv(n);
    for (elem a = 0; a < n; ++a) {
        inv[a] = (n - a) % n;
        for (elem b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    }
    return group_table(carrier(n), std::move(mul), 0, std::move(inv));
}

}  // namespace qlab
