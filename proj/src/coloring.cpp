#include "qualgebra/coloring.hpp"

#include <algorithm>
#include <climits>

namespace qlab {

std::string to_string(color_mode m) {
    switch (m) {
        case color_mode::qualgebra: return "qualgebra";
        case color_mode::isosceles: return "isosceles";
        case color_mode::squandle: return "squandle";
    }
    return "?";
}

color_mode color_mode_from_string(const std::string& s) {
    if (s == "qualgebra") return color_mode::qualgebra;
    if (s == "isosceles") return color_mode::isosceles;
    if (s == "squandle") return color_mode::squandle;
    throw bad_input("unknown coloring mode '" + s + "'");
}

namespace {

struct structure_view {
    const quandle* qu = nullptr;
    const binary_table* dia = nullptr;
    const unary_table* sq = nullptr;
    color_mode mode = color_mode::qualgebra;
    int n() const { return qu->size(); }
};

struct compiled_crossing {
    int under_in, over, under_out, sign;
};
struct compiled_vertex {
    bool is_zip;
    int solo, pair_left, pair_right;
};

struct engine {
    structure_view v;
    std::vector<std::string> ids;  // real arcs (sorted) then free-loop pseudo arcs
    std::map<std::string, int> index;
    std::vector<compiled_crossing> xs;
    std::vector<compiled_vertex> vs;

    engine(const structure_view& view, const diagram& d) : v(view) {
        if (!d.vertices.empty()) {
            if ((v.mode == color_mode::squandle) != (v.sq != nullptr) ||
                (v.mode != color_mode::squandle && v.dia == nullptr))
                throw mode_mismatch("structure kind does not support this coloring mode");
        }
        ids = d.arcs;
        std::sort(ids.begin(), ids.end());
        for (int i = 0; i < d.free_loops; ++i) ids.push_back("loop" + std::to_string(i));
        for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        for (const auto& k : d.crossings)
            xs.push_back({index.at(k.under_in), index.at(k.over), index.at(k.under_out),
                          k.sign});
        for (const auto& w : d.vertices)
            vs.push_back({w.kind == vertex_kind::zip, index.at(w.solo),
                          index.at(w.pair_left), index.at(w.pair_right)});
    }

    // -1 means unassigned; returns false on contradiction
    static bool set(std::vector<elem>& col, int i, elem val, bool& changed) {
        if (col[i] < 0) {
            col[i] = val;
            changed = true;
            return true;
        }
        return col[i] == val;
    }

    bool propagate(std::vector<elem>& col) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& k : xs) {
                if (col[k.over] < 0) continue;
                if (col[k.under_in] >= 0) {
                    if (!set(col, k.under_out,
                             v.qu->apply(col[k.under_in], k.sign, col[k.over]), changed))
                        return false;
                } else if (col[k.under_out] >= 0) {
                    if (!set(col, k.under_in,
                             v.qu->apply(col[k.under_out], -k.sign, col[k.over]), changed))
                        return false;
                }
            }
            for (const auto& w : vs) {
                if (v.mode != color_mode::qualgebra) {
                    // co-oriented arcs share a color
                    if (col[w.pair_left] >= 0) {
                        if (!set(col, w.pair_right, col[w.pair_left], changed)) return false;
                    } else if (col[w.pair_right] >= 0) {
                        if (!set(col, w.pair_left, col[w.pair_right], changed)) return false;
                    }
                }
                if (col[w.pair_left] >= 0 && col[w.pair_right] >= 0) {
                    elem out = v.mode == color_mode::squandle
                                   ? (*v.sq)[col[w.pair_left]]
                                   : (*v.dia)[col[w.pair_left]][col[w.pair_right]];
                    if (!set(col, w.solo, out, changed)) return false;
                }
            }
        }
        return true;
    }

    // branch on an arc from the constraint with the fewest unknown slots so
    // that propagation fires as early as possible; scan order keeps the
    // choice deterministic
    int pick_branch_arc(const std::vector<elem>& col) const {
        int pick = -1, best = INT_MAX;
        auto consider = [&](std::initializer_list<int> slots) {
            int unknown = 0, first = -1;
            for (int s : slots)
                if (col[s] < 0) {
                    ++unknown;
                    if (first < 0 || s < first) first = s;
                }
            if (unknown > 0 && unknown < best) {
                best = unknown;
                pick = first;
            }
        };
        for (const auto& k : xs) consider({k.under_in, k.over, k.under_out});
        for (const auto& w : vs) consider({w.solo, w.pair_left, w.pair_right});
        if (pick >= 0) return pick;
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i] < 0) return static_cast<int>(i);
        return -1;
    }

    void dfs(std::vector<elem> col, std::vector<std::vector<elem>>& out) const {
        if (!propagate(col)) return;
        int free = pick_branch_arc(col);
        if (free < 0) {
            out.push_back(std::move(col));
            return;
        }
        for (elem c = 0; c < v.n(); ++c) {
            std::vector<elem> next = col;
            next[free] = c;
            dfs(std::move(next), out);
        }
    }

    std::vector<std::vector<elem>> solve(const boundary_fix& fix, const diagram& d) const {
        std::vector<elem> col(ids.size(), -1);
        for (const auto& [arc, value] : fix) {
            bool is_boundary = false;
            if (d.boundary) {
                const auto& b = *d.boundary;
                is_boundary =
                    std::find(b.inputs.begin(), b.inputs.end(), arc) != b.inputs.end() ||
                    std::find(b.outputs.begin(), b.outputs.end(), arc) != b.outputs.end();
            }
            if (!is_boundary)
                throw bad_input("boundary_fix key '" + arc + "' is not a boundary arc");
            if (value < 0 || value >= v.n()) throw bad_input("boundary_fix color out of range");
            col[index.at(arc)] = value;
        }
        std::vector<std::vector<elem>> out;
        dfs(std::move(col), out);
        std::sort(out.begin(), out.end());
        return out;
    }
};

std::vector<coloring> package(const engine& e, const std::vector<std::vector<elem>>& raw,
                              color_mode mode) {
    std::vector<coloring> out;
    out.reserve(raw.size());
    for (const auto& col : raw) {
        coloring c;
        c.mode = mode;
        for (size_t i = 0; i < e.ids.size(); ++i) c.assignment[e.ids[i]] = col[i];
        out.push_back(std::move(c));
    }
    return out;
}

structure_view make_view(const qualgebra& s, color_mode mode) {
    if (mode == color_mode::squandle)
        throw mode_mismatch("squandle mode needs a squandle structure");
    return {&s.base_quandle(), &s.diamond_table(), nullptr, mode};
}
structure_view make_view(const squandle& s) {
    return {&s.base_quandle(), nullptr, &s.square_table(), color_mode::squandle};
}

}  // namespace

std::vector<coloring> enumerate_colorings(const qualgebra& s, const diagram& d,
                                          color_mode mode, const boundary_fix& fix) {
    engine e(make_view(s, mode), d);
    return package(e, e.solve(fix, d), mode);
}

std::vector<coloring> enumerate_colorings(const squandle& s, const diagram& d,
                                          const boundary_fix& fix) {
    engine e(make_view(s), d);
    return package(e, e.solve(fix, d), color_mode::squandle);
}

std::vector<coloring> enumerate_colorings(const quandle& s, const diagram& d,
                                          const boundary_fix& fix) {
    if (!d.vertices.empty())
        throw mode_mismatch("a bare quandle colors only vertex-free diagrams");
    structure_view v{&s, nullptr, nullptr, color_mode::qualgebra};
    engine e(v, d);
    return package(e, e.solve(fix, d), color_mode::qualgebra);
}

long long count_colorings(const qualgebra& s, const diagram& d, color_mode mode) {
    engine e(make_view(s, mode), d);
    return static_cast<long long>(e.solve({}, d).size());
}
long long count_colorings(const squandle& s, const diagram& d) {
    engine e(make_view(s), d);
    return static_cast<long long>(e.solve({}, d).size());
}
long long count_colorings(const quandle& s, const diagram& d) {
    return static_cast<long long>(enumerate_colorings(s, d).size());
}
long long count_isosceles(const qualgebra& s, const diagram& d) {
    return count_colorings(s, d, color_mode::isosceles);
}

namespace {

// Independent reference checker: verifies one total assignment directly
// against the local rules, without any propagation machinery.
bool assignment_ok(const structure_view& v, const diagram& d,
                   const std::map<std::string, elem>& col) {
    for (const auto& k : d.crossings) {
        elem ui = col.at(k.under_in), ov = col.at(k.over), uo = col.at(k.under_out);
        elem expect = k.sign > 0 ? v.qu->lhd(ui, ov) : v.qu->lhd_inv(ui, ov);
        if (uo != expect) return false;
    }
    for (const auto& w : d.vertices) {
        elem pl = col.at(w.pair_left), pr = col.at(w.pair_right), so = col.at(w.solo);
        switch (v.mode) {
            case color_mode::qualgebra:
                if (so != (*v.dia)[pl][pr]) return false;
                break;
            case color_mode::isosceles:
                if (pl != pr || so != (*v.dia)[pl][pr]) return false;
                break;
            case color_mode::squandle:
                if (pl != pr || so != (*v.sq)[pl]) return false;
                break;
        }
    }
    return true;
}

long long brute_force_impl(const structure_view& v, const diagram& d) {
    const int n = v.n();
    std::vector<std::string> arcs = d.arcs;
    std::sort(arcs.begin(), arcs.end());
    long long loops = 1;
    for (int i = 0; i < d.free_loops; ++i) loops *= n;
    if (arcs.empty()) return loops;
    long long count = 0;
    std::map<std::string, elem> col;
    std::vector<elem> state(arcs.size(), 0);
    while (true) {
        for (size_t i = 0; i < arcs.size(); ++i) col[arcs[i]] = state[i];
        if (assignment_ok(v, d, col)) ++count;
        size_t i = 0;
        while (i < state.size() && ++state[i] == n) state[i++] = 0;
        if (i == state.size()) break;
    }
    return count * loops;
}

}  // namespace

long long brute_force_count(const qualgebra& s, const diagram& d, color_mode mode) {
    return brute_force_impl(make_view(s, mode), d);
}
long long brute_force_count(const squandle& s, const diagram& d) {
    return brute_force_impl(make_view(s), d);
}

namespace {

std::map<std::vector<elem>, long long> profile_impl(const structure_view& v,
                                                    const diagram& d) {
    if (!d.boundary) throw bad_input("diagram has no boundary");
    engine e(v, d);
    auto raw = e.solve({}, d);
    std::map<std::vector<elem>, long long> prof;
    for (const auto& col : raw) {
        std::vector<elem> key;
        for (const auto& a : d.boundary->inputs) key.push_back(col[e.index.at(a)]);
        for (const auto& a : d.boundary->outputs) key.push_back(col[e.index.at(a)]);
        ++prof[key];
    }
    return prof;
}

topo_verdict compare_profiles(const std::map<std::vector<elem>, long long>& lhs,
                              const std::map<std::vector<elem>, long long>& rhs) {
    topo_verdict verdict;
    auto it = lhs.begin();
    auto jt = rhs.begin();
    while (it != lhs.end() || jt != rhs.end()) {
        if (jt == rhs.end() || (it != lhs.end() && it->first < jt->first)) {
            verdict.ok = false;
            verdict.witness = it->first;
            verdict.detail = "boundary coloring extends the lhs only";
            return verdict;
        }
        if (it == lhs.end() || jt->first < it->first) {
            verdict.ok = false;
            verdict.witness = jt->first;
            verdict.detail = "boundary coloring extends the rhs only";
            return verdict;
        }
        if (it->second != jt->second) {
            verdict.ok = false;
            verdict.witness = it->first;
            verdict.detail = "extension counts differ (" + std::to_string(it->second) +
                             " vs " + std::to_string(jt->second) + ")";
            return verdict;
        }
        ++it;
        ++jt;
    }
    return verdict;
}

}  // namespace

std::map<std::vector<elem>, long long> boundary_profile(const qualgebra& s,
                                                        const diagram& d,
                                                        color_mode mode) {
    return profile_impl(make_view(s, mode), d);
}
std::map<std::vector<elem>, long long> boundary_profile(const squandle& s,
                                                        const diagram& d) {
    return profile_impl(make_view(s), d);
}

topo_verdict check_topological(const qualgebra& s, const move_pair& mp, color_mode mode) {
    return compare_profiles(boundary_profile(s, mp.lhs, mode),
                            boundary_profile(s, mp.rhs, mode));
}

topo_verdict check_topological(const squandle& s, const move_pair& mp) {
    return compare_profiles(boundary_profile(s, mp.lhs), boundary_profile(s, mp.rhs));
}

}  // namespace qlab
