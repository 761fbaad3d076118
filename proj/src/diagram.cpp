#include "qualgebra/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qlab {

bool diagram::has_arc(const std::string& id) const {
    return std::find(arcs.begin(), arcs.end(), id) != arcs.end();
}

namespace {

struct slot_count {
    int sources = 0;
    int sinks = 0;
};

std::map<std::string, slot_count> slot_counts(const diagram& d) {
    std::map<std::string, slot_count> m;
    for (const auto& a : d.arcs) m[a];
    auto src = [&](const std::string& a) { ++m[a].sources; };
    auto snk = [&](const std::string& a) { ++m[a].sinks; };
    for (const auto& k : d.crossings) {
        src(k.under_out);
        snk(k.under_in);
    }
    for (const auto& v : d.vertices) {
        if (v.kind == vertex_kind::zip) {
            snk(v.pair_left);
            snk(v.pair_right);
            src(v.solo);
        } else {
            snk(v.solo);
            src(v.pair_left);
            src(v.pair_right);
        }
    }
    if (d.boundary) {
        for (const auto& a : d.boundary->inputs) src(a);
        for (const auto& a : d.boundary->outputs) snk(a);
    }
    return m;
}

}  // namespace

validation_report validate(const diagram& d) {
    validation_report rep;
    auto problem = [&](const std::string& code, const std::string& detail) {
        rep.valid = false;
        rep.problems.push_back(code + ": " + detail);
    };

    std::set<std::string> known(d.arcs.begin(), d.arcs.end());
    if (known.size() != d.arcs.size()) problem("DuplicateArc", "arc listed twice");
    auto check_ref = [&](const std::string& a, const std::string& where) {
        if (!known.count(a)) problem("UnknownArc", "'" + a + "' referenced by " + where);
    };
    for (const auto& k : d.crossings) {
        check_ref(k.over, "crossing over");
        check_ref(k.under_in, "crossing under_in");
        check_ref(k.under_out, "crossing under_out");
        if (k.sign != 1 && k.sign != -1) problem("BadSign", "crossing sign must be +-1");
    }
    for (const auto& v : d.vertices) {
        check_ref(v.solo, "vertex");
        check_ref(v.pair_left, "vertex");
        check_ref(v.pair_right, "vertex");
    }
    if (d.boundary) {
        for (const auto& a : d.boundary->inputs) check_ref(a, "boundary input");
        for (const auto& a : d.boundary->outputs) check_ref(a, "boundary output");
    }
    if (d.free_loops < 0) problem("BadFreeLoops", "free_loops negative");
    if (!rep.valid) return rep;

    for (const auto& [arc, c] : slot_counts(d)) {
        if (c.sources > 1) problem("DoubleSource", "arc '" + arc + "' has " +
                                                       std::to_string(c.sources) + " sources");
        if (c.sinks > 1)
            problem("DoubleSink",
                    "arc '" + arc + "' has " + std::to_string(c.sinks) + " sinks");
        if (c.sources == 0)
            problem("DanglingArc", "arc '" + arc + "' has no source slot");
        if (c.sinks == 0) problem("DanglingArc", "arc '" + arc + "' has no sink slot");
    }
    return rep;
}

void ensure_valid(const diagram& d) {
    validation_report rep = validate(d);
    if (!rep.valid) {
        auto colon = rep.problems.front().find(':');
        throw error(rep.problems.front().substr(0, colon), rep.problems.front());
    }
}

std::vector<std::pair<int, int>> well_orient(const abstract_graph& g) {
    std::vector<int> valency(g.vertex_count, 0);
    for (auto [a, b] : g.edges) {
        if (a < 0 || a >= g.vertex_count || b < 0 || b >= g.vertex_count)
            throw bad_input("edge endpoint out of range");
        valency[a] += 1;
        valency[b] += 1;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (valency[v] != 3)
            throw non_trivalent("vertex " + std::to_string(v) + " has valency " +
                                std::to_string(valency[v]));

    const int m = static_cast<int>(g.edges.size());
    std::vector<bool> used(m, false);
    std::vector<std::pair<int, int>> oriented(m);
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (int e = 0; e < m; ++e) {
        incident[g.edges[e].first].push_back(e);
        if (g.edges[e].second != g.edges[e].first)
            incident[g.edges[e].second].push_back(e);
    }
    auto next_unused = [&](int v) {
        for (int e : incident[v])
            if (!used[e]) return e;
        return -1;
    };

    int remaining = m;
    while (remaining > 0) {
        int start = -1;
        for (int v = 0; v < g.vertex_count && start < 0; ++v)
            if (next_unused(v) >= 0) start = v;
        // walk forward from `start` collecting a path, then extend backward
        std::vector<std::pair<int, int>> path;  // (edge, oriented source vertex)
        int cur = start;
        while (true) {
            int e = next_unused(cur);
            if (e < 0) break;
            used[e] = true;
            --remaining;
            int to = g.edges[e].first == cur ? g.edges[e].second : g.edges[e].first;
            path.emplace_back(e, cur);
            cur = to;
        }
        cur = start;
        while (true) {
            int e = next_unused(cur);
            if (e < 0) break;
            used[e] = true;
            --remaining;
            int from = g.edges[e].first == cur ? g.edges[e].second : g.edges[e].first;
            path.insert(path.begin(), {e, from});
            cur = from;
        }
        for (auto [e, src] : path) {
            int dst = g.edges[e].first == src ? g.edges[e].second : g.edges[e].first;
            oriented[e] = {src, dst};
        }
    }

    std::vector<int> indeg(g.vertex_count, 0);
    for (auto [s, t] : oriented) ++indeg[t];
    for (int v = 0; v < g.vertex_count; ++v)
        if (indeg[v] == 0 || indeg[v] == 3)
            throw error("SinkVertexPresent", "orientation produced a source or sink at vertex " +
                                                 std::to_string(v));
    return oriented;
}

namespace {

diagram make_diagram(std::vector<std::string> arcs, std::vector<crossing> crossings,
                     std::vector<vertex> vertices, int free_loops = 0,
                     std::optional<boundary_spec> boundary = std::nullopt) {
    diagram d{std::move(arcs), std::move(crossings), std::move(vertices), free_loops,
              std::move(boundary)};
    ensure_valid(d);
    return d;
}

vertex zip(std::string in_left, std::string in_right, std::string out) {
    return vertex{vertex_kind::zip, std::move(out), std::move(in_left), std::move(in_right)};
}
vertex unzip(std::string in, std::string out_left, std::string out_right) {
    return vertex{vertex_kind::unzip, std::move(in), std::move(out_left),
                  std::move(out_right)};
}

const std::vector<std::string> kDiagramNames = {"unknot",   "trefoil",  "theta_st",
                                                "theta_kt", "cuff_st",  "cuff_hopf"};

}  // namespace

const std::vector<std::string>& builtin_diagram_names() { return kDiagramNames; }

diagram builtin_diagram(const std::string& name) {
    if (name == "unknot") return make_diagram({}, {}, {}, 1);
    if (name == "trefoil")
        return make_diagram({"x", "y", "z"},
                            {{+1, "y", "x", "z"}, {+1, "z", "y", "x"}, {+1, "x", "z", "y"}},
                            {});
    if (name == "theta_st")
        return make_diagram({"e1", "e2", "e3"}, {},
                            {zip("e1", "e2", "e3"), unzip("e3", "e1", "e2")});
    if (name == "theta_kt")
        // Kinoshita-Terasaka theta: six crossings tying the two vertices
        // together so that colorings solve a = x lhd y^2 = y lhd x,
        // b = x lhdinv y = y lhdinv x^2, c = y^2 lhd x = x^2 lhdinv y.
        return make_diagram({"x1", "x2", "xx", "y1", "y2", "yy", "a", "b", "c"},
                            {{-1, "yy", "a", "x1"},
                             {+1, "x2", "y1", "a"},
                             {+1, "y2", "b", "x2"},
                             {-1, "xx", "y2", "b"},
                             {-1, "x1", "c", "yy"},
                             {-1, "y1", "xx", "c"}},
                            {zip("x1", "x2", "xx"), unzip("yy", "y1", "y2")});
    if (name == "cuff_st")
        return make_diagram({"a", "b", "c"}, {},
                            {unzip("a", "b", "a"), zip("b", "c", "c")});
    if (name == "cuff_hopf")
        return make_diagram({"a", "a2", "b", "c", "c2"},
                            {{-1, "a", "c2", "c"}, {-1, "c2", "a", "a2"}},
                            {unzip("a2", "b", "a"), zip("b", "c", "c2")});
    throw unknown_name(name);
}

namespace {

const std::vector<std::string> kMoveIds = {"R1+", "R1-", "R2",  "R3",  "R4z",
                                           "R4u", "R5z", "R5u", "R6z", "R6u"};

boundary_spec bnd(std::vector<std::string> in, std::vector<std::string> out) {
    return boundary_spec{std::move(in), std::move(out)};
}

}  // namespace

const std::vector<std::string>& all_move_ids() { return kMoveIds; }

move_pair move_fixture(const std::string& id) {
    if (id == "R1+" || id == "R1-") {
        int s = id == "R1+" ? +1 : -1;
        diagram lhs = make_diagram({"t0", "t1"}, {{s, "t1", "t0", "t1"}}, {}, 0,
                                   bnd({"t0"}, {"t1"}));
        diagram rhs = make_diagram({"t0"}, {}, {}, 0, bnd({"t0"}, {"t0"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R2") {
        diagram lhs = make_diagram({"x", "m", "x2", "y"},
                                   {{+1, "y", "x", "m"}, {-1, "y", "m", "x2"}}, {}, 0,
                                   bnd({"x", "y"}, {"x2", "y"}));
        diagram rhs = make_diagram({"x", "y"}, {}, {}, 0, bnd({"x", "y"}, {"x", "y"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R3") {
        diagram lhs = make_diagram(
            {"x", "y", "z", "p", "pp", "q"},
            {{+1, "y", "x", "p"}, {+1, "z", "p", "pp"}, {+1, "z", "y", "q"}}, {}, 0,
            bnd({"x", "y", "z"}, {"pp", "q", "z"}));
        diagram rhs = make_diagram(
            {"x", "y", "z", "q", "m", "mm"},
            {{+1, "z", "y", "q"}, {+1, "z", "x", "m"}, {+1, "q", "m", "mm"}}, {}, 0,
            bnd({"x", "y", "z"}, {"mm", "q", "z"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R4z") {
        diagram lhs = make_diagram({"a", "b", "c", "v", "d"}, {{+1, "v", "a", "d"}},
                                   {zip("b", "c", "v")}, 0, bnd({"a", "b", "c"}, {"v", "d"}));
        diagram rhs = make_diagram({"a", "b", "c", "n", "v", "d"},
                                   {{+1, "b", "a", "n"}, {+1, "c", "n", "d"}},
                                   {zip("b", "c", "v")}, 0, bnd({"a", "b", "c"}, {"v", "d"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R4u") {
        diagram lhs = make_diagram({"w", "a", "l", "m", "d"}, {{-1, "w", "a", "d"}},
                                   {unzip("w", "l", "m")}, 0, bnd({"w", "a"}, {"l", "m", "d"}));
        diagram rhs = make_diagram({"w", "a", "l", "m", "n", "d"},
                                   {{-1, "m", "a", "n"}, {-1, "l", "n", "d"}},
                                   {unzip("w", "l", "m")}, 0, bnd({"w", "a"}, {"l", "m", "d"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R5z") {
        diagram lhs = make_diagram({"a", "b", "n", "d"}, {{+1, "b", "a", "n"}},
                                   {zip("b", "n", "d")}, 0, bnd({"a", "b"}, {"d"}));
        diagram rhs =
            make_diagram({"a", "b", "d"}, {}, {zip("a", "b", "d")}, 0, bnd({"a", "b"}, {"d"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R5u") {
        diagram lhs = make_diagram({"w", "tl", "tr", "A"}, {{-1, "tr", "A", "tl"}},
                                   {unzip("w", "tr", "A")}, 0, bnd({"w"}, {"tl", "tr"}));
        diagram rhs = make_diagram({"w", "tl", "tr"}, {}, {unzip("w", "tl", "tr")}, 0,
                                   bnd({"w"}, {"tl", "tr"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R6z") {
        diagram lhs = make_diagram({"a", "b", "c", "v", "d"}, {{+1, "c", "v", "d"}},
                                   {zip("a", "b", "v")}, 0, bnd({"a", "b", "c"}, {"c", "d"}));
        diagram rhs = make_diagram({"a", "b", "c", "n1", "n2", "d"},
                                   {{+1, "c", "a", "n1"}, {+1, "c", "b", "n2"}},
                                   {zip("n1", "n2", "d")}, 0, bnd({"a", "b", "c"}, {"c", "d"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    if (id == "R6u") {
        diagram lhs = make_diagram({"e", "c", "w", "l", "m"}, {{+1, "c", "e", "w"}},
                                   {unzip("w", "l", "m")}, 0, bnd({"e", "c"}, {"l", "m", "c"}));
        diagram rhs = make_diagram({"e", "c", "n1", "n2", "l", "m"},
                                   {{+1, "c", "n1", "l"}, {+1, "c", "n2", "m"}},
                                   {unzip("e", "n1", "n2")}, 0,
                                   bnd({"e", "c"}, {"l", "m", "c"}));
        return {id, std::move(lhs), std::move(rhs)};
    }
    throw unknown_move(id);
}

// ---------------------------------------------------------------------------
// Local rewriting
// ---------------------------------------------------------------------------

namespace {

struct rewriter {
    diagram d;
    int fresh_counter = 0;

    explicit rewriter(const diagram& in) : d(in) {
        for (const auto& a : d.arcs) {
            if (a.size() > 1 && a[0] == 'm' &&
                a.find_first_not_of("0123456789", 1) == std::string::npos)
                fresh_counter = std::max(fresh_counter, std::stoi(a.substr(1)) + 1);
        }
    }

    std::string fresh() {
        std::string id;
        do {
            id = "m" + std::to_string(fresh_counter++);
        } while (d.has_arc(id));
        d.arcs.push_back(id);
        return id;
    }

    void require(bool cond, const std::string& why) {
        if (!cond) throw site_mismatch(why);
    }

    void require_arc(const std::string& a) {
        require(d.has_arc(a), "no arc named '" + a + "'");
    }

    int over_refs(const std::string& a, const std::set<int>& ignore = {}) const {
        int c = 0;
        for (size_t i = 0; i < d.crossings.size(); ++i)
            if (!ignore.count(static_cast<int>(i)) && d.crossings[i].over == a) ++c;
        return c;
    }

    void redirect_overs(const std::string& from, const std::string& to) {
        for (auto& k : d.crossings)
            if (k.over == from) k.over = to;
    }

    // Replace the unique sink slot of `from` so it consumes `to` instead.
    void retarget_sink(const std::string& from, const std::string& to) {
        for (auto& k : d.crossings)
            if (k.under_in == from) {
                k.under_in = to;
                return;
            }
        for (auto& v : d.vertices) {
            if (v.kind == vertex_kind::zip) {
                if (v.pair_left == from) {
                    v.pair_left = to;
                    return;
                }
                if (v.pair_right == from) {
                    v.pair_right = to;
                    return;
                }
            } else if (v.solo == from) {
                v.solo = to;
                return;
            }
        }
        if (d.boundary)
            for (auto& a : d.boundary->outputs)
                if (a == from) {
                    a = to;
                    return;
                }
        throw site_mismatch("arc '" + from + "' has no sink slot");
    }

    void erase_arc(const std::string& a) {
        d.arcs.erase(std::find(d.arcs.begin(), d.arcs.end(), a));
    }

    void erase_crossings(std::vector<int> idx) {
        std::sort(idx.rbegin(), idx.rend());
        for (int i : idx) d.crossings.erase(d.crossings.begin() + i);
    }

    int crossing_with_under_in(const std::string& a) const {
        for (size_t i = 0; i < d.crossings.size(); ++i)
            if (d.crossings[i].under_in == a) return static_cast<int>(i);
        return -1;
    }
    int crossing_with_under_out(const std::string& a) const {
        for (size_t i = 0; i < d.crossings.size(); ++i)
            if (d.crossings[i].under_out == a) return static_cast<int>(i);
        return -1;
    }
};

}  // namespace

diagram apply_move(const diagram& din, const std::string& move_id, move_dir dir,
                   const move_site& site) {
    rewriter rw(din);
    diagram& d = rw.d;

    auto vertex_at = [&](vertex_kind kind) -> vertex& {
        rw.require(site.vertex >= 0 && site.vertex < static_cast<int>(d.vertices.size()),
                   "vertex index out of range");
        vertex& v = d.vertices[site.vertex];
        rw.require(v.kind == kind, "vertex at site has the wrong kind");
        return v;
    };

    if (move_id == "R1+" || move_id == "R1-") {
        const int sign = move_id == "R1+" ? +1 : -1;
        if (dir == move_dir::insert) {
            if (site.on_free_loop) {
                rw.require(d.free_loops > 0, "no free loop to kink");
                --d.free_loops;
                std::string n = rw.fresh();
                d.crossings.push_back({sign, n, n, n});
            } else {
                rw.require(site.arcs.size() == 1, "R1 insertion site needs one arc");
                rw.require_arc(site.arcs[0]);
                const std::string& a = site.arcs[0];
                std::string n = rw.fresh();
                rw.retarget_sink(a, n);
                d.crossings.push_back({sign, n, a, n});
            }
        } else {
            rw.require(site.arcs.size() == 1, "R1 removal site needs one arc");
            const std::string& a = site.arcs[0];
            int ki = rw.crossing_with_under_in(a);
            rw.require(ki >= 0, "arc does not run under a crossing");
            crossing k = d.crossings[ki];
            rw.require(k.sign == sign, "kink sign does not match the move");
            rw.require(k.over == k.under_out, "crossing at site is not a kink");
            if (k.under_in == k.under_out) {  // closed kink becomes a free loop
                rw.require(rw.over_refs(a, {ki}) == 0,
                           "kink arc passes over other crossings");
                rw.erase_crossings({ki});
                rw.erase_arc(a);
                ++d.free_loops;
            } else {
                std::string b = k.under_out;
                rw.erase_crossings({ki});
                rw.redirect_overs(b, a);
                rw.retarget_sink(b, a);  // a takes over b's sink
                rw.erase_arc(b);
            }
        }
    } else if (move_id == "R2") {
        rw.require(site.arcs.size() == 2, "R2 site needs two arcs");
        const std::string x = site.arcs[0], y = site.arcs[1];
        rw.require_arc(x);
        rw.require_arc(y);
        if (dir == move_dir::insert) {
            rw.require(x != y, "R2 cannot poke an arc under itself");
            std::string m = rw.fresh();
            std::string x2 = rw.fresh();
            rw.retarget_sink(x, x2);
            d.crossings.push_back({+1, y, x, m});
            d.crossings.push_back({-1, y, m, x2});
        } else {
            int k1 = rw.crossing_with_under_in(x);
            rw.require(k1 >= 0 && d.crossings[k1].over == y,
                       "arc does not run under the over arc here");
            std::string m = d.crossings[k1].under_out;
            int k2 = rw.crossing_with_under_in(m);
            rw.require(k2 >= 0 && k2 != k1, "no second crossing of the bigon");
            rw.require(d.crossings[k2].over == y &&
                           d.crossings[k2].sign == -d.crossings[k1].sign,
                       "the two crossings do not cancel");
            rw.require(rw.over_refs(m) == 0, "bigon is not empty");
            std::string b = d.crossings[k2].under_out;
            if (b == x) {
                // closed bigon component; removing both crossings leaves a free loop
                rw.require(rw.over_refs(x, {k1, k2}) == 0,
                           "bigon arc passes over other crossings");
                rw.erase_crossings({k1, k2});
                rw.erase_arc(m);
                rw.erase_arc(x);
                ++d.free_loops;
            } else {
                rw.erase_crossings({k1, k2});
                rw.redirect_overs(b, x);
                rw.retarget_sink(b, x);
                rw.erase_arc(m);
                rw.erase_arc(b);
            }
        }
    } else if (move_id == "R5z") {
        vertex& v = vertex_at(vertex_kind::zip);
        if (dir == move_dir::insert) {
            std::string alpha = v.pair_left, beta = v.pair_right;
            std::string n = rw.fresh();
            d.vertices[site.vertex].pair_left = beta;
            d.vertices[site.vertex].pair_right = n;
            d.crossings.push_back({+1, beta, alpha, n});
        } else {
            std::string beta = v.pair_left, n = v.pair_right;
            int ki = rw.crossing_with_under_out(n);
            rw.require(ki >= 0, "right in-arc is not produced by a crossing");
            const crossing k = d.crossings[ki];
            rw.require(k.sign == +1 && k.over == beta, "crossing does not match R5z");
            rw.require(rw.over_refs(n) == 0, "in-arc passes over other crossings");
            d.vertices[site.vertex].pair_left = k.under_in;
            d.vertices[site.vertex].pair_right = beta;
            rw.erase_crossings({ki});
            rw.erase_arc(n);
        }
    } else if (move_id == "R5u") {
        vertex& v = vertex_at(vertex_kind::unzip);
        if (dir == move_dir::insert) {
            std::string l = v.pair_left, r = v.pair_right;
            std::string n = rw.fresh();
            d.vertices[site.vertex].pair_left = r;
            d.vertices[site.vertex].pair_right = n;
            d.crossings.push_back({-1, r, n, l});
        } else {
            std::string r = v.pair_left, n = v.pair_right;
            int ki = rw.crossing_with_under_in(n);
            rw.require(ki >= 0, "right out-arc does not run under a crossing");
            const crossing k = d.crossings[ki];
            rw.require(k.sign == -1 && k.over == r, "crossing does not match R5u");
            rw.require(rw.over_refs(n) == 0, "out-arc passes over other crossings");
            d.vertices[site.vertex].pair_left = k.under_out;
            d.vertices[site.vertex].pair_right = r;
            rw.erase_crossings({ki});
            rw.erase_arc(n);
        }
    } else if (move_id == "R4z" || move_id == "R4u") {
        const bool is_zip = move_id == "R4z";
        const int sign = is_zip ? +1 : -1;
        vertex& v = vertex_at(is_zip ? vertex_kind::zip : vertex_kind::unzip);
        rw.require(site.arcs.size() == 1, "R4 site needs the moving arc");
        const std::string a = site.arcs[0];
        rw.require_arc(a);
        if (dir == move_dir::insert) {
            int ki = rw.crossing_with_under_in(a);
            rw.require(ki >= 0 && d.crossings[ki].over == v.solo &&
                           d.crossings[ki].sign == sign,
                       "arc does not run under the vertex' solo arc");
            std::string out = d.crossings[ki].under_out;
            std::string n = rw.fresh();
            // zip: under b then c; unzip: under right out-arc then left
            std::string first = is_zip ? v.pair_left : v.pair_right;
            std::string second = is_zip ? v.pair_right : v.pair_left;
            d.crossings[ki] = {sign, first, a, n};
            d.crossings.push_back({sign, second, n, out});
        } else {
            int k1 = rw.crossing_with_under_in(a);
            std::string first = is_zip ? v.pair_left : v.pair_right;
            std::string second = is_zip ? v.pair_right : v.pair_left;
            rw.require(k1 >= 0 && d.crossings[k1].over == first &&
                           d.crossings[k1].sign == sign,
                       "first crossing does not match");
            std::string n = d.crossings[k1].under_out;
            int k2 = rw.crossing_with_under_in(n);
            rw.require(k2 >= 0 && d.crossings[k2].over == second &&
                           d.crossings[k2].sign == sign,
                       "second crossing does not match");
            rw.require(rw.over_refs(n) == 0, "middle arc passes over other crossings");
            std::string out = d.crossings[k2].under_out;
            rw.erase_crossings({k2});
            d.crossings[rw.crossing_with_under_in(a)] = {sign, v.solo, a, out};
            rw.erase_arc(n);
        }
    } else if (move_id == "R6z") {
        vertex& v = vertex_at(vertex_kind::zip);
        if (dir == move_dir::insert) {
            int ki = rw.crossing_with_under_in(v.solo);
            rw.require(ki >= 0 && d.crossings[ki].sign == +1,
                       "zip out-arc does not run under a positive crossing");
            rw.require(rw.over_refs(v.solo) == 0,
                       "zip out-arc passes over other crossings");
            const crossing k = d.crossings[ki];
            std::string t = k.over, dd = k.under_out, vo = v.solo;
            std::string aa = v.pair_left, bb = v.pair_right;
            std::string n1 = rw.fresh(), n2 = rw.fresh();
            d.crossings[ki] = {+1, t, aa, n1};
            d.crossings.push_back({+1, t, bb, n2});
            vertex& v2 = d.vertices[site.vertex];
            v2.pair_left = n1;
            v2.pair_right = n2;
            v2.solo = dd;
            rw.erase_arc(vo);
        } else {
            int k1 = rw.crossing_with_under_out(v.pair_left);
            int k2 = rw.crossing_with_under_out(v.pair_right);
            rw.require(k1 >= 0 && k2 >= 0 && k1 != k2, "in-arcs are not crossing outputs");
            rw.require(d.crossings[k1].sign == +1 && d.crossings[k2].sign == +1 &&
                           d.crossings[k1].over == d.crossings[k2].over,
                       "crossings do not share a positive over strand");
            rw.require(rw.over_refs(v.pair_left) == 0 && rw.over_refs(v.pair_right) == 0,
                       "in-arcs pass over other crossings");
            std::string t = d.crossings[k1].over;
            std::string aa = d.crossings[k1].under_in, bb = d.crossings[k2].under_in;
            std::string n1 = v.pair_left, n2 = v.pair_right, dd = v.solo;
            std::string vo = rw.fresh();
            rw.erase_crossings({k1, k2});
            d.crossings.push_back({+1, t, vo, dd});
            vertex& v2 = d.vertices[site.vertex];
            v2.pair_left = aa;
            v2.pair_right = bb;
            v2.solo = vo;
            rw.erase_arc(n1);
            rw.erase_arc(n2);
        }
    } else if (move_id == "R6u") {
        vertex& v = vertex_at(vertex_kind::unzip);
        if (dir == move_dir::insert) {
            int ki = rw.crossing_with_under_out(v.solo);
            rw.require(ki >= 0 && d.crossings[ki].sign == +1,
                       "unzip in-arc is not a positive crossing output");
            rw.require(rw.over_refs(v.solo) == 0,
                       "unzip in-arc passes over other crossings");
            const crossing k = d.crossings[ki];
            std::string t = k.over, e = k.under_in, w = v.solo;
            std::string l = v.pair_left, m = v.pair_right;
            std::string n1 = rw.fresh(), n2 = rw.fresh();
            d.crossings[ki] = {+1, t, n1, l};
            d.crossings.push_back({+1, t, n2, m});
            vertex& v2 = d.vertices[site.vertex];
            v2.solo = e;
            v2.pair_left = n1;
            v2.pair_right = n2;
            rw.erase_arc(w);
        } else {
            int k1 = rw.crossing_with_under_in(v.pair_left);
            int k2 = rw.crossing_with_under_in(v.pair_right);
            rw.require(k1 >= 0 && k2 >= 0 && k1 != k2, "out-arcs do not run under crossings");
            rw.require(d.crossings[k1].sign == +1 && d.crossings[k2].sign == +1 &&
                           d.crossings[k1].over == d.crossings[k2].over,
                       "crossings do not share a positive over strand");
            rw.require(rw.over_refs(v.pair_left) == 0 && rw.over_refs(v.pair_right) == 0,
                       "out-arcs pass over other crossings");
            std::string t = d.crossings[k1].over;
            std::string l = d.crossings[k1].under_out, m = d.crossings[k2].under_out;
            std::string n1 = v.pair_left, n2 = v.pair_right, e = v.solo;
            std::string w = rw.fresh();
            rw.erase_crossings({k1, k2});
            d.crossings.push_back({+1, t, e, w});
            vertex& v2 = d.vertices[site.vertex];
            v2.solo = w;
            v2.pair_left = l;
            v2.pair_right = m;
            rw.erase_arc(n1);
            rw.erase_arc(n2);
        }
    } else if (move_id == "R3") {
        throw error("UnsupportedMove",
                    "R3 is available as a move fixture only; it has no local rewriting");
    } else {
        throw unknown_move(move_id);
    }

    ensure_valid(d);
    return d;
}

std::vector<move_site> enumerate_sites(const diagram& d, const std::string& move_id,
                                       move_dir dir) {
    std::vector<move_site> out;
    auto try_site = [&](move_site s) {
        try {
            apply_move(d, move_id, dir, s);
            out.push_back(std::move(s));
        } catch (const error&) {
        }
    };

    if (move_id == "R1+" || move_id == "R1-") {
        if (dir == move_dir::insert) {
            for (const auto& a : d.arcs) try_site({{a}, -1, false});
            if (d.free_loops > 0) try_site({{}, -1, true});
        } else {
            for (const auto& k : d.crossings)
                if (k.over == k.under_out) try_site({{k.under_in}, -1, false});
        }
    } else if (move_id == "R2") {
        if (dir == move_dir::insert) {
            for (const auto& x : d.arcs)
                for (const auto& y : d.arcs)
                    if (x != y) try_site({{x, y}, -1, false});
        } else {
            for (const auto& k : d.crossings) try_site({{k.under_in, k.over}, -1, false});
        }
    } else if (move_id == "R3") {
        return out;  // fixture-only move; no local rewriting is provided
    } else {
        const bool needs_arc = move_id == "R4z" || move_id == "R4u";
        for (int vi = 0; vi < static_cast<int>(d.vertices.size()); ++vi) {
            if (needs_arc) {
                for (const auto& a : d.arcs) try_site({{a}, vi, false});
            } else {
                try_site({{}, vi, false});
            }
        }
    }
    return out;
}

}  // namespace qlab
