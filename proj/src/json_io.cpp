#include "qualgebra/json_io.hpp"

#include "qualgebra/invariants.hpp"

namespace qlab {

namespace {

json bigint_to_json(const bigint& x) {
    if (x.fits_slong_p()) return static_cast<long long>(x.get_si());
    return x.get_str();
}

bigint bigint_from_json(const json& j) {
    if (j.is_number_integer()) return bigint(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return bigint(j.get<std::string>());
    throw bad_input("expected an integer or decimal string");
}

json table_to_json(const binary_table& t) { return json(t); }
json table_to_json(const unary_table& t) { return json(t); }

binary_table binary_from_json(const json& j) { return j.get<binary_table>(); }
unary_table unary_from_json(const json& j) { return j.get<unary_table>(); }

json names_json(const carrier& c) {
    json out = json::array();
    for (const auto& s : c.names) out.push_back(s);
    return out;
}

carrier carrier_from_json(const json& j) {
    int n = j.at("n").get<int>();
    if (j.contains("names") && !j["names"].is_null())
        return carrier(n, j["names"].get<std::vector<std::string>>());
    return carrier(n);
}

}  // namespace

json to_json(const any_structure& s) {
    json out;
    out["kind"] = kind_of(s);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, quandle>) {
                out["n"] = v.size();
                if (!v.base().names.empty()) out["names"] = names_json(v.base());
                out["lhd"] = table_to_json(v.lhd_table());
            } else if constexpr (std::is_same_v<T, qualgebra>) {
                out["n"] = v.size();
                if (!v.base().names.empty()) out["names"] = names_json(v.base());
                out["lhd"] = table_to_json(v.base_quandle().lhd_table());
                out["diamond"] = table_to_json(v.diamond_table());
            } else if constexpr (std::is_same_v<T, squandle>) {
                out["n"] = v.size();
                if (!v.base().names.empty()) out["names"] = names_json(v.base());
                out["lhd"] = table_to_json(v.base_quandle().lhd_table());
                out["square"] = table_to_json(v.square_table());
            } else {
                out["n"] = v.size();
                if (!v.base.names.empty()) out["names"] = names_json(v.base);
                out["mul"] = table_to_json(v.mul);
                out["unit"] = v.unit;
                out["inv"] = table_to_json(v.inv);
            }
        },
        s);
    return out;
}

any_structure structure_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    carrier c = carrier_from_json(j);
    if (kind == "quandle") return quandle(c, binary_from_json(j.at("lhd")));
    if (kind == "qualgebra")
        return qualgebra(quandle(c, binary_from_json(j.at("lhd"))),
                         binary_from_json(j.at("diamond")));
    if (kind == "squandle")
        return squandle(quandle(c, binary_from_json(j.at("lhd"))),
                        unary_from_json(j.at("square")));
    if (kind == "group")
        return group_table(c, binary_from_json(j.at("mul")), j.at("unit").get<elem>(),
                           unary_from_json(j.at("inv")));
    throw bad_input("unknown structure kind '" + kind + "'");
}

json to_json(const diagram& d) {
    json out;
    out["arcs"] = d.arcs;
    out["crossings"] = json::array();
    for (const auto& k : d.crossings)
        out["crossings"].push_back({{"sign", k.sign > 0 ? "+" : "-"},
                                    {"over", k.over},
                                    {"under_in", k.under_in},
                                    {"under_out", k.under_out}});
    out["vertices"] = json::array();
    for (const auto& v : d.vertices) {
        if (v.kind == vertex_kind::zip)
            out["vertices"].push_back({{"kind", "zip"},
                                       {"in_left", v.pair_left},
                                       {"in_right", v.pair_right},
                                       {"out", v.solo}});
        else
            out["vertices"].push_back({{"kind", "unzip"},
                                       {"in", v.solo},
                                       {"out_left", v.pair_left},
                                       {"out_right", v.pair_right}});
    }
    out["free_loops"] = d.free_loops;
    if (d.boundary)
        out["boundary"] = {{"inputs", d.boundary->inputs},
                           {"outputs", d.boundary->outputs}};
    return out;
}

diagram diagram_from_json(const json& j) {
    diagram d;
    d.arcs = j.at("arcs").get<std::vector<std::string>>();
    if (j.contains("crossings"))
        for (const auto& k : j["crossings"]) {
            std::string sign = k.at("sign").get<std::string>();
            if (sign != "+" && sign != "-") throw bad_input("crossing sign must be + or -");
            d.crossings.push_back({sign == "+" ? +1 : -1, k.at("over").get<std::string>(),
                                   k.at("under_in").get<std::string>(),
                                   k.at("under_out").get<std::string>()});
        }
    if (j.contains("vertices"))
        for (const auto& v : j["vertices"]) {
            std::string kind = v.at("kind").get<std::string>();
            if (kind == "zip")
                d.vertices.push_back({vertex_kind::zip, v.at("out").get<std::string>(),
                                      v.at("in_left").get<std::string>(),
                                      v.at("in_right").get<std::string>()});
            else if (kind == "unzip")
                d.vertices.push_back({vertex_kind::unzip, v.at("in").get<std::string>(),
                                      v.at("out_left").get<std::string>(),
                                      v.at("out_right").get<std::string>()});
            else
                throw bad_input("vertex kind must be zip or unzip");
        }
    if (j.contains("free_loops")) d.free_loops = j["free_loops"].get<int>();
    if (j.contains("boundary") && !j["boundary"].is_null())
        d.boundary = boundary_spec{
            j["boundary"].at("inputs").get<std::vector<std::string>>(),
            j["boundary"].at("outputs").get<std::vector<std::string>>()};
    return d;
}

json to_json(const cocycle_pair& cp) {
    json out;
    out["kind"] = cp.kind == cocycle_kind::qualgebra ? "qualgebra" : "squandle";
    out["n"] = cp.n;
    json chi = json::array();
    for (const auto& row : cp.chi) {
        json r = json::array();
        for (const auto& x : row) r.push_back(bigint_to_json(x));
        chi.push_back(r);
    }
    out["chi"] = chi;
    if (cp.kind == cocycle_kind::qualgebra) {
        json lam = json::array();
        for (const auto& row : cp.lambda_sq) {
            json r = json::array();
            for (const auto& x : row) r.push_back(bigint_to_json(x));
            lam.push_back(r);
        }
        out["lambda"] = lam;
    } else {
        json lam = json::array();
        for (const auto& x : cp.lambda_lin) lam.push_back(bigint_to_json(x));
        out["lambda"] = lam;
    }
    return out;
}

cocycle_pair cocycle_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "qualgebra" && kind != "squandle")
        throw bad_input("cocycle kind must be qualgebra or squandle");
    int n = j.at("n").get<int>();
    cocycle_pair cp = cocycle_pair::zero(
        kind == "qualgebra" ? cocycle_kind::qualgebra : cocycle_kind::squandle, n);
    const json& chi = j.at("chi");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) cp.chi[a][b] = bigint_from_json(chi.at(a).at(b));
    const json& lam = j.at("lambda");
    if (cp.kind == cocycle_kind::qualgebra) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) cp.lambda_sq[a][b] = bigint_from_json(lam.at(a).at(b));
    } else {
        for (int a = 0; a < n; ++a) cp.lambda_lin[a] = bigint_from_json(lam.at(a));
    }
    return cp;
}

json to_json(const coloring& c) {
    json out;
    out["mode"] = to_string(c.mode);
    json a = json::object();
    for (const auto& [arc, v] : c.assignment) a[arc] = v;
    out["assignment"] = a;
    return out;
}

json to_json(const abelian_group_presentation& g) {
    json t = json::array();
    for (const auto& d : g.torsion) t.push_back(bigint_to_json(d));
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"pretty", to_string(g)}};
}

json to_json(const cohomology_result& r) {
    json out;
    out["z2_rank"] = r.z2_rank;
    out["b2_rank"] = r.b2_rank;
    out["h2"] = to_json(r.h2);
    return out;
}

json to_json(const property_report_t& r, const carrier& base) {
    json out;
    out["commutative"] = r.commutative;
    out["cancellative"] = r.cancellative;
    out["unital"] = r.unital;
    out["associative"] = r.associative;
    out["unital_associative"] = r.unital_associative;
    if (r.unit)
        out["unit"] = base.name_of(*r.unit);
    else
        out["unit"] = nullptr;
    return out;
}

json to_json(const classification_result& r) {
    json out;
    out["size"] = r.size;
    out["kind"] = r.kind;
    out["trivial_count"] = r.trivial_count;
    out["nontrivial_count"] = r.nontrivial_count;
    json reps = json::array();
    for (const auto& s : r.qualgebras) {
        json entry = to_json(any_structure(s));
        entry["properties"] = to_json(property_report(s), s.base());
        reps.push_back(entry);
    }
    for (const auto& s : r.squandles) reps.push_back(to_json(any_structure(s)));
    out["representatives"] = reps;
    return out;
}

json to_json(const weight_multiset& w) {
    json counts = json::object();
    for (const auto& [value, mult] : w.counts) counts[value.get_str()] = mult;
    return {{"counts", counts}, {"total", w.total()}, {"polynomial", w.polynomial()}};
}

}  // namespace qlab
