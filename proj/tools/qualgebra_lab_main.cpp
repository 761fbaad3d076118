#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qualgebra/freeqa.hpp"
#include "qualgebra/json_io.hpp"

using namespace qlab;

namespace {

// "builtin:NAME" or a path to a JSON file
json load_json_source(const std::string& spec, bool structure) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string name = spec.substr(8);
        if (structure) return to_json(builtin_structure(name));
        return to_json(builtin_diagram(name));
    }
    std::ifstream in(spec);
    if (!in) throw bad_input("cannot open '" + spec + "'");
    json j;
    in >> j;
    return j;
}

any_structure load_structure(const std::string& spec) {
    return structure_from_json(load_json_source(spec, true));
}

diagram load_diagram(const std::string& spec) {
    diagram d = diagram_from_json(load_json_source(spec, false));
    ensure_valid(d);
    return d;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
}

double budget_from_env(double fallback) {
    if (const char* env = std::getenv("QUALGEBRA_LAB_BUDGET")) return std::atof(env);
    return fallback;
}

coeff_ring parse_coeff(const std::string& s) {
    if (s == "z" || s == "Z") return {};
    if (s.size() > 1 && (s[0] == 'z' || s[0] == 'Z')) {
        unsigned long m = std::strtoul(s.c_str() + 1, nullptr, 10);
        if (m >= 2) return {m};
    }
    throw bad_input("coefficient ring must be z or zN with N >= 2");
}

int run(int argc, char** argv) {
    CLI::App app{"qualgebras and squandles over finite carriers: classification, "
                 "graph-diagram colorings, cocycle invariants, cohomology"};
    app.require_subcommand(0, 1);
    bool list_builtins = false;
    unsigned long long seed = 0;
    app.add_flag("--list-builtins", list_builtins, "list builtin structures and diagrams");
    app.add_option("--seed", seed, "seed for randomized runs (reserved, for reproducibility)");

    // classify
    auto* cls = app.add_subcommand("classify", "enumerate structures up to isomorphism");
    std::string cls_kind = "qualgebra";
    int cls_size = 4;
    bool cls_nontrivial = false;
    double cls_budget = 60.0;
    std::string cls_out;
    cls->add_option("--kind", cls_kind, "qualgebra|squandle")->check(CLI::IsMember({"qualgebra", "squandle"}));
    cls->add_option("--size", cls_size, "carrier size")->required();
    cls->add_flag("--nontrivial", cls_nontrivial, "skip trivial structures");
    cls->add_option("--budget-seconds", cls_budget, "runtime budget (default 60)");
    cls->add_option("--json", cls_out, "write the result to this file");

    // color
    auto* col = app.add_subcommand("color", "count or list colorings of a diagram");
    std::string col_structure, col_diagram, col_mode = "qualgebra";
    bool col_list = false;
    col->add_option("--structure", col_structure, "structure JSON file or builtin:NAME")->required();
    col->add_option("--diagram", col_diagram, "diagram JSON file or builtin:NAME")->required();
    col->add_option("--mode", col_mode, "qualgebra|isosceles|squandle")
        ->check(CLI::IsMember({"qualgebra", "isosceles", "squandle"}));
    col->add_flag("--list", col_list, "list the colorings, not just the count");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "second cohomology of a structure");
    std::string coh_structure, coh_coeff = "z";
    bool coh_reps = false;
    coh->add_option("--structure", coh_structure, "structure JSON file or builtin:NAME")->required();
    coh->add_option("--coeff", coh_coeff, "z | zN (e.g. z2)");
    coh->add_flag("--representatives", coh_reps, "include representative cocycles");

    // invariant
    auto* inv = app.add_subcommand("invariant", "cocycle weight multiset of a diagram");
    std::string inv_structure, inv_diagram, inv_cocycle;
    bool inv_poly = false;
    inv->add_option("--structure", inv_structure, "structure JSON file or builtin:NAME")->required();
    inv->add_option("--diagram", inv_diagram, "diagram JSON file or builtin:NAME")->required();
    inv->add_option("--cocycle", inv_cocycle, "cocycle JSON file")->required();
    inv->add_flag("--polynomial", inv_poly, "print the polynomial form only");

    // freeqa
    auto* fqa = app.add_subcommand("freeqa", "free associative qualgebra calculus");
    auto* fqa_check = fqa->add_subcommand("check-relation",
                                          "test the group-qualgebra relation that fails "
                                          "in the free associative qualgebra");
    int fqa_depth = 6;
    fqa_check->add_option("--depth", fqa_depth, "search depth (default 6)");
    auto* fqa_reduce = fqa->add_subcommand("reduce", "reduce a term to normal form");
    std::string fqa_term;
    fqa_reduce->add_option("--term", fqa_term, "term like a<+b<-c")->required();
    auto* fqa_group = fqa->add_subcommand("to-group", "free group image of a product");
    std::string fqa_product;
    fqa_group->add_option("--product", fqa_product, "product like b<+a*a<+b")->required();
    auto* fqa_equiv = fqa->add_subcommand("equivalent", "bounded shift equivalence");
    std::string fqa_lhs, fqa_rhs;
    int fqa_eq_depth = 6;
    fqa_equiv->add_option("--lhs", fqa_lhs)->required();
    fqa_equiv->add_option("--rhs", fqa_rhs)->required();
    fqa_equiv->add_option("--depth", fqa_eq_depth);

    // diagram
    auto* dia = app.add_subcommand("diagram", "diagram utilities");
    auto* dia_validate = dia->add_subcommand("validate", "slot-accounting report");
    std::string dia_file;
    dia_validate->add_option("file", dia_file, "diagram JSON file")->required();
    auto* dia_builtin = dia->add_subcommand("builtin", "print a builtin diagram");
    std::string dia_name;
    bool dia_json = false;
    dia_builtin->add_option("name", dia_name, "unknot|trefoil|theta_st|theta_kt|cuff_st|cuff_hopf")
        ->required();
    dia_builtin->add_flag("--json", dia_json, "JSON output (default)");

    CLI11_PARSE(app, argc, argv);

    if (list_builtins) {
        json out;
        out["structures"] = json::array();
        for (const auto& name : builtin_structure_names())
            out["structures"].push_back(
                {{"name", name}, {"kind", kind_of(builtin_structure(name))}});
        out["diagrams"] = builtin_diagram_names();
        out["moves"] = all_move_ids();
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (cls->parsed()) {
        double budget = budget_from_env(cls_budget);
        classification_result res = cls_kind == "qualgebra"
                                        ? enumerate_qualgebras(cls_size, cls_nontrivial, budget)
                                        : enumerate_squandles(cls_size, cls_nontrivial, budget);
        emit(to_json(res), cls_out);
        return 0;
    }

    if (col->parsed()) {
        any_structure s = load_structure(col_structure);
        diagram d = load_diagram(col_diagram);
        color_mode mode = color_mode_from_string(col_mode);
        std::vector<coloring> cols;
        if (std::holds_alternative<qualgebra>(s)) {
            cols = enumerate_colorings(std::get<qualgebra>(s), d, mode);
        } else if (std::holds_alternative<squandle>(s)) {
            if (mode != color_mode::squandle)
                throw mode_mismatch("a squandle structure colors in squandle mode only");
            cols = enumerate_colorings(std::get<squandle>(s), d);
        } else if (std::holds_alternative<quandle>(s)) {
            cols = enumerate_colorings(std::get<quandle>(s), d);
        } else {
            throw mode_mismatch(
                "group tables do not color directly; convert to a group qualgebra or "
                "squandle first");
        }
        json out;
        out["count"] = static_cast<long long>(cols.size());
        if (col_list) {
            out["colorings"] = json::array();
            for (const auto& c : cols) out["colorings"].push_back(to_json(c));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (coh->parsed()) {
        any_structure s = load_structure(coh_structure);
        coeff_ring coeff = parse_coeff(coh_coeff);
        cohomology_result r;
        if (std::holds_alternative<qualgebra>(s))
            r = second_cohomology(std::get<qualgebra>(s), coeff);
        else if (std::holds_alternative<squandle>(s))
            r = second_cohomology(std::get<squandle>(s), coeff);
        else
            throw mode_mismatch("cohomology needs a qualgebra or squandle");
        json out = to_json(r);
        out["coeff"] = coh_coeff;
        if (coh_reps) {
            out["free_representatives"] = json::array();
            for (const auto& cp : r.free_representatives)
                out["free_representatives"].push_back(to_json(cp));
            out["torsion_representatives"] = json::array();
            for (const auto& cp : r.torsion_representatives)
                out["torsion_representatives"].push_back(to_json(cp));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (inv->parsed()) {
        any_structure s = load_structure(inv_structure);
        diagram d = load_diagram(inv_diagram);
        cocycle_pair cp = cocycle_from_json(load_json_source(inv_cocycle, false));
        weight_multiset w;
        if (std::holds_alternative<qualgebra>(s))
            w = compute_weight_multiset(std::get<qualgebra>(s), cp, d);
        else if (std::holds_alternative<squandle>(s))
            w = compute_weight_multiset(std::get<squandle>(s), cp, d);
        else
            throw mode_mismatch("weights need a qualgebra or squandle");
        if (inv_poly)
            std::cout << w.polynomial() << "\n";
        else
            std::cout << to_json(w).dump(2) << "\n";
        return 0;
    }

    if (fqa->parsed()) {
        if (fqa_check->parsed()) {
            product_form lhs = parse_product("b<+a*a<+b");
            product_form rhs = parse_product("a<-b<+a*b");
            equivalence_result eq = bounded_equivalence(lhs, rhs, fqa_depth);
            tail_check_report tails = tail_invariant_check(lhs, "b", fqa_depth);
            json out;
            out["lhs"] = to_string(lhs);
            out["rhs"] = to_string(rhs);
            out["free_group_image"] = to_string(to_free_group(lhs));
            out["images_agree"] = to_free_group(lhs) == to_free_group(rhs);
            out["equivalent_at_depth"] = eq.equivalent;
            out["depth"] = fqa_depth;
            out["tail_invariant_ok"] = tails.ok;
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (fqa_reduce->parsed()) {
            std::cout << to_string(reduce_term(parse_term(fqa_term))) << "\n";
            return 0;
        }
        if (fqa_group->parsed()) {
            std::cout << to_string(to_free_group(parse_product(fqa_product))) << "\n";
            return 0;
        }
        if (fqa_equiv->parsed()) {
            equivalence_result eq = bounded_equivalence(parse_product(fqa_lhs),
                                                        parse_product(fqa_rhs), fqa_eq_depth);
            json out;
            out["equivalent"] = eq.equivalent;
            out["depth"] = fqa_eq_depth;
            if (eq.equivalent) {
                out["path"] = json::array();
                for (const auto& step : eq.path)
                    out["path"].push_back({{"position", step.position},
                                           {"direction", step.positive ? "positive" : "negative"}});
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << fqa->help() << "\n";
        return 0;
    }

    if (dia->parsed()) {
        if (dia_validate->parsed()) {
            diagram d = diagram_from_json(load_json_source(dia_file, false));
            validation_report rep = validate(d);
            json out;
            out["valid"] = rep.valid;
            out["problems"] = rep.problems;
            std::cout << out.dump(2) << "\n";
            return rep.valid ? 0 : 2;
        }
        if (dia_builtin->parsed()) {
            std::cout << to_json(builtin_diagram(dia_name)).dump(2) << "\n";
            return 0;
        }
        std::cout << dia->help() << "\n";
        return 0;
    }

    std::cout << app.help() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qlab::axiom_violation& e) {
        json err = {{"error",
                     {{"code", e.code()}, {"axiom", e.axiom()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const qlab::error& e) {
        json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
