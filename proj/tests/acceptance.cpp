// Acceptance suite: one line per criterion, exit 0 only if every criterion
// passes. All expectations are exact; runtime bounds are enforced where
// stated.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "qualgebra/builtins.hpp"
#include "qualgebra/classify.hpp"
#include "qualgebra/freeqa.hpp"
#include "qualgebra/invariants.hpp"
#include "qualgebra/json_io.hpp"

using namespace qlab;

namespace {

struct checker {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    FAILED: " << what << "\n";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

bool report(int id, const std::string& label, checker& c, double elapsed,
            double limit = 0.0) {
    if (limit > 0.0 && elapsed > limit) {
        c.ok = false;
        c.log << "    FAILED: runtime " << elapsed << "s exceeds the " << limit
              << "s bound\n";
    }
    std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << " ("
              << elapsed << "s) - " << label << "\n";
    if (!c.ok) std::cout << c.log.str();
    return c.ok;
}

std::vector<cocycle_pair> h2_basis_reps(const cohomology_result& r) {
    std::vector<cocycle_pair> reps = r.free_representatives;
    reps.insert(reps.end(), r.torsion_representatives.begin(),
                r.torsion_representatives.end());
    return reps;
}

std::vector<cocycle_pair> kernel_basis(const cocycle_system_t& sys, cocycle_kind kind,
                                       int n) {
    int_matrix k = integer_kernel(sys.core);
    std::vector<cocycle_pair> out;
    for (int i = 0; i < k.rows(); ++i) {
        std::vector<bigint> row(k.cols());
        for (int j = 0; j < k.cols(); ++j) row[j] = k.at(i, j);
        out.push_back(unflatten(kind, n, row));
    }
    return out;
}

// criterion 1 -------------------------------------------------------------
bool criterion_classification() {
    checker c;
    auto start = std::chrono::steady_clock::now();

    classification_result q4 = enumerate_qualgebras(4, true);
    c.expect(q4.nontrivial_count == 9, "expected exactly 9 non-trivial qualgebras");
    c.expect(q4.qualgebras.size() == 9, "representative list size");
    for (size_t i = 0; i < q4.qualgebras.size(); ++i)
        for (size_t j = i + 1; j < q4.qualgebras.size(); ++j)
            c.expect(!find_isomorphism(q4.qualgebras[i], q4.qualgebras[j]),
                     "representatives must be pairwise non-isomorphic");
    int family_hits = 0;
    for (const auto& s : q4.qualgebras) {
        bool matched = false;
        for (elem qs : {0, 1, 3})
            for (elem qq : {0, 1, 3})
                if (find_isomorphism(s, p_qualgebra(qs, qq))) matched = true;
        family_hits += matched;
    }
    c.expect(family_hits == 9, "every representative matches the parametrized family");

    classification_result s4 = enumerate_squandles(4, true);
    c.expect(s4.nontrivial_count == 4, "expected exactly 4 non-trivial squandles");
    int s3_matches = 0;
    for (const auto& s : s4.squandles)
        if (find_isomorphism(s, s3_two_squandle())) ++s3_matches;
    c.expect(s3_matches == 1, "exactly one squandle is the S3 transposition squandle");

    c.expect(enumerate_qualgebras(3, true).nontrivial_count == 0,
             "no non-trivial qualgebra of size 3");
    c.expect(enumerate_squandles(3, true).nontrivial_count == 0,
             "no non-trivial squandle of size 3");

    return report(1, "size-4 classification: 9 qualgebras, 4 squandles, none at size 3",
                  c, seconds_since(start), 10.0);
}

// criterion 2 -------------------------------------------------------------
bool criterion_properties() {
    checker c;
    auto start = std::chrono::steady_clock::now();
    int commutative = 0, cancellative = 0, unital = 0, associative = 0, both = 0;
    for (elem qs : {0, 1, 3})
        for (elem qq : {0, 1, 3}) {
            property_report_t rep = property_report(p_qualgebra(qs, qq));
            commutative += rep.commutative;
            cancellative += rep.cancellative;
            unital += rep.unital;
            associative += rep.associative;
            both += rep.unital_associative;
        }
    c.expect(commutative == 9, "9 commutative");
    c.expect(cancellative == 0, "0 cancellative");
    c.expect(unital == 3, "3 unital");
    c.expect(associative == 2, "2 associative");
    c.expect(both == 0, "0 unital associative");
    return report(2, "property flags across the nine size-4 qualgebras", c,
                  seconds_since(start));
}

// criterion 3 -------------------------------------------------------------
bool criterion_coloring_counts() {
    checker c;
    auto start = std::chrono::steady_clock::now();
    qualgebra p = p_qualgebra(/*qs=q*/ 1, /*qq=s*/ 3);
    c.expect(count_colorings(p, builtin_diagram("cuff_st"), color_mode::qualgebra) == 18,
             "cuff_st with P(q<>q=s, q<>s=q) = 18");
    c.expect(count_colorings(p, builtin_diagram("cuff_hopf"), color_mode::qualgebra) == 14,
             "cuff_hopf with P(q<>q=s, q<>s=q) = 14");
    squandle s43 = s4_three_cycle_squandle();
    c.expect(count_colorings(s43, builtin_diagram("theta_st")) == 8,
             "theta_st with the S4 3-cycle squandle = 8");
    c.expect(count_colorings(s43, builtin_diagram("theta_kt")) == 32,
             "theta_kt with the S4 3-cycle squandle = 32");
    qualgebra gs4 = group_qualgebra(symmetric_group(4));
    c.expect(count_isosceles(gs4, builtin_diagram("theta_st")) == 24,
             "theta_st isosceles count over the S4 group qualgebra = 24");
    long long kt = count_isosceles(gs4, builtin_diagram("theta_kt"));
    c.expect(kt > 24, "theta_kt isosceles count over S4 exceeds 24");
    c.expect(kt == 48, "theta_kt isosceles count frozen at 48 (576-pair oracle)");
    return report(3, "coloring counts on the theta and cuff fixtures", c,
                  seconds_since(start), 30.0);
}

// criterion 4 -------------------------------------------------------------
bool criterion_cohomology() {
    checker c;
    auto start = std::chrono::steady_clock::now();
    for (elem qs : {0, 1, 3})
        for (elem qq : {0, 1, 3}) {
            cohomology_result r = second_cohomology(p_qualgebra(qs, qq));
            c.expect(r.z2_rank == 8, "Z^2 rank 8");
            c.expect(r.b2_rank == 4, "B^2 rank 4");
            c.expect(r.h2.free_rank == 4 && r.h2.torsion == std::vector<bigint>{2},
                     "H^2 = Z/2 + Z^4");
        }
    for (const char* name : {"SQ4_s3sq", "SQ4_q2-p", "SQ4_q2-q"}) {
        cohomology_result r =
            second_cohomology(std::get<squandle>(builtin_structure(name)));
        c.expect(r.z2_rank == 4 && r.b2_rank == 4,
                 std::string(name) + ": Z^2 and B^2 rank 4");
        c.expect(r.h2.free_rank == 0 && r.h2.torsion == std::vector<bigint>{2},
                 std::string(name) + ": H^2 = Z/2");
    }
    cohomology_result r = second_cohomology(std::get<squandle>(builtin_structure("SQ4_q2-s")));
    c.expect(r.z2_rank == 4 && r.b2_rank == 4, "SQ4_q2-s: Z^2 and B^2 rank 4");
    c.expect(r.h2.free_rank == 0 && r.h2.torsion == std::vector<bigint>{2, 2},
             "SQ4_q2-s: H^2 = Z/2 + Z/2");
    return report(4, "second cohomology of all thirteen size-4 structures", c,
                  seconds_since(start));
}

// criterion 5 -------------------------------------------------------------
bool criterion_boltzmann() {
    checker c;
    auto start = std::chrono::steady_clock::now();

    std::vector<move_pair> fixtures;
    for (const auto& id : all_move_ids()) fixtures.push_back(move_fixture(id));

    // topologicality of every registered builtin on all ten fixtures
    for (const auto& name : builtin_structure_names()) {
        any_structure st = builtin_structure(name);
        for (const auto& mp : fixtures) {
            if (std::holds_alternative<qualgebra>(st)) {
                const auto& s = std::get<qualgebra>(st);
                c.expect(check_topological(s, mp, color_mode::qualgebra).ok,
                         name + " fails " + mp.id + " in qualgebra mode");
                c.expect(check_topological(s, mp, color_mode::isosceles).ok,
                         name + " fails " + mp.id + " in isosceles mode");
            } else if (std::holds_alternative<squandle>(st)) {
                const auto& s = std::get<squandle>(st);
                c.expect(check_topological(s, mp).ok,
                         name + " fails " + mp.id + " in squandle mode");
            }
        }
    }

    // full Z^2 basis sweeps for the structures whose kernel is desk-scale
    // (size <= 8); group structures of S4 are covered by the topologicality
    // and coboundary sweeps above/below
    std::vector<std::string> z2_names = core_builtin_names();
    z2_names.insert(z2_names.end(), {"GQ_s3", "GSQ_s3", "SQ_s4c3"});
    for (const auto& name : z2_names) {
        any_structure st = builtin_structure(name);
        if (std::holds_alternative<qualgebra>(st)) {
            const auto& s = std::get<qualgebra>(st);
            auto basis = kernel_basis(cocycle_system(s), cocycle_kind::qualgebra, s.size());
            for (const auto& cp : basis) {
                c.expect(is_cocycle(s, cp).ok, name + ": kernel vector not a cocycle");
                for (const auto& mp : fixtures)
                    c.expect(check_boltzmann(s, cp, mp).ok,
                             name + ": Z^2 basis rep fails " + mp.id);
            }
        } else {
            const auto& s = std::get<squandle>(st);
            auto basis = kernel_basis(cocycle_system(s), cocycle_kind::squandle, s.size());
            for (const auto& cp : basis) {
                c.expect(is_cocycle(s, cp).ok, name + ": kernel vector not a cocycle");
                for (const auto& mp : fixtures)
                    c.expect(check_boltzmann(s, cp, mp).ok,
                             name + ": Z^2 basis rep fails " + mp.id);
            }
        }
    }

    // every coboundary weighs every colored builtin diagram at zero
    for (const auto& name : builtin_structure_names()) {
        any_structure st = builtin_structure(name);
        for (const auto& dname : builtin_diagram_names()) {
            diagram d = builtin_diagram(dname);
            if (std::holds_alternative<qualgebra>(st)) {
                const auto& s = std::get<qualgebra>(st);
                auto cols = enumerate_colorings(s, d, color_mode::qualgebra);
                for (const auto& g : coboundary_generators(s))
                    for (const auto& col : cols)
                        c.expect(weight(d, col, g) == 0,
                                 name + " coboundary nonzero on " + dname);
            } else if (std::holds_alternative<squandle>(st)) {
                const auto& s = std::get<squandle>(st);
                auto cols = enumerate_colorings(s, d);
                for (const auto& g : coboundary_generators(s))
                    for (const auto& col : cols)
                        c.expect(weight(d, col, g) == 0,
                                 name + " coboundary nonzero on " + dname);
            }
        }
    }

    return report(5,
                  "topologicality and Boltzmann sweeps over builtins, Z^2 bases and "
                  "coboundaries",
                  c, seconds_since(start));
}

// criterion 6 -------------------------------------------------------------
bool criterion_move_fuzzing() {
    checker c;
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(0x5eed);

    const std::vector<std::string> rewritable = {"R1+", "R1-", "R2",  "R4z", "R4u",
                                                 "R5z", "R5u", "R6z", "R6u"};
    auto random_walk = [&](diagram d, int steps) {
        for (int step = 0; step < steps; ++step) {
            std::vector<std::tuple<std::string, move_dir, move_site>> options;
            for (const auto& id : rewritable)
                for (move_dir dir : {move_dir::insert, move_dir::remove})
                    for (const auto& site : enumerate_sites(d, id, dir))
                        options.emplace_back(id, dir, site);
            if (options.empty()) break;
            const auto& [id, dir, site] = options[rng() % options.size()];
            d = apply_move(d, id, dir, site);
        }
        return d;
    };

    // structures under test: size-4 core plus the S4 3-cycle squandle
    std::vector<std::string> names = core_builtin_names();
    names.push_back("SQ_s4c3");
    const std::vector<std::string> diagrams = {"unknot",   "trefoil",  "theta_st",
                                               "theta_kt", "cuff_st",  "cuff_hopf"};
    int sequences = 0;
    for (int round = 0; sequences < 200; ++round) {
        const std::string& sname = names[sequences % names.size()];
        const std::string& dname = diagrams[(sequences / names.size()) % diagrams.size()];
        any_structure st = builtin_structure(sname);
        diagram base = builtin_diagram(dname);
        diagram walked = random_walk(base, 5);
        ++sequences;
        if (std::holds_alternative<qualgebra>(st)) {
            const auto& s = std::get<qualgebra>(st);
            for (color_mode m : {color_mode::qualgebra, color_mode::isosceles})
                c.expect(count_colorings(s, base, m) == count_colorings(s, walked, m),
                         sname + "/" + dname + ": count changed in mode " + to_string(m));
            cohomology_result h2 = second_cohomology(s);
            const cocycle_pair& rep = h2.free_representatives.front();
            c.expect(compute_weight_multiset(s, rep, base) ==
                         compute_weight_multiset(s, rep, walked),
                     sname + "/" + dname + ": weight multiset changed");
            c.expect(compute_weight_multiset(s, coboundary_generators(s)[0], base) ==
                         compute_weight_multiset(s, coboundary_generators(s)[0], walked),
                     sname + "/" + dname + ": coboundary multiset changed");
        } else {
            const auto& s = std::get<squandle>(st);
            c.expect(count_colorings(s, base) == count_colorings(s, walked),
                     sname + "/" + dname + ": squandle count changed");
            cohomology_result h2 = second_cohomology(s);
            const cocycle_pair& rep = h2.torsion_representatives.empty()
                                          ? coboundary_generators(s)[0]
                                          : h2.torsion_representatives.front();
            c.expect(compute_weight_multiset(s, rep, base) ==
                         compute_weight_multiset(s, rep, walked),
                     sname + "/" + dname + ": squandle weight multiset changed");
        }
    }
    c.expect(sequences == 200, "ran 200 sequences");
    return report(6, "200 seeded random move sequences preserve counts and weights", c,
                  seconds_since(start));
}

// criterion 7 -------------------------------------------------------------
bool criterion_freeqa() {
    checker c;
    auto start = std::chrono::steady_clock::now();
    product_form lhs = parse_product("b<+a*a<+b");
    product_form rhs = parse_product("a<-b<+a*b");
    free_word expected = {{"a", -1}, {"b", 1}, {"a", 1}, {"b", -1}, {"a", 1}, {"b", 1}};
    c.expect(to_free_group(lhs) == expected, "lhs image is a^-1 b a b^-1 a b");
    c.expect(to_free_group(rhs) == expected, "rhs image is a^-1 b a b^-1 a b");
    c.expect(!bounded_equivalence(lhs, rhs, 6).equivalent,
             "sides stay distinct through depth 6");
    tail_check_report tails = tail_invariant_check(lhs, "b", 6);
    c.expect(tails.ok, "tail invariant: " + tails.detail);
    return report(7, "free qualgebra: the group relation fails in FAQA", c,
                  seconds_since(start), 10.0);
}

// criterion 8 -------------------------------------------------------------
bool criterion_oracles() {
    checker c;
    auto start = std::chrono::steady_clock::now();

    // SNF re-multiplication on 1000 random matrices
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        int rows = 1 + trial % 6, cols = 1 + (trial / 3) % 7;
        int_matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
        snf_result r = smith_normal_form(m);
        if (!(r.u * m * r.v == r.d)) {
            c.expect(false, "SNF re-multiplication failed on trial " + std::to_string(trial));
            break;
        }
        for (int i = 0; i + 1 < std::min(rows, cols); ++i)
            if (r.d.at(i + 1, i + 1) != 0 && r.d.at(i, i) != 0)
                if (r.d.at(i + 1, i + 1) % r.d.at(i, i) != 0)
                    c.expect(false, "SNF divisibility chain failed");
    }

    // brute force vs propagated enumeration on all builtin diagrams with
    // <= 6 arcs and all size-4 structures
    for (const auto& dname : builtin_diagram_names()) {
        diagram d = builtin_diagram(dname);
        if (d.arcs.size() > 6) continue;
        for (const auto& sname : core_builtin_names()) {
            any_structure st = builtin_structure(sname);
            if (std::holds_alternative<qualgebra>(st)) {
                const auto& s = std::get<qualgebra>(st);
                for (color_mode m : {color_mode::qualgebra, color_mode::isosceles})
                    c.expect(brute_force_count(s, d, m) == count_colorings(s, d, m),
                             sname + "/" + dname + ": propagation disagrees with brute force");
            } else {
                const auto& s = std::get<squandle>(st);
                c.expect(brute_force_count(s, d) == count_colorings(s, d),
                         sname + "/" + dname + ": propagation disagrees with brute force");
            }
        }
    }

    // redundancy of the quandle cocycle rows for enumerated size-4 qualgebras
    classification_result q4 = enumerate_qualgebras(4, true);
    std::vector<qualgebra> to_check = q4.qualgebras;
    {  // plus a slice of trivial size-4 qualgebras
        quandle tq = trivial_quandle(4);
        auto tables = qualgebrizations(tq);
        for (size_t i = 0; i < tables.size(); i += tables.size() / 16 + 1)
            to_check.emplace_back(tq, tables[i]);
    }
    for (const auto& s : to_check) {
        cocycle_system_t sys = cocycle_system(s);
        int_matrix k = integer_kernel(sys.core);
        for (int i = 0; i < k.rows(); ++i)
            for (int r = 0; r < sys.consistency.rows(); ++r) {
                bigint dot = 0;
                for (int j = 0; j < k.cols(); ++j)
                    dot += sys.consistency.at(r, j) * k.at(i, j);
                if (dot != 0) {
                    c.expect(false, "redundant quandle row not annihilated");
                    r = sys.consistency.rows();
                    i = k.rows();
                }
            }
    }

    return report(8, "oracle suites: SNF re-multiplication, brute-force coloring, "
                     "cocycle-axiom redundancy",
                  c, seconds_since(start));
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion_classification();
    all &= criterion_properties();
    all &= criterion_coloring_counts();
    all &= criterion_cohomology();
    all &= criterion_boltzmann();
    all &= criterion_move_fuzzing();
    all &= criterion_freeqa();
    all &= criterion_oracles();
    std::cout << (all ? "ACCEPTANCE: all criteria PASS" : "ACCEPTANCE: FAILURES above")
              << "\n";
    return all ? 0 : 1;
}
