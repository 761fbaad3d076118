#include "qualgebra/invariants.hpp"

#include <algorithm>
#include <set>

namespace qlab {

long long weight_multiset::total() const {
    long long t = 0;
    for (const auto& [w, m] : counts) t += m;
    return t;
}

std::string weight_multiset::polynomial() const {
    if (counts.empty()) return "0";
    std::string out;
    for (const auto& [w, m] : counts) {
        if (!out.empty()) out += " + ";
        if (w == 0) {
            out += std::to_string(m);
        } else {
            if (m != 1) out += std::to_string(m) + "*";
            out += "t^" + w.get_str();
        }
    }
    return out;
}

bigint weight(const diagram& d, const coloring& c, const cocycle_pair& cp) {
    const bool squandle_cp = cp.kind == cocycle_kind::squandle;
    if (squandle_cp != (c.mode == color_mode::squandle))
        throw mode_mismatch("cocycle kind does not match the coloring mode");
    bigint w = 0;
    for (const auto& k : d.crossings) {
        if (k.sign > 0)
            w += cp.chi[c.assignment.at(k.under_in)][c.assignment.at(k.over)];
        else
            w -= cp.chi[c.assignment.at(k.under_out)][c.assignment.at(k.over)];
    }
    for (const auto& v : d.vertices) {
        elem pl = c.assignment.at(v.pair_left);
        elem pr = c.assignment.at(v.pair_right);
        bigint lam = squandle_cp ? cp.lambda_lin[pl] : cp.lambda_sq[pl][pr];
        if (v.kind == vertex_kind::unzip)
            w += lam;
        else
            w -= lam;
    }
    return w;
}

namespace {

template <typename S>
weight_multiset multiset_impl(const S& s, const cocycle_pair& cp, const diagram& d,
                              const std::vector<coloring>& cols) {
    check_result chk = is_cocycle(s, cp);
    if (!chk.ok) throw not_a_cocycle(chk.detail);
    weight_multiset out;
    for (const auto& c : cols) ++out.counts[weight(d, c, cp)];
    return out;
}

template <typename Profile>
boltzmann_verdict boltzmann_impl(const diagram& lhs, const diagram& rhs,
                                 const cocycle_pair& cp, Profile&& enumerate) {
    // boundary key -> multiset of extension weights
    auto weighted_profile = [&](const diagram& d) {
        std::map<std::vector<elem>, std::multiset<bigint>> prof;
        if (!d.boundary) throw bad_input("move fixture side has no boundary");
        for (const coloring& c : enumerate(d)) {
            std::vector<elem> key;
            for (const auto& a : d.boundary->inputs) key.push_back(c.assignment.at(a));
            for (const auto& a : d.boundary->outputs) key.push_back(c.assignment.at(a));
            prof[key].insert(weight(d, c, cp));
        }
        return prof;
    };
    auto pl = weighted_profile(lhs);
    auto pr = weighted_profile(rhs);
    boltzmann_verdict verdict;
    auto it = pl.begin();
    auto jt = pr.begin();
    while (it != pl.end() || jt != pr.end()) {
        if (jt == pr.end() || (it != pl.end() && it->first < jt->first)) {
            verdict.ok = false;
            verdict.witness = it->first;
            verdict.detail = "boundary coloring extends the lhs only";
            return verdict;
        }
        if (it == pl.end() || jt->first < it->first) {
            verdict.ok = false;
            verdict.witness = jt->first;
            verdict.detail = "boundary coloring extends the rhs only";
            return verdict;
        }
        if (it->second != jt->second) {
            verdict.ok = false;
            verdict.witness = it->first;
            verdict.detail = "extension weights differ";
            return verdict;
        }
        ++it;
        ++jt;
    }
    return verdict;
}

}  // namespace

weight_multiset compute_weight_multiset(const qualgebra& s, const cocycle_pair& cp,
                                        const diagram& d) {
    if (cp.kind != cocycle_kind::qualgebra)
        throw mode_mismatch("qualgebra weights need a qualgebra cocycle");
    return multiset_impl(s, cp, d, enumerate_colorings(s, d, color_mode::qualgebra));
}

weight_multiset compute_weight_multiset(const squandle& s, const cocycle_pair& cp,
                                        const diagram& d) {
    if (cp.kind != cocycle_kind::squandle)
        throw mode_mismatch("squandle weights need a squandle cocycle");
    return multiset_impl(s, cp, d, enumerate_colorings(s, d));
}

boltzmann_verdict check_boltzmann(const qualgebra& s, const cocycle_pair& cp,
                                  const move_pair& mp) {
    // non-cocycles allowed here: failing some move is how they are exposed
    return boltzmann_impl(mp.lhs, mp.rhs, cp, [&](const diagram& d) {
        return enumerate_colorings(s, d, color_mode::qualgebra);
    });
}

boltzmann_verdict check_boltzmann(const squandle& s, const cocycle_pair& cp,
                                  const move_pair& mp) {
    return boltzmann_impl(mp.lhs, mp.rhs, cp,
                          [&](const diagram& d) { return enumerate_colorings(s, d); });
}

bool linearity_check(const diagram& d, const coloring& c, const cocycle_pair& cp1,
                     const cocycle_pair& cp2) {
    return weight(d, c, cp1 + cp2) == weight(d, c, cp1) + weight(d, c, cp2);
}

}  // namespace qlab
