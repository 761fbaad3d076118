#include "qualgebra/builtins.hpp"

#include <set>

namespace qlab {

namespace {

constexpr elem P = 0, Q = 1, R = 2, S = 3;

elem tau(elem x) { return x == P ? Q : x == Q ? P : x; }

quandle p_quandle() {
    binary_table lhd(4, std::vector<elem>(4));
    for (elem a = 0; a < 4; ++a)
        for (elem b = 0; b < 4; ++b) lhd[a][b] = b == R ? tau(a) : a;
    return quandle(carrier(4, {"p", "q", "r", "s"}), lhd);
}

elem parse_pqs(char c) {
    if (c == 'p') return P;
    if (c == 'q') return Q;
    if (c == 's') return S;
    throw bad_input(std::string("expected one of p,q,s but got '") + c + "'");
}

std::vector<elem> elements_with_cycle_type(const group_table& g,
                                           const std::vector<int>& type, int deg) {
    // recover the permutation of 0..deg-1 from the regular action on names is
    // overkill; the carrier of symmetric_group(deg) is indexed by the
    // lexicographic one-line forms, so rebuild them the same way
    std::vector<perm> perms;
    perm p(deg);
    for (int i = 0; i < deg; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<elem> out;
    for (elem i = 0; i < g.size(); ++i)
        if (cycle_type(perms[i]) == type) out.push_back(i);
    return out;
}

}  // namespace

std::string kind_of(const any_structure& s) {
    if (std::holds_alternative<quandle>(s)) return "quandle";
    if (std::holds_alternative<qualgebra>(s)) return "qualgebra";
    if (std::holds_alternative<squandle>(s)) return "squandle";
    return "group";
}

qualgebra p_qualgebra(elem qs, elem qq) {
    if ((qs != P && qs != Q && qs != S) || (qq != P && qq != Q && qq != S))
        throw bad_input("q<>s and q<>q must lie in {p,q,s}");
    binary_table dia(4, std::vector<elem>(4));
    dia[R][R] = S;
    for (elem x = 0; x < 4; ++x)
        if (x != R) dia[R][x] = dia[x][R] = R;
    dia[S][S] = S;
    dia[P][Q] = dia[Q][P] = S;
    dia[Q][S] = dia[S][Q] = qs;
    dia[P][S] = dia[S][P] = tau(qs);
    dia[Q][Q] = qq;
    dia[P][P] = tau(qq);
    return qualgebra(p_quandle(), dia);
}

squandle sq4_squandle(elem q2) {
    if (q2 != P && q2 != Q && q2 != S) throw bad_input("q^2 must lie in {p,q,s}");
    unary_table sq(4);
    sq[R] = S;
    sq[S] = S;
    sq[Q] = q2;
    sq[P] = tau(q2);
    return squandle(p_quandle(), sq);
}

squandle s3_two_squandle() {
    group_table s3 = symmetric_group(3);
    std::set<elem> seed;
    for (elem t : elements_with_cycle_type(s3, {1, 2}, 3)) seed.insert(t);
    seed.insert(s3.unit);
    return closure(group_squandle(s3), seed).structure;
}

squandle s4_three_cycle_squandle() {
    group_table s4 = symmetric_group(4);
    std::set<elem> seed;
    for (elem t : elements_with_cycle_type(s4, {1, 3}, 4)) seed.insert(t);
    return closure(group_squandle(s4), seed).structure;
}

squandle squandle_of(const qualgebra& q) {
    unary_table sq(q.size());
    for (elem a = 0; a < q.size(); ++a) sq[a] = q.diamond(a, a);
    return squandle(q.base_quandle(), sq);
}

namespace {

const char* kPqsChars = "pqs";

std::vector<std::string> make_names() {
    std::vector<std::string> names;
    for (char qs : std::string(kPqsChars))
        for (char qq : std::string(kPqsChars))
            names.push_back(std::string("P_qs-") + qs + "_qq-" + qq);
    names.insert(names.end(),
                 {"SQ4_s3sq", "SQ4_q2-p", "SQ4_q2-q", "SQ4_q2-s", "GQ_s3", "GQ_s4",
                  "GSQ_s3", "GSQ_s4", "SQ_s4c3"});
    return names;
}

const std::vector<std::string> kStructureNames = make_names();

}  // namespace

const std::vector<std::string>& builtin_structure_names() { return kStructureNames; }

std::vector<std::string> core_builtin_names() {
    std::vector<std::string> names;
    for (char qs : std::string(kPqsChars))
        for (char qq : std::string(kPqsChars))
            names.push_back(std::string("P_qs-") + qs + "_qq-" + qq);
    names.insert(names.end(), {"SQ4_s3sq", "SQ4_q2-p", "SQ4_q2-q", "SQ4_q2-s"});
    return names;
}

any_structure builtin_structure(const std::string& name) {
    if (name.rfind("P_qs-", 0) == 0 && name.size() == 11 &&
        name.compare(6, 4, "_qq-") == 0)
        return p_qualgebra(parse_pqs(name[5]), parse_pqs(name[10]));
    if (name == "SQ4_s3sq") return s3_two_squandle();
    if (name.rfind("SQ4_q2-", 0) == 0 && name.size() == 8)
        return sq4_squandle(parse_pqs(name[7]));
    if (name == "GQ_s3") return group_qualgebra(symmetric_group(3));
    if (name == "GQ_s4") return group_qualgebra(symmetric_group(4));
    if (name == "GSQ_s3") return group_squandle(symmetric_group(3));
    if (name == "GSQ_s4") return group_squandle(symmetric_group(4));
    if (name == "SQ_s4c3") return s4_three_cycle_squandle();
    throw unknown_name(name);
}

}  // namespace qlab
