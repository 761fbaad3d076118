#include "qualgebra/classify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>

namespace qlab {

namespace {

struct budget_guard {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds;
    explicit budget_guard(double s) : seconds(s) {}
    void check(const char* what) const {
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (elapsed > seconds)
            throw size_too_large(std::string(what) + " exceeded the " +
                                 std::to_string(seconds) + "s budget");
    }
};

// Lexicographically least concatenation of all relabelled tables; shared
// canonical key for dedup and deterministic ordering.
std::vector<elem> canonical_key(int n, const std::vector<const binary_table*>& binaries,
                                const std::vector<const unary_table*>& unaries) {
    perm p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<elem> best;
    do {
        std::vector<elem> key;
        key.reserve(binaries.size() * n * n + unaries.size() * n);
        perm inv = inverse(p);
        for (const binary_table* t : binaries)
            for (elem a = 0; a < n; ++a)
                for (elem b = 0; b < n; ++b) key.push_back(p[(*t)[inv[a]][inv[b]]]);
        for (const unary_table* t : unaries)
            for (elem a = 0; a < n; ++a) key.push_back(p[(*t)[inv[a]]]);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

std::vector<elem> qualgebra_key(const qualgebra& s) {
    return canonical_key(s.size(), {&s.base_quandle().lhd_table(), &s.diamond_table()},
                         {});
}
std::vector<elem> squandle_key(const squandle& s) {
    return canonical_key(s.size(), {&s.base_quandle().lhd_table()}, {&s.square_table()});
}

std::vector<perm> perms_fixing(int n, elem fixed) {
    std::vector<elem> rest;
    for (elem x = 0; x < n; ++x)
        if (x != fixed) rest.push_back(x);
    std::vector<perm> out;
    do {
        perm p(n);
        p[fixed] = fixed;
        int k = 0;
        for (elem x = 0; x < n; ++x)
            if (x != fixed) p[x] = rest[k++];
        out.push_back(p);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Enumerate all diamond tables completing q, streaming each into `sink`.
// QA_Comp pins every entry's candidate set; QA_Comm and QA_D prune partial
// tables; the qualgebra constructor revalidates the survivors.
void for_each_qualgebrization(const quandle& q, const budget_guard& budget,
                              const std::function<void(binary_table&&)>& sink) {
    const int n = q.size();
    std::vector<perm> s(n);
    for (elem a = 0; a < n; ++a) s[a] = q.translation(a);
    std::map<perm, std::vector<elem>> by_translation;
    for (elem a = 0; a < n; ++a) by_translation[s[a]].push_back(a);

    std::vector<std::vector<elem>> candidates(n * n);
    for (elem b = 0; b < n; ++b)
        for (elem c = 0; c < n; ++c) {
            auto it = by_translation.find(compose(s[b], s[c]));
            if (it == by_translation.end()) return;  // QA_Comp unsatisfiable
            candidates[b * n + c] = it->second;
        }

    binary_table dia(n, std::vector<elem>(n, -1));
    auto comm_ok = [&](elem x, elem y) {
        if (x < 0 || dia[x][y] < 0) return true;
        elem xy = q.lhd(x, y);
        if (dia[y][xy] < 0) return true;
        return dia[x][y] == dia[y][xy];
    };
    auto dist_ok = [&](elem a, elem b) {
        for (elem c = 0; c < n; ++c) {
            elem ac = q.lhd(a, c), bc = q.lhd(b, c);
            if (dia[ac][bc] >= 0 && q.lhd(dia[a][b], c) != dia[ac][bc]) return false;
            elem ai = q.lhd_inv(a, c), bi = q.lhd_inv(b, c);
            if (dia[ai][bi] >= 0 && q.lhd(dia[ai][bi], c) != dia[a][b]) return false;
        }
        return true;
    };

    std::function<void(int)> rec = [&](int idx) {
        budget.check("qualgebrization search");
        if (idx == n * n) {
            binary_table copy = dia;
            try {
                qualgebra check(q, copy);
                sink(std::move(copy));
            } catch (const axiom_violation&) {
            }
            return;
        }
        elem a = idx / n, b = idx % n;
        for (elem v : candidates[idx]) {
            dia[a][b] = v;
            if (comm_ok(a, b) && comm_ok(q.lhd_inv(b, a), a) && dist_ok(a, b))
                rec(idx + 1);
        }
        dia[a][b] = -1;
    };
    rec(0);
}

}  // namespace

std::vector<quandle> enumerate_quandles(int n, double budget_seconds) {
    budget_guard budget(budget_seconds);
    std::vector<std::vector<perm>> choices(n);
    for (elem b = 0; b < n; ++b) choices[b] = perms_fixing(n, b);

    std::map<std::vector<elem>, quandle> reps;
    std::vector<const perm*> cols(n, nullptr);

    // rack condition between chosen columns: S_{b lhd c} = S_c^-1 S_b S_c
    auto consistent = [&](elem b, elem c) {
        const perm& sb = *cols[b];
        const perm& sc = *cols[c];
        elem bc = sc[b];
        if (cols[bc] == nullptr) return true;
        return *cols[bc] == compose(inverse(sc), compose(sb, sc));
    };

    std::function<void(elem)> rec = [&](elem b) {
        budget.check("quandle enumeration");
        if (b == n) {
            binary_table lhd(n, std::vector<elem>(n));
            for (elem x = 0; x < n; ++x)
                for (elem y = 0; y < n; ++y) lhd[x][y] = (*cols[y])[x];
            try {
                quandle q(carrier(n), lhd);
                auto key = canonical_key(n, {&q.lhd_table()}, {});
                reps.emplace(std::move(key), std::move(q));
            } catch (const axiom_violation&) {
            }
            return;
        }
        for (const perm& p : choices[b]) {
            cols[b] = &p;
            bool ok = true;
            for (elem c = 0; c <= b && ok; ++c) ok = consistent(b, c) && consistent(c, b);
            if (ok) rec(b + 1);
            cols[b] = nullptr;
        }
    };
    rec(0);

    std::vector<quandle> out;
    for (auto& [k, q] : reps) out.push_back(std::move(q));
    return out;
}

std::vector<binary_table> qualgebrizations(const quandle& q, double budget_seconds) {
    budget_guard budget(budget_seconds);
    std::vector<binary_table> out;
    for_each_qualgebrization(q, budget, [&](binary_table&& t) { out.push_back(std::move(t)); });
    return out;
}

std::vector<unary_table> squandlizations(const quandle& q) {
    const int n = q.size();
    std::vector<perm> s(n);
    for (elem a = 0; a < n; ++a) s[a] = q.translation(a);
    std::map<perm, std::vector<elem>> by_translation;
    for (elem a = 0; a < n; ++a) by_translation[s[a]].push_back(a);

    // SQ_1 pins S_{b^2} = S_b^2
    std::vector<std::vector<elem>> candidates(n);
    for (elem b = 0; b < n; ++b) {
        auto it = by_translation.find(compose(s[b], s[b]));
        if (it == by_translation.end()) return {};
        candidates[b] = it->second;
    }

    std::vector<unary_table> out;
    unary_table sq(n, -1);
    auto sq2_ok = [&](elem a) {
        // (a lhd b)^2 = a^2 lhd b wherever both squares are set
        for (elem b = 0; b < n; ++b) {
            elem ab = q.lhd(a, b);
            if (sq[ab] >= 0 && q.lhd(sq[a], b) != sq[ab]) return false;
            elem ba = q.lhd(b, a);
            if (sq[b] >= 0 && sq[ba] >= 0 && q.lhd(sq[b], a) != sq[ba]) return false;
        }
        return true;
    };
    std::function<void(elem)> rec = [&](elem a) {
        if (a == n) {
            unary_table copy = sq;
            try {
                squandle check(q, copy);
                out.push_back(std::move(copy));
            } catch (const axiom_violation&) {
            }
            return;
        }
        for (elem v : candidates[a]) {
            sq[a] = v;
            if (sq2_ok(a)) rec(a + 1);
        }
        sq[a] = -1;
    };
    rec(0);
    return out;
}

classification_result enumerate_qualgebras(int n, bool nontrivial_only,
                                           double budget_seconds) {
    budget_guard budget(budget_seconds);
    classification_result res;
    res.size = n;
    res.kind = "qualgebra";

    std::map<std::vector<elem>, qualgebra> trivial, nontrivial;
    for (const quandle& q : enumerate_quandles(n, budget_seconds)) {
        budget.check("qualgebra enumeration");
        if (q.is_trivial() && nontrivial_only) continue;
        for_each_qualgebrization(q, budget, [&](binary_table&& dia) {
            qualgebra s(q, std::move(dia));
            auto& bucket = s.is_trivial() ? trivial : nontrivial;
            auto key = qualgebra_key(s);
            bucket.emplace(std::move(key), std::move(s));
        });
    }
    res.trivial_count = static_cast<long long>(trivial.size());
    res.nontrivial_count = static_cast<long long>(nontrivial.size());
    for (auto& [k, s] : trivial) res.qualgebras.push_back(std::move(s));
    for (auto& [k, s] : nontrivial) res.qualgebras.push_back(std::move(s));
    return res;
}

classification_result enumerate_squandles(int n, bool nontrivial_only,
                                          double budget_seconds) {
    budget_guard budget(budget_seconds);
    classification_result res;
    res.size = n;
    res.kind = "squandle";

    std::map<std::vector<elem>, squandle> trivial, nontrivial;
    for (const quandle& q : enumerate_quandles(n, budget_seconds)) {
        budget.check("squandle enumeration");
        if (q.is_trivial() && nontrivial_only) continue;
        for (unary_table& sq : squandlizations(q)) {
            squandle s(q, std::move(sq));
            auto& bucket = s.is_trivial() ? trivial : nontrivial;
            auto key = squandle_key(s);
            bucket.emplace(std::move(key), std::move(s));
        }
    }
    res.trivial_count = static_cast<long long>(trivial.size());
    res.nontrivial_count = static_cast<long long>(nontrivial.size());
    for (auto& [k, s] : trivial) res.squandles.push_back(std::move(s));
    for (auto& [k, s] : nontrivial) res.squandles.push_back(std::move(s));
    return res;
}

property_report_t property_report(const qualgebra& q) {
    const int n = q.size();
    property_report_t rep;
    rep.commutative = true;
    rep.cancellative = true;
    rep.associative = true;
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            if (q.diamond(a, b) != q.diamond(b, a)) rep.commutative = false;
    for (elem a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (elem b = 0; b < n; ++b) {
            if (row[q.diamond(a, b)] || col[q.diamond(b, a)]) rep.cancellative = false;
            row[q.diamond(a, b)] = true;
            col[q.diamond(b, a)] = true;
        }
    }
    for (elem e = 0; e < n && !rep.unit; ++e) {
        bool ok = true;
        for (elem a = 0; a < n && ok; ++a)
            ok = q.diamond(e, a) == a && q.diamond(a, e) == a;
        if (ok) {
            rep.unital = true;
            rep.unit = e;
        }
    }
    for (elem a = 0; a < n; ++a)
        for (elem b = 0; b < n; ++b)
            for (elem c = 0; c < n; ++c)
                if (q.diamond(q.diamond(a, b), c) != q.diamond(a, q.diamond(b, c)))
                    rep.associative = false;
    rep.unital_associative = rep.unital && rep.associative;
    return rep;
}

}  // namespace qlab
