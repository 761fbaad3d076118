#include "qualgebra/freeqa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace qlab {

std::string to_string(const ld_term& t) {
    std::string out = t.head;
    for (const auto& [sign, gen] : t.ops) out += (sign > 0 ? "<+" : "<-") + gen;
    return out;
}

namespace {

bool generator_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
}

std::string read_generator(const std::string& s, size_t& pos) {
    size_t start = pos;
    while (pos < s.size() && generator_char(s[pos])) ++pos;
    if (pos == start) throw bad_input("expected a generator name in term at position " +
                                      std::to_string(start));
    return s.substr(start, pos - start);
}

}  // namespace

ld_term parse_term(const std::string& text) {
    ld_term t;
    size_t pos = 0;
    t.head = read_generator(text, pos);
    while (pos < text.size()) {
        if (text[pos] != '<' || pos + 1 >= text.size() ||
            (text[pos + 1] != '+' && text[pos + 1] != '-'))
            throw bad_input("expected '<+' or '<-' in term at position " +
                            std::to_string(pos));
        int sign = text[pos + 1] == '+' ? +1 : -1;
        pos += 2;
        t.ops.emplace_back(sign, read_generator(text, pos));
    }
    return t;
}

bool is_reduced(const ld_term& t) {
    if (!t.ops.empty() && t.ops[0].second == t.head) return false;
    for (size_t i = 0; i + 1 < t.ops.size(); ++i)
        if (t.ops[i].second == t.ops[i + 1].second &&
            t.ops[i].first == -t.ops[i + 1].first)
            return false;
    return true;
}

ld_term reduce_term(ld_term t) {
    // leftmost-innermost: repeatedly remove the first applicable redex
    bool changed = true;
    while (changed) {
        changed = false;
        if (!t.ops.empty() && t.ops[0].second == t.head) {
            // a lhd a = a and a lhd_inv a = a
            t.ops.erase(t.ops.begin());
            changed = true;
            continue;
        }
        for (size_t i = 0; i + 1 < t.ops.size(); ++i) {
            if (t.ops[i].second == t.ops[i + 1].second &&
                t.ops[i].first == -t.ops[i + 1].first) {
                t.ops.erase(t.ops.begin() + i, t.ops.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return t;
}

ld_term term_apply(const ld_term& t, int sign, const ld_term& t2) {
    // t lhd^sign (b0 op1 b1 ... opr br)
    //   = t op(-zr) br ... op(-z1) b1 lhd^sign b0 op(z1) b1 ... op(zr) br
    ld_term out = t;
    for (auto it = t2.ops.rbegin(); it != t2.ops.rend(); ++it)
        out.ops.emplace_back(-it->first, it->second);
    out.ops.emplace_back(sign, t2.head);
    for (const auto& op : t2.ops) out.ops.push_back(op);
    return out;
}

bool is_tail(const ld_term& t, const ld_term& tp) {
    if (!is_reduced(t) || !is_reduced(tp)) throw not_reduced("is_tail needs reduced terms");
    const size_t r = t.ops.size();
    if (tp.ops.size() < r + 1) return false;
    const size_t join = tp.ops.size() - r - 1;  // index of the joining lhd
    if (tp.ops[join] != std::make_pair(+1, t.head)) return false;
    for (size_t i = 0; i < r; ++i)
        if (tp.ops[join + 1 + i] != t.ops[i]) return false;
    // b_s != a0 at the junction
    const std::string& before = join == 0 ? tp.head : tp.ops[join - 1].second;
    return before != t.head;
}

std::string to_string(const product_form& p) {
    std::string out;
    for (const auto& t : p) {
        if (!out.empty()) out += "*";
        out += to_string(t);
    }
    return out;
}

product_form parse_product(const std::string& text) {
    product_form p;
    size_t start = 0;
    while (start <= text.size()) {
        size_t star = text.find('*', start);
        std::string piece =
            star == std::string::npos ? text.substr(start) : text.substr(start, star - start);
        p.push_back(parse_term(piece));
        if (star == std::string::npos) break;
        start = star + 1;
    }
    return p;
}

product_form shift(const product_form& p, int i, bool positive) {
    if (i < 1 || i >= static_cast<int>(p.size()))
        throw position_out_of_range("shift position " + std::to_string(i) +
                                    " in a product of " + std::to_string(p.size()) +
                                    " factors");
    product_form out = p;
    const ld_term& a = p[i - 1];
    const ld_term& b = p[i];
    if (positive) {
        out[i - 1] = b;
        out[i] = reduce_term(term_apply(a, +1, b));
    } else {
        out[i - 1] = reduce_term(term_apply(b, -1, a));
        out[i] = a;
    }
    return out;
}

free_word to_free_group(const product_form& p) {
    free_word w;
    auto push = [&](const std::string& g, int e) {
        if (!w.empty() && w.back().first == g && w.back().second == -e)
            w.pop_back();
        else
            w.emplace_back(g, e);
    };
    for (const ld_term& t : p) {
        // a0 op1 a1 ... opr ar  =  (a_r^-e_r ... a_1^-e_1) a0 (a_1^e_1 ... a_r^e_r)
        for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it)
            push(it->second, -it->first);
        push(t.head, +1);
        for (const auto& [sign, gen] : t.ops) push(gen, sign);
    }
    return w;
}

std::string to_string(const free_word& w) {
    std::string out;
    for (const auto& [gen, e] : w) {
        if (!out.empty()) out += " ";
        out += gen;
        if (e < 0) out += "^-1";
    }
    return out.empty() ? "1" : out;
}

equivalence_result bounded_equivalence(const product_form& p, const product_form& q,
                                       int depth) {
    equivalence_result res;
    res.depth = depth;
    if (p.size() != q.size()) return res;  // factor counts are invariant
    std::map<product_form, std::vector<shift_step>> seen;
    seen[p] = {};
    std::queue<product_form> frontier;
    frontier.push(p);
    if (p == q) {
        res.equivalent = true;
        return res;
    }
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::queue<product_form> next;
        while (!frontier.empty()) {
            product_form cur = frontier.front();
            frontier.pop();
            for (int i = 1; i < static_cast<int>(cur.size()); ++i) {
                for (bool positive : {true, false}) {
                    product_form neighbor = shift(cur, i, positive);
                    if (seen.count(neighbor)) continue;
                    auto path = seen[cur];
                    path.push_back({i, positive});
                    seen[neighbor] = path;
                    if (neighbor == q) {
                        res.equivalent = true;
                        res.path = path;
                        return res;
                    }
                    next.push(neighbor);
                }
            }
        }
        frontier = std::move(next);
    }
    return res;
}

tail_check_report tail_invariant_check(const product_form& p, const std::string& g,
                                       int depth) {
    tail_check_report rep;
    if (p.size() != 2) {
        rep.ok = false;
        rep.detail = "tail check expects a two-factor product";
        return rep;
    }
    const ld_term target{g, {}};
    for (bool positive : {true, false}) {
        product_form cur = p;
        bool tail_holds = positive && is_tail(cur[0], cur[1]);
        for (int step = 0; step <= depth; ++step) {
            if (cur[0] == target || cur[1] == target) {
                rep.ok = false;
                rep.detail = "factor equals the generator term after " +
                             std::to_string(step) + (positive ? " positive" : " negative") +
                             " steps";
                return rep;
            }
            if (step == depth) break;
            product_form next = shift(cur, 1, positive);
            if (tail_holds && !is_tail(cur[1], next[1])) {
                // once t is a tail of t', t' must be a tail of red(t lhd t')
                rep.ok = false;
                rep.detail = "tail relation lost at step " + std::to_string(step + 1);
                return rep;
            }
            tail_holds = positive && is_tail(next[0], next[1]);
            cur = std::move(next);
            ++rep.steps_checked;
        }
    }
    return rep;
}

}  // namespace qlab
