#include "sct/series.hpp"

#include "sct/textio.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sct {

TreeSeries TreeSeries::unit(int max_weight) {
    TreeSeries s(max_weight);
    s.add_term(Word{0}, 1);
    return s;
}

Rat TreeSeries::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TreeSeries::add_term(const Word& w, const Rat& c) {
    if (word_weight(w) > cap_ || is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

TreeSeries TreeSeries::truncated(int max_weight) const {
    TreeSeries out(max_weight);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
}

std::vector<std::pair<Word, Rat>> TreeSeries::graded(int weight) const {
    std::vector<std::pair<Word, Rat>> out;
    for (const auto& [w, c] : terms_)
        if (word_weight(w) == weight) out.emplace_back(w, c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
    return out;
}

std::vector<std::pair<Word, Rat>> TreeSeries::sorted_terms() const {
    std::vector<std::pair<Word, Rat>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
    return out;
}

TreeSeries add(const TreeSeries& a, const TreeSeries& b) {
    TreeSeries out(std::min(a.max_weight(), b.max_weight()));
    for (const auto& [w, c] : a.terms()) out.add_term(w, c);
    for (const auto& [w, c] : b.terms()) out.add_term(w, c);
    return out;
}

TreeSeries sub(const TreeSeries& a, const TreeSeries& b) {
    TreeSeries out(std::min(a.max_weight(), b.max_weight()));
    for (const auto& [w, c] : a.terms()) out.add_term(w, c);
    for (const auto& [w, c] : b.terms()) out.add_term(w, -c);
    return out;
}

TreeSeries scale(const Rat& c, const TreeSeries& a) {
    TreeSeries out(a.max_weight());
    for (const auto& [w, k] : a.terms()) out.add_term(w, c * k);
    return out;
}

namespace {

// weight buckets of a series support, for argument enumeration
struct Buckets {
    std::vector<std::vector<std::pair<const Word*, const Rat*>>> by_weight;
    explicit Buckets(const TreeSeries& s, int cap) {
        by_weight.resize(std::size_t(cap) + 1);
        for (const auto& [w, c] : s.terms()) {
            int wt = word_weight(w);
            if (wt <= cap) by_weight[std::size_t(wt)].emplace_back(&w, &c);
        }
    }
};

// grafting enumerator: out += base * (t0 with slots filled from the buckets);
// segs are the pieces of t0's word around its leaves, slot i sits between
// segs[i] and segs[i+1]; when fixed_last, the final slot keeps a bare leaf
struct GraftLoop {
    const Buckets& args;
    TreeSeries& out;
    int budget;
    std::vector<const Word*> chosen;

    void run(const std::vector<Word>& segs, std::size_t slot, int left, const Rat& coeff) {
        std::size_t slots = segs.size() - 1;
        if (slot == slots) {
            Word w;
            for (std::size_t i = 0; i <= slots; ++i) {
                w.insert(w.end(), segs[i].begin(), segs[i].end());
                if (i < slots) {
                    const Word& a = *chosen[i];
                    w.insert(w.end(), a.begin(), a.end());
                }
            }
            out.add_term(w, coeff);
            return;
        }
        for (int wa = 0; wa <= left; ++wa) {
            for (const auto& [pw, pc] : args.by_weight[std::size_t(wa)]) {
                chosen[slot] = pw;
                run(segs, slot + 1, left - wa, coeff * *pc);
            }
        }
    }
};

std::vector<Word> leaf_segments(const Word& w) {
    std::vector<Word> segs(1);
    for (Sym s : w) {
        if (s == 0)
            segs.emplace_back();
        else
            segs.back().push_back(s);
    }
    return segs;
}

void require_unit_leaf(const TreeSeries& s, const char* what) {
    if (s.coeff(Word{0}) != 1)
        throw std::invalid_argument(std::string(what) + " needs leaf coefficient 1");
}

enum class GraftMode { every_leaf, keep_last };

TreeSeries graft_product(const TreeSeries& f, const TreeSeries& g, int cap, GraftMode mode) {
    int n = std::min(f.max_weight(), g.max_weight());
    if (cap >= 0) n = std::min(n, cap);
    TreeSeries out(n);
    Buckets buckets(g, n);
    for (const auto& [w0, c0] : f.terms()) {
        int wt0 = word_weight(w0);
        if (wt0 > n) continue;
        if (w0.size() == 1) {
            // a bare leaf: composition substitutes g, the half product keeps the leaf
            if (mode == GraftMode::every_leaf)
                for (const auto& [w, c] : g.terms()) out.add_term(w, c0 * c);
            else
                out.add_term(w0, c0);
            continue;
        }
        std::vector<Word> segs = leaf_segments(w0);
        if (mode == GraftMode::keep_last) {
            // final leaf stays a leaf: merge the last slot into the tail segment
            Word tail = segs[segs.size() - 2];
            tail.push_back(0);
            tail.insert(tail.end(), segs.back().begin(), segs.back().end());
            segs.pop_back();
            segs.back() = std::move(tail);
        }
        GraftLoop loop{buckets, out, n - wt0, {}};
        loop.chosen.resize(segs.size() - 1);
        loop.run(segs, 0, n - wt0, c0);
    }
    return out;
}

} // namespace

TreeSeries compose(const TreeSeries& p, const TreeSeries& q, int cap) {
    require_unit_leaf(p, "compose");
    require_unit_leaf(q, "compose");
    return graft_product(p, q, cap, GraftMode::every_leaf);
}

TreeSeries dashv(const TreeSeries& f, const TreeSeries& g, int cap) {
    require_unit_leaf(f, "dashv");
    require_unit_leaf(g, "dashv");
    return graft_product(f, g, cap, GraftMode::keep_last);
}

TreeSeries vdash(const TreeSeries& f, const TreeSeries& g, int cap) {
    require_unit_leaf(f, "vdash");
    require_unit_leaf(g, "vdash");
    int n = std::min(f.max_weight(), g.max_weight());
    if (cap >= 0) n = std::min(n, cap);
    TreeSeries out(n);
    for (const auto& [wf, cf] : f.terms()) {
        int wtf = word_weight(wf);
        if (wtf > n) continue;
        for (const auto& [wg, cg] : g.terms()) {
            if (wtf + word_weight(wg) > n) continue;
            Word w(wf.begin(), wf.end() - 1);  // the final symbol is the rightmost leaf
            w.insert(w.end(), wg.begin(), wg.end());
            out.add_term(w, cf * cg);
        }
    }
    return out;
}

TreeSeries comp_inverse(const TreeSeries& p) {
    require_unit_leaf(p, "comp_inverse");
    int n = p.max_weight();
    TreeSeries q = TreeSeries::unit(n);
    for (int w = 1; w <= n; ++w) {
        // the weight-w part of q enters compose(p, q) at weight w only through
        // the leaf term of p, with coefficient 1
        TreeSeries r = compose(p, q, w);
        for (const auto& [word, c] : r.terms())
            if (word_weight(word) == w) q.add_term(word, -c);
    }
    return q;
}

TreeSeries vdash_inverse(const TreeSeries& x) {
    require_unit_leaf(x, "vdash_inverse");
    int n = x.max_weight();
    TreeSeries u = TreeSeries::unit(n);
    for (int w = 1; w <= n; ++w) {
        TreeSeries r = vdash(u, x, w);
        for (const auto& [word, c] : r.terms())
            if (word_weight(word) == w) u.add_term(word, -c);
    }
    return u;
}

TreeSeries dashv_fixpoint(const TreeSeries& p) {
    require_unit_leaf(p, "dashv_fixpoint");
    int n = p.max_weight();
    TreeSeries h = TreeSeries::unit(n);
    for (int w = 1; w <= n; ++w) {
        TreeSeries r = dashv(p, h, w);
        for (const auto& [word, c] : r.terms())
            if (word_weight(word) == w) h.add_term(word, c);
    }
    return h;
}

TreeSeries r_transform(const TreeSeries& f) {
    return dashv(f, comp_inverse(f));
}

TreeSeries corolla_series(int max_weight) {
    TreeSeries s(max_weight);
    for (int w = 0; w <= max_weight; ++w) s.add_term(corolla(w).word(), 1);
    return s;
}

TreeSeries signed_tree_series(int max_weight) {
    TreeSeries s(max_weight);
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            s.add_term(t.word(), t.internal_count() % 2 == 0 ? 1 : -1);
    return s;
}

TreeSeries kappa_series(int max_weight) {
    TreeSeries s = TreeSeries::unit(max_weight);
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& t : enumerate_trees(TreeKind::prime, w))
            s.add_term(t.word(), t.internal_count() % 2 == 1 ? 1 : -1);
    return s;
}

std::string TreeSeries::str() const {
    std::vector<std::pair<std::string, Rat>> parts;
    for (const auto& [w, c] : sorted_terms()) {
        std::ostringstream os;
        os << "S[";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) os << ",";
            os << int(w[i]);
        }
        os << "]";
        parts.emplace_back(os.str(), c);
    }
    return format_linear(parts);
}

TreeSeries left_directed_series(int max_weight) {
    TreeSeries s(max_weight);
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& t : enumerate_trees(TreeKind::left_directed, w)) s.add_term(t.word(), 1);
    return s;
}

} // namespace sct
