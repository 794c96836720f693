#include "sct/cumulants.hpp"

#include "sct/textio.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace sct {

std::vector<std::string> letter_word(int n) {
    std::vector<std::string> w;
    w.reserve(std::size_t(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) w.push_back("a" + std::to_string(i));
    return w;
}

namespace {

// contribution of a subtree to its parent's argument: a leaf contributes
// nothing, an internal node one wrapper; leaf counts the leaves consumed
PhiProduct eval_node(const SchroederTree& t, const std::vector<std::string>& w, int& leaf) {
    if (t.is_leaf()) {
        ++leaf;
        return {};
    }
    PhiProduct arg;
    auto ch = t.children();
    for (std::size_t s = 0; s < ch.size(); ++s) {
        if (s > 0) arg.push_back(letter_atom(w[std::size_t(leaf - 1)]));
        PhiProduct sub = eval_node(ch[s], w, leaf);
        arg.insert(arg.end(), sub.begin(), sub.end());
    }
    return {phi_wrap(std::move(arg))};
}

Rat prime_sign(const SchroederTree& t) { return t.internal_count() % 2 == 1 ? 1 : -1; }

} // namespace

PhiPoly eval_tree(const SchroederTree& t, const std::vector<std::string>& w, EvalMode mode) {
    if (int(w.size()) != t.weight())
        throw std::invalid_argument("word length must equal the tree weight");
    if (t.is_leaf()) return PhiPoly::one();
    int leaf = 0;
    PhiPoly e = PhiPoly::monomial(eval_node(t, w, leaf));
    return mode == EvalMode::bimodule ? bimodule_normalize(e) : e;
}

Poly eval_tree_scalar(const SchroederTree& t, const std::vector<std::string>& w) {
    if (int(w.size()) != t.weight())
        throw std::invalid_argument("word length must equal the tree weight");
    Poly out = Poly::constant(1);
    for (const auto& view : sector_views(t)) {
        std::string name = "m[";
        for (int s : view) name += w[std::size_t(s - 1)];
        name += "]";
        out = out * Poly::var(name);
    }
    return out;
}

PhiPoly kappa_eval(int n, EvalMode mode) {
    if (n < 1) throw std::invalid_argument("cumulants start at one letter");
    std::vector<std::string> w = letter_word(n);
    PhiPoly out;
    for (const SchroederTree& t : enumerate_trees(TreeKind::prime, n))
        out += prime_sign(t) * eval_tree(t, w, mode);
    return out;
}

Poly kappa_scalar(const std::vector<std::string>& w) {
    if (w.empty()) throw std::invalid_argument("cumulants start at one letter");
    Poly out;
    for (const SchroederTree& t : enumerate_trees(TreeKind::prime, int(w.size())))
        out += prime_sign(t) * eval_tree_scalar(t, w);
    return out;
}

Poly kappa_eval_scalar(int n) { return kappa_scalar(letter_word(n)); }

Poly speicher_kappa(int n) {
    if (n < 1) throw std::invalid_argument("cumulants start at one letter");
    std::vector<std::string> w = letter_word(n);
    Partition top = Partition::one_block(n);
    Poly out;
    for (const Partition& p : enumerate_nc(n)) {
        Poly term = Poly::constant(Rat(long(moebius_nc(p, top))));
        for (const auto& block : p.blocks()) {
            std::string name = "m[";
            for (int i : block) name += w[std::size_t(i - 1)];
            name += "]";
            term = term * Poly::var(name);
        }
        out += term;
    }
    return out;
}

Poly moments_from_kappa(int n) {
    if (n < 1) throw std::invalid_argument("cumulants start at one letter");
    std::vector<std::string> w = letter_word(n);
    Poly out;
    for (const Partition& p : enumerate_nc(n)) {
        Poly term = Poly::constant(1);
        for (const auto& block : p.blocks()) {
            std::vector<std::string> sub;
            for (int i : block) sub.push_back(w[std::size_t(i - 1)]);
            term = term * kappa_scalar(sub);
        }
        out += term;
    }
    return out;
}

namespace {

void collect_blocks(const PhiProduct& p, std::vector<std::vector<std::string>>& blocks) {
    for (const PhiAtom& a : p) {
        if (a.is_letter()) continue;
        std::vector<std::string> block;
        for (const PhiAtom& b : a.inner)
            if (b.is_letter()) block.push_back(b.letter);
        if (block.empty())
            throw std::invalid_argument("a wrapper must see at least one letter");
        blocks.push_back(std::move(block));
        collect_blocks(a.inner, blocks);
    }
}

} // namespace

PhiPoly right_directed_form(const PhiPoly& e) {
    if (e.terms().size() != 1)
        throw std::invalid_argument("right directed form needs a single product of wrappers");
    const auto& [prod, coeff] = *e.terms().begin();
    for (const PhiAtom& a : prod)
        if (a.is_letter())
            throw std::invalid_argument("right directed form needs a single product of wrappers");

    std::vector<std::vector<std::string>> letter_blocks;
    collect_blocks(prod, letter_blocks);

    std::vector<std::string> w;
    for (const auto& block : letter_blocks) w.insert(w.end(), block.begin(), block.end());
    std::sort(w.begin(), w.end(), natural_less);
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw std::invalid_argument("letters must be distinct");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < w.size(); ++i) index[w[i]] = int(i) + 1;

    std::vector<std::vector<int>> blocks;
    for (const auto& block : letter_blocks) {
        std::vector<int> b;
        for (const auto& l : block) b.push_back(index[l]);
        blocks.push_back(std::move(b));
    }
    Partition p = Partition::from_blocks(int(w.size()), std::move(blocks));
    if (!p.is_noncrossing())
        throw std::invalid_argument("block structure must be noncrossing");

    return coeff * eval_tree(nc_to_rdt(p), w, EvalMode::nested);
}

namespace {

enum class MoveState { none, pending, done };

struct MoveResult {
    SchroederTree tree;
    MoveState state;
};

// scans the path edges from the distinguished leaf upward; pending marks a
// rightmost path edge waiting for a leftmost edge above it
MoveResult scan_up(const SchroederTree& v, int target) {
    std::vector<SchroederTree> ch = v.children();
    int p = int(ch.size());
    int i0 = 0, off = target;
    while (off >= ch[std::size_t(i0)].degree()) {
        off -= ch[std::size_t(i0)].degree();
        ++i0;
    }
    const SchroederTree& x = ch[std::size_t(i0)];

    MoveState below = MoveState::none;
    if (!x.is_leaf()) {
        MoveResult r = scan_up(x, off);
        if (r.state == MoveState::done) {
            ch[std::size_t(i0)] = r.tree;
            return {SchroederTree::node(ch), MoveState::done};
        }
        below = r.state;
    }
    if (below == MoveState::pending && i0 == 0) {
        // merge: absorb the first child, keeping its children in front
        std::vector<SchroederTree> merged = x.children();
        merged.insert(merged.end(), ch.begin() + 1, ch.end());
        return {SchroederTree::node(merged), MoveState::done};
    }
    if (i0 > 0 && i0 < p - 1) {
        // split below the middle edge
        std::vector<SchroederTree> low(ch.begin(), ch.begin() + i0 + 1);
        std::vector<SchroederTree> high;
        high.push_back(SchroederTree::node(low));
        high.insert(high.end(), ch.begin() + i0 + 1, ch.end());
        return {SchroederTree::node(high), MoveState::done};
    }
    return {v, i0 == p - 1 ? MoveState::pending : MoveState::none};
}

} // namespace

SchroederTree cluster_involution(const SchroederTree& t, int j, int k) {
    if (j < 1 || k < 1 || j + k != t.weight())
        throw std::invalid_argument("split must cover the weight with nonempty halves");
    if (!is_prime(t))
        throw std::invalid_argument("the local move acts on prime trees");
    MoveResult r = scan_up(t, j);
    if (r.state != MoveState::done)
        throw std::logic_error("no local move applies");
    return r.tree;
}

Poly factored_eval(const SchroederTree& t, int j, int k) {
    if (j < 1 || k < 1 || j + k != t.weight())
        throw std::invalid_argument("split must cover the weight with nonempty halves");
    Poly out = Poly::constant(1);
    for (const auto& view : sector_views(t)) {
        std::string left = "m[", right = "m[";
        bool any_left = false, any_right = false;
        for (int s : view) {
            if (s <= j) {
                left += "b" + std::to_string(s);
                any_left = true;
            } else {
                right += "c" + std::to_string(s - j);
                any_right = true;
            }
        }
        if (any_left) out = out * Poly::var(left + "]");
        if (any_right) out = out * Poly::var(right + "]");
    }
    return out;
}

Poly factored_kappa(int j, int k) {
    Poly out;
    for (const SchroederTree& t : enumerate_trees(TreeKind::prime, j + k))
        out += prime_sign(t) * factored_eval(t, j, k);
    return out;
}

namespace {

Poly univariate_sum(int n, bool signed_terms) {
    if (n < 1) throw std::invalid_argument("cumulants start at one letter");
    Poly out;
    for (const SchroederTree& t : enumerate_trees(TreeKind::prime, n)) {
        Poly term = signed_terms ? Poly::constant(prime_sign(t)) : Poly::constant(1);
        for (const auto& view : sector_views(t))
            term = term * Poly::var("m" + std::to_string(view.size()));
        out += term;
    }
    return out;
}

} // namespace

Poly univariate_cumulant(int n) { return univariate_sum(n, true); }

Poly unsigned_polynomial(int n) { return univariate_sum(n, false); }

} // namespace sct
