#include "sct/hopf.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace sct {

namespace {

int word_weight_of(const Word& w) {
    int zeros = 0;
    for (Sym s : w) zeros += s == 0;
    return zeros - 1;
}

} // namespace

DecTree undecorated(const Word& shape) {
    return {shape, std::vector<std::string>(word_weight_of(shape))};
}

DecTree decorate(const Word& shape, std::vector<std::string> labels) {
    if (int(labels.size()) != word_weight_of(shape))
        throw std::invalid_argument("label count must equal the tree weight");
    return {shape, std::move(labels)};
}

bool dectree_less(const DecTree& a, const DecTree& b) {
    if (a.shape != b.shape) return word_less(a.shape, b.shape);
    return a.labels < b.labels;
}

int forest_weight(const DecForest& f) {
    int w = 0;
    for (const auto& t : f) w += int(t.labels.size());
    return w;
}

bool forest_less(const DecForest& a, const DecForest& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), dectree_less);
}

bool TensorPairLess::operator()(const TensorPair& a, const TensorPair& b) const {
    if (forest_less(a.first, b.first)) return true;
    if (forest_less(b.first, a.first)) return false;
    return forest_less(a.second, b.second);
}

namespace {

struct NodeChoice {
    Word trunk;
    std::vector<Word> parts;
    std::vector<std::pair<int, int>> part_sectors;
};

// choices for the subtree at pos: cut its root, or recurse independently
// into the children; pos and next_leaf advance past the subtree
std::vector<NodeChoice> node_choices(const Word& w, std::size_t& pos, int& next_leaf) {
    Sym s = w[pos];
    if (s == 0) {
        ++pos;
        ++next_leaf;
        return {NodeChoice{Word{0}, {}, {}}};
    }
    std::size_t start = pos;
    int leaf_lo = next_leaf;
    ++pos;
    int arity = int(s) + 1;
    std::vector<std::vector<NodeChoice>> kids;
    kids.reserve(arity);
    for (int i = 0; i < arity; ++i) kids.push_back(node_choices(w, pos, next_leaf));
    Word sub(w.begin() + start, w.begin() + pos);
    int leaf_hi = next_leaf;

    std::vector<NodeChoice> out;
    out.push_back(NodeChoice{Word{0}, {sub}, {{leaf_lo, leaf_hi - 1}}});
    std::vector<std::size_t> idx(kids.size(), 0);
    while (true) {
        NodeChoice combo;
        combo.trunk.push_back(s);
        for (std::size_t i = 0; i < kids.size(); ++i) {
            const NodeChoice& ch = kids[i][idx[i]];
            combo.trunk.insert(combo.trunk.end(), ch.trunk.begin(), ch.trunk.end());
            combo.parts.insert(combo.parts.end(), ch.parts.begin(), ch.parts.end());
            combo.part_sectors.insert(combo.part_sectors.end(), ch.part_sectors.begin(),
                                      ch.part_sectors.end());
        }
        out.push_back(std::move(combo));
        std::size_t i = 0;
        while (i < kids.size() && ++idx[i] == kids[i].size()) {
            idx[i] = 0;
            ++i;
        }
        if (i == kids.size()) break;
    }
    return out;
}

} // namespace

const std::vector<ShapeCut>& enumerate_cuts(const Word& shape) {
    static std::mutex mu;
    static std::unordered_map<Word, std::vector<ShapeCut>, WordHash> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;

    int n = word_weight_of(shape);
    std::vector<ShapeCut> cuts;
    std::size_t pos = 0;
    int next_leaf = 0;
    for (NodeChoice& ch : node_choices(shape, pos, next_leaf)) {
        bool rightmost =
            ch.part_sectors.empty() || ch.part_sectors.back().second < n;
        cuts.push_back(ShapeCut{std::move(ch.trunk), std::move(ch.parts),
                                std::move(ch.part_sectors), rightmost});
    }
    return memo.emplace(shape, std::move(cuts)).first->second;
}

namespace detail {

DecTree cut_trunk_tree(const DecTree& t, const ShapeCut& cut) {
    std::vector<char> taken(t.labels.size(), 0);
    for (auto [lo, hi] : cut.part_sectors)
        for (int s = lo; s < hi; ++s) taken[s] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < t.labels.size(); ++i)
        if (!taken[i]) labels.push_back(t.labels[i]);
    return {cut.trunk, std::move(labels)};
}

DecForest cut_part_forest(const DecTree& t, const ShapeCut& cut) {
    DecForest out;
    for (std::size_t i = 0; i < cut.parts.size(); ++i) {
        auto [lo, hi] = cut.part_sectors[i];
        out.push_back({cut.parts[i],
                       std::vector<std::string>(t.labels.begin() + lo, t.labels.begin() + hi)});
    }
    return out;
}

} // namespace detail

namespace {

const Word kLeafWord{0};

// fold one tree's cuts into the running tensor sum
TensorSum extend_tensor(const TensorSum& acc, const DecTree& t,
                        const std::vector<const ShapeCut*>& cuts) {
    TensorSum next;
    for (const ShapeCut* cut : cuts) {
        DecTree trunk = detail::cut_trunk_tree(t, *cut);
        DecForest parts = detail::cut_part_forest(t, *cut);
        for (const auto& [pair, c] : acc) {
            TensorPair np = pair;
            if (trunk.shape != kLeafWord) np.first.push_back(trunk);
            np.second.insert(np.second.end(), parts.begin(), parts.end());
            next[np] += c;
        }
    }
    return next;
}

std::vector<const ShapeCut*> cut_ptrs(const Word& shape) {
    std::vector<const ShapeCut*> out;
    for (const ShapeCut& c : enumerate_cuts(shape)) out.push_back(&c);
    return out;
}

} // namespace

TensorSum coproduct(const DecForest& f) {
    TensorSum acc;
    acc[{DecForest{}, DecForest{}}] = 1;
    for (const auto& t : f) acc = extend_tensor(acc, t, cut_ptrs(t.shape));
    return acc;
}

TensorSum coproduct_half(const DecForest& f, HalfSide side) {
    if (f.empty())
        throw std::invalid_argument("half coproduct is defined on positive weight only");
    TensorSum acc;
    acc[{DecForest{}, DecForest{}}] = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
        // the rightmost leaf of the forest lives in the last tree
        bool guarded = i + 1 == f.size();
        std::vector<const ShapeCut*> cuts;
        for (const ShapeCut& c : enumerate_cuts(f[i].shape)) {
            bool keep = !guarded || (side == HalfSide::prec ? c.rightmost_in_trunk
                                                            : !c.rightmost_in_trunk);
            if (keep) cuts.push_back(&c);
        }
        acc = extend_tensor(acc, f[i], cuts);
    }
    return acc;
}

TensorSum coproduct_reduced(const DecForest& f) {
    if (f.empty())
        throw std::invalid_argument("reduced coproduct is defined on positive weight only");
    TensorSum out = coproduct(f);
    out.erase({DecForest{}, f});
    out.erase({f, DecForest{}});
    return out;
}

TensorSum coproduct_half_reduced(const DecForest& f, HalfSide side) {
    TensorSum out = coproduct_half(f, side);
    if (side == HalfSide::prec)
        out.erase({f, DecForest{}});
    else
        out.erase({DecForest{}, f});
    return out;
}

Poly moment_of_word(const std::vector<std::string>& w) {
    if (w.empty()) throw std::invalid_argument("moment of the empty word");
    std::string name = "m[";
    for (const auto& a : w) name += a;
    name += "]";
    return Poly::var(name);
}

LinearForm<Poly> corolla_moment_character() {
    return LinearForm<Poly>::character([](const DecTree& t) {
        if (t.labels.empty()) return Poly::constant(1);
        SchroederTree shape(t.shape, SchroederTree::raw_tag{});
        if (!is_corolla(shape)) return Poly();
        return moment_of_word(t.labels);
    });
}

LinearForm<Poly> prime_cumulant_form() {
    return LinearForm<Poly>::infinitesimal([](const DecTree& t) {
        if (t.labels.empty()) return Poly();
        SchroederTree shape(t.shape, SchroederTree::raw_tag{});
        if (!is_prime(shape)) return Poly();
        Poly out = Poly::constant(shape.internal_count() % 2 == 1 ? 1 : -1);
        for (const auto& view : sector_views(shape)) {
            std::vector<std::string> word;
            for (int s : view) word.push_back(t.labels[s - 1]);
            out = out * moment_of_word(word);
        }
        return out;
    });
}

bool segmented_less(const SegmentedWord& a, const SegmentedWord& b) { return a < b; }

bool SegTensorPairLess::operator()(const SegTensorPair& a, const SegTensorPair& b) const {
    return a < b;
}

namespace {

// subsets of one word: the chosen subword tensor the complement runs
std::vector<std::pair<LetterWord, SegmentedWord>> word_splits(const LetterWord& w, bool prec) {
    int n = int(w.size());
    std::vector<std::pair<LetterWord, SegmentedWord>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (prec && !((mask >> (n - 1)) & 1)) continue;
        LetterWord chosen;
        SegmentedWord runs;
        LetterWord run;
        for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                chosen.push_back(w[i]);
                if (!run.empty()) runs.push_back(std::move(run));
                run.clear();
            } else {
                run.push_back(w[i]);
            }
        }
        if (!run.empty()) runs.push_back(std::move(run));
        out.emplace_back(std::move(chosen), std::move(runs));
    }
    return out;
}

} // namespace

SegTensorSum efp_coproduct(const SegmentedWord& x, EfpMode mode) {
    if (x.empty() && mode == EfpMode::prec)
        throw std::invalid_argument("half coproduct is defined on positive length only");
    SegTensorSum acc;
    acc[{SegmentedWord{}, SegmentedWord{}}] = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].empty()) throw std::invalid_argument("segments must be nonempty");
        // the distinguished letter is the last letter of the last segment
        bool prec = mode == EfpMode::prec && i + 1 == x.size();
        SegTensorSum next;
        for (const auto& [chosen, runs] : word_splits(x[i], prec))
            for (const auto& [pair, c] : acc) {
                SegTensorPair np = pair;
                if (!chosen.empty()) np.first.push_back(chosen);
                np.second.insert(np.second.end(), runs.begin(), runs.end());
                next[np] += c;
            }
        acc = std::move(next);
    }
    return acc;
}

ForestSum iota(const LetterWord& w) {
    if (w.empty()) throw std::invalid_argument("iota of the empty word");
    ForestSum out;
    for (const SchroederTree& t : enumerate_trees(TreeKind::all, int(w.size())))
        out[DecForest{DecTree{t.word(), w}}] = 1;
    return out;
}

ForestSum iota(const SegmentedWord& x) {
    ForestSum acc;
    acc[DecForest{}] = 1;
    for (const LetterWord& seg : x) {
        ForestSum next;
        ForestSum image = iota(seg);
        for (const auto& [f, c] : acc)
            for (const auto& [g, d] : image) {
                DecForest fg = f;
                fg.insert(fg.end(), g.begin(), g.end());
                next[fg] += c * d;
            }
        acc = std::move(next);
    }
    return acc;
}

Poly efp_solve_moment(const LetterWord& w, const std::function<Poly(const LetterWord&)>& kappa) {
    if (w.empty()) throw std::invalid_argument("moment of the empty word");
    Poly out;
    for (const auto& [chosen, runs] : word_splits(w, true)) {
        Poly term = kappa(chosen);
        for (const LetterWord& r : runs) term = term * efp_solve_moment(r, kappa);
        out += term;
    }
    return out;
}

namespace {

Poly extract_rec(const LetterWord& w, const std::function<Poly(const LetterWord&)>& phi,
                 std::map<LetterWord, Poly>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    Poly out = phi(w);
    for (const auto& [chosen, runs] : word_splits(w, true)) {
        if (chosen.size() == w.size()) continue;
        Poly term = extract_rec(chosen, phi, memo);
        for (const LetterWord& r : runs) term = term * phi(r);
        out -= term;
    }
    memo.emplace(w, out);
    return out;
}

} // namespace

Poly efp_extract_cumulant(const LetterWord& w,
                          const std::function<Poly(const LetterWord&)>& phi) {
    if (w.empty()) throw std::invalid_argument("cumulant of the empty word");
    std::map<LetterWord, Poly> memo;
    return extract_rec(w, phi, memo);
}

} // namespace sct
