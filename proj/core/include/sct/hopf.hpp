#ifndef SCT_HOPF_HPP
#define SCT_HOPF_HPP

#include "sct/phi.hpp"
#include "sct/poly.hpp"
#include "sct/rational.hpp"
#include "sct/tree.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sct {

// tree with its sectors labelled left to right; empty strings = undecorated
struct DecTree {
    Word shape;
    std::vector<std::string> labels;
    bool operator==(const DecTree&) const = default;
};
DecTree undecorated(const Word& shape);
DecTree decorate(const Word& shape, std::vector<std::string> labels);
bool dectree_less(const DecTree& a, const DecTree& b);

inline bool operator<(const DecTree& a, const DecTree& b) { return dectree_less(a, b); }
struct DecTreeLess {
    bool operator()(const DecTree& a, const DecTree& b) const { return dectree_less(a, b); }
};

// free monomial in trees of positive weight; empty = unit
using DecForest = std::vector<DecTree>;
int forest_weight(const DecForest& f);
bool forest_less(const DecForest& a, const DecForest& b);
struct DecForestLess {
    bool operator()(const DecForest& a, const DecForest& b) const { return forest_less(a, b); }
};
using ForestSum = std::map<DecForest, Rat, DecForestLess>;

// an admissible cut picks internal vertices, at most one on any root-leaf
// path; the parts are the cut subtrees left to right, the trunk is what
// remains with each cut subtree collapsed to a leaf
struct ShapeCut {
    Word trunk;
    std::vector<Word> parts;
    std::vector<std::pair<int, int>> part_sectors; // 0-based range [lo,hi) per part
    bool rightmost_in_trunk;
};
const std::vector<ShapeCut>& enumerate_cuts(const Word& shape);

using TensorPair = std::pair<DecForest, DecForest>;
struct TensorPairLess {
    bool operator()(const TensorPair& a, const TensorPair& b) const;
};
using TensorSum = std::map<TensorPair, Rat, TensorPairLess>;

enum class HalfSide { prec, succ };

TensorSum coproduct(const DecForest& f);
// prec keeps the cuts leaving the first tree's rightmost leaf in the trunk,
// succ is the rest; both throw on the unit forest
TensorSum coproduct_half(const DecForest& f, HalfSide side);
TensorSum coproduct_reduced(const DecForest& f);
TensorSum coproduct_half_reduced(const DecForest& f, HalfSide side);

// scalar one for the coefficient rings a linear form can take values in
template <class Ring> struct RingOne;
template <> struct RingOne<Rat> {
    static Rat value() { return 1; }
};
template <> struct RingOne<Poly> {
    static Poly value() { return Poly::constant(1); }
};
template <> struct RingOne<PhiPoly> {
    static PhiPoly value() { return PhiPoly::one(); }
};

enum class FormKind { general, character, infinitesimal };

// linear form on decorated forests; characters are multiplicative with
// value one on the unit, infinitesimal characters vanish on the unit and
// on products of two or more trees
template <class Ring>
class LinearForm {
public:
    static LinearForm epsilon() {
        return LinearForm(FormKind::character, [](const DecTree&) { return Ring{}; });
    }
    static LinearForm character(std::function<Ring(const DecTree&)> on_tree) {
        return LinearForm(FormKind::character, std::move(on_tree));
    }
    static LinearForm infinitesimal(std::function<Ring(const DecTree&)> on_tree) {
        return LinearForm(FormKind::infinitesimal, std::move(on_tree));
    }
    static LinearForm general(std::function<Ring(const DecForest&)> on_forest) {
        LinearForm f(FormKind::general, {});
        f.on_forest_ = std::move(on_forest);
        return f;
    }

    FormKind kind() const { return kind_; }

    Ring operator()(const DecForest& f) const {
        if (kind_ == FormKind::general) return on_forest_(f);
        if (f.empty()) return kind_ == FormKind::character ? RingOne<Ring>::value() : Ring{};
        if (f.size() == 1) return on_tree_(f[0]);
        if (kind_ == FormKind::infinitesimal) return Ring{};
        Ring out = RingOne<Ring>::value();
        for (const auto& t : f) out = out * on_tree_(t);
        return out;
    }
    Ring operator()(const DecTree& t) const { return (*this)(DecForest{t}); }

private:
    LinearForm(FormKind k, std::function<Ring(const DecTree&)> f)
        : kind_(k), on_tree_(std::move(f)) {}
    FormKind kind_;
    std::function<Ring(const DecTree&)> on_tree_;
    std::function<Ring(const DecForest&)> on_forest_;
};

enum class ConvMode { full, prec, succ };

template <class Ring>
LinearForm<Ring> convolve(LinearForm<Ring> f, LinearForm<Ring> g, ConvMode mode) {
    return LinearForm<Ring>::general([f, g, mode](const DecForest& x) {
        if (x.empty()) return mode == ConvMode::full ? f(x) * g(x) : Ring{};
        TensorSum d = mode == ConvMode::full
                          ? coproduct(x)
                          : coproduct_half(x, mode == ConvMode::prec ? HalfSide::prec
                                                                     : HalfSide::succ);
        Ring out{};
        for (const auto& [pair, c] : d) out = out + c * (f(pair.first) * g(pair.second));
        return out;
    });
}

namespace detail {

DecTree cut_trunk_tree(const DecTree& t, const ShapeCut& cut);
DecForest cut_part_forest(const DecTree& t, const ShapeCut& cut);

} // namespace detail

// the unique character with Phi = epsilon + kappa prec Phi
template <class Ring>
LinearForm<Ring> solve_character(const LinearForm<Ring>& kappa) {
    if (kappa.kind() != FormKind::infinitesimal)
        throw std::invalid_argument("solve_character needs an infinitesimal character");
    auto memo = std::make_shared<std::map<DecTree, Ring, DecTreeLess>>();
    auto self = std::make_shared<std::function<Ring(const DecTree&)>>();
    *self = [kappa, memo, self](const DecTree& t) -> Ring {
        auto it = memo->find(t);
        if (it != memo->end()) return it->second;
        Ring out{};
        for (const auto& cut : enumerate_cuts(t.shape)) {
            if (!cut.rightmost_in_trunk) continue;
            Ring term = kappa(detail::cut_trunk_tree(t, cut));
            for (const auto& part : detail::cut_part_forest(t, cut))
                term = term * (*self)(part);
            out = out + term;
        }
        memo->emplace(t, out);
        return out;
    };
    return LinearForm<Ring>::character([self](const DecTree& t) { return (*self)(t); });
}

// inverts solve_character: the infinitesimal character with
// Phi = epsilon + kappa prec Phi for the given character Phi
template <class Ring>
LinearForm<Ring> extract_cumulant(const LinearForm<Ring>& phi) {
    if (phi.kind() != FormKind::character)
        throw std::invalid_argument("extract_cumulant needs a character");
    auto memo = std::make_shared<std::map<DecTree, Ring, DecTreeLess>>();
    auto self = std::make_shared<std::function<Ring(const DecTree&)>>();
    *self = [phi, memo, self](const DecTree& t) -> Ring {
        auto it = memo->find(t);
        if (it != memo->end()) return it->second;
        Ring out = phi(t);
        for (const auto& cut : enumerate_cuts(t.shape)) {
            if (!cut.rightmost_in_trunk || cut.parts.empty()) continue;
            Ring term = (*self)(detail::cut_trunk_tree(t, cut));
            for (const auto& part : detail::cut_part_forest(t, cut)) term = term * phi(part);
            out = out - term;
        }
        memo->emplace(t, out);
        return out;
    };
    return LinearForm<Ring>::infinitesimal([self](const DecTree& t) { return (*self)(t); });
}

// moment variable m[a1a2...] of the scalar ring
Poly moment_of_word(const std::vector<std::string>& w);

// character sending a decorated corolla to the moment of its word and every
// other tree to zero
LinearForm<Poly> corolla_moment_character();

// infinitesimal character on prime trees: sign (-1)^(internal-1) times the
// product over internal vertices of the moments of their visible letters
LinearForm<Poly> prime_cumulant_form();

// word Hopf algebra on segmented words
using LetterWord = std::vector<std::string>;
using SegmentedWord = std::vector<LetterWord>;
bool segmented_less(const SegmentedWord& a, const SegmentedWord& b);
using SegTensorPair = std::pair<SegmentedWord, SegmentedWord>;
struct SegTensorPairLess {
    bool operator()(const SegTensorPair& a, const SegTensorPair& b) const;
};
using SegTensorSum = std::map<SegTensorPair, Rat, SegTensorPairLess>;

enum class EfpMode { full, prec };

// sum over position subsets S: the subword a_S tensor the segmented word of
// the complementary runs; prec keeps the subsets containing the last
// position of the first segment
SegTensorSum efp_coproduct(const SegmentedWord& x, EfpMode mode);

// sum of every tree shape of weight |w| decorated by w; multiplicative over
// segments
ForestSum iota(const LetterWord& w);
ForestSum iota(const SegmentedWord& x);

// word-level character equation: Phi(w) = sum over S containing the last
// position of kappa(a_S) times the product of Phi over the complement runs
Poly efp_solve_moment(const LetterWord& w, const std::function<Poly(const LetterWord&)>& kappa);
Poly efp_extract_cumulant(const LetterWord& w, const std::function<Poly(const LetterWord&)>& phi);

} // namespace sct

#endif
