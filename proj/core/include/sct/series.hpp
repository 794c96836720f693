#ifndef SCT_SERIES_HPP
#define SCT_SERIES_HPP

#include "sct/rational.hpp"
#include "sct/tree.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace sct {

// formal sum of trees with rational coefficients, truncated above max_weight
class TreeSeries {
public:
    explicit TreeSeries(int max_weight) : cap_(max_weight) {}
    static TreeSeries unit(int max_weight);   // the bare leaf

    int max_weight() const { return cap_; }
    const std::unordered_map<Word, Rat, WordHash>& terms() const { return terms_; }
    Rat coeff(const Word& w) const;
    Rat coeff(const SchroederTree& t) const { return coeff(t.word()); }
    void add_term(const Word& w, const Rat& c);   // drops weights above the cap
    TreeSeries truncated(int max_weight) const;

    // nonzero terms of one weight, in canonical tree order
    std::vector<std::pair<Word, Rat>> graded(int weight) const;
    // all nonzero terms, weight by weight, canonical order
    std::vector<std::pair<Word, Rat>> sorted_terms() const;

    bool operator==(const TreeSeries& o) const { return cap_ == o.cap_ && terms_ == o.terms_; }

    // "S[0] + S[1,0,0] - S[1,1,0,0,0]", canonical order
    std::string str() const;

private:
    int cap_;
    std::unordered_map<Word, Rat, WordHash> terms_;
};

inline int word_weight(const Word& w) {
    int z = 0;
    for (Sym s : w) z += (s == 0);
    return z - 1;
}

TreeSeries add(const TreeSeries& a, const TreeSeries& b);
TreeSeries sub(const TreeSeries& a, const TreeSeries& b);
TreeSeries scale(const Rat& c, const TreeSeries& a);

// operadic composition: every leaf of p receives a copy of q
TreeSeries compose(const TreeSeries& p, const TreeSeries& q, int cap = -1);

// half products of the composition: dashv grafts g on all leaves except the
// rightmost one, vdash on the rightmost leaf only; dashv(f,g) + corrections
// recover compose via vdash(dashv(f,g), g) = compose(f,g)
TreeSeries dashv(const TreeSeries& f, const TreeSeries& g, int cap = -1);
TreeSeries vdash(const TreeSeries& f, const TreeSeries& g, int cap = -1);

// inverse for composition; p must have leaf coefficient 1
TreeSeries comp_inverse(const TreeSeries& p);

// inverse in the vdash monoid; x must have leaf coefficient 1
TreeSeries vdash_inverse(const TreeSeries& x);

// unique solution of h = dashv(p, h); p must have leaf coefficient 1
TreeSeries dashv_fixpoint(const TreeSeries& p);

// dashv(f, comp_inverse(f))
TreeSeries r_transform(const TreeSeries& f);

// named series: the corolla series, its composition inverse as a signed sum
// over all trees, the signed sum of prime trees, and the left-directed sum
TreeSeries corolla_series(int max_weight);       // leaf + one corolla per weight
TreeSeries signed_tree_series(int max_weight);   // all trees, (-1)^(internal nodes)
TreeSeries kappa_series(int max_weight);         // prime trees, (-1)^(internal nodes - 1)
TreeSeries left_directed_series(int max_weight); // left-directed trees, all +1

} // namespace sct

#endif
