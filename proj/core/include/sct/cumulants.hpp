#ifndef SCT_CUMULANTS_HPP
#define SCT_CUMULANTS_HPP

#include "sct/ncpart.hpp"
#include "sct/phi.hpp"
#include "sct/poly.hpp"
#include "sct/tree.hpp"

#include <string>
#include <vector>

namespace sct {

// a1..an
std::vector<std::string> letter_word(int n);

enum class EvalMode { nested, bimodule };

// clear-view reading of a decorated tree: each internal node wraps the
// interleaving of its children's values with its visible sector letters
PhiPoly eval_tree(const SchroederTree& t, const std::vector<std::string>& w,
                  EvalMode mode = EvalMode::nested);

// product of m[view letters] over the internal nodes
Poly eval_tree_scalar(const SchroederTree& t, const std::vector<std::string>& w);

// mixed cumulant: sum over the prime trees of weight n, sign (-1)^(i(t)-1)
PhiPoly kappa_eval(int n, EvalMode mode = EvalMode::nested);
Poly kappa_scalar(const std::vector<std::string>& w);
Poly kappa_eval_scalar(int n);

// Moebius sum over the noncrossing partition lattice; independent of the
// tree machinery
Poly speicher_kappa(int n);

// sum_{pi in NC_n} prod_B kappa(letters of B); equals m[a1..an]
Poly moments_from_kappa(int n);

// rewrites a tree evaluation to the right-directed tree carrying the same
// block structure; the scalar image is unchanged
PhiPoly right_directed_form(const PhiPoly& e);

// sign-reversing local move on prime trees of weight j+k, scanned upward
// from the leaf separating the first j sectors from the last k
SchroederTree cluster_involution(const SchroederTree& t, int j, int k);

// evaluation with every view split at the b/c sector boundary, sectors
// 1..j reading b1..bj and sectors j+1..j+k reading c1..ck
Poly factored_eval(const SchroederTree& t, int j, int k);
Poly factored_kappa(int j, int k);

// univariate layer: views contribute m_{size}
Poly univariate_cumulant(int n);
Poly unsigned_polynomial(int n);

} // namespace sct

#endif
