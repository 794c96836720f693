#ifndef SCT_NSYM_HPP
#define SCT_NSYM_HPP

#include "sct/rational.hpp"
#include "sct/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sct {

// noncommutative symmetric functions in the complete (S), elementary (L) and
// ribbon (R) bases, plus the cumulant alphabet (K) as a display basis

using Composition = std::vector<int>; // parts >= 1, empty = the scalar index

int comp_weight(const Composition& I);

// degree ascending, then length ascending, then lexicographic descending
struct CompLess {
    bool operator()(const Composition& a, const Composition& b) const;
};

enum class NBasis { S, L, R, K };

class NSym {
public:
    explicit NSym(NBasis basis = NBasis::S, int cap = -1) : basis_(basis), cap_(cap) {}
    static NSym one(int cap = -1);
    static NSym gen(int n, int cap = -1); // S_n

    NBasis basis() const { return basis_; }
    int cap() const { return cap_; }
    const std::map<Composition, Rat, CompLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Composition& I) const;
    void add_term(Composition I, const Rat& c); // drops degrees beyond the cap

    NSym& operator+=(const NSym& o);
    NSym& operator-=(const NSym& o);
    friend NSym operator+(NSym a, const NSym& b) { return a += b; }
    friend NSym operator-(NSym a, const NSym& b) { return a -= b; }
    friend NSym operator*(const NSym& a, const NSym& b);
    friend NSym operator*(const Rat& c, NSym x);
    bool operator==(const NSym& o) const;

    NSym graded_part(int n) const;
    int top_degree() const;

    std::string str() const;

private:
    NBasis basis_;
    int cap_;
    std::map<Composition, Rat, CompLess> terms_;
};

// change of basis among S, L, R; the K tag is handled by expand_K below
NSym convert(const NSym& x, NBasis target);

// the ring automorphism S_n -> (-1)^n Lambda_n, returned in the S basis
NSym minus_A(const NSym& x);

// S^{i1,...,ir} -> S^{i1+1,...,ir}, 1 -> S_1, linear
NSym omega(const NSym& x);

// S (x) S tensor expansions
using CompPair = std::pair<Composition, Composition>;
struct CompPairLess {
    bool operator()(const CompPair& a, const CompPair& b) const;
};
using NSymTensor = std::map<CompPair, Rat, CompPairLess>;

NSymTensor delta1(const NSym& x, int cap = -1);
NSym antipode(const NSym& x);
NSym counit(const NSym& x);

// sigma_1 = sum of S_n, n <= cap
NSym sigma1(int cap);

// multiplicative inverse of a series with scalar term 1, truncated at cap
NSym mul_inverse(const NSym& x, int cap);

// the weight-graded solution of g = sum_n S_n g^n, truncated at cap
NSym lagrange_g(int cap);

enum class KMethod { solve, antipode_formula, ribbon_rule };

// 1 + K_1 + ... + K_cap in the S basis
NSym cumulant_K(int cap, KMethod method);

// composition whose descent set is the complement; involution
Composition mirror_conjugate(const Composition& I);

// S_n written in the cumulant alphabet (K-tagged result)
NSym s_in_K(int n);

// substitutes K^I by the matching product of cumulant polynomials
NSym expand_K(const NSym& x);

// tree series to NSym: each tree maps to S^(its word with the zeros deleted)
NSym project_to_nsym(const TreeSeries& p);

} // namespace sct

#endif
