#ifndef SCT_SYMFUN_HPP
#define SCT_SYMFUN_HPP

#include "sct/poly.hpp"

#include <vector>

namespace sct {

// truncated power series in one variable, c[k] holds the coefficient of t^k
struct PowerSeries {
    std::vector<Poly> c;

    explicit PowerSeries(int order = 0) : c(std::size_t(order) + 1) {}
    int order() const { return int(c.size()) - 1; }
    bool operator==(const PowerSeries& o) const { return c == o.c; }

    std::string str() const;
};

// truncated to the smaller order of the two factors
PowerSeries series_product(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_pow(const PowerSeries& a, int k);

// multiplicative inverse, the constant term must be a nonzero rational
PowerSeries series_inverse(const PowerSeries& a);

// f(g(t)), g must have zero constant term
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);

PowerSeries series_identity(int order);

// compositional inverse of f = c1 t + c2 t^2 + ..., c1 a nonzero rational
PowerSeries revert(const PowerSeries& f);

// 1 + m1 t + ... + mN t^N
PowerSeries moment_series(int N);

// coefficients of the inverse relation t = u H*(u) where u = t H(t),
// H(t) = 1 + h[0] t + ... + h[N-1] t^N; the output lists h*_1 .. h*_N
std::vector<Poly> star_alphabet(const std::vector<Poly>& h);

// star_alphabet applied to the moment alphabet m1 .. mN
std::vector<Poly> hstar(int N);

// the same coefficient by residue extraction, for cross checking
Poly hstar_lagrange(int n);

// e*_1 .. e*_N in the moments, via E*(t) H*(-t) = 1
std::vector<Poly> estar(int N);

// e_1 .. e_N in the moments, via E(t) H(-t) = 1
std::vector<Poly> elementary_in_m(int N);

// free cumulants k_1 .. k_N in the moments: 1 + sum k_n u^n = 1 / H*(u)
std::vector<Poly> classical_cumulants(int N);

// -e*_n as an explicit partition sum in the indeterminates e1 .. en, n >= 2
Poly estar_formula(int n);

} // namespace sct

#endif
