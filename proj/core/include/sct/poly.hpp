#ifndef SCT_POLY_HPP
#define SCT_POLY_HPP

#include "sct/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sct {

// commutative polynomial ring over Rat in named indeterminates ("m1", "m[a2a3]", "e2")

using VarId = std::uint32_t;

VarId intern_var(const std::string& name);
const std::string& var_name(VarId v);
bool var_less(VarId a, VarId b); // natural order on names: m1 < m2 < m10

// factors sorted ascending by var_less, exponents > 0
using Monomial = std::vector<std::pair<VarId, int>>;

// display order: more factors first, then the descending factor lists lexicographically
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly var(const std::string& name);

    const std::map<Monomial, Rat, MonomialLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Monomial m, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, Poly p);
    Poly pow(int k) const;
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // ring homomorphism determined by the images of the variables
    Poly substituted(const std::function<Poly(VarId)>& image) const;

    std::string str() const;

private:
    std::map<Monomial, Rat, MonomialLess> terms_;
};

} // namespace sct

#endif
