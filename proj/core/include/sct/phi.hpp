#ifndef SCT_PHI_HPP
#define SCT_PHI_HPP

#include "sct/poly.hpp"
#include "sct/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace sct {

// noncommutative words in letters and phi(...) wrappers, with rational coefficients

struct PhiAtom;
using PhiProduct = std::vector<PhiAtom>; // empty product = 1

struct PhiAtom {
    std::string letter;  // nonempty: a letter atom; else a phi wrapper
    PhiProduct inner;    // argument of the wrapper, never empty

    bool is_letter() const { return !letter.empty(); }
    bool operator==(const PhiAtom& o) const;
};

bool atom_less(const PhiAtom& a, const PhiAtom& b);
bool product_less(const PhiProduct& a, const PhiProduct& b);

struct PhiProductLess {
    bool operator()(const PhiProduct& a, const PhiProduct& b) const { return product_less(a, b); }
};

PhiAtom letter_atom(std::string name);
PhiAtom phi_wrap(PhiProduct inner);

class PhiPoly {
public:
    PhiPoly() = default;
    static PhiPoly one();
    static PhiPoly monomial(PhiProduct p, const Rat& c = 1);

    const std::map<PhiProduct, Rat, PhiProductLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(PhiProduct p, const Rat& c);

    PhiPoly& operator+=(const PhiPoly& o);
    PhiPoly& operator-=(const PhiPoly& o);
    friend PhiPoly operator+(PhiPoly a, const PhiPoly& b) { return a += b; }
    friend PhiPoly operator-(PhiPoly a, const PhiPoly& b) { return a -= b; }
    friend PhiPoly operator*(const PhiPoly& a, const PhiPoly& b); // concatenation
    friend PhiPoly operator*(const Rat& c, PhiPoly p);
    bool operator==(const PhiPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<PhiProduct, Rat, PhiProductLess> terms_;
};

// moves phi factors sitting at either end of a wrapper argument out of the
// wrapper, in place, to closure: phi(phi(x)y) = phi(x)phi(y), phi(y phi(x)) = phi(y)phi(x)
PhiPoly bimodule_normalize(const PhiPoly& e);

// collapses every wrapper to the commutative indeterminate m[its letters];
// defined on products of wrappers (a bare top-level letter has no scalar image)
Poly scalar_image(const PhiPoly& e);

std::string product_str(const PhiProduct& p);

} // namespace sct

#endif
