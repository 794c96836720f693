#include "sct/phi.hpp"

#include "sct/textio.hpp"

#include <stdexcept>
#include <utility>

namespace sct {

bool PhiAtom::operator==(const PhiAtom& o) const {
    return letter == o.letter && inner == o.inner;
}

bool atom_less(const PhiAtom& a, const PhiAtom& b) {
    if (a.is_letter() != b.is_letter()) return a.is_letter(); // letters before wrappers
    if (a.is_letter()) return natural_less(a.letter, b.letter);
    return product_less(a.inner, b.inner);
}

bool product_less(const PhiProduct& a, const PhiProduct& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (atom_less(a[i], b[i])) return true;
        if (atom_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

PhiAtom letter_atom(std::string name) {
    if (name.empty()) throw std::invalid_argument("letter atom needs a name");
    return PhiAtom{std::move(name), {}};
}

PhiAtom phi_wrap(PhiProduct inner) {
    if (inner.empty()) throw std::invalid_argument("phi of an empty product");
    return PhiAtom{"", std::move(inner)};
}

PhiPoly PhiPoly::one() { return monomial({}, 1); }

PhiPoly PhiPoly::monomial(PhiProduct p, const Rat& c) {
    PhiPoly e;
    e.add_term(std::move(p), c);
    return e;
}

void PhiPoly::add_term(PhiProduct p, const Rat& c) {
    if (sct::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(p), c);
    if (!fresh) {
        it->second += c;
        if (sct::is_zero(it->second)) terms_.erase(it);
    }
}

PhiPoly& PhiPoly::operator+=(const PhiPoly& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

PhiPoly& PhiPoly::operator-=(const PhiPoly& o) {
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

PhiPoly operator*(const PhiPoly& a, const PhiPoly& b) {
    PhiPoly out;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_) {
            PhiProduct p = pa;
            p.insert(p.end(), pb.begin(), pb.end());
            out.add_term(std::move(p), ca * cb);
        }
    return out;
}

PhiPoly operator*(const Rat& c, PhiPoly p) {
    if (is_zero(c)) return PhiPoly();
    for (auto& [prod, coeff] : p.terms_) coeff *= c;
    return p;
}

namespace {

PhiProduct normalize_product(const PhiProduct& p) {
    PhiProduct out;
    for (const PhiAtom& a : p) {
        if (a.is_letter()) {
            out.push_back(a);
            continue;
        }
        PhiProduct inner = normalize_product(a.inner);
        // peel wrapper factors off both ends of the argument
        std::size_t lo = 0, hi = inner.size();
        while (lo < hi && !inner[lo].is_letter()) ++lo;
        while (hi > lo && !inner[hi - 1].is_letter()) --hi;
        if (lo == hi) throw std::invalid_argument("wrapper argument with no letters");
        out.insert(out.end(), inner.begin(), inner.begin() + long(lo));
        out.push_back(phi_wrap(PhiProduct(inner.begin() + long(lo), inner.begin() + long(hi))));
        out.insert(out.end(), inner.begin() + long(hi), inner.end());
    }
    return out;
}

} // namespace

PhiPoly bimodule_normalize(const PhiPoly& e) {
    PhiPoly out;
    for (const auto& [p, c] : e.terms()) out.add_term(normalize_product(p), c);
    return out;
}

namespace {

// multiplies the images of nested wrappers into acc, returns the letter word of p
std::string image_word(const PhiProduct& p, Poly& acc) {
    std::string word;
    for (const PhiAtom& a : p) {
        if (a.is_letter()) {
            word += a.letter;
        } else {
            std::string w = image_word(a.inner, acc);
            acc = acc * Poly::var("m[" + w + "]");
        }
    }
    return word;
}

} // namespace

Poly scalar_image(const PhiPoly& e) {
    Poly out;
    for (const auto& [p, c] : e.terms()) {
        Poly acc = Poly::constant(c);
        std::string top = image_word(p, acc);
        if (!top.empty())
            throw std::invalid_argument("scalar image of a bare letter product");
        out += acc;
    }
    return out;
}

std::string product_str(const PhiProduct& p) {
    std::string out;
    for (const PhiAtom& a : p)
        out += a.is_letter() ? a.letter : "\xcf\x86(" + product_str(a.inner) + ")";
    return out;
}

std::string PhiPoly::str() const {
    std::vector<std::pair<std::string, Rat>> rendered;
    for (const auto& [p, c] : terms_)
        rendered.emplace_back(p.empty() ? "1" : product_str(p), c);
    return format_linear(rendered);
}

} // namespace sct
