#include "sct/poly.hpp"

#include "sct/textio.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace sct {

namespace {

std::mutex table_mutex;
std::deque<std::string>& name_table() {
    static std::deque<std::string> names;
    return names;
}
std::unordered_map<std::string, VarId>& id_table() {
    static std::unordered_map<std::string, VarId> ids;
    return ids;
}

} // namespace

VarId intern_var(const std::string& name) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto [it, fresh] = id_table().try_emplace(name, VarId(name_table().size()));
    if (fresh) name_table().push_back(name);
    return it->second;
}

const std::string& var_name(VarId v) {
    std::lock_guard<std::mutex> lock(table_mutex);
    return name_table().at(v);
}

bool var_less(VarId a, VarId b) {
    if (a == b) return false;
    return natural_less(var_name(a), var_name(b));
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    int na = 0, nb = 0;
    for (const auto& [v, e] : a) na += e;
    for (const auto& [v, e] : b) nb += e;
    if (na != nb) return na > nb;
    // walk both factor lists from the largest variable down
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    int ea = ia == a.rend() ? 0 : ia->second;
    int eb = ib == b.rend() ? 0 : ib->second;
    while (ia != a.rend() && ib != b.rend()) {
        if (ia->first != ib->first) return var_less(ia->first, ib->first);
        if (--ea == 0) ea = ++ia == a.rend() ? 0 : ia->second;
        if (--eb == 0) eb = ++ib == b.rend() ? 0 : ib->second;
    }
    return false;
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    p.add_term({}, c);
    return p;
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.add_term({{intern_var(name), 1}}, 1);
    return p;
}

void Poly::add_term(Monomial m, const Rat& c) {
    if (sct::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
        it->second += c;
        if (sct::is_zero(it->second)) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && var_less(ia->first, ib->first)))
            out.push_back(*ia++);
        else if (ia == a.end() || var_less(ib->first, ia->first))
            out.push_back(*ib++);
        else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

} // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

Poly operator*(const Rat& c, Poly p) {
    if (is_zero(c)) return Poly();
    for (auto& [m, coeff] : p.terms_) coeff *= c;
    return p;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow needs k >= 0");
    Poly out = constant(1);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

Poly Poly::substituted(const std::function<Poly(VarId)>& image) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
        Poly term = constant(c);
        for (const auto& [v, e] : m) term = term * image(v).pow(e);
        out += term;
    }
    return out;
}

std::string Poly::str() const {
    std::vector<std::pair<std::string, Rat>> rendered;
    for (const auto& [m, c] : terms_) {
        std::string body;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            body += var_name(it->first);
            if (it->second > 1) body += "^" + std::to_string(it->second);
        }
        if (body.empty()) body = "1";
        rendered.emplace_back(std::move(body), c);
    }
    return format_linear(rendered);
}

} // namespace sct
