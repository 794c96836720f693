#include "sct/nsym.hpp"

#include "sct/textio.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sct {

int comp_weight(const Composition& I) {
    int w = 0;
    for (int p : I) w += p;
    return w;
}

bool CompLess::operator()(const Composition& a, const Composition& b) const {
    int wa = comp_weight(a), wb = comp_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
}

bool CompPairLess::operator()(const CompPair& a, const CompPair& b) const {
    CompLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

NSym NSym::one(int cap) {
    NSym x(NBasis::S, cap);
    x.add_term({}, 1);
    return x;
}

NSym NSym::gen(int n, int cap) {
    if (n < 1) throw std::invalid_argument("generator index must be positive");
    NSym x(NBasis::S, cap);
    x.add_term({n}, 1);
    return x;
}

Rat NSym::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Rat(0) : it->second;
}

void NSym::add_term(Composition I, const Rat& c) {
    if (sct::is_zero(c)) return;
    if (cap_ >= 0 && comp_weight(I) > cap_) return;
    auto [it, fresh] = terms_.try_emplace(std::move(I), c);
    if (!fresh) {
        it->second += c;
        if (sct::is_zero(it->second)) terms_.erase(it);
    }
}

namespace {

int merged_cap(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    return std::min(a, b);
}

[[noreturn]] void basis_mismatch() {
    throw std::invalid_argument("basis mismatch; convert first");
}

} // namespace

NSym& NSym::operator+=(const NSym& o) {
    if (basis_ != o.basis_) basis_mismatch();
    cap_ = merged_cap(cap_, o.cap_);
    for (const auto& [I, c] : o.terms_) add_term(I, c);
    return *this;
}

NSym& NSym::operator-=(const NSym& o) {
    if (basis_ != o.basis_) basis_mismatch();
    cap_ = merged_cap(cap_, o.cap_);
    for (const auto& [I, c] : o.terms_) add_term(I, -c);
    return *this;
}

NSym operator*(const NSym& a, const NSym& b) {
    // multiplicative bases concatenate; R products go through S
    NSym x = a.basis_ == NBasis::R ? convert(a, NBasis::S) : a;
    NSym y = b.basis_ == NBasis::R ? convert(b, NBasis::S) : b;
    if (x.basis_ != y.basis_) basis_mismatch();
    NSym out(x.basis_, merged_cap(x.cap_, y.cap_));
    for (const auto& [I, ci] : x.terms_)
        for (const auto& [J, cj] : y.terms_) {
            Composition IJ = I;
            IJ.insert(IJ.end(), J.begin(), J.end());
            out.add_term(std::move(IJ), ci * cj);
        }
    return out;
}

NSym operator*(const Rat& c, NSym x) {
    if (is_zero(c)) return NSym(x.basis_, x.cap_);
    for (auto& [I, coeff] : x.terms_) coeff *= c;
    return x;
}

bool NSym::operator==(const NSym& o) const {
    if (basis_ != o.basis_) basis_mismatch();
    return terms_ == o.terms_;
}

NSym NSym::graded_part(int n) const {
    NSym out(basis_, cap_);
    for (const auto& [I, c] : terms_)
        if (comp_weight(I) == n) out.add_term(I, c);
    return out;
}

int NSym::top_degree() const {
    int d = 0;
    for (const auto& [I, c] : terms_) d = std::max(d, comp_weight(I));
    return d;
}

namespace {

const char* basis_letter(NBasis b) {
    switch (b) {
        case NBasis::S: return "S";
        case NBasis::L: return "L";
        case NBasis::R: return "R";
        case NBasis::K: return "K";
    }
    return "?";
}

std::string comp_body(NBasis b, const Composition& I) {
    if (I.empty()) return "1";
    std::string out = basis_letter(b);
    out += "[";
    for (std::size_t i = 0; i < I.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(I[i]);
    }
    out += "]";
    return out;
}

} // namespace

std::string NSym::str() const {
    std::vector<std::pair<std::string, Rat>> rendered;
    for (const auto& [I, c] : terms_) rendered.emplace_back(comp_body(basis_, I), c);
    return format_linear(rendered);
}

namespace {

std::vector<Composition> compositions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Composition>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
    } else {
        Composition cur;
        // first parts largest so the list comes out in canonical display order
        auto rec = [&](auto&& self, int rest) -> void {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = rest; p >= 1; --p) {
                cur.push_back(p);
                self(self, rest - p);
                cur.pop_back();
            }
        };
        rec(rec, n);
        std::stable_sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
            return a.size() < b.size();
        });
    }
    memo.emplace(n, out);
    return out;
}

// coarsenings: sum adjacent parts across any subset of the gaps
std::vector<Composition> coarsenings_of(const Composition& I) {
    std::vector<Composition> out;
    int gaps = I.empty() ? 0 : int(I.size()) - 1;
    for (int mask = 0; mask < (1 << gaps); ++mask) {
        Composition J;
        for (std::size_t i = 0; i < I.size(); ++i) {
            if (i > 0 && (mask >> (i - 1)) & 1)
                J.back() += I[i];
            else
                J.push_back(I[i]);
        }
        out.push_back(std::move(J));
    }
    return out;
}

// Lambda_n = sum over I of n of (-1)^(n - length) S^I, and symmetrically
// S_n = the same sum in the Lambda letters
NSym alternating_sum(int n, NBasis target_basis) {
    NSym out(target_basis);
    for (const auto& I : compositions_of(n))
        out.add_term(I, (n - int(I.size())) % 2 == 0 ? 1 : -1);
    return out;
}

NSym lambda_in_S(int n) {
    static std::mutex mu;
    static std::map<int, NSym> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, alternating_sum(n, NBasis::S)).first;
    return it->second;
}

NSym s_in_lambda(int n) {
    static std::mutex mu;
    static std::map<int, NSym> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, alternating_sum(n, NBasis::L)).first;
    return it->second;
}

NSym product_of_generators(const Composition& I, const std::function<NSym(int)>& gen_poly,
                           NBasis basis, int cap) {
    NSym out(basis, cap);
    out.add_term({}, 1);
    for (int p : I) out = out * gen_poly(p);
    return out;
}

} // namespace

NSym convert(const NSym& x, NBasis target) {
    if (x.basis() == NBasis::K || target == NBasis::K)
        throw std::invalid_argument("the K alphabet converts through expand_K");
    if (x.basis() == target) return x;

    // first into S
    NSym s(NBasis::S, x.cap());
    switch (x.basis()) {
        case NBasis::S:
            s = x;
            break;
        case NBasis::L:
            for (const auto& [I, c] : x.terms())
                s += c * product_of_generators(I, lambda_in_S, NBasis::S, x.cap());
            break;
        case NBasis::R:
            for (const auto& [I, c] : x.terms())
                for (const auto& J : coarsenings_of(I))
                    s.add_term(J, (int(I.size()) - int(J.size())) % 2 == 0 ? c : -c);
            break;
        default:
            break;
    }
    if (target == NBasis::S) return s;

    NSym out(target, s.cap());
    if (target == NBasis::R) {
        for (const auto& [I, c] : s.terms())
            for (const auto& J : coarsenings_of(I)) out.add_term(J, c);
        return out;
    }
    // target == L
    for (const auto& [I, c] : s.terms())
        out += c * product_of_generators(I, s_in_lambda, NBasis::L, s.cap());
    return out;
}

NSym minus_A(const NSym& x) {
    NSym s = convert(x, NBasis::S);
    NSym out(NBasis::S, s.cap());
    for (const auto& [I, c] : s.terms()) {
        Rat sign = comp_weight(I) % 2 == 0 ? c : -c;
        out += sign * product_of_generators(I, lambda_in_S, NBasis::S, s.cap());
    }
    return out;
}

NSym omega(const NSym& x) {
    NSym s = convert(x, NBasis::S);
    NSym out(NBasis::S, s.cap());
    for (const auto& [I, c] : s.terms()) {
        Composition J = I;
        if (J.empty())
            J.push_back(1);
        else
            ++J.front();
        out.add_term(std::move(J), c);
    }
    return out;
}

namespace {

// S_m(kA): the degree-m part of sigma_1^k, as packed S-monomials
NSym s_of_multiple(int m, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, NSym> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    NSym out(NBasis::S);
    Composition packed;
    auto rec = [&](auto&& self, int rest, int slots) -> void {
        if (slots == 0) {
            if (rest == 0) out.add_term(packed, 1);
            return;
        }
        for (int j = 0; j <= rest; ++j) {
            if (j > 0) packed.push_back(j);
            self(self, rest - j, slots - 1);
            if (j > 0) packed.pop_back();
        }
    };
    rec(rec, m, k);
    memo.emplace(key, out);
    return out;
}

} // namespace

NSymTensor delta1(const NSym& x, int cap) {
    NSym s = convert(x, NBasis::S);
    NSymTensor out;
    for (const auto& [I, c] : s.terms()) {
        if (cap >= 0 && comp_weight(I) > cap) continue;
        // tensor product over the parts of I
        std::map<CompPair, Rat, CompPairLess> acc;
        acc[{{}, {}}] = c;
        for (int n : I) {
            std::map<CompPair, Rat, CompPairLess> next;
            for (int i = 0; i <= n; ++i) {
                NSym right = s_of_multiple(n - i, i + 1);
                for (const auto& [pair, pc] : acc)
                    for (const auto& [J, rc] : right.terms()) {
                        Composition left = pair.first;
                        if (i > 0) left.push_back(i);
                        Composition rightJ = pair.second;
                        rightJ.insert(rightJ.end(), J.begin(), J.end());
                        auto key = std::make_pair(std::move(left), std::move(rightJ));
                        auto [it, fresh] = next.try_emplace(std::move(key), pc * rc);
                        if (!fresh) it->second += pc * rc;
                    }
            }
            acc = std::move(next);
        }
        for (const auto& [pair, pc] : acc) {
            if (is_zero(pc)) continue;
            auto [it, fresh] = out.try_emplace(pair, pc);
            if (!fresh) {
                it->second += pc;
                if (is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

namespace {

NSym antipode_of_generator(int n) {
    static std::mutex mu;
    static std::map<int, NSym> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto rec = [&](auto&& self, int m) -> NSym {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        NSym out = Rat(-1) * NSym::gen(m);
        for (int i = 1; i < m; ++i) out -= self(self, i) * s_of_multiple(m - i, i + 1);
        memo.emplace(m, out);
        return out;
    };
    return rec(rec, n);
}

} // namespace

NSym antipode(const NSym& x) {
    NSym s = convert(x, NBasis::S);
    NSym out(NBasis::S, s.cap());
    for (const auto& [I, c] : s.terms()) {
        NSym term = NSym::one(s.cap());
        for (auto it = I.rbegin(); it != I.rend(); ++it) term = term * antipode_of_generator(*it);
        out += c * term;
    }
    return out;
}

NSym counit(const NSym& x) {
    NSym s = convert(x, NBasis::S);
    NSym out(NBasis::S, s.cap());
    out.add_term({}, s.coeff({}));
    return out;
}

NSym sigma1(int cap) {
    NSym out = NSym::one(cap);
    for (int n = 1; n <= cap; ++n) out += NSym::gen(n, cap);
    return out;
}

NSym mul_inverse(const NSym& x, int cap) {
    NSym s = convert(x, NBasis::S);
    if (s.coeff({}) != 1) throw std::invalid_argument("mul_inverse needs scalar term 1");
    NSym z = NSym::one(cap);
    for (int w = 1; w <= cap; ++w) {
        NSym zw(NBasis::S, cap);
        for (int b = 1; b <= w; ++b) zw -= z.graded_part(w - b) * s.graded_part(b);
        z += zw;
    }
    return z;
}

NSym lagrange_g(int cap) {
    NSym g = NSym::one(cap);
    for (int w = 1; w <= cap; ++w) {
        NSym gw(NBasis::S, cap);
        NSym power = NSym::one(cap); // g^n as n climbs
        for (int n = 1; n <= w; ++n) {
            power = power * g;
            gw += NSym::gen(n, cap) * power.graded_part(w - n);
        }
        g += gw;
    }
    return g;
}

Composition mirror_conjugate(const Composition& I) {
    int n = comp_weight(I);
    if (n == 0) return {};
    std::vector<bool> descent(n, false); // descent[d] for d in 1..n-1
    int run = 0;
    for (std::size_t i = 0; i + 1 < I.size(); ++i) {
        run += I[i];
        descent[run] = true;
    }
    Composition out;
    int prev = 0;
    for (int d = 1; d < n; ++d)
        if (!descent[d]) {
            out.push_back(d - prev);
            prev = d;
        }
    out.push_back(n - prev);
    return out;
}

NSym cumulant_K(int cap, KMethod method) {
    switch (method) {
        case KMethod::solve: {
            NSym k = NSym::one(cap);
            for (int w = 1; w <= cap; ++w) {
                NSym kw = NSym::gen(w, cap);
                for (int n = 1; n < w; ++n)
                    kw -= k.graded_part(n) * s_of_multiple(w - n, n);
                k += kw;
            }
            return k;
        }
        case KMethod::antipode_formula:
            return mul_inverse(minus_A(lagrange_g(cap)), cap);
        case KMethod::ribbon_rule: {
            NSym g = convert(lagrange_g(cap > 0 ? cap - 1 : 0), NBasis::R);
            NSym k(NBasis::R, cap);
            k.add_term({}, 1);
            for (const auto& [I, c] : g.terms()) {
                int n = comp_weight(I) + 1;
                if (cap >= 0 && n > cap) continue;
                Composition J = mirror_conjugate(I);
                J.insert(J.begin(), 1);
                k.add_term(std::move(J), (n - 1) % 2 == 0 ? c : -c);
            }
            return convert(k, NBasis::S);
        }
    }
    throw std::logic_error("unreachable");
}

NSym s_in_K(int n) {
    if (n < 1) throw std::invalid_argument("s_in_K needs n >= 1");
    // T_m = S_m in the K alphabet, from sigma_1 = sum of K_k sigma_1^k
    std::vector<NSym> T;
    T.push_back(NSym::one());
    for (int m = 1; m <= n; ++m) {
        NSym tm(NBasis::S); // K-monomials, tagged at the end
        for (int k = 1; k <= m; ++k) {
            // sum over weak compositions of m-k into k slots of T_{j1}...T_{jk}
            auto rec = [&](auto&& self, int rest, int slots, const NSym& acc) -> void {
                if (slots == 0) {
                    if (rest == 0) {
                        for (const auto& [I, c] : acc.terms()) {
                            Composition J = I;
                            J.insert(J.begin(), k);
                            tm.add_term(std::move(J), c);
                        }
                    }
                    return;
                }
                for (int j = 0; j <= rest; ++j) self(self, rest - j, slots - 1, acc * T[j]);
            };
            rec(rec, m - k, k, NSym::one());
        }
        T.push_back(tm);
    }
    NSym out(NBasis::K);
    for (const auto& [I, c] : T[n].terms()) out.add_term(I, c);
    return out;
}

NSym expand_K(const NSym& x) {
    if (x.basis() != NBasis::K) throw std::invalid_argument("expand_K needs a K-tagged element");
    int top = x.top_degree();
    NSym k = cumulant_K(top, KMethod::solve);
    NSym out(NBasis::S);
    for (const auto& [I, c] : x.terms()) {
        NSym term = NSym::one();
        for (int p : I) term = term * k.graded_part(p);
        out += c * term;
    }
    return out;
}

NSym project_to_nsym(const TreeSeries& p) {
    NSym out(NBasis::S, p.max_weight());
    for (const auto& [w, c] : p.terms()) {
        Composition I;
        for (auto s : w)
            if (s != 0) I.push_back(int(s));
        out.add_term(std::move(I), c);
    }
    return out;
}

} // namespace sct
