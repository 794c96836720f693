#include "doctest.h"

#include "sct/ncpart.hpp"
#include "sct/nsym.hpp"
#include "sct/series.hpp"

#include <map>
#include <tuple>
#include <vector>

using namespace sct;

namespace {

NSym make(NBasis b, std::vector<std::pair<Composition, Rat>> terms) {
    NSym x(b);
    for (auto& [I, c] : terms) x.add_term(std::move(I), c);
    return x;
}

NSym monomial(NBasis b, Composition I) {
    NSym x(b);
    x.add_term(std::move(I), 1);
    return x;
}

const NSym& cumulants8() {
    static NSym k = cumulant_K(8, KMethod::solve);
    return k;
}

const NSym& g8() {
    static NSym g = lagrange_g(8);
    return g;
}

} // namespace

TEST_CASE("free cumulant generators in the complete basis") {
    const NSym& k = cumulants8();
    CHECK(k.graded_part(0) == NSym::one());
    CHECK(k.graded_part(1) == monomial(NBasis::S, {1}));
    CHECK(k.graded_part(2) == make(NBasis::S, {{{2}, 1}, {{1, 1}, -1}}));
    CHECK(k.graded_part(3) ==
          make(NBasis::S, {{{3}, 1}, {{2, 1}, -2}, {{1, 2}, -1}, {{1, 1, 1}, 2}}));
    CHECK(k.graded_part(4) == make(NBasis::S, {{{4}, 1},
                                               {{3, 1}, -3},
                                               {{2, 2}, -2},
                                               {{1, 3}, -1},
                                               {{2, 1, 1}, 5},
                                               {{1, 2, 1}, 3},
                                               {{1, 1, 2}, 2},
                                               {{1, 1, 1, 1}, -5}}));
    CHECK(k.graded_part(4).str() ==
          "S[4] - 3S[3,1] - 2S[2,2] - S[1,3] + 5S[2,1,1] + 3S[1,2,1] + 2S[1,1,2] - 5S[1,1,1,1]");
}

TEST_CASE("free cumulant generators in the elementary basis") {
    const NSym& k = cumulants8();
    CHECK(convert(k.graded_part(1), NBasis::L) == monomial(NBasis::L, {1}));
    CHECK(convert(k.graded_part(2), NBasis::L) == make(NBasis::L, {{{2}, -1}}));
    CHECK(convert(k.graded_part(3), NBasis::L) == make(NBasis::L, {{{3}, 1}, {{2, 1}, 1}}));
    CHECK(convert(k.graded_part(4), NBasis::L) ==
          make(NBasis::L, {{{4}, -1}, {{3, 1}, -2}, {{2, 2}, -1}, {{2, 1, 1}, -1}}));
    CHECK(convert(k.graded_part(2), NBasis::L).str() == "-L[2]");
}

TEST_CASE("free cumulant generators in the ribbon basis") {
    const NSym& k = cumulants8();
    CHECK(convert(k.graded_part(1), NBasis::R) == monomial(NBasis::R, {1}));
    CHECK(convert(k.graded_part(2), NBasis::R) == make(NBasis::R, {{{1, 1}, -1}}));
    CHECK(convert(k.graded_part(3), NBasis::R) ==
          make(NBasis::R, {{{1, 2}, 1}, {{1, 1, 1}, 2}}));
    CHECK(convert(k.graded_part(4), NBasis::R) == make(NBasis::R, {{{1, 3}, -1},
                                                                   {{1, 2, 1}, -2},
                                                                   {{1, 1, 2}, -3},
                                                                   {{1, 1, 1, 1}, -5}}));
    CHECK(convert(k.graded_part(4), NBasis::R).str() ==
          "-(R[1,3] + 2R[1,2,1] + 3R[1,1,2] + 5R[1,1,1,1])");
}

TEST_CASE("lagrange series expansions") {
    const NSym& g = g8();
    CHECK(g.graded_part(0) == NSym::one());
    CHECK(g.graded_part(1) == monomial(NBasis::S, {1}));
    CHECK(g.graded_part(2) == make(NBasis::S, {{{2}, 1}, {{1, 1}, 1}}));
    CHECK(g.graded_part(3) ==
          make(NBasis::S, {{{3}, 1}, {{2, 1}, 2}, {{1, 2}, 1}, {{1, 1, 1}, 1}}));
    CHECK(g.graded_part(4) == make(NBasis::S, {{{4}, 1},
                                               {{3, 1}, 3},
                                               {{2, 2}, 2},
                                               {{1, 3}, 1},
                                               {{2, 1, 1}, 3},
                                               {{1, 2, 1}, 2},
                                               {{1, 1, 2}, 1},
                                               {{1, 1, 1, 1}, 1}}));
    CHECK(convert(g.graded_part(3), NBasis::R) ==
          make(NBasis::R, {{{3}, 5}, {{2, 1}, 3}, {{1, 2}, 2}, {{1, 1, 1}, 1}}));
    CHECK(convert(g.graded_part(3), NBasis::R).str() == "5R[3] + 3R[2,1] + 2R[1,2] + R[1,1,1]");
}

TEST_CASE("parking function evaluations expand the lagrange series") {
    const NSym& g = g8();
    for (int n = 1; n <= 6; ++n) {
        NSym oracle(NBasis::S);
        for (const auto& f : ndpf_enumerate(n)) {
            std::vector<int> ev = ndpf_ev(f);
            oracle.add_term(Composition(ev.begin(), ev.end()), 1);
        }
        CHECK(oracle == g.graded_part(n));
    }
}

TEST_CASE("all three cumulant constructions agree") {
    const NSym& k = cumulants8();
    CHECK(k == cumulant_K(8, KMethod::antipode_formula));
    CHECK(k == cumulant_K(8, KMethod::ribbon_rule));
}

TEST_CASE("lagrange series solves the fixed point equation") {
    const NSym& g = g8();
    NSym lhs = g * (NSym::one(8) - omega(g));
    CHECK(lhs == NSym::one(8));
    CHECK(mul_inverse(g, 8) == NSym::one(8) - omega(g));
}

TEST_CASE("ribbon recursion under the shift") {
    // R_{1I} = S_1 R_I - omega(R_I) for nonempty I
    auto comps = [](int n) {
        std::vector<Composition> out;
        Composition cur;
        auto rec = [&](auto&& self, int rest) -> void {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int p = 1; p <= rest; ++p) {
                cur.push_back(p);
                self(self, rest - p);
                cur.pop_back();
            }
        };
        rec(rec, n);
        return out;
    };
    for (int n = 1; n <= 5; ++n)
        for (const Composition& I : comps(n)) {
            NSym rI = monomial(NBasis::R, I);
            Composition oneI = I;
            oneI.insert(oneI.begin(), 1);
            NSym lhs = convert(monomial(NBasis::R, oneI), NBasis::S);
            NSym rhs = NSym::gen(1) * convert(rI, NBasis::S) - omega(rI);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("mirror conjugate complements descents") {
    CHECK(mirror_conjugate({3}) == Composition{1, 1, 1});
    CHECK(mirror_conjugate({2, 1}) == Composition{1, 2});
    CHECK(mirror_conjugate({1, 2}) == Composition{2, 1});
    CHECK(mirror_conjugate({1, 1, 1}) == Composition{3});
    CHECK(mirror_conjugate({}) == Composition{});

    Composition cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            CHECK(mirror_conjugate(mirror_conjugate(cur)) == cur);
            CHECK(comp_weight(mirror_conjugate(cur)) == comp_weight(cur));
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p);
            cur.pop_back();
        }
    };
    for (int n = 1; n <= 7; ++n) rec(rec, n);
}

TEST_CASE("basis conversions invert each other on live elements") {
    NSym k6(NBasis::S);
    k6 += cumulant_K(6, KMethod::solve);
    CHECK(convert(convert(k6, NBasis::L), NBasis::S) == k6);
    CHECK(convert(convert(k6, NBasis::R), NBasis::S) == k6);
    NSym g6 = lagrange_g(6);
    CHECK(convert(convert(convert(g6, NBasis::R), NBasis::L), NBasis::S) == g6);
}

TEST_CASE("alphabet negation is an involution") {
    NSym g6 = lagrange_g(6);
    CHECK(minus_A(minus_A(g6)) == g6);
    NSym x = make(NBasis::S, {{{2, 1}, 3}, {{1}, -2}, {{4}, Rat(1) / 2}});
    CHECK(minus_A(minus_A(x)) == x);
    // degree-1 part only flips sign
    CHECK(minus_A(NSym::gen(1)) == Rat(-1) * NSym::gen(1));
}

TEST_CASE("antipode of the full character negates the alphabet") {
    CHECK(antipode(sigma1(6)) == minus_A(lagrange_g(6)));
}

TEST_CASE("antipode of elementary generators gives cumulants") {
    const NSym& k = cumulants8();
    for (int n = 1; n <= 6; ++n) {
        NSym ln = convert(monomial(NBasis::L, {n}), NBasis::S);
        NSym lhs = n % 2 == 0 ? antipode(ln) : Rat(-1) * antipode(ln);
        CHECK(lhs == k.graded_part(n));
    }
}

TEST_CASE("antipode reverses products") {
    NSym x = NSym::gen(2);
    NSym y = make(NBasis::S, {{{1}, 1}, {{3}, -2}});
    CHECK(antipode(x * y) == antipode(y) * antipode(x));
    CHECK(antipode(NSym::one()) == NSym::one());
}

TEST_CASE("coproduct is coassociative and counital") {
    using Triple = std::tuple<Composition, Composition, Composition>;
    for (int n = 1; n <= 5; ++n) {
        NSymTensor d = delta1(NSym::gen(n));
        std::map<Triple, Rat> left, right;
        for (const auto& [pair, c] : d) {
            for (const auto& [pp, cc] : delta1(monomial(NBasis::S, pair.first))) {
                Rat v = c * cc;
                auto key = Triple(pp.first, pp.second, pair.second);
                left[key] += v;
                if (is_zero(left[key])) left.erase(key);
            }
            for (const auto& [pp, cc] : delta1(monomial(NBasis::S, pair.second))) {
                Rat v = c * cc;
                auto key = Triple(pair.first, pp.first, pp.second);
                right[key] += v;
                if (is_zero(right[key])) right.erase(key);
            }
        }
        CHECK(left == right);

        // counit axiom on both tensor factors
        NSym left_collapse(NBasis::S), right_collapse(NBasis::S);
        for (const auto& [pair, c] : d) {
            if (pair.first.empty()) left_collapse.add_term(pair.second, c);
            if (pair.second.empty()) right_collapse.add_term(pair.first, c);
        }
        CHECK(left_collapse == NSym::gen(n));
        CHECK(right_collapse == NSym::gen(n));
    }
}

TEST_CASE("antipode is the convolution inverse of the identity") {
    for (int n = 1; n <= 5; ++n) {
        NSym acc(NBasis::S);
        for (const auto& [pair, c] : delta1(NSym::gen(n)))
            acc += c * (antipode(monomial(NBasis::S, pair.first)) *
                        monomial(NBasis::S, pair.second));
        CHECK(acc.is_zero());
        CHECK(counit(NSym::gen(n)).is_zero());
    }
    CHECK(counit(lagrange_g(4)) == NSym::one(4));
}

TEST_CASE("complete generators expand in cumulants") {
    CHECK(s_in_K(1) == monomial(NBasis::K, {1}));
    CHECK(s_in_K(2) == make(NBasis::K, {{{2}, 1}, {{1, 1}, 1}}));
    CHECK(s_in_K(4) == make(NBasis::K, {{{4}, 1},
                                        {{3, 1}, 3},
                                        {{2, 2}, 2},
                                        {{1, 3}, 1},
                                        {{2, 1, 1}, 3},
                                        {{1, 2, 1}, 2},
                                        {{1, 1, 2}, 1},
                                        {{1, 1, 1, 1}, 1}}));
    for (int n = 1; n <= 6; ++n) CHECK(expand_K(s_in_K(n)) == NSym::gen(n));
}

TEST_CASE("tree series project onto the descent algebra") {
    CHECK(project_to_nsym(kappa_series(4)) == cumulant_K(4, KMethod::solve));
    CHECK(project_to_nsym(signed_tree_series(6)) == minus_A(lagrange_g(6)));
    CHECK(project_to_nsym(corolla_series(5)) == sigma1(5));
}

TEST_CASE("shift raises the first part") {
    CHECK(omega(NSym::one()) == NSym::gen(1));
    CHECK(omega(NSym::gen(2)) == NSym::gen(3));
    CHECK(omega(monomial(NBasis::S, {2, 1})) == monomial(NBasis::S, {3, 1}));
    NSym x = make(NBasis::S, {{{1, 1}, 2}, {{2}, -1}});
    CHECK(omega(x) == make(NBasis::S, {{{2, 1}, 2}, {{3}, -1}}));
}
