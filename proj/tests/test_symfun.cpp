#include "doctest.h"

#include "sct/cumulants.hpp"
#include "sct/nsym.hpp"
#include "sct/symfun.hpp"

#include <random>
#include <string>
#include <vector>

using namespace sct;

namespace {

Poly mv(int k) { return Poly::var("m" + std::to_string(k)); }
Poly ev(int k) { return Poly::var("e" + std::to_string(k)); }
Poly c(long n, long d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return Poly::constant(r);
}

} // namespace

TEST_CASE("series reversion") {
    PowerSeries f(4);
    f.c[1] = c(1);
    f.c[2] = c(1);
    PowerSeries g = revert(f);
    CHECK(g.c[0].is_zero());
    CHECK(g.c[1] == c(1));
    CHECK(g.c[2] == c(-1));
    CHECK(g.c[3] == c(2));
    CHECK(g.c[4] == c(-5));
    CHECK(series_compose(f, g) == series_identity(4));
    CHECK(series_compose(g, f) == series_identity(4));

    SUBCASE("non unit slope") {
        PowerSeries p(3);
        p.c[1] = c(2);
        p.c[3] = c(-4);
        PowerSeries q = revert(p);
        CHECK(series_compose(p, q) == series_identity(3));
        CHECK(q.c[1] == c(1, 2));
    }

    SUBCASE("rejects bad input") {
        PowerSeries bad(3);
        bad.c[0] = c(1);
        bad.c[1] = c(1);
        CHECK_THROWS_AS(revert(bad), std::invalid_argument);
        PowerSeries flat(3);
        flat.c[2] = c(1);
        CHECK_THROWS_AS(revert(flat), std::invalid_argument);
        PowerSeries sym(3);
        sym.c[1] = mv(1);
        CHECK_THROWS_AS(revert(sym), std::invalid_argument);
    }
}

TEST_CASE("reversion is an involution on random series") {
    std::mt19937_64 rng(197u);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    for (int trial = 0; trial < 6; ++trial) {
        PowerSeries f(8);
        f.c[1] = c(1);
        for (int k = 2; k <= 8; ++k) f.c[std::size_t(k)] = c(num(rng), den(rng));
        CHECK(revert(revert(f)) == f);
        CHECK(series_compose(f, revert(f)) == series_identity(8));
    }
}

TEST_CASE("series arithmetic basics") {
    PowerSeries h = moment_series(3);
    PowerSeries inv = series_inverse(h);
    CHECK(series_product(h, inv).c[0] == c(1));
    CHECK(series_product(h, inv).c[1].is_zero());
    CHECK(series_product(h, inv).c[3].is_zero());
    CHECK(series_pow(h, 0).c[0] == c(1));
    CHECK(series_pow(h, 2) == series_product(h, h));
    PowerSeries z(2);
    CHECK_THROWS_AS(series_inverse(z), std::invalid_argument);
    CHECK(moment_series(2).str() == "(1) + (m1)*t + (m2)*t^2");
}

TEST_CASE("free cumulants from the moment series") {
    std::vector<Poly> k = classical_cumulants(4);
    CHECK(k[0] == mv(1));
    CHECK(k[1] == mv(2) - mv(1) * mv(1));
    CHECK(k[2] == mv(3) - c(3) * mv(2) * mv(1) + c(2) * mv(1).pow(3));
    CHECK(k[3] == mv(4) - c(4) * mv(3) * mv(1) - c(2) * mv(2).pow(2) + c(10) * mv(2) * mv(1).pow(2) -
                      c(5) * mv(1).pow(4));
    CHECK(k[2].str() == "2m1^3 - 3m2m1 + m3");
}

TEST_CASE("residue extraction matches the reverted series") {
    std::vector<Poly> hs = hstar(6);
    for (int n = 1; n <= 6; ++n) CHECK(hs[std::size_t(n - 1)] == hstar_lagrange(n));
    CHECK(hs[0] == c(-1) * mv(1));
    CHECK(hs[1] == c(2) * mv(1).pow(2) - mv(2));
}

TEST_CASE("the star alphabet is an involution") {
    std::vector<Poly> back = star_alphabet(hstar(5));
    for (int n = 1; n <= 5; ++n) CHECK(back[std::size_t(n - 1)] == mv(n));
}

TEST_CASE("cumulants are the signed starred elementaries") {
    std::vector<Poly> k = classical_cumulants(5);
    std::vector<Poly> es = estar(5);
    for (int n = 1; n <= 5; ++n) {
        Poly expect = n % 2 == 0 ? es[std::size_t(n - 1)] : Rat(-1) * es[std::size_t(n - 1)];
        CHECK(k[std::size_t(n - 1)] == expect);
    }
}

TEST_CASE("partition sum for the starred elementaries") {
    CHECK(estar_formula(2) == ev(2));
    CHECK(estar_formula(3) == ev(3) + ev(2) * ev(1));
    CHECK(estar_formula(4) == ev(4) + c(2) * ev(3) * ev(1) + ev(2).pow(2) + ev(2) * ev(1).pow(2));
    CHECK_THROWS_AS(estar_formula(1), std::invalid_argument);
    CHECK_THROWS_AS(estar_formula(0), std::invalid_argument);

    // the closed sum agrees with the reversion route once e is rewritten in m
    std::vector<Poly> em = elementary_in_m(6);
    std::vector<Poly> es = estar(6);
    for (int n = 2; n <= 6; ++n) {
        Poly conv = estar_formula(n).substituted([&](VarId v) {
            const std::string& name = var_name(v);
            int j = std::stoi(name.substr(1));
            return em[std::size_t(j - 1)];
        });
        CHECK(conv == Rat(-1) * es[std::size_t(n - 1)]);
    }
}

TEST_CASE("three routes to the univariate cumulants agree") {
    std::vector<Poly> k = classical_cumulants(6);
    NSym K = cumulant_K(6, KMethod::solve);
    for (int n = 1; n <= 6; ++n) {
        CHECK(k[std::size_t(n - 1)] == univariate_cumulant(n));
        Poly fromK;
        NSym Kn = K.graded_part(n);
        for (const auto& [I, coeff] : Kn.terms()) {
            Poly mono = Poly::constant(coeff);
            for (int part : I) mono = mono * mv(part);
            fromK += mono;
        }
        CHECK(fromK == k[std::size_t(n - 1)]);
    }
}
