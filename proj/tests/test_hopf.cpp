#include "doctest.h"

#include "sct/hopf.hpp"
#include "sct/series.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

using namespace sct;

namespace {

std::vector<std::string> letters(int n, int base = 1) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("a" + std::to_string(base + i));
    return out;
}

// all forests of at most two decorated trees, labels distinct across the forest
std::vector<DecForest> small_forests(int max_weight) {
    std::vector<DecForest> out;
    for (int w = 1; w <= max_weight; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            out.push_back({decorate(t.word(), letters(w))});
    for (int w1 = 1; w1 < max_weight; ++w1)
        for (int w2 = 1; w1 + w2 <= max_weight; ++w2)
            for (const auto& t1 : enumerate_trees(TreeKind::all, w1))
                for (const auto& t2 : enumerate_trees(TreeKind::all, w2))
                    out.push_back({decorate(t1.word(), letters(w1)),
                                   decorate(t2.word(), letters(w2, w1 + 1))});
    return out;
}

TensorSum tensor_product(const TensorSum& a, const TensorSum& b) {
    TensorSum out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            TensorPair p = pa;
            p.first.insert(p.first.end(), pb.first.begin(), pb.first.end());
            p.second.insert(p.second.end(), pb.second.begin(), pb.second.end());
            out[p] += ca * cb;
        }
    return out;
}

using Triple = std::tuple<DecForest, DecForest, DecForest>;
using TripleSum = std::map<Triple, Rat>;

TripleSum expand_leg(const TensorSum& d, bool left,
                     const std::function<TensorSum(const DecForest&)>& delta) {
    TripleSum out;
    for (const auto& [pair, c] : d) {
        TensorSum inner = delta(left ? pair.first : pair.second);
        for (const auto& [ip, ic] : inner) {
            Triple key = left ? Triple(ip.first, ip.second, pair.second)
                              : Triple(pair.first, ip.first, ip.second);
            out[key] += c * ic;
            if (is_zero(out[key])) out.erase(key);
        }
    }
    return out;
}

TreeSeries pseudo_group_element(int cap, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TreeSeries p = TreeSeries::unit(cap);
    for (int w = 1; w <= cap; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w)) {
            if (rng() % 3 == 0) p.add_term(t.word(), int(rng() % 5) - 2);
        }
    return p;
}

LinearForm<Rat> group_character(const TreeSeries& p) {
    return LinearForm<Rat>::character(
        [p](const DecTree& t) { return p.coeff(t.shape); });
}

} // namespace

TEST_CASE("admissible cuts of the weight two trees") {
    DecTree comb = decorate({1, 1, 0, 0, 0}, {"a1", "a2"});
    DecTree b1 = decorate({1, 0, 0}, {"a1"});
    DecTree b2 = decorate({1, 0, 0}, {"a2"});

    TensorSum d = coproduct({comb});
    CHECK(d.size() == 3);
    CHECK(d.at({{}, {comb}}) == 1);
    CHECK(d.at({{comb}, {}}) == 1);
    CHECK(d.at({{b2}, {b1}}) == 1);

    TensorSum dp = coproduct_half({comb}, HalfSide::prec);
    CHECK(dp.size() == 2);
    CHECK(dp.count({{comb}, {}}) == 1);
    CHECK(dp.count({{b2}, {b1}}) == 1);
    TensorSum ds = coproduct_half({comb}, HalfSide::succ);
    CHECK(ds.size() == 1);
    CHECK(ds.count({{}, {comb}}) == 1);

    // in the mirror comb the cut subtree holds the rightmost leaf
    DecTree mirror = decorate({1, 0, 1, 0, 0}, {"a1", "a2"});
    TensorSum mp = coproduct_half({mirror}, HalfSide::prec);
    CHECK(mp.size() == 1);
    CHECK(mp.count({{mirror}, {}}) == 1);
    TensorSum ms = coproduct_half({mirror}, HalfSide::succ);
    CHECK(ms.size() == 2);
    CHECK(ms.count({{}, {mirror}}) == 1);
    CHECK(ms.count({{b1}, {b2}}) == 1);

    for (int n = 1; n <= 5; ++n) {
        DecTree c = decorate(corolla(n).word(), letters(n));
        TensorSum dc = coproduct({c});
        CHECK(dc.size() == 2);
        CHECK(dc.count({{}, {c}}) == 1);
        CHECK(dc.count({{c}, {}}) == 1);
    }

    CHECK_THROWS_AS(coproduct_half({}, HalfSide::prec), std::invalid_argument);
    CHECK_THROWS_AS(coproduct_reduced({}), std::invalid_argument);
    CHECK_THROWS_AS(decorate({1, 0, 0}, {"a1", "a2"}), std::invalid_argument);
}

TEST_CASE("coproduct is coassociative counital and multiplicative") {
    auto full = [](const DecForest& f) { return coproduct(f); };
    for (const DecForest& f : small_forests(5)) {
        TensorSum d = coproduct(f);

        DecForest unit;
        ForestSum left_collapse, right_collapse;
        for (const auto& [pair, c] : d) {
            if (pair.first == unit) left_collapse[pair.second] += c;
            if (pair.second == unit) right_collapse[pair.first] += c;
        }
        CHECK(left_collapse.size() == 1);
        CHECK(left_collapse.at(f) == 1);
        CHECK(right_collapse.size() == 1);
        CHECK(right_collapse.at(f) == 1);

        CHECK(expand_leg(d, true, full) == expand_leg(d, false, full));
    }

    // algebra morphism on concatenation
    DecForest f{decorate({2, 0, 0, 0}, {"a1", "a2"}), decorate({1, 0, 0}, {"a3"})};
    DecForest g{decorate({1, 1, 0, 0, 0}, {"a4", "a5"})};
    DecForest fg = f;
    fg.insert(fg.end(), g.begin(), g.end());
    CHECK(coproduct(fg) == tensor_product(coproduct(f), coproduct(g)));
}

TEST_CASE("half coproducts split the coproduct") {
    for (const DecForest& f : small_forests(5)) {
        TensorSum d = coproduct(f);
        TensorSum sum = coproduct_half(f, HalfSide::prec);
        for (const auto& [pair, c] : coproduct_half(f, HalfSide::succ)) {
            sum[pair] += c;
            if (is_zero(sum[pair])) sum.erase(pair);
        }
        CHECK(sum == d);
    }
}

TEST_CASE("codendriform axioms") {
    auto reduced = [](const DecForest& f) { return coproduct_reduced(f); };
    auto prec = [](const DecForest& f) { return coproduct_half_reduced(f, HalfSide::prec); };
    auto succ = [](const DecForest& f) { return coproduct_half_reduced(f, HalfSide::succ); };
    for (const DecForest& f : small_forests(5)) {
        TensorSum dprec = prec(f);
        TensorSum dsucc = succ(f);
        CHECK(expand_leg(dprec, true, prec) == expand_leg(dprec, false, reduced));
        CHECK(expand_leg(dprec, true, succ) == expand_leg(dsucc, false, prec));
        CHECK(expand_leg(dsucc, true, reduced) == expand_leg(dsucc, false, succ));
    }
}

TEST_CASE("convolution of group characters is operad composition") {
    TreeSeries p = pseudo_group_element(4, 20260822u);
    TreeSeries q = pseudo_group_element(4, 4279u);
    TreeSeries pq = compose(p, q);
    LinearForm<Rat> conv = convolve(group_character(p), group_character(q), ConvMode::full);
    for (int w = 1; w <= 4; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            CHECK(conv(undecorated(t.word())) == pq.coeff(t.word()));

    // epsilon is the unit of convolution
    LinearForm<Rat> chi = group_character(p);
    LinearForm<Rat> eps = LinearForm<Rat>::epsilon();
    for (const auto& f : small_forests(3)) {
        DecForest bare;
        for (const auto& t : f) bare.push_back(undecorated(t.shape));
        CHECK(convolve(eps, chi, ConvMode::full)(bare) == chi(bare));
        CHECK(convolve(chi, eps, ConvMode::full)(bare) == chi(bare));
    }
}

TEST_CASE("half convolutions add up to convolution") {
    TreeSeries p = pseudo_group_element(5, 903u);
    TreeSeries q = pseudo_group_element(5, 103049u);
    LinearForm<Rat> f = group_character(p);
    LinearForm<Rat> g = group_character(q);
    LinearForm<Rat> full = convolve(f, g, ConvMode::full);
    LinearForm<Rat> left = convolve(f, g, ConvMode::prec);
    LinearForm<Rat> right = convolve(f, g, ConvMode::succ);
    for (const auto& forest : small_forests(5)) {
        DecForest bare;
        for (const auto& t : forest) bare.push_back(undecorated(t.shape));
        CHECK(left(bare) + right(bare) == full(bare));
    }
}

TEST_CASE("corolla character solves the cumulant fixed point equation") {
    TreeSeries fc = corolla_series(6);
    TreeSeries kap = kappa_series(6);
    LinearForm<Rat> chi = group_character(fc);
    LinearForm<Rat> res =
        LinearForm<Rat>::infinitesimal([kap](const DecTree& t) { return kap.coeff(t.shape); });

    // direct identity on trees and small forests
    LinearForm<Rat> rhs = convolve(res, chi, ConvMode::prec);
    for (int w = 1; w <= 6; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            CHECK(chi(undecorated(t.word())) == rhs(undecorated(t.word())));
    for (const auto& forest : small_forests(4)) {
        DecForest bare;
        for (const auto& t : forest) bare.push_back(undecorated(t.shape));
        if (bare.size() < 2) continue;
        CHECK(chi(bare) == rhs(bare));
    }

    // the graded solver reaches the same character
    LinearForm<Rat> solved = solve_character(res);
    for (int w = 1; w <= 6; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            CHECK(solved(undecorated(t.word())) == chi(undecorated(t.word())));

    CHECK_THROWS_AS(solve_character(chi), std::invalid_argument);
    CHECK_THROWS_AS(extract_cumulant(res), std::invalid_argument);
}

TEST_CASE("decorated character equation in the moment ring") {
    LinearForm<Poly> phi = solve_character(prime_cumulant_form());
    LinearForm<Poly> corolla_char = corolla_moment_character();
    for (int w = 1; w <= 5; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w)) {
            DecTree d = decorate(t.word(), letters(w));
            CHECK(phi(d) == corolla_char(d));
        }

    LinearForm<Poly> kap = extract_cumulant(corolla_char);
    LinearForm<Poly> closed = prime_cumulant_form();
    for (int w = 1; w <= 5; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w)) {
            DecTree d = decorate(t.word(), letters(w));
            CHECK(kap(d) == closed(d));
            if (!is_prime(t)) CHECK(kap(d).is_zero());
        }
}

TEST_CASE("character extraction round trips") {
    LinearForm<Poly> chi = LinearForm<Poly>::character([](const DecTree& t) {
        Rat c = 1 + Rat(int(WordHash{}(t.shape) % 3));
        return c * moment_of_word(t.labels);
    });
    LinearForm<Poly> back = solve_character(extract_cumulant(chi));
    for (int w = 1; w <= 6; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w)) {
            DecTree d = decorate(t.word(), letters(w));
            CHECK(back(d) == chi(d));
        }
}

TEST_CASE("word coproduct expands position subsets") {
    LetterWord w{"a1", "a2"};
    SegTensorSum d = efp_coproduct({w}, EfpMode::full);
    CHECK(d.size() == 4);
    CHECK(d.at({{}, {w}}) == 1);
    CHECK(d.at({{{"a1"}}, {{"a2"}}}) == 1);
    CHECK(d.at({{{"a2"}}, {{"a1"}}}) == 1);
    CHECK(d.at({{w}, {}}) == 1);

    SegTensorSum dp = efp_coproduct({w}, EfpMode::prec);
    CHECK(dp.size() == 2);
    CHECK(dp.count({{{"a2"}}, {{"a1"}}}) == 1);
    CHECK(dp.count({{w}, {}}) == 1);

    // a removed middle letter splits the complement into two segments
    LetterWord v{"a1", "a2", "a3"};
    SegTensorSum dv = efp_coproduct({v}, EfpMode::full);
    CHECK(dv.at({{{"a2"}}, {{"a1"}, {"a3"}}}) == 1);
    CHECK(dv.size() == 8);

    CHECK_THROWS_AS(efp_coproduct({}, EfpMode::prec), std::invalid_argument);
    CHECK_THROWS_AS(iota(LetterWord{}), std::invalid_argument);
}

TEST_CASE("word coproduct is coassociative") {
    using STriple = std::tuple<SegmentedWord, SegmentedWord, SegmentedWord>;
    for (int n = 1; n <= 4; ++n) {
        SegmentedWord x{letters(n)};
        SegTensorSum d = efp_coproduct(x, EfpMode::full);
        std::map<STriple, Rat> left, right;
        for (const auto& [pair, c] : d) {
            for (const auto& [ip, ic] : efp_coproduct(pair.first, EfpMode::full)) {
                STriple key(ip.first, ip.second, pair.second);
                left[key] += c * ic;
            }
            for (const auto& [ip, ic] : efp_coproduct(pair.second, EfpMode::full)) {
                STriple key(pair.first, ip.first, ip.second);
                right[key] += c * ic;
            }
        }
        CHECK(left == right);
    }
}

namespace {

TensorSum iota_tensor(const SegTensorSum& d) {
    TensorSum out;
    for (const auto& [pair, c] : d) {
        ForestSum l = iota(pair.first);
        ForestSum r = iota(pair.second);
        for (const auto& [fl, cl] : l)
            for (const auto& [fr, cr] : r) out[{fl, fr}] += c * cl * cr;
    }
    return out;
}

} // namespace

TEST_CASE("tree sums intertwine the two coproducts") {
    CHECK(iota(letters(2)).size() == 3);
    for (int n = 1; n <= 4; ++n) {
        LetterWord w = letters(n);
        TensorSum lhs_full = iota_tensor(efp_coproduct({w}, EfpMode::full));
        TensorSum lhs_prec = iota_tensor(efp_coproduct({w}, EfpMode::prec));
        TensorSum rhs_full, rhs_prec;
        for (const auto& [f, c] : iota(w)) {
            for (const auto& [pair, d] : coproduct(f)) rhs_full[pair] += c * d;
            for (const auto& [pair, d] : coproduct_half(f, HalfSide::prec))
                rhs_prec[pair] += c * d;
        }
        CHECK(lhs_full == rhs_full);
        CHECK(lhs_prec == rhs_prec);
    }
}

TEST_CASE("word cumulants match tree cumulants through the tree sum") {
    auto phi = [](const LetterWord& v) { return moment_of_word(v); };
    LinearForm<Poly> kform = prime_cumulant_form();
    auto kappa_tree = [&kform](const LetterWord& v) {
        Poly out;
        for (const auto& [f, c] : iota(v)) out += c * kform(f[0]);
        return out;
    };
    for (int n = 1; n <= 5; ++n) {
        LetterWord w = letters(n);
        CHECK(efp_extract_cumulant(w, phi) == kappa_tree(w));
        CHECK(efp_solve_moment(w, kappa_tree) == moment_of_word(w));
    }
}
