#include "sct/verify.hpp"

#include "sct/cumulants.hpp"
#include "sct/hopf.hpp"
#include "sct/ncpart.hpp"
#include "sct/nsym.hpp"
#include "sct/series.hpp"
#include "sct/symfun.hpp"
#include "sct/tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

namespace sct {

namespace {

struct Suite {
    std::string prefix;
    std::vector<CheckResult> results;

    // a throwing check counts as failed, the CLI must keep going
    void check(const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception&) {
            ok = false;
        }
        results.push_back({prefix + ": " + name, ok});
    }
};

std::vector<std::string> letters(int n, int base = 1) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("a" + std::to_string(base + i));
    return out;
}

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

TreeSeries random_group_element(int cap, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 2), coeff(-2, 2);
    TreeSeries p = TreeSeries::unit(cap);
    for (int w = 1; w <= cap; ++w)
        for (const auto& t : enumerate_trees(TreeKind::all, w))
            if (coin(rng) == 0) p.add_term(t.word(), coeff(rng));
    return p;
}

NSym make_nsym(NBasis b, std::vector<std::pair<Composition, Rat>> terms) {
    NSym x(b);
    for (auto& [I, c] : terms) x.add_term(std::move(I), c);
    return x;
}

long long llcount(std::size_t n) { return static_cast<long long>(n); }

const long long tree_table[] = {1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859};
const long long prime_table[] = {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};

void suite_counting(Suite& s, int weight) {
    int top = std::min(weight, 10);
    s.check("tree counts by weight", [&] {
        for (int w = 0; w <= top; ++w)
            if (llcount(enumerate_trees(TreeKind::all, w).size()) != tree_table[w]) return false;
        return true;
    });
    s.check("prime tree counts by weight", [&] {
        for (int w = 0; w <= top; ++w)
            if (llcount(enumerate_trees(TreeKind::prime, w).size()) != prime_table[w])
                return false;
        return true;
    });
    s.check("binary counts are catalan", [&] {
        for (int w = 0; w <= top; ++w)
            if (llcount(enumerate_trees(TreeKind::binary, w).size()) != catalan(w)) return false;
        return true;
    });
    s.check("right directed counts are catalan", [&] {
        for (int w = 0; w <= top; ++w)
            if (llcount(enumerate_trees(TreeKind::right_directed, w).size()) != catalan(w))
                return false;
        return true;
    });
    s.check("left directed counts are catalan", [&] {
        for (int w = 0; w <= top; ++w)
            if (llcount(enumerate_trees(TreeKind::left_directed, w).size()) != catalan(w))
                return false;
        return true;
    });
    s.check("prime census over noncrossing partitions", [&] {
        for (int n = 1; n <= std::min(weight, 8); ++n) {
            long long total = 0;
            for (const Partition& p : enumerate_nc(n)) {
                long long prod = 1;
                for (const auto& b : p.blocks()) prod *= catalan(int(b.size()) - 1);
                total += prod;
            }
            if (total != prime_table[n]) return false;
        }
        return true;
    });
}

void suite_goldens(Suite& s, int) {
    s.check("inverse corolla series to weight two", [&] {
        TreeSeries g = signed_tree_series(2);
        return g.str() == "S[0] - S[1,0,0] - S[2,0,0,0] + S[1,1,0,0,0] + S[1,0,1,0,0]";
    });
    s.check("prime series to weight three", [&] {
        TreeSeries k = kappa_series(3);
        if (k.str() != "S[0] + S[1,0,0] + S[2,0,0,0] - S[1,1,0,0,0] + S[3,0,0,0,0]"
                       " - S[2,1,0,0,0,0] - S[2,0,1,0,0,0] - S[1,2,0,0,0,0]"
                       " + S[1,1,1,0,0,0,0] + S[1,1,0,1,0,0,0]")
            return false;
        return k.coeff(Word{1, 0, 1, 0, 0}) == 0;
    });
    s.check("lagrange expansion degrees zero through four", [&] {
        NSym g = lagrange_g(4);
        if (!(g.graded_part(0) == NSym::one())) return false;
        if (g.graded_part(1).str() != "S[1]") return false;
        if (g.graded_part(2).str() != "S[2] + S[1,1]") return false;
        if (g.graded_part(3).str() != "S[3] + 2S[2,1] + S[1,2] + S[1,1,1]") return false;
        return g.graded_part(4).str() ==
               "S[4] + 3S[3,1] + 2S[2,2] + S[1,3] + 3S[2,1,1] + 2S[1,2,1] + S[1,1,2] + S[1,1,1,1]";
    });
    s.check("lagrange degree three in the ribbon basis", [&] {
        return convert(lagrange_g(3).graded_part(3), NBasis::R).str() ==
               "5R[3] + 3R[2,1] + 2R[1,2] + R[1,1,1]";
    });
    s.check("cumulant generators in the complete basis", [&] {
        NSym k = cumulant_K(4, KMethod::solve);
        if (k.graded_part(1).str() != "S[1]") return false;
        if (k.graded_part(2).str() != "S[2] - S[1,1]") return false;
        if (k.graded_part(3).str() != "S[3] - 2S[2,1] - S[1,2] + 2S[1,1,1]") return false;
        return k.graded_part(4).str() ==
               "S[4] - 3S[3,1] - 2S[2,2] - S[1,3] + 5S[2,1,1] + 3S[1,2,1] + 2S[1,1,2]"
               " - 5S[1,1,1,1]";
    });
    s.check("cumulant generators in the elementary basis", [&] {
        NSym k = cumulant_K(4, KMethod::solve);
        if (convert(k.graded_part(1), NBasis::L).str() != "L[1]") return false;
        if (convert(k.graded_part(2), NBasis::L).str() != "-L[2]") return false;
        if (convert(k.graded_part(3), NBasis::L).str() != "L[3] + L[2,1]") return false;
        return convert(k.graded_part(4), NBasis::L) ==
               make_nsym(NBasis::L, {{{4}, -1}, {{3, 1}, -2}, {{2, 2}, -1}, {{2, 1, 1}, -1}});
    });
    s.check("cumulant generators in the ribbon basis", [&] {
        NSym k = cumulant_K(4, KMethod::solve);
        if (convert(k.graded_part(2), NBasis::R).str() != "-R[1,1]") return false;
        if (convert(k.graded_part(3), NBasis::R).str() != "R[1,2] + 2R[1,1,1]") return false;
        return convert(k.graded_part(4), NBasis::R).str() ==
               "-(R[1,3] + 2R[1,2,1] + 3R[1,1,2] + 5R[1,1,1,1])";
    });
    s.check("complete generators in the cumulant alphabet", [&] {
        if (s_in_K(2).str() != "K[2] + K[1,1]") return false;
        if (s_in_K(3).str() != "K[3] + 2K[2,1] + K[1,2] + K[1,1,1]") return false;
        if (s_in_K(4).str() !=
            "K[4] + 3K[3,1] + 2K[2,2] + K[1,3] + 3K[2,1,1] + 2K[1,2,1] + K[1,1,2] + K[1,1,1,1]")
            return false;
        for (int n = 1; n <= 6; ++n)
            if (!(expand_K(s_in_K(n)) == NSym::gen(n))) return false;
        return true;
    });
    s.check("coproduct of the left comb displayed", [&] {
        DecTree comb = decorate({1, 1, 0, 0, 0}, {"a1", "a2"});
        DecTree b1 = decorate({1, 0, 0}, {"a1"});
        DecTree b2 = decorate({1, 0, 0}, {"a2"});
        TensorSum d = coproduct({comb});
        return d.size() == 3 && d.at({{}, {comb}}) == 1 && d.at({{comb}, {}}) == 1 &&
               d.at({{b2}, {b1}}) == 1;
    });
    s.check("nested evaluation of the six sector tree", [&] {
        SchroederTree t = SchroederTree::from_word({2, 1, 0, 1, 0, 0, 2, 0, 0, 0, 0});
        PhiPoly v = eval_tree(t, letters(6), EvalMode::nested);
        if (product_str(v.terms().begin()->first) !=
            "\xcf\x86(\xcf\x86(a1\xcf\x86(a2))a3\xcf\x86(a4a5)a6)")
            return false;
        Poly sc = eval_tree_scalar(t, letters(6));
        Poly want = Poly::var("m[a1]") * Poly::var("m[a2]") * Poly::var("m[a3a6]") *
                    Poly::var("m[a4a5]");
        return sc == want;
    });
    s.check("unsigned moment polynomials", [&] {
        return unsigned_polynomial(3).str() == "2m1^3 + 3m2m1 + m3" &&
               unsigned_polynomial(4).str() == "5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4";
    });
}

void suite_nsym(Suite& s, int weight) {
    int cap = std::min(weight, 8);
    NSym base = cumulant_K(cap, KMethod::solve);
    s.check("antipode route matches the solve route",
            [&] { return cumulant_K(cap, KMethod::antipode_formula) == base; });
    s.check("ribbon route matches the solve route",
            [&] { return cumulant_K(cap, KMethod::ribbon_rule) == base; });
    s.check("tree projection of the prime series",
            [&] { return project_to_nsym(kappa_series(cap)) == base; });
    s.check("tree projection of the inverse corolla series", [&] {
        int c = std::min(weight, 6);
        return project_to_nsym(signed_tree_series(c)) == minus_A(lagrange_g(c));
    });
    s.check("tree projection of the corolla series", [&] {
        int c = std::min(weight, 6);
        return project_to_nsym(corolla_series(c)) == sigma1(c);
    });
}

void suite_operad(Suite& s, int weight) {
    s.check("corolla series composed with its inverse", [&] {
        int cap = std::min(weight + 1, 10);
        return compose(corolla_series(cap), signed_tree_series(cap)) == TreeSeries::unit(cap);
    });
    s.check("prime series fixes the corolla series on the left", [&] {
        int cap = std::min(weight, 9);
        TreeSeries fc = corolla_series(cap);
        return dashv(kappa_series(cap), fc) == fc;
    });
    int tcap = std::min(weight, 6);
    std::mt19937_64 rng(4279u);
    s.check("half products recombine over random triples", [&] {
        for (int i = 0; i < 100; ++i) {
            TreeSeries f = random_group_element(tcap, rng);
            TreeSeries g = random_group_element(tcap, rng);
            if (!(vdash(dashv(f, g), g) == compose(f, g))) return false;
        }
        return true;
    });
    s.check("left half product eats composition on the right", [&] {
        for (int i = 0; i < 100; ++i) {
            TreeSeries f = random_group_element(tcap, rng);
            TreeSeries g = random_group_element(tcap, rng);
            TreeSeries h = random_group_element(tcap, rng);
            if (!(dashv(dashv(f, g), h) == dashv(f, compose(g, h)))) return false;
        }
        return true;
    });
    s.check("r transform of the corolla series", [&] {
        int cap = std::min(weight, 8);
        return r_transform(corolla_series(cap)) == kappa_series(cap);
    });
    s.check("right inverse of the inverse corolla series", [&] {
        int cap = std::min(weight, 8);
        return vdash_inverse(signed_tree_series(cap)) == kappa_series(cap);
    });
    s.check("left directed fixed point", [&] {
        int cap = std::min(weight, 8);
        return dashv_fixpoint(corolla_series(cap)) == left_directed_series(cap);
    });
}

void suite_hopf(Suite& s, int weight) {
    int fcap = std::min(weight, 5);
    s.check("coassociativity on small forests", [&] {
        auto full = [](const DecForest& f) { return coproduct(f); };
        for (const DecForest& f : small_forests(fcap)) {
            TensorSum d = coproduct(f);
            if (!(expand_leg(d, true, full) == expand_leg(d, false, full))) return false;
        }
        return true;
    });
    s.check("codendriform axioms", [&] {
        auto reduced = [](const DecForest& f) { return coproduct_reduced(f); };
        auto prec = [](const DecForest& f) { return coproduct_half_reduced(f, HalfSide::prec); };
        auto succ = [](const DecForest& f) { return coproduct_half_reduced(f, HalfSide::succ); };
        for (const DecForest& f : small_forests(fcap)) {
            TensorSum dprec = prec(f);
            TensorSum dsucc = succ(f);
            if (!(expand_leg(dprec, true, prec) == expand_leg(dprec, false, reduced)))
                return false;
            if (!(expand_leg(dprec, true, succ) == expand_leg(dsucc, false, prec))) return false;
            if (!(expand_leg(dsucc, true, reduced) == expand_leg(dsucc, false, succ)))
                return false;
        }
        return true;
    });
    s.check("character fixed point solved for symbolic moments", [&] {
        int cap = std::min(weight, 6);
        LinearForm<Poly> phi = solve_character(prime_cumulant_form());
        LinearForm<Poly> corolla_char = corolla_moment_character();
        for (int w = 1; w <= cap; ++w)
            for (const auto& t : enumerate_trees(TreeKind::all, w)) {
                DecTree d = decorate(t.word(), letters(w));
                if (!(phi(d) == corolla_char(d))) return false;
            }
        return true;
    });
    s.check("character inversion recovers the cumulant form", [&] {
        int cap = std::min(weight, 6);
        LinearForm<Poly> kap = extract_cumulant(corolla_moment_character());
        LinearForm<Poly> closed = prime_cumulant_form();
        for (int w = 1; w <= cap; ++w)
            for (const auto& t : enumerate_trees(TreeKind::all, w)) {
                DecTree d = decorate(t.word(), letters(w));
                if (!(kap(d) == closed(d))) return false;
            }
        return true;
    });
    s.check("tree sum intertwines the coproducts", [&] {
        int cap = std::min(weight - 2, 4);
        auto iota_tensor = [](const SegTensorSum& d) {
            TensorSum out;
            for (const auto& [pair, c] : d) {
                ForestSum l = iota(pair.first);
                ForestSum r = iota(pair.second);
                for (const auto& [fl, cl] : l)
                    for (const auto& [fr, cr] : r) out[{fl, fr}] += c * cl * cr;
            }
            return out;
        };
        for (int n = 1; n <= cap; ++n) {
            LetterWord w = letters(n);
            TensorSum lhs_full = iota_tensor(efp_coproduct({w}, EfpMode::full));
            TensorSum lhs_prec = iota_tensor(efp_coproduct({w}, EfpMode::prec));
            TensorSum rhs_full, rhs_prec;
            for (const auto& [f, c] : iota(w)) {
                for (const auto& [pair, d] : coproduct(f)) rhs_full[pair] += c * d;
                for (const auto& [pair, d] : coproduct_half(f, HalfSide::prec))
                    rhs_prec[pair] += c * d;
            }
            if (!(lhs_full == rhs_full) || !(lhs_prec == rhs_prec)) return false;
        }
        return true;
    });
    s.check("word cumulants through the tree sum", [&] {
        int cap = std::min(weight - 1, 5);
        auto phi = [](const LetterWord& v) { return moment_of_word(v); };
        LinearForm<Poly> kform = prime_cumulant_form();
        auto kappa_tree = [&kform](const LetterWord& v) {
            Poly out;
            for (const auto& [f, c] : iota(v)) out += c * kform(f[0]);
            return out;
        };
        for (int n = 1; n <= cap; ++n) {
            LetterWord w = letters(n);
            if (!(efp_extract_cumulant(w, phi) == kappa_tree(w))) return false;
            if (!(efp_solve_moment(w, kappa_tree) == moment_of_word(w))) return false;
        }
        return true;
    });
}

void suite_speicher(Suite& s, int weight) {
    int ncap = std::min(weight, 7);
    s.check("tree cumulants equal the lattice sums", [&] {
        for (int n = 1; n <= ncap; ++n)
            if (!(kappa_eval_scalar(n) == speicher_kappa(n))) return false;
        return true;
    });
    s.check("moments rebuild from cumulants", [&] {
        for (int n = 1; n <= std::min(weight - 1, 6); ++n) {
            Poly want;
            std::string name = "m[";
            for (int i = 1; i <= n; ++i) name += "a" + std::to_string(i);
            want = Poly::var(name + "]");
            if (!(moments_from_kappa(n) == want)) return false;
        }
        return true;
    });
    s.check("complement examples", [&] {
        return kreweras(Partition::parse("1,3,4|2|5,7|6|8")).to_string() == "1,2|3|4,7,8|5,6" &&
               kreweras(Partition::parse("1,2|3|4,6|5")).to_string() == "1|2,3,6|4,5" &&
               kreweras(Partition::singletons(3)).to_string() == "1,2,3" &&
               kreweras(Partition::one_block(3)).to_string() == "1|2|3";
    });
    s.check("complement reverses order", [&] {
        for (int n = 1; n <= std::min(ncap, 6); ++n)
            for (const Partition& a : enumerate_nc(n))
                for (const Partition& b : enumerate_nc(n)) {
                    bool leq = partition_leq(a, b);
                    if (leq != partition_leq(kreweras(b), kreweras(a))) return false;
                }
        return true;
    });
    s.check("moebius closed form equals the recursion", [&] {
        for (int n = 1; n <= ncap; ++n) {
            Partition bot = Partition::singletons(n);
            for (const Partition& p : enumerate_nc(n)) {
                long long closed = 1;
                for (const auto& b : p.blocks()) {
                    int m = int(b.size()) - 1;
                    closed *= (m % 2 == 0 ? 1 : -1) * catalan(m);
                }
                if (moebius_nc(bot, p) != closed) return false;
                if (moebius_bottom(p) != closed) return false;
            }
        }
        return true;
    });
    s.check("moebius reflects through the complement", [&] {
        for (int n = 1; n <= ncap; ++n) {
            Partition bot = Partition::singletons(n);
            Partition top = Partition::one_block(n);
            for (const Partition& p : enumerate_nc(n))
                if (moebius_nc(bot, p) != moebius_nc(kreweras(p), top)) return false;
        }
        return true;
    });
    s.check("sector partition factors through the complement", [&] {
        for (int n = 1; n <= ncap; ++n)
            for (const auto& t : enumerate_trees(TreeKind::prime, n)) {
                Partition sp = sector_partition(t);
                if (!(sp == kreweras(arrangement_to_partition(tree_to_arrangement(t)))))
                    return false;
            }
        return true;
    });
}

void suite_cluster(Suite& s, int weight) {
    int top = std::min(weight, 6);
    s.check("local move is a sign reversing involution", [&] {
        for (int n = 2; n <= top; ++n)
            for (int j = 1; j < n; ++j) {
                int k = n - j;
                for (const auto& t : enumerate_trees(TreeKind::prime, n)) {
                    SchroederTree u = cluster_involution(t, j, k);
                    if (!is_prime(u) || u.weight() != n) return false;
                    if (u == t) return false;
                    if ((t.internal_count() + u.internal_count()) % 2 == 0) return false;
                    if (!(cluster_involution(u, j, k) == t)) return false;
                }
            }
        return true;
    });
    s.check("factored cumulants vanish", [&] {
        for (int n = 2; n <= top; ++n)
            for (int j = 1; j < n; ++j)
                if (!factored_kappa(j, n - j).is_zero()) return false;
        return true;
    });
}

void suite_classical(Suite& s, int weight) {
    s.check("unsigned moment polynomials", [&] {
        return unsigned_polynomial(3).str() == "2m1^3 + 3m2m1 + m3" &&
               unsigned_polynomial(4).str() == "5m1^4 + 10m2m1^2 + 2m2^2 + 4m3m1 + m4";
    });
    int ncap = std::min(weight, 6);
    s.check("cumulants are signed starred elementaries", [&] {
        std::vector<Poly> k = classical_cumulants(ncap);
        std::vector<Poly> es = estar(ncap);
        for (int n = 1; n <= ncap; ++n) {
            Poly want = n % 2 == 0 ? es[std::size_t(n - 1)] : Rat(-1) * es[std::size_t(n - 1)];
            if (!(k[std::size_t(n - 1)] == want)) return false;
        }
        return true;
    });
    s.check("star alphabet involution", [&] {
        int cap = std::min(weight, 5);
        std::vector<Poly> back = star_alphabet(hstar(cap));
        for (int n = 1; n <= cap; ++n)
            if (!(back[std::size_t(n - 1)] == Poly::var("m" + std::to_string(n)))) return false;
        return true;
    });
    s.check("reversion round trip to order eight", [&] {
        std::mt19937_64 rng(20793u);
        std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
        for (int trial = 0; trial < 4; ++trial) {
            PowerSeries f(8);
            f.c[1] = Poly::constant(1);
            for (int k = 2; k <= 8; ++k) {
                Rat r(num(rng), den(rng));
                r.canonicalize();
                f.c[std::size_t(k)] = Poly::constant(r);
            }
            if (!(revert(revert(f)) == f)) return false;
            if (!(series_compose(f, revert(f)) == series_identity(8))) return false;
        }
        return true;
    });
    s.check("univariate consistency triangle", [&] {
        std::vector<Poly> k = classical_cumulants(ncap);
        NSym K = cumulant_K(ncap, KMethod::solve);
        for (int n = 1; n <= ncap; ++n) {
            if (!(k[std::size_t(n - 1)] == univariate_cumulant(n))) return false;
            Poly fromK;
            NSym Kn = K.graded_part(n);
            for (const auto& [I, coeff] : Kn.terms()) {
                Poly mono = Poly::constant(coeff);
                for (int part : I) mono = mono * Poly::var("m" + std::to_string(part));
                fromK += mono;
            }
            if (!(fromK == k[std::size_t(n - 1)])) return false;
        }
        return true;
    });
}

} // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names = {"counting", "goldens", "nsym",
                                                   "operad",   "hopf",    "speicher",
                                                   "cluster",  "classical", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int weight) {
    if (weight < 0) throw std::invalid_argument("run_suite: weight must be nonnegative");
    Suite s;
    s.prefix = suite;
    if (suite == "counting") {
        suite_counting(s, weight);
    } else if (suite == "goldens") {
        suite_goldens(s, weight);
    } else if (suite == "nsym") {
        suite_nsym(s, weight);
    } else if (suite == "operad") {
        suite_operad(s, weight);
    } else if (suite == "hopf") {
        suite_hopf(s, weight);
    } else if (suite == "speicher") {
        suite_speicher(s, weight);
    } else if (suite == "cluster") {
        suite_cluster(s, weight);
    } else if (suite == "classical") {
        suite_classical(s, weight);
    } else if (suite == "all") {
        std::vector<CheckResult> out;
        for (const std::string& name : verify_suites()) {
            if (name == "all") continue;
            std::vector<CheckResult> part = run_suite(name, weight);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    } else {
        throw std::invalid_argument("run_suite: unknown suite " + suite);
    }
    return s.results;
}

} // namespace sct
