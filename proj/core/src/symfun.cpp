#include "sct/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sct {

namespace {

Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool constant_value(const Poly& p, Rat& out) {
    if (p.is_zero()) {
        out = 0;
        return true;
    }
    if (p.terms().size() != 1) return false;
    const auto& [mono, c] = *p.terms().begin();
    if (!mono.empty()) return false;
    out = c;
    return true;
}

} // namespace

std::string PowerSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (c[std::size_t(k)].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c[std::size_t(k)].str() << ")";
        if (k == 1) os << "*t";
        if (k > 1) os << "*t^" << k;
    }
    if (first) os << "0";
    return os.str();
}

PowerSeries series_product(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i)
        for (int j = 0; i + j <= r.order(); ++j)
            r.c[std::size_t(i + j)] += a.c[std::size_t(i)] * b.c[std::size_t(j)];
    return r;
}

PowerSeries series_pow(const PowerSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("series_pow: negative exponent");
    PowerSeries r(a.order());
    r.c[0] = Poly::constant(1);
    for (int i = 0; i < k; ++i) r = series_product(r, a);
    return r;
}

PowerSeries series_inverse(const PowerSeries& a) {
    Rat a0;
    if (!constant_value(a.c[0], a0) || is_zero(a0))
        throw std::invalid_argument("series_inverse: constant term must be a nonzero rational");
    Rat inv0 = 1 / a0;
    PowerSeries r(a.order());
    r.c[0] = Poly::constant(inv0);
    for (int k = 1; k <= a.order(); ++k) {
        Poly s;
        for (int j = 1; j <= k; ++j) s += a.c[std::size_t(j)] * r.c[std::size_t(k - j)];
        r.c[std::size_t(k)] = (-inv0) * s;
    }
    return r;
}

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
    if (!g.c[0].is_zero())
        throw std::invalid_argument("series_compose: inner series needs zero constant term");
    int n = std::min(f.order(), g.order());
    PowerSeries r(n);
    // Horner from the top coefficient down
    for (int k = n; k >= 0; --k) {
        PowerSeries next = series_product(r, g);
        next.c[0] += f.c[std::size_t(k)];
        r = next;
    }
    return r;
}

PowerSeries series_identity(int order) {
    PowerSeries r(order);
    if (order >= 1) r.c[1] = Poly::constant(1);
    return r;
}

PowerSeries revert(const PowerSeries& f) {
    Rat c1;
    if (!f.c[0].is_zero())
        throw std::invalid_argument("revert: series must vanish at the origin");
    if (f.order() < 1 || !constant_value(f.c[1], c1) || is_zero(c1))
        throw std::invalid_argument("revert: linear coefficient must be a nonzero rational");
    int n = f.order();
    Rat inv1 = 1 / c1;
    // graded fixed point g = (t - (f - c1 t) o g) / c1, one exact order per pass
    PowerSeries g(n);
    g.c[1] = Poly::constant(inv1);
    PowerSeries tail(n);
    for (int k = 2; k <= n; ++k) tail.c[std::size_t(k)] = f.c[std::size_t(k)];
    for (int pass = 2; pass <= n; ++pass) {
        PowerSeries t = series_compose(tail, g);
        PowerSeries next(n);
        for (int k = 0; k <= n; ++k) next.c[std::size_t(k)] = (-inv1) * t.c[std::size_t(k)];
        next.c[1] += Poly::constant(inv1);
        g = next;
    }
    return g;
}

PowerSeries moment_series(int N) {
    PowerSeries h(N);
    h.c[0] = Poly::constant(1);
    for (int k = 1; k <= N; ++k) h.c[std::size_t(k)] = Poly::var("m" + std::to_string(k));
    return h;
}

std::vector<Poly> star_alphabet(const std::vector<Poly>& h) {
    int N = int(h.size());
    PowerSeries f(N + 1); // t H(t)
    f.c[1] = Poly::constant(1);
    for (int k = 1; k <= N; ++k) f.c[std::size_t(k + 1)] = h[std::size_t(k - 1)];
    PowerSeries g = revert(f);
    std::vector<Poly> out;
    out.reserve(std::size_t(N));
    for (int k = 1; k <= N; ++k) out.push_back(g.c[std::size_t(k + 1)]);
    return out;
}

std::vector<Poly> hstar(int N) {
    std::vector<Poly> h;
    h.reserve(std::size_t(N));
    for (int k = 1; k <= N; ++k) h.push_back(Poly::var("m" + std::to_string(k)));
    return star_alphabet(h);
}

Poly hstar_lagrange(int n) {
    PowerSeries H = moment_series(n);
    PowerSeries p = series_inverse(series_pow(H, n + 1));
    return frac(1, long(n) + 1) * p.c[std::size_t(n)];
}

namespace {

// series 1 + sum a[k-1] (-t)^k from an alphabet a1 .. aN
PowerSeries alternating_series(const std::vector<Poly>& a) {
    PowerSeries s(int(a.size()));
    s.c[0] = Poly::constant(1);
    for (int k = 1; k <= s.order(); ++k) {
        Poly v = a[std::size_t(k - 1)];
        s.c[std::size_t(k)] = k % 2 == 0 ? v : Rat(-1) * v;
    }
    return s;
}

std::vector<Poly> tail_coefficients(const PowerSeries& s) {
    std::vector<Poly> out;
    for (int k = 1; k <= s.order(); ++k) out.push_back(s.c[std::size_t(k)]);
    return out;
}

} // namespace

std::vector<Poly> estar(int N) {
    return tail_coefficients(series_inverse(alternating_series(hstar(N))));
}

std::vector<Poly> elementary_in_m(int N) {
    std::vector<Poly> m;
    for (int k = 1; k <= N; ++k) m.push_back(Poly::var("m" + std::to_string(k)));
    return tail_coefficients(series_inverse(alternating_series(m)));
}

std::vector<Poly> classical_cumulants(int N) {
    std::vector<Poly> hs = hstar(N);
    PowerSeries H(N);
    H.c[0] = Poly::constant(1);
    for (int k = 1; k <= N; ++k) H.c[std::size_t(k)] = hs[std::size_t(k - 1)];
    return tail_coefficients(series_inverse(H));
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 0) {
        emit(parts);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        parts.push_back(p);
        partitions_rec(n - p, p, parts, emit);
        parts.pop_back();
    }
}

Rat binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) r *= frac(n - i, i + 1);
    return r;
}

} // namespace

Poly estar_formula(int n) {
    if (n < 2) throw std::invalid_argument("estar_formula: needs n >= 2");
    Poly out;
    std::vector<int> parts;
    partitions_rec(n, n, parts, [&](const std::vector<int>& lam) {
        long ell = long(lam.size());
        Rat coeff = binomial(long(n) - 1, ell);
        if (is_zero(coeff)) return;
        // multinomial of the part multiplicities
        Rat perms = 1;
        for (long i = 2; i <= ell; ++i) perms *= i;
        int run = 1;
        for (std::size_t i = 1; i <= lam.size(); ++i) {
            if (i < lam.size() && lam[i] == lam[i - 1]) {
                ++run;
                perms /= run;
            } else {
                run = 1;
            }
        }
        Poly mono = Poly::constant(1);
        for (int p : lam) mono = mono * Poly::var("e" + std::to_string(p));
        out += (coeff * perms * frac(1, long(n) - 1)) * mono;
    });
    return out;
}

} // namespace sct
