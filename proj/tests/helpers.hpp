#pragma once

#include <random>
#include <vector>

#include "paq/free_product.hpp"
#include "paq/graph.hpp"
#include "paq/path_algebra.hpp"
#include "paq/poly.hpp"
#include "paq/rational.hpp"

namespace paq::testing {

using Rng = std::mt19937_64;

// Engine output taken mod n, so runs are identical across platforms
// (std::uniform_int_distribution is not portable).
inline long long bounded(Rng& rng, long long n) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(n));
}

inline Poly make_poly(std::vector<long long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

inline Rational random_rational(Rng& rng) {
    const long long num = bounded(rng, 11) - 5;
    const long long den = 1 + bounded(rng, 4);
    return Rational(num, den);
}

inline Rational random_nonzero_rational(Rng& rng) {
    Rational r = random_rational(rng);
    while (r == 0) r = random_rational(rng);
    return r;
}

inline Poly random_property_f_poly(Rng& rng, int max_degree) {
    const int deg = 1 + static_cast<int>(bounded(rng, max_degree));
    std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
    c[0] = random_nonzero_rational(rng);
    for (int k = 1; k < deg; ++k) c[static_cast<std::size_t>(k)] = random_rational(rng);
    c[static_cast<std::size_t>(deg)] = random_nonzero_rational(rng);
    return Poly(std::move(c));
}

inline int euler_phi(int m) {
    int result = 0;
    for (int k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++result;
    return result;
}

// Exact rational value of a long double (a binary fraction), so polynomials
// can be evaluated at float approximations without rounding on top.
inline Rational rational_from_longdouble(long double x) {
    int exp2 = 0;
    const long double m = frexpl(x, &exp2);
    const long long mant = static_cast<long long>(m * 9223372036854775808.0L);  // m * 2^63
    Rational val{Int(mant)};
    const int e = exp2 - 63;
    Int p(1);
    for (int i = 0; i < (e > 0 ? e : -e); ++i) p *= 2;
    return e > 0 ? val * Rational(p) : val / Rational(p);
}

// |f(4cos^2(pi/m))| evaluated exactly at a long-double root approximation.
inline double residual_at_4cos2(const Poly& f, int m) {
    const long double x = 4.0L * powl(cosl(M_PIl / m), 2.0L);
    const Rational v = f.eval(rational_from_longdouble(x));
    return std::abs(to_double(v));
}

// Connected graph on up to max_n vertices: a random attachment tree plus
// random extra edges (loops and parallel edges included).
inline GraphPtr random_connected_graph(Rng& rng, int max_n = 6, int max_edges = 9) {
    const int n = 1 + static_cast<int>(bounded(rng, max_n));
    std::vector<GeometricEdge> edges;
    for (int v = 2; v <= n; ++v) {
        const int u = 1 + static_cast<int>(bounded(rng, v - 1));
        edges.push_back({"e" + std::to_string(edges.size()), u, v});
    }
    const int max_extra = max_edges - static_cast<int>(edges.size());
    const int extra = max_extra > 0 ? static_cast<int>(bounded(rng, max_extra + 1)) : 0;
    for (int k = 0; k < extra; ++k) {
        const int a = 1 + static_cast<int>(bounded(rng, n));
        const int b = 1 + static_cast<int>(bounded(rng, n));
        edges.push_back({"e" + std::to_string(edges.size()), a, b});
    }
    return make_graph(n, std::move(edges));
}

// Family on a random Y1 that always contains the attachment-tree scaffold
// (edges 0..n-2), so a Y1 spanning tree exists; degrees up to max_degree.
inline PolyFamily random_family(Rng& rng, const GraphPtr& g, int max_degree = 3) {
    PolyFamily fam(g);
    const int scaffold = g->vertex_count() - 1;
    for (int e = 0; e < g->edge_count(); ++e) {
        if (e >= scaffold && bounded(rng, 2) == 0) continue;
        fam.set(e, random_property_f_poly(rng, max_degree));
    }
    return fam;
}

inline std::vector<DirectedEdge> out_edges(const Graph& g, int v) {
    std::vector<DirectedEdge> out;
    for (int e = 0; e < g.edge_count(); ++e)
        for (bool fwd : {true, false}) {
            DirectedEdge d{e, fwd};
            if (g.origin(d) == v) out.push_back(d);
        }
    return out;
}

inline Path random_walk(Rng& rng, const GraphPtr& g, int max_len) {
    int at = 1 + static_cast<int>(bounded(rng, g->vertex_count()));
    Path p = Path::at(at);
    const int len = static_cast<int>(bounded(rng, max_len + 1));
    for (int s = 0; s < len; ++s) {
        const auto outs = out_edges(*g, at);
        if (outs.empty()) break;
        const auto d = outs[static_cast<std::size_t>(bounded(rng, outs.size()))];
        p = p * Path::of_edge(*g, d);
        at = g->terminus(d);
    }
    return p;
}

inline PathAlgebraElement random_element(Rng& rng, const GraphPtr& g, int max_terms = 4,
                                         int max_len = 4) {
    PathAlgebraElement r(g);
    const int terms = 1 + static_cast<int>(bounded(rng, max_terms));
    for (int k = 0; k < terms; ++k)
        r.add_term(random_walk(rng, g, max_len), random_nonzero_rational(rng));
    return r;
}

inline Letter random_letter(Rng& rng, const FactorUniverse& uni, int factor) {
    const Factor& f = uni.factor(factor);
    switch (f.kind) {
        case FactorKind::PolyQuotient:
            return poly_letter(factor, 1 + bounded(rng, f.modulus.degree() - 1));
        case FactorKind::Laurent: {
            const long long k = 1 + bounded(rng, 3);
            return laurent_letter(factor, bounded(rng, 2) == 0 ? k : -k);
        }
        default: {
            std::string xw;
            const long long len = 1 + bounded(rng, 3);
            for (long long i = 0; i < len; ++i) xw += bounded(rng, 2) == 0 ? 'x' : 'X';
            return xword_letter(factor, std::move(xw));
        }
    }
}

inline Word random_word(Rng& rng, const FactorUniverse& uni, int max_letters) {
    std::vector<Letter> letters;
    const long long len = bounded(rng, max_letters + 1);
    int last = -1;
    for (long long i = 0; i < len; ++i) {
        int factor = static_cast<int>(bounded(rng, uni.count()));
        if (factor == last) {
            if (uni.count() == 1) break;
            factor = (factor + 1) % uni.count();
        }
        letters.push_back(random_letter(rng, uni, factor));
        last = factor;
    }
    return Word{std::move(letters)};
}

inline FreeProductElement random_fp_element(Rng& rng, const FactorUniversePtr& uni,
                                            int max_terms = 4, int max_letters = 4) {
    FreeProductElement r(uni);
    const long long terms = 1 + bounded(rng, max_terms);
    for (long long k = 0; k < terms; ++k)
        r.add_term(random_word(rng, *uni, max_letters), random_nonzero_rational(rng));
    return r;
}

}  // namespace paq::testing
