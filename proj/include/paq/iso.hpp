#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "paq/free_product.hpp"
#include "paq/graph.hpp"
#include "paq/matrix.hpp"
#include "paq/path_algebra.hpp"

namespace paq {

// Degree-1 member of the family: K[t]/<f> is just Q, with t identified with
// the root of f. Reported, but kept out of the factor universe.
struct TrivialFactor {
    std::string edge_name;
    Poly f;
    Rational root;
};

// Everything the isomorphism needs: the graph with its family, the chosen
// tree and orientation, and the factor assignment of Q. Cycle edges inside
// Y1 get a Laurent factor z plus a quotient factor u (for u = x*xbar), which
// is the translation of K[x,xbar]/<f(x xbar), f(xbar x)> into
// K[z,z^-1] * K[t]/<f>; x maps to z and xbar to z^-1 u.
struct IsoContext {
    GraphPtr graph;
    PolyFamily fam;
    SpanningTree tree;
    Orientation orientation;
    FactorUniversePtr factors;

    struct EdgeImage {
        int t_factor = -1;
        int z_factor = -1;
        int u_factor = -1;
        int x_factor = -1;
        std::optional<Rational> root;  // set when f has degree 1
    };
    std::vector<EdgeImage> images;  // by geometric edge index
    std::vector<TrivialFactor> trivial_factors;

    DirectedEdge positive(int e) const {
        return orientation.positive[static_cast<std::size_t>(e)];
    }
    int edge_of_factor(int factor) const {
        return graph->edge_index(factors->factor(factor).edge_name);
    }
};

inline IsoContext build_context(const GraphPtr& g, const PolyFamily& fam, int root = 1) {
    if (!g->is_connected()) throw NotConnectedError("graph is not connected");
    IsoContext ctx;
    ctx.graph = g;
    ctx.fam = fam;
    ctx.tree = spanning_tree(*g, fam.y1(), root);
    ctx.orientation = orient(*g, ctx.tree);
    ctx.images.resize(static_cast<std::size_t>(g->edge_count()));

    std::vector<Factor> factors;
    auto add_factor = [&](Factor f) {
        factors.push_back(std::move(f));
        return static_cast<int>(factors.size()) - 1;
    };
    for (int e = 0; e < g->edge_count(); ++e) {
        const std::string& name = g->edge(e).name;
        auto& img = ctx.images[static_cast<std::size_t>(e)];
        const bool in_tree = ctx.tree.tree_edges.count(e) > 0;
        if (!fam.in_y1(e)) {
            img.x_factor = add_factor({"x_" + name, FactorKind::FreeTwoVars, {}, name, 'x'});
            continue;
        }
        const Poly& f = fam.at(e);
        if (f.degree() == 1) {
            img.root = -f.constant_term() / f.coeff(1);
            ctx.trivial_factors.push_back({name, f, *img.root});
        }
        if (in_tree) {
            if (f.degree() >= 2)
                img.t_factor = add_factor({"t_" + name, FactorKind::PolyQuotient, f, name, 't'});
        } else {
            img.z_factor = add_factor({"z_" + name, FactorKind::Laurent, {}, name, 'z'});
            if (f.degree() >= 2)
                img.u_factor = add_factor({"u_" + name, FactorKind::PolyQuotient, f, name, 'u'});
        }
    }
    ctx.factors = make_universe(std::move(factors));
    return ctx;
}

// The Q-coefficient of phi on one directed edge: phi(d) = q * e_{o(d) t(d)}.
inline FreeProductElement phi_edge(const IsoContext& ctx, DirectedEdge d) {
    const auto& img = ctx.images[static_cast<std::size_t>(d.edge)];
    const bool positive = ctx.orientation.is_positive(d);
    const auto& uni = ctx.factors;
    if (img.x_factor >= 0)
        return FreeProductElement::letter(uni, xword_letter(img.x_factor, positive ? "x" : "X"));
    if (img.z_factor >= 0) {
        if (positive) return FreeProductElement::letter(uni, laurent_letter(img.z_factor, 1));
        FreeProductElement zinv =
            FreeProductElement::letter(uni, laurent_letter(img.z_factor, -1));
        if (img.u_factor >= 0)
            return zinv * FreeProductElement::letter(uni, poly_letter(img.u_factor, 1));
        return *img.root * zinv;
    }
    // tree edge
    if (positive) return FreeProductElement::one(uni);
    if (img.t_factor >= 0) return FreeProductElement::letter(uni, poly_letter(img.t_factor, 1));
    return FreeProductElement::scalar(uni, *img.root);
}

// phi: K-Gamma -> M_N(Q). A path maps to (product of edge coefficients)
// times the matrix unit of its endpoints.
inline MatrixElement phi(const IsoContext& ctx, const PathAlgebraElement& a) {
    if (a.graph() && a.graph().get() != ctx.graph.get())
        throw Error("element lives over a different graph");
    const int n = ctx.graph->vertex_count();
    MatrixElement m = MatrixElement::zero(ctx.factors, n);
    for (const auto& [p, c] : a.terms()) {
        FreeProductElement q = FreeProductElement::one(ctx.factors);
        for (const auto& d : p.edges()) q = q * phi_edge(ctx, d);
        m.at(p.origin(), p.terminus()) =
            m.at(p.origin(), p.terminus()) + c * q;
    }
    return m;
}

// Cached geodesic elements P(i, j), used by psi and the verifier.
class GeodesicTable {
  public:
    explicit GeodesicTable(const IsoContext& ctx) : n_(ctx.graph->vertex_count()) {
        elems_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                elems_.push_back(geodesic_element(ctx.graph, ctx.tree, ctx.orientation,
                                                  ctx.fam, i, j));
    }
    const PathAlgebraElement& at(int i, int j) const {
        return elems_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }

  private:
    int n_;
    std::vector<PathAlgebraElement> elems_;
};

namespace detail {

inline PathAlgebraElement pa_pow(const PathAlgebraElement& base, long long k,
                                 const PathAlgebraElement& unit_term) {
    PathAlgebraElement r = unit_term;
    for (long long i = 0; i < k; ++i) r = r * base;
    return r;
}

}  // namespace detail

// psi_i on a single letter, conjugated into [s_i] K-Gamma [s_i].
inline PathAlgebraElement psi_letter(const IsoContext& ctx, const GeodesicTable& table,
                                     int i, const Letter& letter) {
    const auto& g = ctx.graph;
    const Factor& fac = ctx.factors->factor(letter.factor);
    const int e = ctx.edge_of_factor(letter.factor);
    const DirectedEdge w = ctx.positive(e);
    const int o = g->origin(w), t = g->terminus(w);
    const PathAlgebraElement at_i = PathAlgebraElement::vertex(g, i);
    switch (fac.role) {
        case 't':
        case 'u': {
            const PathAlgebraElement loop =
                PathAlgebraElement::edge(g, w) * PathAlgebraElement::edge(g, w.reversed());
            return table.at(i, o) * detail::pa_pow(loop, letter.exp,
                                                   PathAlgebraElement::vertex(g, o)) *
                   table.at(o, i);
        }
        case 'z': {
            if (letter.exp > 0) {
                const PathAlgebraElement step =
                    table.at(i, o) * PathAlgebraElement::edge(g, w) * table.at(t, i);
                return detail::pa_pow(step, letter.exp, at_i);
            }
            const PathAlgebraElement step =
                table.at(i, t) * vee(g, w, ctx.fam) * table.at(o, i);
            return detail::pa_pow(step, -letter.exp, at_i);
        }
        default: {  // 'x'
            PathAlgebraElement r = at_i;
            for (char c : letter.xword) {
                if (c == 'x')
                    r = r * (table.at(i, o) * PathAlgebraElement::edge(g, w) * table.at(t, i));
                else
                    r = r * (table.at(i, t) * PathAlgebraElement::edge(g, w.reversed()) *
                             table.at(o, i));
            }
            return r;
        }
    }
}

inline PathAlgebraElement psi(const IsoContext& ctx, const GeodesicTable& table, int i,
                              const Word& w) {
    PathAlgebraElement r = PathAlgebraElement::vertex(ctx.graph, i);
    for (const auto& l : w.letters) r = r * psi_letter(ctx, table, i, l);
    return r;
}

inline PathAlgebraElement psi(const IsoContext& ctx, int i, const Word& w) {
    return psi(ctx, GeodesicTable(ctx), i, w);
}

// Psi: M_N(Q) -> representatives in K-Gamma, via Psi(q e_ij) = psi_i(q) P(i,j).
inline PathAlgebraElement Psi(const IsoContext& ctx, const GeodesicTable& table,
                              const MatrixElement& m) {
    PathAlgebraElement r(ctx.graph);
    const int n = ctx.graph->vertex_count();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (const auto& [w, c] : m.at(i, j).terms())
                r = r + c * (psi(ctx, table, i, w) * table.at(i, j));
    return r;
}

inline PathAlgebraElement Psi(const IsoContext& ctx, const MatrixElement& m) {
    return Psi(ctx, GeodesicTable(ctx), m);
}

// Equality in the quotient R: phi is injective on R, so matrix images decide.
inline bool equal_in_R(const IsoContext& ctx, const PathAlgebraElement& a,
                       const PathAlgebraElement& b) {
    return phi(ctx, a) == phi(ctx, b);
}

// ---------------------------------------------------------------------------
// Structure report for Q.

struct QReport {
    struct Entry {
        std::string id;
        FactorKind kind;
        std::string edge_name;
        char role;
        Poly modulus;  // PolyQuotient only
    };
    int vertex_count = 0;
    int cycle_count = 0;
    std::vector<Entry> nontrivial;
    std::vector<TrivialFactor> trivial;

    std::string to_string() const {
        std::string out = "N = " + std::to_string(vertex_count) + " vertices, " +
                          std::to_string(cycle_count) + " fundamental cycles\n";
        out += "nontrivial factors (" + std::to_string(nontrivial.size()) + "):\n";
        for (const auto& f : nontrivial) {
            out += "  " + f.id + ": ";
            switch (f.kind) {
                case FactorKind::PolyQuotient:
                    out += "Q[t]/(" + f.modulus.to_string() + ")";
                    break;
                case FactorKind::Laurent:
                    out += "Q[z, z^-1]";
                    break;
                case FactorKind::FreeTwoVars:
                    out += "Q[x, xbar]";
                    break;
            }
            out += std::string("  (") + (f.role == 't' ? "tree" : "cycle") + " edge " +
                   f.edge_name + ")\n";
        }
        out += "trivial factors (" + std::to_string(trivial.size()) + "):\n";
        for (const auto& t : trivial)
            out += "  " + t.edge_name + ": " + t.f.to_string() + " ~ Q (root " +
                   paq::to_string(t.root) + ")\n";
        out += "R ~= M_" + std::to_string(vertex_count) + "(Q)\n";
        return out;
    }
};

inline QReport describe_Q(const IsoContext& ctx) {
    QReport r;
    r.vertex_count = ctx.graph->vertex_count();
    r.cycle_count = ctx.graph->fundamental_cycle_count();
    for (const auto& f : ctx.factors->factors())
        r.nontrivial.push_back({f.id, f.kind, f.edge_name, f.role, f.modulus});
    r.trivial = ctx.trivial_factors;
    return r;
}

// ---------------------------------------------------------------------------
// Mechanical verification of the isomorphism identities on one context.

struct VerifyReport {
    struct Item {
        int number;
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Item> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::string to_string() const {
        std::string out;
        for (const auto& it : items) {
            out += it.pass ? "PASS " : "FAIL ";
            out += std::to_string(it.number) + " " + it.name;
            if (!it.detail.empty()) out += " " + it.detail;
            out += "\n";
        }
        out += ok() ? "RESULT ok\n" : "RESULT fail\n";
        return out;
    }
};

namespace detail {

// Generator letters of every factor (both Laurent directions, both free
// variables), the sample set used by the verification items.
inline std::vector<Word> generator_words(const IsoContext& ctx) {
    std::vector<Word> ws;
    for (int f = 0; f < ctx.factors->count(); ++f) {
        switch (ctx.factors->factor(f).kind) {
            case FactorKind::PolyQuotient:
                ws.push_back(Word{{poly_letter(f, 1)}});
                break;
            case FactorKind::Laurent:
                ws.push_back(Word{{laurent_letter(f, 1)}});
                ws.push_back(Word{{laurent_letter(f, -1)}});
                break;
            case FactorKind::FreeTwoVars:
                ws.push_back(Word{{xword_letter(f, "x")}});
                ws.push_back(Word{{xword_letter(f, "X")}});
                break;
        }
    }
    return ws;
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

// Two-letter alternating samples pairing consecutive factors.
inline std::vector<Word> pair_words(const IsoContext& ctx) {
    std::vector<Word> ws;
    auto first_letter = [&](int f) {
        switch (ctx.factors->factor(f).kind) {
            case FactorKind::PolyQuotient:
                return poly_letter(f, 1);
            case FactorKind::Laurent:
                return laurent_letter(f, 1);
            default:
                return xword_letter(f, "x");
        }
    };
    for (int f = 0; f + 1 < ctx.factors->count(); ++f)
        ws.push_back(Word{{first_letter(f), first_letter(f + 1)}});
    return ws;
}

}  // namespace detail

// Evaluates phi of psi-images letterwise, multiplying matrix images of the
// (small) constituent elements instead of materializing the representative,
// whose term count can grow exponentially in the tree diameter. phi is a
// homomorphism, so the value is the same; the homomorphism property itself
// is checked separately on random elements.
class PhiPsiEvaluator {
  public:
    PhiPsiEvaluator(const IsoContext& ctx, const GeodesicTable& table)
        : ctx_(ctx), n_(ctx.graph->vertex_count()) {
        p_img_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) p_img_.push_back(phi(ctx_, table.at(i, j)));
    }

    const MatrixElement& p_image(int i, int j) const {
        return p_img_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }

    MatrixElement psi_image(int i, const Word& w) const {
        MatrixElement r = MatrixElement::unit(ctx_.factors, n_, i, i);
        for (const auto& l : w.letters) r = r * letter_image(i, l);
        return r;
    }

    MatrixElement Psi_image(const MatrixElement& m) const {
        MatrixElement r = MatrixElement::zero(ctx_.factors, n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                for (const auto& [w, c] : m.at(i, j).terms())
                    r = r + c * (psi_image(i, w) * p_image(i, j));
        return r;
    }

  private:
    MatrixElement letter_image(int i, const Letter& l) const {
        const auto& g = ctx_.graph;
        const Factor& fac = ctx_.factors->factor(l.factor);
        const int e = ctx_.edge_of_factor(l.factor);
        const DirectedEdge w = ctx_.positive(e);
        const int o = g->origin(w), t = g->terminus(w);
        const auto edge_img = [&](DirectedEdge d) {
            return phi(ctx_, PathAlgebraElement::edge(g, d));
        };
        switch (fac.role) {
            case 't':
            case 'u': {
                MatrixElement loop = edge_img(w) * edge_img(w.reversed());
                MatrixElement r = p_image(i, o);
                for (long long k = 0; k < l.exp; ++k) r = r * loop;
                return r * p_image(o, i);
            }
            case 'z': {
                const MatrixElement step =
                    l.exp > 0 ? p_image(i, o) * edge_img(w) * p_image(t, i)
                              : p_image(i, t) * phi(ctx_, vee(g, w, ctx_.fam)) * p_image(o, i);
                MatrixElement r = MatrixElement::unit(ctx_.factors, n_, i, i);
                const long long count = l.exp > 0 ? l.exp : -l.exp;
                for (long long k = 0; k < count; ++k) r = r * step;
                return r;
            }
            default: {  // 'x'
                MatrixElement r = MatrixElement::unit(ctx_.factors, n_, i, i);
                for (char c : l.xword) {
                    if (c == 'x')
                        r = r * (p_image(i, o) * edge_img(w) * p_image(t, i));
                    else
                        r = r * (p_image(i, t) * edge_img(w.reversed()) * p_image(o, i));
                }
                return r;
            }
        }
    }

    const IsoContext& ctx_;
    int n_;
    std::vector<MatrixElement> p_img_;
};

inline VerifyReport verify_context(const IsoContext& ctx,
                                   unsigned long long seed = 20260809ull) {
    VerifyReport rep;
    const auto& g = ctx.graph;
    const int n = g->vertex_count();
    const GeodesicTable table(ctx);
    const PhiPsiEvaluator eval(ctx, table);

    auto pimg = [&](int i, int j) -> const MatrixElement& { return eval.p_image(i, j); };
    auto unit_ij = [&](int i, int j) { return MatrixElement::unit(ctx.factors, n, i, j); };

    // 1: the defining relations vanish, phi(f_y(y ybar)) = O, both directions.
    {
        bool pass = true;
        std::string detail;
        for (const auto& [e, f] : ctx.fam.polys()) {
            for (bool fwd : {true, false}) {
                const DirectedEdge d{e, fwd};
                if (!phi(ctx, eval_at_loop(g, f, d)).is_zero()) {
                    pass = false;
                    detail = "phi(f(y ybar)) != 0 for " + g->edge_label(d);
                }
            }
        }
        rep.items.push_back({1, "relations-vanish", pass, detail});
    }

    // 2: phi(P(k,l)) = e_kl.
    {
        bool pass = true;
        std::string detail;
        for (int k = 1; k <= n && pass; ++k)
            for (int l = 1; l <= n && pass; ++l)
                if (!(pimg(k, l) == unit_ij(k, l))) {
                    pass = false;
                    detail = "P(" + std::to_string(k) + "," + std::to_string(l) + ")";
                }
        rep.items.push_back({2, "geodesic-matrix-units", pass, detail});
    }

    // 3: phi(vee(y)) = e_{t o} for positively oriented tree edges.
    {
        bool pass = true;
        std::string detail;
        for (int e : ctx.tree.tree_edges) {
            const DirectedEdge w = ctx.positive(e);
            const auto img = phi(ctx, vee(g, w, ctx.fam));
            if (!(img == unit_ij(g->terminus(w), g->origin(w)))) {
                pass = false;
                detail = "vee(" + g->edge(e).name + ")";
            }
        }
        rep.items.push_back({3, "vee-inverse", pass, detail});
    }

    // 4: Lemma A through phi: images multiply like matrix units, and the
    // orthogonality products vanish already in K-Gamma.
    {
        bool pass = true;
        std::string detail;
        for (int i = 1; i <= n && pass; ++i)
            for (int j = 1; j <= n && pass; ++j)
                for (int l = 1; l <= n && pass; ++l)
                    if (!(pimg(i, j) * pimg(j, l) == pimg(i, l))) {
                        pass = false;
                        detail = "P(i,j)P(j,l) != P(i,l)";
                    }
        for (int i = 1; i <= n && pass; ++i)
            for (int j = 1; j <= n && pass; ++j)
                for (int k = 1; k <= n && pass; ++k) {
                    if (j == k) continue;
                    for (int l = 1; l <= n && pass; ++l)
                        if (!(table.at(i, j) * table.at(k, l)).is_zero()) {
                            pass = false;
                            detail = "P(i,j)P(k,l) != 0";
                        }
                }
        rep.items.push_back({4, "lemma-a", pass, detail});
    }

    // 5: psi_j(q) = P(j,i) psi_i(q) P(i,j) through phi, on generator letters
    // and two-letter samples.
    {
        bool pass = true;
        std::string detail;
        auto words = detail::generator_words(ctx);
        const auto pairs = detail::pair_words(ctx);
        words.insert(words.end(), pairs.begin(), pairs.end());
        for (const auto& w : words) {
            std::vector<MatrixElement> psi_img;
            psi_img.reserve(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) psi_img.push_back(eval.psi_image(i, w));
            for (int j = 1; j <= n && pass; ++j)
                for (int i = 1; i <= n && pass; ++i) {
                    const auto rhs = pimg(j, i) * psi_img[static_cast<std::size_t>(i - 1)] *
                                     pimg(i, j);
                    if (!(psi_img[static_cast<std::size_t>(j - 1)] == rhs)) {
                        pass = false;
                        detail = "conjugation failed";
                    }
                }
            if (!pass) break;
        }
        rep.items.push_back({5, "psi-conjugation", pass, detail});
    }

    // 6: Phi o Psi = id on q e_ij for the empty word and every generator letter.
    {
        bool pass = true;
        std::string detail;
        auto words = detail::generator_words(ctx);
        words.push_back(Word::empty());
        for (const auto& w : words) {
            const auto q = FreeProductElement::word(ctx.factors, w);
            for (int i = 1; i <= n && pass; ++i)
                for (int j = 1; j <= n && pass; ++j) {
                    const auto m = MatrixElement::unit(ctx.factors, n, i, j, q);
                    if (!(eval.Psi_image(m) == m)) {
                        pass = false;
                        detail = "q = " + q.to_string() + " at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                    }
                }
            if (!pass) break;
        }
        rep.items.push_back({6, "phi-psi-roundtrip", pass, detail});
    }

    // 7: Psi o Phi = id through phi, on generators and random products.
    {
        bool pass = true;
        std::string detail;
        std::vector<PathAlgebraElement> gens;
        for (int i = 1; i <= n; ++i) gens.push_back(PathAlgebraElement::vertex(g, i));
        for (int e = 0; e < g->edge_count(); ++e)
            for (bool fwd : {true, false}) gens.push_back(PathAlgebraElement::edge(g, {e, fwd}));
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            const int start = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
            const int len = static_cast<int>(rng() % 7);
            PathAlgebraElement walk = PathAlgebraElement::vertex(g, start);
            int at = start;
            for (int s = 0; s < len; ++s) {
                const auto outs = detail::out_edges(*g, at);
                if (outs.empty()) break;
                const auto d = outs[rng() % outs.size()];
                walk = walk * PathAlgebraElement::edge(g, d);
                at = g->terminus(d);
            }
            gens.push_back(walk);
        }
        for (const auto& a : gens) {
            const auto img = phi(ctx, a);
            if (!(eval.Psi_image(img) == img)) {
                pass = false;
                detail = "element " + a.to_string();
                break;
            }
        }
        rep.items.push_back(
            {7, "psi-phi-roundtrip", pass,
             pass ? "seed=" + std::to_string(seed) : detail});
    }

    return rep;
}

}  // namespace paq
