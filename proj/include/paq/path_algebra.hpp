#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paq/graph.hpp"
#include "paq/poly.hpp"
#include "paq/rational.hpp"

namespace paq {

// Property-F polynomial family keyed by geometric edge, so f_y = f_ybar holds
// by construction. The key set is Y1.
class PolyFamily {
  public:
    PolyFamily() = default;
    explicit PolyFamily(GraphPtr g) : graph_(std::move(g)) {}

    void set(const std::string& edge_name, Poly f) {
        set(graph_->edge_index(edge_name), std::move(f));
    }
    void set(int edge, Poly f) {
        if (!is_property_F(f))
            throw PropertyFViolationError("polynomial " + f.to_string() + " for edge '" +
                                          graph_->edge(edge).name + "' lacks property F");
        polys_[edge] = std::move(f);
    }

    const GraphPtr& graph() const { return graph_; }
    bool in_y1(int edge) const { return polys_.count(edge) > 0; }
    bool in_y1(DirectedEdge d) const { return in_y1(d.edge); }
    const Poly& at(int edge) const {
        auto it = polys_.find(edge);
        if (it == polys_.end())
            throw EdgeNotInY1Error("edge '" + graph_->edge(edge).name + "' is not in Y1");
        return it->second;
    }
    const std::map<int, Poly>& polys() const { return polys_; }

    std::set<int> y1() const {
        std::set<int> s;
        for (const auto& [e, f] : polys_) s.insert(e);
        return s;
    }

  private:
    GraphPtr graph_;
    std::map<int, Poly> polys_;
};

// Finitely supported rational linear combination of paths of one graph.
// Canonical: no zero coefficients; equality is term-map equality.
class PathAlgebraElement {
  public:
    PathAlgebraElement() = default;
    explicit PathAlgebraElement(GraphPtr g) : graph_(std::move(g)) {}

    static PathAlgebraElement zero(GraphPtr g) { return PathAlgebraElement(std::move(g)); }

    static PathAlgebraElement single(GraphPtr g, Path p, Rational c = Rational(1)) {
        PathAlgebraElement r(std::move(g));
        if (c != 0) r.terms_.emplace(std::move(p), std::move(c));
        return r;
    }

    static PathAlgebraElement vertex(GraphPtr g, int i) {
        return single(std::move(g), Path::at(i));
    }

    static PathAlgebraElement edge(GraphPtr g, DirectedEdge d) {
        Path p = Path::of_edge(*g, d);
        return single(std::move(g), std::move(p));
    }

    const GraphPtr& graph() const { return graph_; }
    const std::map<Path, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const PathAlgebraElement& other) const { return terms_ == other.terms_; }

    PathAlgebraElement& add_term(const Path& p, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    friend PathAlgebraElement operator+(const PathAlgebraElement& a,
                                        const PathAlgebraElement& b) {
        check_same_graph(a, b);
        PathAlgebraElement r = a.terms_.empty() ? PathAlgebraElement(b.graph_) : a;
        for (const auto& [p, c] : b.terms_) r.add_term(p, c);
        return r;
    }
    friend PathAlgebraElement operator-(const PathAlgebraElement& a,
                                        const PathAlgebraElement& b) {
        return a + (Rational(-1) * b);
    }
    friend PathAlgebraElement operator*(const Rational& c, const PathAlgebraElement& a) {
        PathAlgebraElement r(a.graph_);
        if (c == 0) return r;
        for (const auto& [p, x] : a.terms_) r.terms_.emplace(p, c * x);
        return r;
    }

    // Bilinear extension of path concatenation; mismatched endpoints give 0.
    friend PathAlgebraElement operator*(const PathAlgebraElement& a,
                                        const PathAlgebraElement& b) {
        check_same_graph(a, b);
        PathAlgebraElement r(a.graph_ ? a.graph_ : b.graph_);
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_)
                if (p.terminus() == q.origin()) r.add_term(p * q, c * d);
        return r;
    }

    // Display: v<i> for vertices, ~ for reversal, * for concatenation.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [p, c] : terms_) {
            const bool first = out.empty();
            const Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                out += (c < 0) ? "-" : "";
            else
                out += (c < 0) ? " - " : " + ";
            std::string body;
            if (p.length() == 0) {
                body = "v" + std::to_string(p.origin());
            } else {
                for (const auto& d : p.edges()) {
                    if (!body.empty()) body += "*";
                    body += graph_->edge_label(d);
                }
            }
            if (mag != 1) out += paq::to_string(mag) + "*";
            out += body;
        }
        return out;
    }

  private:
    static void check_same_graph(const PathAlgebraElement& a, const PathAlgebraElement& b) {
        if (a.graph_ && b.graph_ && a.graph_.get() != b.graph_.get())
            throw Error("elements live over different graphs");
    }

    GraphPtr graph_;
    std::map<Path, Rational> terms_;
};

// 1 = sum of all length-0 paths.
inline PathAlgebraElement unit(const GraphPtr& g) {
    PathAlgebraElement r(g);
    for (int i = 1; i <= g->vertex_count(); ++i) r.add_term(Path::at(i), Rational(1));
    return r;
}

// f evaluated at y*ybar inside [o(y)] K-Gamma [o(y)]: t |-> y*ybar and
// 1 |-> [o(y)].
inline PathAlgebraElement eval_at_loop(const GraphPtr& g, const Poly& f, DirectedEdge y) {
    const int o = g->origin(y);
    PathAlgebraElement r(g);
    PathAlgebraElement loop_power = PathAlgebraElement::vertex(g, o);  // (y ybar)^0
    const PathAlgebraElement loop =
        PathAlgebraElement::edge(g, y) * PathAlgebraElement::edge(g, y.reversed());
    for (int k = 0; k <= f.degree(); ++k) {
        r = r + f.coeff(static_cast<std::size_t>(k)) * loop_power;
        if (k < f.degree()) loop_power = loop_power * loop;
    }
    return r;
}

// The partial inverse y-vee = (1/kappa) * ybar * h(y ybar) of an edge in Y1,
// with f_y(t) = t h(t) - kappa.
inline PathAlgebraElement vee(const GraphPtr& g, DirectedEdge y, const PolyFamily& fam) {
    const auto hk = extract_h_kappa(fam.at(y.edge));
    return (Rational(1) / hk.kappa) *
           (PathAlgebraElement::edge(g, y.reversed()) * eval_at_loop(g, hk.h, y));
}

// alpha(d) for a tree edge: the edge itself in the positive direction, the
// vee of its positive partner otherwise.
inline PathAlgebraElement tree_alpha(const GraphPtr& g, const Orientation& ori,
                                     const PolyFamily& fam, DirectedEdge d) {
    if (ori.is_positive(d)) return PathAlgebraElement::edge(g, d);
    return vee(g, d.reversed(), fam);
}

// P(i, j): the product of alpha-images along the tree geodesic; [s_i] when
// i = j. Lives in [s_i] K-Gamma [s_j].
inline PathAlgebraElement geodesic_element(const GraphPtr& g, const SpanningTree& tree,
                                           const Orientation& ori, const PolyFamily& fam,
                                           int i, int j) {
    PathAlgebraElement r = PathAlgebraElement::vertex(g, i);
    if (i == j) return r;
    const Path walk = geodesic(*g, tree, i, j);
    for (const auto& d : walk.edges()) r = r * tree_alpha(g, ori, fam, d);
    return r;
}

}  // namespace paq
