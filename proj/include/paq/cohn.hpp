#pragma once

#include <string>
#include <vector>

#include "paq/iso.hpp"

namespace paq {

// The Cohn family: f_y(t) = t - 1 on every geometric edge, so Y1 = Y and
// every spanning tree qualifies.
inline PolyFamily cohn_family(const GraphPtr& g) {
    PolyFamily fam(g);
    const Poly f{std::vector<Rational>{Rational(-1), Rational(1)}};
    for (int e = 0; e < g->edge_count(); ++e) fam.set(e, f);
    return fam;
}

// Rewriting normal form for the all-(t-1) family: y ybar -> [o(y)] for every
// directed edge. Each step drops two edges, and the single overlap y ybar y
// resolves to y both ways, so stack reduction computes the unique normal
// form of every path.
inline Path reduce_backtracking(const Graph& g, const Path& p) {
    std::vector<DirectedEdge> stack;
    for (const auto& d : p.edges()) {
        if (!stack.empty() && stack.back() == d.reversed())
            stack.pop_back();
        else
            stack.push_back(d);
    }
    if (stack.empty()) return Path::at(p.origin());
    return Path::of(g, std::move(stack));
}

inline PathAlgebraElement cohn_normal_form(const GraphPtr& g, const PathAlgebraElement& a) {
    PathAlgebraElement r(g);
    for (const auto& [p, c] : a.terms()) r.add_term(reduce_backtracking(*g, p), c);
    return r;
}

struct CohnReport {
    int vertex_count = 0;
    int edge_count = 0;
    int relations_checked = 0;
    std::vector<std::string> failed_relations;
    int laurent_count = 0;
    int cycle_count = 0;
    VerifyReport verify;

    bool ok() const {
        return failed_relations.empty() && laurent_count == cycle_count && verify.ok();
    }

    std::string to_string() const {
        std::string out = "cohn path algebra: N = " + std::to_string(vertex_count) + ", " +
                          std::to_string(edge_count) + " geometric edges\n";
        if (failed_relations.empty()) {
            out += "relations vanish under phi: yes (" + std::to_string(relations_checked) +
                   " checked)\n";
        } else {
            out += "relations vanish under phi: NO\n";
            for (const auto& f : failed_relations) out += "  failed: " + f + "\n";
        }
        out += "Q = free product of " + std::to_string(laurent_count) +
               " Laurent factor(s); fundamental cycles: " + std::to_string(cycle_count) +
               (laurent_count == cycle_count ? " (match)" : " (MISMATCH)") + "\n";
        out += verify.to_string();
        out +=
            "note: Q is a free product of Laurent polynomial rings over Q, hence a\n"
            "free ideal ring (Cohn, Free Rings and their Relations, Cor. to Thm 4.3),\n"
            "and free ideal rings are weakly finite; M_N(Q) is then weakly finite, and\n"
            "a ring with a weakly finite homomorphic image satisfies the rank\n"
            "condition (UGN). The Cohn path algebra surjects onto M_N(Q).\n";
        return out;
    }
};

// Builds the all-(t-1) context, checks that both Cohn relations of every
// positive edge vanish under phi, and compares the Laurent factor count with
// the fundamental cycle count.
inline CohnReport cohn_check(const GraphPtr& g, int root = 1) {
    if (!g->is_connected()) throw NotConnectedError("graph is not connected");
    const auto fam = cohn_family(g);
    const auto ctx = build_context(g, fam, root);

    CohnReport rep;
    rep.vertex_count = g->vertex_count();
    rep.edge_count = g->edge_count();
    rep.cycle_count = g->fundamental_cycle_count();
    for (const auto& f : ctx.factors->factors())
        if (f.kind == FactorKind::Laurent) ++rep.laurent_count;

    for (int e = 0; e < g->edge_count(); ++e) {
        const DirectedEdge y = ctx.positive(e);
        const auto ybar = PathAlgebraElement::edge(g, y.reversed());
        const auto yy = PathAlgebraElement::edge(g, y);
        const auto rel1 = ybar * yy - PathAlgebraElement::vertex(g, g->terminus(y));
        const auto rel2 = yy * ybar - PathAlgebraElement::vertex(g, g->origin(y));
        for (const auto* rel : {&rel1, &rel2}) {
            ++rep.relations_checked;
            if (!phi(ctx, *rel).is_zero())
                rep.failed_relations.push_back(g->edge(e).name);
        }
    }

    rep.verify = verify_context(ctx);
    return rep;
}

}  // namespace paq
