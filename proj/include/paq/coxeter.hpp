#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "paq/iso.hpp"

namespace paq {

// Entry value standing for m_ij = infinity.
constexpr int kCoxeterInfinity = std::numeric_limits<int>::max();

// Symmetric Coxeter matrix stored as its upper triangle; the diagonal is
// implicitly 1 and unspecified off-diagonal pairs default to 2.
class CoxeterMatrix {
  public:
    explicit CoxeterMatrix(int rank) : rank_(rank) {
        if (rank < 1) throw Error("rank must be positive");
    }

    int rank() const { return rank_; }

    void set(int i, int j, int m) {
        if (i < 1 || j < 1 || i > rank_ || j > rank_) throw Error("index out of range");
        if (i == j) throw Error("diagonal entries are fixed to 1");
        if (m < 2) throw Error("off-diagonal entries must be >= 2 or infinity");
        if (i > j) std::swap(i, j);
        entries_[{i, j}] = m;
    }

    int at(int i, int j) const {
        if (i == j) return 1;
        if (i > j) std::swap(i, j);
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 2 : it->second;
    }

    const std::map<std::pair<int, int>, int>& entries() const { return entries_; }

  private:
    int rank_;
    std::map<std::pair<int, int>, int> entries_;
};

struct CoxeterGraph {
    GraphPtr graph;
    PolyFamily fam;
    std::map<std::string, int> m_of_edge;
};

// One geometric edge y<i>_<j> per pair with m_ij >= 3, directed i -> j.
// Edges are listed by decreasing m (infinity first, ties in row-major
// order); with the breadth-first tree rule this reproduces the maximal
// tree of the worked five-vertex example. Finite-m edges carry C_m and
// form Y1; m = 2 contributes no edge at all.
inline CoxeterGraph coxeter_to_graph(const CoxeterMatrix& cm) {
    std::vector<std::pair<std::pair<int, int>, int>> pairs;
    for (int i = 1; i <= cm.rank(); ++i)
        for (int j = i + 1; j <= cm.rank(); ++j)
            if (cm.at(i, j) >= 3) pairs.push_back({{i, j}, cm.at(i, j)});
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    CoxeterGraph out;
    std::vector<GeometricEdge> edges;
    for (const auto& [ij, m] : pairs) {
        const std::string name =
            "y" + std::to_string(ij.first) + "_" + std::to_string(ij.second);
        edges.push_back({name, ij.first, ij.second});
        out.m_of_edge[name] = m;
    }
    out.graph = make_graph(cm.rank(), std::move(edges));
    out.fam = PolyFamily(out.graph);
    for (const auto& [name, m] : out.m_of_edge)
        if (m != kCoxeterInfinity) out.fam.set(name, minpoly_4cos2(m));
    return out;
}

struct CoxeterAnalysis {
    CoxeterGraph cg;
    IsoContext ctx;
    QReport q;

    // Q report in K_m notation.
    std::string describe() const {
        std::string out = "coxeter system: rank " + std::to_string(q.vertex_count) + ", " +
                          std::to_string(cg.graph->edge_count()) + " edges, " +
                          std::to_string(q.cycle_count) + " fundamental cycles\n";
        out += "nontrivial factors (" + std::to_string(q.nontrivial.size()) + "):\n";
        for (const auto& f : q.nontrivial) {
            out += "  " + f.id + ": ";
            switch (f.kind) {
                case FactorKind::PolyQuotient:
                    out += "K" + std::to_string(cg.m_of_edge.at(f.edge_name));
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
        out += "trivial factors (" + std::to_string(q.trivial.size()) + "):\n";
        for (const auto& t : q.trivial)
            out += "  " + t.edge_name + ": K" + std::to_string(cg.m_of_edge.at(t.edge_name)) +
                   " ~= Q (root " + paq::to_string(t.root) + ")\n";
        out += "R ~= M_" + std::to_string(q.vertex_count) + "(Q)\n";
        return out;
    }
};

inline CoxeterAnalysis coxeter_analyze(const CoxeterMatrix& cm, int root = 1) {
    CoxeterAnalysis a;
    a.cg = coxeter_to_graph(cm);
    if (!a.cg.graph->is_connected())
        throw NotConnectedError(
            "the Coxeter graph is not connected (reducible system); analyze the "
            "irreducible components separately");
    try {
        a.ctx = build_context(a.cg.graph, a.cg.fam, root);
    } catch (const NoSpanningTreeError&) {
        throw NoSpanningTreeError(
            "no spanning tree inside the finite-m edges; the matrix-ring "
            "presentation does not apply");
    }
    a.q = describe_Q(a.ctx);
    return a;
}

}  // namespace paq
