#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paq/errors.hpp"

namespace paq {

// One geometric edge; `origin -> terminus` is the stored (input) direction.
struct GeometricEdge {
    std::string name;
    int origin = 0;
    int terminus = 0;
};

// A directed edge is a geometric edge plus a direction; `forward` means the
// stored input direction. Reversing twice is the identity.
struct DirectedEdge {
    int edge = -1;
    bool forward = true;

    DirectedEdge reversed() const { return {edge, !forward}; }
    auto operator<=>(const DirectedEdge&) const = default;
};

// Finite Serre graph: vertices 1..N, geometric edges in input order, each
// standing for the pair {y, ybar}. Loops and parallel edges are allowed.
class Graph {
  public:
    Graph(int vertex_count, std::vector<GeometricEdge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 1) throw Error("vertex count must be positive");
        for (int e = 0; e < edge_count(); ++e) {
            const auto& ge = edges_[static_cast<std::size_t>(e)];
            if (ge.origin < 1 || ge.origin > vertex_count_ || ge.terminus < 1 ||
                ge.terminus > vertex_count_)
                throw Error("edge '" + ge.name + "' has a vertex index out of range");
            if (!index_by_name_.emplace(ge.name, e).second)
                throw Error("duplicate edge name '" + ge.name + "'");
        }
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GeometricEdge>& edges() const { return edges_; }
    const GeometricEdge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    int edge_index(const std::string& name) const {
        auto it = index_by_name_.find(name);
        if (it == index_by_name_.end()) throw Error("unknown edge '" + name + "'");
        return it->second;
    }
    bool has_edge(const std::string& name) const { return index_by_name_.count(name) > 0; }

    int origin(DirectedEdge d) const {
        const auto& ge = edge(d.edge);
        return d.forward ? ge.origin : ge.terminus;
    }
    int terminus(DirectedEdge d) const {
        const auto& ge = edge(d.edge);
        return d.forward ? ge.terminus : ge.origin;
    }

    std::string edge_label(DirectedEdge d) const {
        return (d.forward ? "" : "~") + edge(d.edge).name;
    }

    bool is_connected() const {
        std::vector<bool> seen(static_cast<std::size_t>(vertex_count_) + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& ge : edges_) {
                for (int w : {ge.origin == v ? ge.terminus : 0, ge.terminus == v ? ge.origin : 0}) {
                    if (w != 0 && !seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        stack.push_back(w);
                    }
                }
            }
        }
        return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
    }

    // Number of fundamental cycles e - s + 1 of a connected graph.
    int fundamental_cycle_count() const {
        if (!is_connected()) throw NotConnectedError("graph is not connected");
        return edge_count() - vertex_count_ + 1;
    }

  private:
    int vertex_count_;
    std::vector<GeometricEdge> edges_;
    std::map<std::string, int> index_by_name_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(int vertex_count, std::vector<GeometricEdge> edges) {
    return std::make_shared<const Graph>(vertex_count, std::move(edges));
}

// A walk: length 0 at a base vertex, or a composable edge sequence.
// Endpoints are cached so concatenation needs no graph lookups.
class Path {
  public:
    static Path at(int vertex) { return Path(vertex, vertex, {}); }

    static Path of(const Graph& g, std::vector<DirectedEdge> edges) {
        if (edges.empty()) throw Error("edge path must be nonempty; use Path::at");
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (g.terminus(edges[i]) != g.origin(edges[i + 1]))
                throw Error("path edges do not compose");
        const int o = g.origin(edges.front());
        const int t = g.terminus(edges.back());
        return Path(o, t, std::move(edges));
    }

    static Path of_edge(const Graph& g, DirectedEdge d) { return of(g, {d}); }

    int origin() const { return origin_; }
    int terminus() const { return terminus_; }
    int length() const { return static_cast<int>(edges_.size()); }
    const std::vector<DirectedEdge>& edges() const { return edges_; }

    // Concatenation; caller must ensure terminus(a) == origin(b).
    friend Path operator*(const Path& a, const Path& b) {
        if (a.terminus_ != b.origin_) throw Error("paths do not compose");
        if (a.length() == 0) return b;
        if (b.length() == 0) return a;
        std::vector<DirectedEdge> e = a.edges_;
        e.insert(e.end(), b.edges_.begin(), b.edges_.end());
        return Path(a.origin_, b.terminus_, std::move(e));
    }

    Path reversed() const {
        std::vector<DirectedEdge> e(edges_.rbegin(), edges_.rend());
        for (auto& d : e) d = d.reversed();
        return Path(terminus_, origin_, std::move(e));
    }

    auto operator<=>(const Path& other) const {
        if (auto c = length() <=> other.length(); c != 0) return c;
        if (length() == 0) return origin_ <=> other.origin_;
        return edges_ <=> other.edges_;
    }
    bool operator==(const Path& other) const {
        return length() == other.length() &&
               (length() == 0 ? origin_ == other.origin_ : edges_ == other.edges_);
    }

  private:
    Path(int o, int t, std::vector<DirectedEdge> e)
        : origin_(o), terminus_(t), edges_(std::move(e)) {}

    int origin_;
    int terminus_;
    std::vector<DirectedEdge> edges_;
};

// Rooted spanning tree; parent edges are oriented parent -> child.
struct SpanningTree {
    int root = 1;
    std::set<int> tree_edges;                       // geometric edge indices
    std::vector<int> parent_vertex;                 // by vertex, 0 at root
    std::vector<std::optional<DirectedEdge>> parent_edge;
    std::vector<int> depth;                         // d_T(root, v)
};

// Deterministic breadth-first spanning tree inside the subgraph of `allowed`
// edges. Levels are synchronized: a vertex at depth k+1 is adopted by the
// first edge in input order joining it to a depth-k vertex. Re-running on
// identical input is bit-identical.
inline SpanningTree spanning_tree(const Graph& g, const std::set<int>& allowed, int root) {
    if (root < 1 || root > g.vertex_count()) throw Error("root vertex out of range");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    SpanningTree t;
    t.root = root;
    t.parent_vertex.assign(n + 1, 0);
    t.parent_edge.assign(n + 1, std::nullopt);
    t.depth.assign(n + 1, -1);
    t.depth[static_cast<std::size_t>(root)] = 0;

    std::vector<int> frontier{root};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!allowed.count(e)) continue;
            for (bool forward : {true, false}) {
                const DirectedEdge d{e, forward};
                const int from = g.origin(d), to = g.terminus(d);
                if (t.depth[static_cast<std::size_t>(to)] != -1) continue;
                const bool from_in_frontier =
                    std::find(frontier.begin(), frontier.end(), from) != frontier.end();
                if (!from_in_frontier) continue;
                t.depth[static_cast<std::size_t>(to)] =
                    t.depth[static_cast<std::size_t>(from)] + 1;
                t.parent_vertex[static_cast<std::size_t>(to)] = from;
                t.parent_edge[static_cast<std::size_t>(to)] = d;
                t.tree_edges.insert(e);
                next.push_back(to);
            }
        }
        frontier = std::move(next);
    }
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (t.depth[static_cast<std::size_t>(v)] == -1)
            throw NoSpanningTreeError("allowed edges do not span the graph");
    return t;
}

inline SpanningTree spanning_tree(const Graph& g, const std::set<std::string>& allowed_names,
                                  int root) {
    std::set<int> allowed;
    for (const auto& name : allowed_names) allowed.insert(g.edge_index(name));
    return spanning_tree(g, allowed, root);
}

// Chosen positive direction of every geometric edge: tree edges point away
// from the root, non-tree edges keep their stored input direction.
struct Orientation {
    std::vector<DirectedEdge> positive;  // by geometric edge index

    bool is_positive(DirectedEdge d) const {
        return positive[static_cast<std::size_t>(d.edge)] == d;
    }
};

inline Orientation orient(const Graph& g, const SpanningTree& t) {
    Orientation o;
    o.positive.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        DirectedEdge d{e, true};
        if (t.tree_edges.count(e)) {
            const int od = g.origin(d), td = g.terminus(d);
            if (t.depth[static_cast<std::size_t>(od)] > t.depth[static_cast<std::size_t>(td)])
                d = d.reversed();
        }
        o.positive.push_back(d);
    }
    return o;
}

// The unique backtracking-free tree path from i to j.
inline Path geodesic(const Graph& g, const SpanningTree& t, int i, int j) {
    if (i == j) return Path::at(i);
    std::vector<DirectedEdge> up;     // climbing from i toward the root
    std::vector<DirectedEdge> down;   // descending toward j, collected in reverse
    int a = i, b = j;
    auto depth = [&](int v) { return t.depth[static_cast<std::size_t>(v)]; };
    while (depth(a) > depth(b)) {
        up.push_back(t.parent_edge[static_cast<std::size_t>(a)]->reversed());
        a = t.parent_vertex[static_cast<std::size_t>(a)];
    }
    while (depth(b) > depth(a)) {
        down.push_back(*t.parent_edge[static_cast<std::size_t>(b)]);
        b = t.parent_vertex[static_cast<std::size_t>(b)];
    }
    while (a != b) {
        up.push_back(t.parent_edge[static_cast<std::size_t>(a)]->reversed());
        a = t.parent_vertex[static_cast<std::size_t>(a)];
        down.push_back(*t.parent_edge[static_cast<std::size_t>(b)]);
        b = t.parent_vertex[static_cast<std::size_t>(b)];
    }
    up.insert(up.end(), down.rbegin(), down.rend());
    return Path::of(g, std::move(up));
}

inline int fundamental_cycle_count(const Graph& g) { return g.fundamental_cycle_count(); }

}  // namespace paq
