#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "paq/coxeter.hpp"
#include "paq/parse.hpp"

using namespace paq;

namespace {

CoxeterMatrix worked_example() {
    CoxeterMatrix cm(5);
    cm.set(1, 2, 3);
    cm.set(1, 4, 4);
    cm.set(2, 3, 5);
    cm.set(3, 4, 6);
    cm.set(3, 5, 5);
    cm.set(4, 5, kCoxeterInfinity);
    return cm;
}

// Linear diagram with all edges labelled m.
CoxeterMatrix type_a(int n, int m = 3) {
    CoxeterMatrix cm(n);
    for (int i = 1; i < n; ++i) cm.set(i, i + 1, m);
    return cm;
}

}  // namespace

TEST_CASE("coxeter matrix validation", "[coxeter]") {
    CoxeterMatrix cm(3);
    cm.set(1, 2, 3);
    cm.set(3, 1, 4);  // symmetric storage
    CHECK(cm.at(1, 3) == 4);
    CHECK(cm.at(3, 1) == 4);
    CHECK(cm.at(1, 1) == 1);
    CHECK(cm.at(2, 3) == 2);  // default
    CHECK_THROWS_AS(cm.set(1, 1, 3), Error);
    CHECK_THROWS_AS(cm.set(1, 2, 1), Error);
    CHECK_THROWS_AS(cm.set(0, 2, 3), Error);
    CHECK_THROWS_AS(CoxeterMatrix(0), Error);
}

TEST_CASE("coxeter graph construction", "[coxeter]") {
    // m = 2 gives no edge at all
    CoxeterMatrix commuting(2);
    commuting.set(1, 2, 2);
    CHECK(coxeter_to_graph(commuting).graph->edge_count() == 0);

    // m = infinity gives an edge outside Y1
    CoxeterMatrix free2(2);
    free2.set(1, 2, kCoxeterInfinity);
    const auto cg = coxeter_to_graph(free2);
    CHECK(cg.graph->edge_count() == 1);
    CHECK(cg.fam.y1().empty());

    // the worked example: 6 edges, finite-m ones carry C_m
    const auto cg5 = coxeter_to_graph(worked_example());
    CHECK(cg5.graph->edge_count() == 6);
    CHECK(cg5.fam.y1().size() == 5);
    CHECK(cg5.fam.at(cg5.graph->edge_index("y2_3")) == minpoly_4cos2(5));
    CHECK(cg5.fam.at(cg5.graph->edge_index("y3_4")) == minpoly_4cos2(6));
    CHECK_FALSE(cg5.fam.in_y1(cg5.graph->edge_index("y4_5")));
}

TEST_CASE("worked example analysis", "[coxeter]") {
    const auto a = coxeter_analyze(worked_example());
    REQUIRE(a.q.nontrivial.size() == 4);

    // the tree matches the displayed maximal tree: eps and delta are the
    // cycle edges
    const auto& g = *a.cg.graph;
    CHECK(a.ctx.tree.tree_edges ==
          std::set<int>{g.edge_index("y1_2"), g.edge_index("y1_4"), g.edge_index("y3_4"),
                        g.edge_index("y3_5")});

    const auto text = a.describe();
    CHECK(text.find("t_y3_5: K5  (tree edge y3_5)") != std::string::npos);
    CHECK(text.find("u_y2_3: K5  (cycle edge y2_3)") != std::string::npos);
    CHECK(text.find("z_y2_3: Q[z, z^-1]  (cycle edge y2_3)") != std::string::npos);
    CHECK(text.find("x_y4_5: Q[x, xbar]  (cycle edge y4_5)") != std::string::npos);
    CHECK(text.find("y1_2: K3 ~= Q") != std::string::npos);
    CHECK(text.find("y1_4: K4 ~= Q") != std::string::npos);
    CHECK(text.find("y3_4: K6 ~= Q") != std::string::npos);
    CHECK(text.find("R ~= M_5(Q)") != std::string::npos);
}

TEST_CASE("classical diagrams analyze to trivial Q", "[coxeter]") {
    // A3: path graph, all C_3, Q = Q and R = M_3(Q)
    const auto a3 = coxeter_analyze(type_a(3));
    CHECK(a3.q.nontrivial.empty());
    CHECK(a3.q.cycle_count == 0);

    for (int n = 2; n <= 5; ++n) {
        const auto an = coxeter_analyze(type_a(n));
        CHECK(an.q.cycle_count == 0);
        for (const auto& f : an.ctx.factors->factors())
            CHECK(f.kind == FactorKind::PolyQuotient);
        CHECK(verify_context(an.ctx).ok());
    }

    // B4: one m = 4 edge; C_4 = t - 2 is still degree 1
    CoxeterMatrix b4 = type_a(4);
    b4.set(3, 4, 4);
    const auto ab = coxeter_analyze(b4);
    CHECK(ab.q.nontrivial.empty());
    CHECK(ab.q.trivial.size() == 3);

    // D4: the simply-laced star, everything folds to Q
    CoxeterMatrix d4(4);
    d4.set(1, 2, 3);
    d4.set(1, 3, 3);
    d4.set(1, 4, 3);
    const auto ad = coxeter_analyze(d4);
    CHECK(ad.q.cycle_count == 0);
    CHECK(ad.q.nontrivial.empty());
    CHECK(verify_context(ad.ctx).ok());

    // the same star with m = 5 arms keeps two genuine K5 factors
    CoxeterMatrix h(4);
    h.set(1, 2, 5);
    h.set(1, 3, 5);
    h.set(1, 4, 3);
    const auto ah = coxeter_analyze(h);
    CHECK(ah.q.cycle_count == 0);
    CHECK(ah.q.nontrivial.size() == 2);
}

TEST_CASE("analysis failure modes", "[coxeter]") {
    // reducible (disconnected) system
    CoxeterMatrix red(4);
    red.set(1, 2, 3);
    red.set(3, 4, 3);
    CHECK_THROWS_AS(coxeter_analyze(red), NotConnectedError);

    // rank 2 with m = infinity: Y1 is empty, no admissible tree
    CoxeterMatrix inf2(2);
    inf2.set(1, 2, kCoxeterInfinity);
    CHECK_THROWS_AS(coxeter_analyze(inf2), NoSpanningTreeError);
}

TEST_CASE("factor multiset is root independent for coxeter systems", "[coxeter]") {
    const auto cm = worked_example();
    auto multiset_of = [&](int root) {
        std::multiset<std::pair<int, Poly>> ms;
        const auto cg = coxeter_to_graph(cm);
        const auto ctx = build_context(cg.graph, cg.fam, root);
        for (const auto& f : ctx.factors->factors())
            ms.emplace(static_cast<int>(f.kind), f.modulus);
        return ms;
    };
    const auto base = multiset_of(1);
    for (int r = 2; r <= 5; ++r) CHECK(multiset_of(r) == base);
}

TEST_CASE("coxeter file parsing", "[coxeter]") {
    const auto cm = parse_coxeter_file(
        "# comment\nrank 3\nm 1 2 3\nm 2 3 inf\n");
    CHECK(cm.rank() == 3);
    CHECK(cm.at(1, 2) == 3);
    CHECK(cm.at(2, 3) == kCoxeterInfinity);
    CHECK(cm.at(1, 3) == 2);

    CHECK_THROWS_AS(parse_coxeter_file("m 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_coxeter_file("rank 3\nm 2 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_coxeter_file("rank 3\nm 1 2 3\nm 1 2 4\n"), ParseError);
    CHECK_THROWS_AS(parse_coxeter_file("rank 3\nm 1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_coxeter_file("rank 3\nedge a 1 2\n"), ParseError);
}
