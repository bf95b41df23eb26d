#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "paq/cohn.hpp"

using namespace paq;

TEST_CASE("cohn family", "[cohn]") {
    const auto g = make_graph(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
    const auto fam = cohn_family(g);
    CHECK(fam.y1().size() == 3);
    for (int e = 0; e < 3; ++e) {
        CHECK(is_property_F(fam.at(e)));
        CHECK(fam.at(e) == Poly{std::vector<Rational>{Rational(-1), Rational(1)}});
    }
}

TEST_CASE("cohn check on small graphs", "[cohn]") {
    // a tree: no cycles, Q = Q
    const auto tree = make_graph(4, {{"a", 1, 2}, {"b", 2, 3}, {"c", 2, 4}});
    const auto rt = cohn_check(tree);
    CHECK(rt.ok());
    CHECK(rt.laurent_count == 0);

    // one loop: Q = Q[z, z^-1]
    const auto loop = make_graph(1, {{"l", 1, 1}});
    const auto rl = cohn_check(loop);
    CHECK(rl.ok());
    CHECK(rl.laurent_count == 1);

    // triangle: one fundamental cycle
    const auto tri = make_graph(3, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}});
    const auto rr = cohn_check(tri);
    CHECK(rr.ok());
    CHECK(rr.laurent_count == 1);
    CHECK(rr.cycle_count == 1);
    CHECK(rr.to_string().find("RESULT ok") != std::string::npos);

    CHECK_THROWS_AS(cohn_check(make_graph(2, {})), NotConnectedError);
}

TEST_CASE("backtracking reduction computes normal forms", "[cohn]") {
    const auto g = make_graph(2, {{"a", 1, 2}, {"b", 1, 2}});
    const DirectedEdge a{0, true}, b{1, true};

    // y ybar y -> y, both resolutions agree
    const auto p = Path::of(*g, {a, a.reversed(), a});
    CHECK(reduce_backtracking(*g, p) == Path::of(*g, {a}));

    // full collapse ends at the origin vertex
    const auto q = Path::of(*g, {a, a.reversed(), b, b.reversed()});
    CHECK(reduce_backtracking(*g, q) == Path::at(1));

    // a bar-b b-bar... mixed edge pair never cancels
    const auto r = Path::of(*g, {a, b.reversed()});
    CHECK(reduce_backtracking(*g, r) == r);

    // reduction is idempotent on random walks
    paq::testing::Rng rng(89);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gg = paq::testing::random_connected_graph(rng);
        const auto w = paq::testing::random_walk(rng, gg, 8);
        const auto nf = reduce_backtracking(*gg, w);
        CHECK(reduce_backtracking(*gg, nf) == nf);
        CHECK(nf.origin() == w.origin());
        CHECK(nf.terminus() == w.terminus());
        // no backtracking left
        for (std::size_t i = 0; i + 1 < nf.edges().size(); ++i)
            CHECK(nf.edges()[i + 1] != nf.edges()[i].reversed());
    }
}

TEST_CASE("rewriting oracle agrees with the matrix-image decision", "[cohn]") {
    paq::testing::Rng rng(97);
    for (int trial = 0; trial < 5; ++trial) {
        const auto g = paq::testing::random_connected_graph(rng, 5, 7);
        const auto fam = cohn_family(g);
        const auto ctx = build_context(g, fam, 1);
        for (int pair = 0; pair < 50; ++pair) {
            auto a = paq::testing::random_element(rng, g, 3, 5);
            auto b = paq::testing::random_element(rng, g, 3, 5);
            if (pair % 2 == 0) {
                // half the pairs differ by an element of the relation ideal
                const DirectedEdge y{static_cast<int>(paq::testing::bounded(
                                         rng, g->edge_count())),
                                     paq::testing::bounded(rng, 2) == 0};
                const auto rel =
                    PathAlgebraElement::edge(g, y) * PathAlgebraElement::edge(g, y.reversed()) -
                    PathAlgebraElement::vertex(g, g->origin(y));
                const auto c = paq::testing::random_element(rng, g, 2, 2);
                const auto d = paq::testing::random_element(rng, g, 2, 2);
                b = a + c * rel * d;
            }
            const bool by_phi = equal_in_R(ctx, a, b);
            const bool by_rewriting = cohn_normal_form(g, a) == cohn_normal_form(g, b);
            CHECK(by_phi == by_rewriting);
        }
    }
}

TEST_CASE("laurent factor count equals cycle count on random graphs", "[cohn]") {
    paq::testing::Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = paq::testing::random_connected_graph(rng);
        const auto rep = cohn_check(g);
        CHECK(rep.failed_relations.empty());
        CHECK(rep.laurent_count == g->edge_count() - g->vertex_count() + 1);
    }
}
