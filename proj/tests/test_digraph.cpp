#include "oracles.hpp"

#include <qk/digraph.hpp>
#include <qk/errors.hpp>
#include <qk/generators.hpp>

#include <doctest.h>

using namespace qk;

namespace
{
    auto path3() -> Digraph
    {
        return Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    }

    auto set(std::size_t n, std::initializer_list<Vertex> v) -> VertexSet
    {
        return VertexSet::of(n, v);
    }
}

TEST_CASE("vertex set algebra")
{
    auto a = set(70, {0, 3, 65});
    auto b = set(70, {3, 4});
    CHECK((a | b).to_vector() == std::vector<Vertex>{0, 3, 4, 65});
    CHECK((a & b).to_vector() == std::vector<Vertex>{3});
    CHECK((a - b).to_vector() == std::vector<Vertex>{0, 65});
    CHECK(a.complement().size() == 67);
    CHECK(a.intersects(b));
    CHECK(! (a - b).intersects(b));
    CHECK(set(70, {3}).is_subset_of(a));
    CHECK(a.first() == Vertex{0});
    CHECK(VertexSet(5).first() == std::nullopt);
    CHECK(VertexSet::full(70).is_full());
    CHECK(to_string(a) == "{0,3,65}");
    CHECK(parse_vertex_list("0, 2,5") == std::vector<Vertex>{0, 2, 5});
    CHECK(size_lex_less(set(4, {3}), set(4, {0, 1})));
    CHECK(size_lex_less(set(4, {0, 2}), set(4, {1, 2})));
    CHECK(! size_lex_less(set(4, {1, 2}), set(4, {1, 2})));
}

TEST_CASE("vertex set range checks")
{
    VertexSet s(3);
    CHECK_THROWS_AS(s.insert(3), ContractViolation);
    CHECK_THROWS_AS((void) s.contains(7), ContractViolation);
    CHECK_THROWS_AS(s |= VertexSet(4), ContractViolation);
    CHECK_THROWS_AS(parse_vertex_list("1,x"), ContractViolation);
}

TEST_CASE("digraph construction")
{
    auto g = Digraph::from_arcs(3, {{2, 0}, {0, 1}, {1, 0}});
    CHECK(g.order() == 3);
    CHECK(g.arc_count() == 3);
    CHECK(g.has_arc(1, 0));
    CHECK(! g.has_arc(0, 2));
    CHECK(g.in_degree(0) == 2);
    CHECK(std::vector<Vertex>(g.in(0).begin(), g.in(0).end()) == std::vector<Vertex>{1, 2});
    CHECK(g.transpose().has_arc(0, 2));
    CHECK(g.transpose().transpose() == g);

    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 0}}), ContractViolation);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 1}, {0, 1}}), ContractViolation);
    CHECK_THROWS_AS(Digraph::from_arcs(2, {{0, 2}}), ContractViolation);
}

TEST_CASE("out_neighbors")
{
    auto c3 = gen_cycle(3);
    CHECK(out_neighbors(c3, set(3, {0})) == set(3, {1}));
    CHECK(out_neighbors(c3, VertexSet(3)).empty());
    auto c4 = gen_cycle(4);
    CHECK(out_neighbors(c4, set(4, {0, 2})) == set(4, {1, 3}));
    CHECK_THROWS_AS(out_neighbors(c4, VertexSet(5)), ContractViolation);
}

TEST_CASE("closed neighbourhoods")
{
    auto c4 = gen_cycle(4);
    CHECK(closed_out(c4, set(4, {0}), 2) == set(4, {0, 1, 2}));
    CHECK(closed_out(c4, set(4, {0}), 3).is_full());
    CHECK(closed_out(c4, set(4, {0}), 0) == set(4, {0}));
    CHECK(closed_out(c4, VertexSet::full(4), 5).is_full());
    CHECK(closed_in(c4, set(4, {0}), 1) == set(4, {0, 3}));
    CHECK(closed_in(c4, VertexSet(4), 2).empty());
}

TEST_CASE("sources")
{
    CHECK(sources(path3()) == set(3, {0}));
    CHECK(sources(gen_cycle(5)).empty());
    CHECK(sources(Digraph(3)).is_full());
}

TEST_CASE("independence and kernels")
{
    auto c4 = gen_cycle(4);
    CHECK(is_independent(c4, set(4, {0, 2})).holds);
    auto r = is_independent(c4, set(4, {0, 1}));
    REQUIRE(! r.holds);
    CHECK(r.witness == Witness{WitnessKind::InternalArc, 0, 1});
    CHECK(is_independent(c4, VertexSet(4)).holds);

    CHECK(is_kernel(c4, set(4, {0, 2})).holds);
    auto c3 = gen_cycle(3);
    for (Vertex v = 0; v < 3; ++v) {
        auto k = is_kernel(c3, set(3, {v}));
        CHECK(! k.holds);
        CHECK(k.witness->kind == WitnessKind::Uncovered);
    }
    CHECK(is_kernel(path3(), set(3, {0, 2})).holds);
}

TEST_CASE("q-kernels")
{
    CHECK(is_q_kernel(gen_cycle(3), set(3, {0}), 2).holds);
    auto r = is_q_kernel(gen_cycle(4), set(4, {0}), 2);
    REQUIRE(! r.holds);
    CHECK(r.witness == Witness{WitnessKind::Uncovered, 3, 0});

    auto hub = gen_three_hub(2);
    for (Vertex v = 0; v < 3; ++v)
        CHECK(is_quasi_kernel(hub.graph, set(hub.graph.order(), {v})).holds);
}

TEST_CASE("large quasi-kernels")
{
    CHECK(is_large_qk(gen_cycle(3), set(3, {0})).holds);
    CHECK(is_large_qk(gen_cycle(4), set(4, {0, 2})).holds);
    CHECK(! is_large_qk(gen_cycle(4), set(4, {0})).holds);
    // a quasi-kernel whose closed out-neighbourhood is too small
    auto star = Digraph::from_arcs(5, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 0}});
    auto r = is_large_qk(star, set(5, {0}));
    REQUIRE(is_quasi_kernel(star, set(5, {0})).holds);
    REQUIRE(! r.holds);
    CHECK(r.witness->kind == WitnessKind::SmallClosure);
    CHECK(r.witness->first == 2);
}

TEST_CASE("odd directed cycles")
{
    CHECK(has_directed_odd_cycle(gen_cycle(3)));
    CHECK(! has_directed_odd_cycle(gen_cycle(4)));
    CHECK(! has_directed_odd_cycle(gen_cycle(2)));
    CHECK(! has_directed_odd_cycle(path3()));
    // two even cycles sharing a vertex can still close an odd one
    auto g = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    CHECK(has_directed_odd_cycle(g));
}

TEST_CASE("induced subgraphs")
{
    auto c4 = gen_cycle(4);
    auto all = induced(c4, VertexSet::full(4));
    CHECK(all.graph == c4);
    CHECK(induced(c4, VertexSet(4)).graph.order() == 0);
    auto one = induced(c4, set(4, {2}));
    CHECK(one.graph.order() == 1);
    CHECK(one.graph.arc_count() == 0);
    CHECK(one.to_old == std::vector<Vertex>{2});

    auto part = induced(c4, set(4, {1, 2, 3}));
    CHECK(part.graph.arc_count() == 2);
    CHECK(part.lift(set(3, {0, 2}), 4) == set(4, {1, 3}));
}

TEST_CASE("strongly connected components")
{
    auto g = Digraph::from_arcs(5, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 2}});
    auto scc = strongly_connected_components(g);
    REQUIRE(scc.size() == 2);
    CHECK(scc[0] == std::vector<Vertex>{0, 1});
    CHECK(scc[1] == std::vector<Vertex>{2, 3, 4});
    CHECK(strongly_connected_components(gen_cycle(6)).size() == 1);
    CHECK(strongly_connected_components(Digraph(3)).size() == 3);
}

TEST_CASE("tournament recognition")
{
    CHECK(is_tournament(gen_cycle(3)));
    CHECK(! is_tournament(gen_cycle(4)));
    CHECK(! is_tournament(gen_cycle(2)));
    CHECK(is_tournament(Digraph(1)));
}

TEST_CASE("odd cycle test agrees with cycle enumeration on every digraph up to 5 vertices")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        std::uint64_t mismatches = 0;
        for (auto g : enumerate_all_digraphs(n))
            mismatches += has_directed_odd_cycle(g) != oracle::has_odd_cycle(oracle::Matrix(g));
        CHECK_MESSAGE(mismatches == 0, "n=" << n);
    }
}

TEST_CASE("predicate invariants on every digraph up to 4 vertices")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (auto g : enumerate_all_digraphs(n)) {
            oracle::Matrix m(g);
            auto src = sources(g);
            CHECK(oracle::to_mask(src) == oracle::sources(m));
            auto gt = g.transpose();
            for (oracle::Mask bits = 0; bits < (oracle::Mask{1} << n); ++bits) {
                VertexSet s(n);
                for (Vertex v = 0; v < n; ++v)
                    if (bits >> v & 1)
                        s.insert(v);

                for (unsigned q = 0; q < n + 1; ++q) {
                    auto a = closed_out(g, s, q);
                    REQUIRE(a.is_subset_of(closed_out(g, s, q + 1)));
                    REQUIRE(oracle::to_mask(a) == oracle::reach(m, bits, q));
                }
                // stabilises after n - 1 steps
                REQUIRE(closed_out(g, s, static_cast<unsigned>(n) - 1) == closed_out(g, s, static_cast<unsigned>(n) + 3));
                REQUIRE(closed_in(g, s, 2) == closed_out(gt, s, 2));

                for (unsigned q = 1; q <= 3; ++q) {
                    bool qk = is_q_kernel(g, s, q).holds;
                    REQUIRE(qk == oracle::is_q_kernel(m, bits, q));
                    if (qk)
                        REQUIRE(src.is_subset_of(s));
                }
                if (is_kernel(g, s).holds)
                    REQUIRE(is_quasi_kernel(g, s).holds);
                REQUIRE(is_quasi_sink(g, s).holds == is_quasi_kernel(gt, s).holds);

                auto r = is_quasi_kernel(g, s);
                REQUIRE(r.holds != r.witness.has_value());
            }
        }
    }
}
