#include "oracles.hpp"

#include <qk/cl_greedy.hpp>
#include <qk/errors.hpp>
#include <qk/exact_solver.hpp>
#include <qk/generators.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>

using namespace qk;

namespace
{
    auto label_index(const GeneratedGraph & g, const std::string & name) -> Vertex
    {
        auto it = std::find(g.labels.begin(), g.labels.end(), name);
        REQUIRE(it != g.labels.end());
        return static_cast<Vertex>(it - g.labels.begin());
    }

    // `head` first, the rest in natural order
    auto starting_with(std::size_t n, std::vector<Vertex> head) -> Ordering
    {
        auto perm = head;
        for (Vertex v = 0; v < n; ++v)
            if (std::find(head.begin(), head.end(), v) == head.end())
                perm.push_back(v);
        return Ordering(perm);
    }

    // a random source-free digraph on which the natural order has every
    // back arc matched by its forward arc
    auto symmetric_back_graph(std::size_t n, Seed seed) -> Digraph
    {
        auto base = gen_random_digraph(n, 0.3, true, seed);
        std::vector<Arc> arcs = base.arcs();
        for (auto a : base.arcs())
            if (a.tail > a.head && ! base.has_arc(a.head, a.tail))
                arcs.push_back({a.head, a.tail});
        return Digraph::from_arcs(n, arcs);
    }
}

TEST_CASE("ordering validation")
{
    CHECK_THROWS_AS(Ordering({0, 0, 1}), ContractViolation);
    CHECK_THROWS_AS(Ordering({0, 3, 1}), ContractViolation);
    auto o = Ordering({2, 0, 1});
    CHECK(o.position(2) == 0);
    CHECK(o.reversed().vertices() == std::vector<Vertex>{1, 0, 2});
    CHECK(Ordering::natural(3).vertices() == std::vector<Vertex>{0, 1, 2});
    auto r = Ordering::random(10, Seed{5});
    auto sorted = r.vertices();
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == Ordering::natural(10).vertices());
    CHECK(Ordering::random(10, Seed{5}).vertices() == r.vertices());
    CHECK_THROWS_AS(cl_algorithm(gen_cycle(3), Ordering::natural(4)), ContractViolation);
}

TEST_CASE("cl on the directed triangle")
{
    auto run = cl_run(gen_cycle(3), Ordering::natural(3));
    CHECK(run.phase_one == std::vector<Vertex>{0, 2});
    CHECK(run.phase_two == std::vector<Vertex>{2});
    CHECK(run.result == VertexSet::of(3, {2}));
}

TEST_CASE("cl on the three-hub graph, hub first")
{
    for (std::size_t k = 1; k <= 3; ++k) {
        auto hub = gen_three_hub(k);
        auto n = hub.graph.order();
        for (auto name : {"v", "u", "w"}) {
            auto q = cl_algorithm(hub.graph, starting_with(n, {label_index(hub, name)}));
            CHECK(q.size() == 2 * k + 1);
            CHECK(is_quasi_kernel(hub.graph, q).holds);
            CHECK(q.contains(label_index(hub, name)));
        }
    }
}

TEST_CASE("cl on the three-hub graph, leaf first")
{
    // picking v_k, then a hub, collects the other v_i, that hub and the
    // leaves of the third hub: 2k + 1 vertices
    auto hub = gen_three_hub(2);
    auto n = hub.graph.order();
    auto q = cl_algorithm(hub.graph, starting_with(n, {label_index(hub, "v2"), label_index(hub, "u")}));
    CHECK(q.size() == 5);
    CHECK(q == VertexSet::of(n, {label_index(hub, "u"), label_index(hub, "v1"), label_index(hub, "v2"),
                                 label_index(hub, "w1"), label_index(hub, "w2")}));

    for (std::size_t k = 1; k <= 3; ++k) {
        auto h = gen_three_hub(k);
        for (Vertex leaf = 3; leaf < h.graph.order(); ++leaf)
            for (Vertex second = 0; second < h.graph.order(); ++second)
                if (second != leaf)
                    CHECK(cl_algorithm(h.graph, starting_with(h.graph.order(), {leaf, second})).size() >= 2 * k);
    }
}

TEST_CASE("cl over all 720 orderings of the three-hub graph with k = 1")
{
    auto g = gen_three_hub(1).graph;
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t lo = 99, hi = 0, count = 0;
    do {
        auto q = cl_algorithm(g, Ordering(perm));
        REQUIRE(is_quasi_kernel(g, q).holds);
        lo = std::min(lo, q.size());
        hi = std::max(hi, q.size());
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 720);
    CHECK(lo == 3);
    CHECK(hi == 3);
}

TEST_CASE("symmetric back property")
{
    // transitive tournament oriented along the order
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = i + 1; j < 5; ++j)
            arcs.push_back({i, j});
    CHECK(ordering_has_symmetric_back_property(Digraph::from_arcs(5, arcs), Ordering::natural(5)));

    auto back = Digraph::from_arcs(2, {{1, 0}});
    CHECK(! ordering_has_symmetric_back_property(back, Ordering::natural(2)));
    auto b = find_unmatched_back_arc(back, Ordering::natural(2));
    REQUIRE(b);
    CHECK(b->earlier == 0);
    CHECK(b->later == 1);

    auto k4 = gen_random_digraph(4, 1.0, false, Seed{1});
    CHECK(ordering_has_symmetric_back_property(k4, Ordering({3, 1, 0, 2})));
}

TEST_CASE("modified cl examples")
{
    auto k4 = gen_random_digraph(4, 1.0, false, Seed{1});
    REQUIRE(k4.arc_count() == 12);
    CHECK(modified_cl(k4, Ordering::natural(4)) == VertexSet::of(4, {0}));
    CHECK(modified_cl(gen_cycle(2), Ordering::natural(2)) == VertexSet::of(2, {0}));
    auto pairs = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
    auto q = modified_cl(pairs, Ordering::natural(4));
    CHECK(q == VertexSet::of(4, {0, 2}));
    CHECK(smallest_q_kernel(pairs, 2).size() == 2);
}

TEST_CASE("modified cl preconditions")
{
    auto path = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(modified_cl(path, Ordering::natural(3)), PreconditionError);
    try {
        modified_cl(gen_cycle(3), Ordering::natural(3));
        FAIL("expected a precondition error");
    }
    catch (const PreconditionError & e) {
        std::string msg = e.what();
        CHECK(msg.find("2->0") != std::string::npos);
    }
}

TEST_CASE("cl output is always a quasi-kernel")
{
    for (std::uint64_t i = 0; i < 400; ++i) {
        Rng rng(Seed{i});
        auto n = static_cast<std::size_t>(rng.between(1, 16));
        auto g = gen_random_digraph(n, rng.unit() * 0.6, n > 1 && rng.bernoulli(0.5), Seed{rng.next()});
        auto ord = Ordering::random(n, Seed{rng.next()});
        auto run = cl_run(g, ord);
        REQUIRE(is_q_kernel(g, run.result, 2).holds);
        REQUIRE(closed_out(g, VertexSet::of(n, run.phase_one), 1).is_full());
        // phase two keeps a subset of the phase one picks
        REQUIRE(run.result.is_subset_of(VertexSet::of(n, run.phase_one)));
    }
}

TEST_CASE("modified cl stays within half when its preconditions hold")
{
    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 400; ++i) {
        auto n = 2 + static_cast<std::size_t>(i % 14);
        auto g = symmetric_back_graph(n, Seed{i});
        if (! sources(g).empty())
            continue;
        REQUIRE(ordering_has_symmetric_back_property(g, Ordering::natural(n)));
        auto q = modified_cl(g, Ordering::natural(n));
        REQUIRE(is_quasi_kernel(g, q).holds);
        REQUIRE(q.size() <= n / 2);
        ++checked;
    }
    CHECK(checked > 300);
}

TEST_CASE("cl agrees with the oracle on every digraph up to 4 vertices")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto g : enumerate_all_digraphs(n)) {
            auto q = cl_algorithm(g, Ordering::natural(n));
            REQUIRE(oracle::is_q_kernel(oracle::Matrix(g), oracle::to_mask(q), 2));
        }
}
