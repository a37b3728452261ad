#include "oracles.hpp"

#include <qk/errors.hpp>
#include <qk/exact_solver.hpp>
#include <qk/generators.hpp>

#include <doctest.h>

using namespace qk;

namespace
{
    auto sets(std::size_t n, std::initializer_list<std::initializer_list<Vertex>> list) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> out;
        for (auto s : list)
            out.push_back(VertexSet::of(n, s));
        return out;
    }

    auto path3() -> Digraph
    {
        return Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    }
}

TEST_CASE("enumerate quasi-kernels")
{
    CHECK(enumerate_q_kernels(gen_cycle(3), 2) == sets(3, {{0}, {1}, {2}}));
    CHECK(enumerate_q_kernels(gen_cycle(4), 2) == sets(4, {{0, 2}, {1, 3}}));
    CHECK(enumerate_q_kernels(path3(), 2) == sets(3, {{0}, {0, 2}}));
    CHECK(enumerate_q_kernels(Digraph(0), 2) == sets(0, {{}}));
}

TEST_CASE("smallest q-kernel")
{
    auto hub = gen_three_hub(2).graph;
    auto s = smallest_q_kernel(hub, 2);
    CHECK(s.size() == 1);
    CHECK(s.first() < Vertex{3});

    auto tight = gen_tight_hairy(1).graph;
    REQUIRE(tight.order() == 12);
    CHECK(smallest_q_kernel(tight, 2).size() == 4);

    // w2 -> a0 lets {a1, w2} cover the strongly connected variant
    auto sc = gen_tight_hairy(1, true).graph;
    auto q = smallest_q_kernel(sc, 2);
    CHECK(q == VertexSet::of(14, {1, 13}));
    CHECK(oracle::smallest_size(oracle::Matrix(sc), 2) == 2);

    CHECK(smallest_q_kernel(gen_cycle(6), 2).size() == 2);
    CHECK(smallest_q_kernel(gen_cycle(6), 1).size() == 3);
    CHECK(smallest_q_kernel(gen_cycle(6), 5).size() == 1);
}

TEST_CASE("no q-kernel means a typed error, not an empty answer")
{
    CHECK_THROWS_AS(smallest_q_kernel(gen_cycle(3), 1), PreconditionError);
}

TEST_CASE("disjoint quasi-kernels")
{
    auto c3 = has_two_disjoint_qks(gen_cycle(3));
    REQUIRE(c3);
    CHECK(c3->first == VertexSet::of(3, {0}));
    CHECK(c3->second == VertexSet::of(3, {1}));

    auto c2 = has_two_disjoint_qks(gen_cycle(2));
    REQUIRE(c2);
    CHECK(c2->first == VertexSet::of(2, {0}));
    CHECK(c2->second == VertexSet::of(2, {1}));

    CHECK(! has_two_disjoint_qks(path3()));
}

TEST_CASE("kernels")
{
    CHECK(enumerate_kernels(gen_cycle(3)).empty());
    CHECK(! has_kernel(gen_cycle(3)));
    CHECK(enumerate_kernels(gen_cycle(4)) == sets(4, {{0, 2}, {1, 3}}));
    CHECK(enumerate_kernels(Digraph(3)) == sets(3, {{0, 1, 2}}));
}

TEST_CASE("kernel perfectness")
{
    CHECK(is_kernel_perfect(gen_cycle(4)).perfect);
    auto c3 = is_kernel_perfect(gen_cycle(3));
    CHECK(! c3.perfect);
    CHECK(c3.witness == VertexSet::of(3, {0, 1, 2}));

    // C3 plus a pendant source: the triangle is still the witness
    auto g = Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
    auto r = is_kernel_perfect(g);
    CHECK(! r.perfect);
    CHECK(r.witness == VertexSet::of(4, {0, 1, 2}));

    for (std::uint64_t i = 0; i < 4096; i += 13) {
        auto d = digraph_at(4, i);
        if (! has_directed_odd_cycle(d) && strongly_connected_components(d).size() == 4)
            CHECK(is_kernel_perfect(d).perfect);
    }
}

TEST_CASE("kls bound")
{
    CHECK(kls_bound(path3()) == Rational(3, 2));
    CHECK(kls_bound(gen_cycle(5)) == Rational(5, 2));
    CHECK(kls_bound(Digraph(4)) == Rational(4, 1));
    CHECK(kls_bound(Digraph(4)).to_string() == "4");
    CHECK(kls_bound(path3()).to_string() == "3/2");
    CHECK(kls_bound(path3()).admits(1));
    CHECK(! kls_bound(path3()).admits(2));
}

TEST_CASE("resource limits")
{
    auto big = gen_cycle(30);
    CHECK_THROWS_AS(enumerate_q_kernels(big, 2), ResourceLimitError);
    CHECK_NOTHROW(enumerate_q_kernels(gen_cycle(9), 2, SolverLimits{9, std::nullopt}));
    CHECK_THROWS_AS(enumerate_q_kernels(gen_cycle(9), 2, SolverLimits{8, std::nullopt}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_q_kernels(gen_cycle(12), 2, SolverLimits{24, 10}), ResourceLimitError);
    CHECK_THROWS_AS(is_kernel_perfect(gen_cycle(12), SolverLimits{24, 50}), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_q_kernels(gen_cycle(65), 2, SolverLimits{100, std::nullopt}), ResourceLimitError);
}

TEST_CASE("solvers agree with brute force on every digraph up to 4 vertices")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto g : enumerate_all_digraphs(n)) {
            oracle::Matrix m(g);
            for (unsigned q = 1; q <= 3; ++q) {
                auto got = enumerate_q_kernels(g, q);
                auto want = oracle::all_q_kernels(m, q);
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < got.size(); ++i)
                    REQUIRE(oracle::to_mask(got[i]) == want[i]);
                if (! want.empty()) {
                    REQUIRE(oracle::to_mask(smallest_q_kernel(g, q)) == want.front());
                }
            }
            REQUIRE(has_kernel(g) == ! oracle::all_kernels(m).empty());
            REQUIRE(is_kernel_perfect(g).perfect == oracle::kernel_perfect(m));

            auto pair = has_two_disjoint_qks(g);
            auto qks = oracle::all_q_kernels(m, 2);
            bool any = false;
            for (auto a : qks)
                for (auto b : qks)
                    any = any || (a & b) == 0;
            REQUIRE(pair.has_value() == any);
            if (pair) {
                REQUIRE(! pair->first.intersects(pair->second));
                REQUIRE(is_quasi_kernel(g, pair->first).holds);
                REQUIRE(is_quasi_kernel(g, pair->second).holds);
            }
        }
}

TEST_CASE("smallest quasi-kernel agrees with brute force on random digraphs")
{
    for (std::uint64_t i = 0; i < 150; ++i) {
        auto n = 5 + static_cast<std::size_t>(i % 8);
        auto g = gen_random_digraph(n, 0.25, i % 2 == 0, Seed{i});
        oracle::Matrix m(g);
        REQUIRE(smallest_q_kernel(g, 2).size() == oracle::smallest_size(m, 2));
        REQUIRE(enumerate_q_kernels(g, 2).size() == oracle::all_q_kernels(m, 2).size());
    }
}
