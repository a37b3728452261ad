#pragma once

#include <qk/constructive.hpp>
#include <qk/digraph.hpp>
#include <qk/rng.hpp>

#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace qk
{
    /// A generated digraph plus whatever structure the family knows about.
    struct GeneratedGraph
    {
        Digraph graph;
        std::vector<std::string> labels;           // empty when vertices are unnamed
        std::optional<HairyPartition> partition;   // hairy families
        std::vector<Vertex> cycle;                 // unicyclic families
    };

    /// i -> i+1 (mod len), len >= 2.
    auto gen_cycle(std::size_t len) -> Digraph;

    /// Three pairwise anti-parallel hubs v, u, w, each anti-parallel to k
    /// private leaves. Vertex order: v, u, w, v1..vk, u1..uk, w1..wk.
    auto gen_three_hub(std::size_t k) -> GeneratedGraph;

    /// Circulant regular tournament on 2n+1 vertices (i -> i+1..i+n) where
    /// every vertex carries 2n+1 hairs. With `strongly_connected` two more
    /// vertices w1, w2 are added with every hair -> w1, w1 -> w2, w2 -> a0.
    auto gen_tight_hairy(std::size_t n, bool strongly_connected = false) -> GeneratedGraph;

    /// Each ordered pair gets an arc with probability arc_prob. With
    /// `source_free`, every vertex left with in-degree zero (ascending)
    /// receives an arc from a uniformly chosen other vertex.
    auto gen_random_digraph(std::size_t n, double arc_prob, bool source_free, Seed seed) -> Digraph;

    /// Uniform orientation of every pair u < v.
    auto gen_random_tournament(std::size_t n, Seed seed) -> Digraph;

    /// Random source-free tournament on m >= 3 vertices (re-drawn while it has
    /// a source), then 0..max_hairs hairs per tournament vertex.
    auto gen_random_hairy(std::size_t m, std::size_t max_hairs, Seed seed) -> GeneratedGraph;

    /// Random cycle of length 3..n on shuffled labels, remaining vertices
    /// hung as out-trees below uniformly chosen earlier vertices. n >= 3.
    auto gen_random_unicyclic(std::size_t n, Seed seed) -> GeneratedGraph;

    /// Digraph number `index` of the 4^(n(n-1)/2) labelled digraphs on n
    /// vertices. Pairs (i < j) in lexicographic order are base-4 digits,
    /// least significant first: 0 none, 1 i->j, 2 j->i, 3 both.
    auto digraph_at(std::size_t n, std::uint64_t index) -> Digraph;
    auto all_digraphs_count(std::size_t n) -> std::uint64_t;

    /// Tournament number `index` of 2^(n(n-1)/2); bit set means j->i.
    auto tournament_at(std::size_t n, std::uint64_t index) -> Digraph;
    auto all_tournaments_count(std::size_t n) -> std::uint64_t;

    /// Forward range over an indexed family.
    class IndexedFamily
    {
    public:
        using Maker = Digraph (*)(std::size_t, std::uint64_t);

        IndexedFamily(std::size_t n, std::uint64_t count, Maker make) : _n(n), _count(count), _make(make) {}

        class iterator
        {
        public:
            using value_type = Digraph;
            using difference_type = std::ptrdiff_t;

            iterator() = default;
            iterator(const IndexedFamily * f, std::uint64_t i) : _f(f), _i(i) {}

            auto operator*() const -> Digraph { return _f->_make(_f->_n, _i); }
            auto operator++() -> iterator &
            {
                ++_i;
                return *this;
            }
            auto operator++(int) -> iterator
            {
                auto copy = *this;
                ++_i;
                return copy;
            }
            friend auto operator==(const iterator & a, const iterator & b) -> bool { return a._i == b._i; }

        private:
            const IndexedFamily * _f = nullptr;
            std::uint64_t _i = 0;
        };

        auto begin() const -> iterator { return {this, 0}; }
        auto end() const -> iterator { return {this, _count}; }
        auto size() const -> std::uint64_t { return _count; }

    private:
        std::size_t _n;
        std::uint64_t _count;
        Maker _make;
    };

    /// n <= 5.
    auto enumerate_all_digraphs(std::size_t n) -> IndexedFamily;
    /// n <= 7.
    auto enumerate_all_tournaments(std::size_t n) -> IndexedFamily;
}
