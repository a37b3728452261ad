#pragma once

#include <qk/digraph.hpp>
#include <qk/rng.hpp>

#include <vector>

namespace qk
{
    /// A permutation of 0..n-1; position 0 is visited first.
    class Ordering
    {
    public:
        /// Throws ContractViolation unless `perm` is a bijection on 0..n-1.
        explicit Ordering(std::vector<Vertex> perm);

        static auto natural(std::size_t n) -> Ordering;
        static auto random(std::size_t n, Seed seed) -> Ordering;

        auto size() const noexcept -> std::size_t { return _perm.size(); }
        auto at(std::size_t i) const -> Vertex { return _perm.at(i); }
        auto position(Vertex v) const -> std::size_t { return _pos.at(v); }
        auto vertices() const -> const std::vector<Vertex> & { return _perm; }
        auto reversed() const -> Ordering;

    private:
        std::vector<Vertex> _perm;
        std::vector<std::size_t> _pos;
    };

    struct ClRun
    {
        std::vector<Vertex> phase_one; // selections in pick order
        std::vector<Vertex> phase_two; // selections in pick order
        VertexSet result;
    };

    /// Two-phase Chvatal-Lovasz greedy. Phase one repeatedly takes the
    /// earliest vertex not yet in the closed out-neighbourhood of the picks.
    /// Phase two repeats the procedure inside the subgraph induced by those
    /// picks, visiting them in reverse pick order.
    auto cl_run(const Digraph & g, const Ordering & ord) -> ClRun;
    auto cl_algorithm(const Digraph & g, const Ordering & ord) -> VertexSet;

    /// A pair (i, j) of positions with i < j and an arc ord[j] -> ord[i]
    /// lacking its companion ord[i] -> ord[j].
    struct BackArc
    {
        std::size_t earlier;
        std::size_t later;
    };

    auto find_unmatched_back_arc(const Digraph & g, const Ordering & ord) -> std::optional<BackArc>;
    auto ordering_has_symmetric_back_property(const Digraph & g, const Ordering & ord) -> bool;

    /// Single-phase variant for source-free digraphs whose back arcs are all
    /// matched: stop once the remaining set is independent, otherwise pick
    /// the earliest remaining vertex with an out-neighbour that remains.
    /// Throws PreconditionError on a source or an unmatched back arc.
    auto modified_cl(const Digraph & g, const Ordering & ord) -> VertexSet;
}
