#pragma once

#include <qk/vertex_set.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qk
{
    struct Arc
    {
        Vertex tail;
        Vertex head;

        friend auto operator<=>(const Arc &, const Arc &) = default;
    };

    /// Finite digraph on vertices 0..n-1 with no loops and no repeated arcs.
    /// Anti-parallel pairs are allowed. Immutable once built.
    class Digraph
    {
    public:
        Digraph() = default;

        /// Edgeless digraph.
        explicit Digraph(std::size_t n);

        /// Throws ContractViolation on loops, repeated arcs or out-of-range ends.
        static auto from_arcs(std::size_t n, std::span<const Arc> arcs) -> Digraph;
        static auto from_arcs(std::size_t n, std::initializer_list<Arc> arcs) -> Digraph;

        auto order() const noexcept -> std::size_t { return _out.size(); }
        auto arc_count() const noexcept -> std::size_t { return _arc_count; }

        auto out(Vertex v) const -> std::span<const Vertex>;
        auto in(Vertex v) const -> std::span<const Vertex>;
        auto out_set(Vertex v) const -> const VertexSet &;
        auto in_set(Vertex v) const -> const VertexSet &;
        auto out_degree(Vertex v) const -> std::size_t { return out(v).size(); }
        auto in_degree(Vertex v) const -> std::size_t { return in(v).size(); }
        auto has_arc(Vertex tail, Vertex head) const -> bool;

        /// Arcs sorted by (tail, head).
        auto arcs() const -> std::vector<Arc>;
        auto transpose() const -> Digraph;

        auto vertices() const -> VertexSet { return VertexSet::full(order()); }

        friend auto operator==(const Digraph & a, const Digraph & b) -> bool
        {
            return a._out == b._out;
        }

    private:
        auto check_vertex(Vertex v) const -> void;

        std::vector<std::vector<Vertex>> _out, _in;
        std::vector<VertexSet> _out_sets, _in_sets;
        std::size_t _arc_count = 0;
    };

    /// Result of an induced-subgraph extraction. `to_new[v]` is the new index
    /// of an original vertex, absent when v was dropped; `to_old` inverts it.
    struct InducedSubgraph
    {
        Digraph graph;
        std::vector<std::optional<Vertex>> to_new;
        std::vector<Vertex> to_old;

        auto lift(const VertexSet & s, std::size_t universe) const -> VertexSet;
    };

    auto induced(const Digraph & g, const VertexSet & s) -> InducedSubgraph;

    // Neighbourhood closures.

    auto out_neighbors(const Digraph & g, const VertexSet & s) -> VertexSet;
    auto in_neighbors(const Digraph & g, const VertexSet & s) -> VertexSet;

    /// Vertices reachable from s along a directed path with at most q arcs.
    auto closed_out(const Digraph & g, const VertexSet & s, unsigned q) -> VertexSet;
    /// Vertices that reach s along a directed path with at most q arcs.
    auto closed_in(const Digraph & g, const VertexSet & s, unsigned q) -> VertexSet;

    auto sources(const Digraph & g) -> VertexSet;

    // Definitional predicates.

    enum class WitnessKind
    {
        InternalArc,   // an arc first -> second inside the claimed independent set
        Uncovered,     // vertex `first` is not reached
        SmallClosure   // |S u out(S)| = first is below n/2
    };

    struct Witness
    {
        WitnessKind kind;
        Vertex first = 0;
        Vertex second = 0;

        friend auto operator==(const Witness &, const Witness &) -> bool = default;
    };

    /// `witness` is present exactly when `holds` is false.
    struct CheckReport
    {
        bool holds = true;
        std::optional<Witness> witness;

        static auto pass() -> CheckReport { return {}; }
        static auto fail(Witness w) -> CheckReport { return {false, w}; }

        explicit operator bool() const noexcept { return holds; }
    };

    auto describe(const CheckReport & r) -> std::string;

    auto is_independent(const Digraph & g, const VertexSet & s) -> CheckReport;
    auto is_kernel(const Digraph & g, const VertexSet & s) -> CheckReport;
    auto is_q_kernel(const Digraph & g, const VertexSet & s, unsigned q) -> CheckReport;
    auto is_quasi_kernel(const Digraph & g, const VertexSet & s) -> CheckReport;
    /// Quasi-kernel of the transpose: every vertex reaches s within two arcs.
    auto is_quasi_sink(const Digraph & g, const VertexSet & s) -> CheckReport;
    /// Quasi-kernel whose closed out-neighbourhood holds at least half the vertices.
    auto is_large_qk(const Digraph & g, const VertexSet & s) -> CheckReport;

    /// Odd directed cycle test. An anti-parallel pair is a cycle of length 2
    /// and therefore even.
    auto has_directed_odd_cycle(const Digraph & g) -> bool;

    /// Strongly connected components, each listed in ascending vertex order,
    /// components ordered by their lowest vertex.
    auto strongly_connected_components(const Digraph & g) -> std::vector<std::vector<Vertex>>;

    auto is_tournament(const Digraph & g) -> bool;
}
