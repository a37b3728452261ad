#pragma once

#include <qk/digraph.hpp>
#include <qk/exact_solver.hpp>
#include <qk/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qk
{
    /// Output of a constructive procedure: the quasi-kernel, every named
    /// intermediate set, some named counters, and the size bound the
    /// construction guarantees. Constructors below only return traces whose
    /// result verifies as a quasi-kernel within `bound`.
    struct ConstructionTrace
    {
        std::string method;
        VertexSet result;
        std::vector<std::pair<std::string, VertexSet>> sets;
        std::vector<std::pair<std::string, std::int64_t>> values;
        Rational bound;

        auto set(const std::string & name) const -> const VertexSet &;
        auto value(const std::string & name) const -> std::int64_t;
        auto has_set(const std::string & name) const -> bool;
    };

    /// Tournament part A and hair part I of a hairy tournament. `owner[h]` is
    /// the in-neighbour of hair h in A (lowest one in relaxed mode).
    struct HairyPartition
    {
        VertexSet tournament;
        VertexSet hairs;
        std::vector<std::optional<Vertex>> owner;
    };

    /// Strict mode: G[A] is a tournament and every hair has exactly one
    /// incident arc, coming from A. Relaxed mode only asks hairs to be sinks
    /// whose in-neighbours are all in A, with at least one in-neighbour.
    /// Throws PreconditionError naming the first defect.
    auto validate_hairy_partition(const Digraph & g, const HairyPartition & p, bool relaxed = false) -> void;

    /// Builds a partition from the sets A and I, filling owners.
    auto make_hairy_partition(const Digraph & g, const VertexSet & tournament, const VertexSet & hairs) -> HairyPartition;

    /// Hairs are the sinks of in-degree one; everything else is A.
    auto infer_hairy_partition(const Digraph & g) -> HairyPartition;

    auto is_good_qk(const Digraph & g, const VertexSet & q) -> bool;

    /// Keeps the members of a good quasi-kernel, in ascending order, that add
    /// a new out-neighbour. The result has the same out-neighbourhood.
    auto shrink_good_qk(const Digraph & g, const VertexSet & q) -> ConstructionTrace;

    /// Two candidate quasi-kernels built from a quasi-kernel Q and a kernel K
    /// of the subgraph induced outside Q's closed out-neighbourhood; returns
    /// the smaller one (ties go to the lexicographically lower set).
    auto small_qk_from_kernel_complement(const Digraph & g, const VertexSet & q, const VertexSet & k)
        -> ConstructionTrace;

    auto hairy_small_qk(const Digraph & g, const HairyPartition & p, bool relaxed = false) -> ConstructionTrace;

    /// Lowest-index vertex of maximum out-degree in a tournament.
    auto find_king(const Digraph & g) -> Vertex;

    /// Directed cycle v1..vl (starting from its lowest vertex) plus the
    /// out-trees hanging from it.
    struct UnicyclicStructure
    {
        std::vector<Vertex> cycle;
        std::vector<std::optional<Vertex>> parent; // tree predecessor, absent on the cycle
        std::vector<Vertex> tree_order;            // non-cycle vertices, parents first
    };

    /// Throws PreconditionError naming the defect: a source, disconnection,
    /// or more than one cycle.
    auto unicyclic_structure(const Digraph & g) -> UnicyclicStructure;

    auto unicyclic_small_qk(const Digraph & g) -> ConstructionTrace;

    // Searches for inputs satisfying the hypotheses above.

    auto find_good_qk(const Digraph & g, const SolverLimits & limits = {}) -> std::optional<VertexSet>;

    /// First quasi-kernel (enumeration order) whose complement of the closed
    /// out-neighbourhood induces a digraph with a kernel, with that kernel.
    auto find_qk_with_complement_kernel(const Digraph & g, const SolverLimits & limits = {})
        -> std::optional<std::pair<VertexSet, VertexSet>>;
}
