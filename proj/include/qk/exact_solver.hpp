#pragma once

#include <qk/digraph.hpp>
#include <qk/rational.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qk
{
    /// Caps for the exponential routines. Exceeding either raises
    /// ResourceLimitError; results are never silently truncated.
    struct SolverLimits
    {
        std::size_t max_n = 24;
        std::optional<std::uint64_t> max_subsets;
    };

    /// All q-kernels, ordered by size and then lexicographically. Only
    /// independent sets are ever extended.
    auto enumerate_q_kernels(const Digraph & g, unsigned q, const SolverLimits & limits = {}) -> std::vector<VertexSet>;

    /// A minimum-cardinality q-kernel, the first one in enumeration order.
    auto smallest_q_kernel(const Digraph & g, unsigned q, const SolverLimits & limits = {}) -> VertexSet;

    /// First disjoint pair of quasi-kernels in enumeration order, if any.
    auto has_two_disjoint_qks(const Digraph & g, const SolverLimits & limits = {})
        -> std::optional<std::pair<VertexSet, VertexSet>>;

    auto enumerate_kernels(const Digraph & g, const SolverLimits & limits = {}) -> std::vector<VertexSet>;
    auto has_kernel(const Digraph & g, const SolverLimits & limits = {}) -> bool;

    struct KernelPerfection
    {
        bool perfect = true;
        /// First vertex set (size, then lexicographic) whose induced
        /// subgraph has no kernel.
        std::optional<VertexSet> witness;
    };

    auto is_kernel_perfect(const Digraph & g, const SolverLimits & limits = {}) -> KernelPerfection;

    /// (n + |S| - |out(S)|) / 2 where S is the set of sources.
    auto kls_bound(const Digraph & g) -> Rational;
}
