#pragma once

#include <qk/errors.hpp>

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qk
{
    using Vertex = std::uint32_t;

    /// Subset of the vertices 0..universe-1 of some digraph, stored as a
    /// bitset. Binary set operations require equal universes.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(std::size_t universe);

        static auto full(std::size_t universe) -> VertexSet;
        static auto of(std::size_t universe, std::span<const Vertex> members) -> VertexSet;
        static auto of(std::size_t universe, std::initializer_list<Vertex> members) -> VertexSet;

        auto universe() const noexcept -> std::size_t { return _universe; }
        auto size() const noexcept -> std::size_t;
        auto empty() const noexcept -> bool;
        auto is_full() const noexcept -> bool { return size() == _universe; }

        auto contains(Vertex v) const -> bool;
        auto insert(Vertex v) -> void;
        auto erase(Vertex v) -> void;

        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        auto is_subset_of(const VertexSet & other) const -> bool;
        auto intersects(const VertexSet & other) const -> bool;
        auto complement() const -> VertexSet;

        /// Lowest member, if any.
        auto first() const -> std::optional<Vertex>;

        auto to_vector() const -> std::vector<Vertex>;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                auto bits = _words[w];
                while (bits) {
                    auto b = static_cast<unsigned>(std::countr_zero(bits));
                    f(static_cast<Vertex>(w * 64 + b));
                    bits &= bits - 1;
                }
            }
        }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        /// Size first, then lexicographic on sorted members.
        friend auto size_lex_less(const VertexSet & a, const VertexSet & b) -> bool;

    private:
        auto check_member(Vertex v) const -> void;
        auto check_same_universe(const VertexSet & other) const -> void;

        std::size_t _universe = 0;
        std::vector<std::uint64_t> _words;
    };

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet;

    /// "{0,2,5}"
    auto to_string(const VertexSet & s) -> std::string;

    /// Parses "0,2,5" (also accepts whitespace separators and surrounding braces).
    auto parse_vertex_list(const std::string & text) -> std::vector<Vertex>;
}
