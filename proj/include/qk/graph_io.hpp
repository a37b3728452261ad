#pragma once

#include <qk/digraph.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace qk
{
    // Text format: first non-comment line "n m", then m lines "u v" for the
    // arc u->v, 0-based. Lines starting with '#' and blank lines are ignored.
    // Loops, repeated arcs, out-of-range vertices and a wrong arc count raise
    // ParseError carrying the 1-based line number.

    auto parse_graph(std::string_view text) -> Digraph;
    auto load_graph(const std::filesystem::path & path) -> Digraph;

    /// Arcs are written sorted by (tail, head), one per line.
    auto serialize_graph(const Digraph & g) -> std::string;
    auto save_graph(const Digraph & g, const std::filesystem::path & path) -> void;
}
