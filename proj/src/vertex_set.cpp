#include <qk/vertex_set.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace qk
{
    namespace
    {
        auto words_for(std::size_t universe) -> std::size_t
        {
            return (universe + 63) / 64;
        }
    }

    VertexSet::VertexSet(std::size_t universe) :
        _universe(universe),
        _words(words_for(universe), 0)
    {
    }

    auto VertexSet::full(std::size_t universe) -> VertexSet
    {
        VertexSet s(universe);
        for (auto & w : s._words)
            w = ~std::uint64_t{0};
        if (auto tail = universe % 64; tail != 0)
            s._words.back() = (std::uint64_t{1} << tail) - 1;
        return s;
    }

    auto VertexSet::of(std::size_t universe, std::span<const Vertex> members) -> VertexSet
    {
        VertexSet s(universe);
        for (auto v : members)
            s.insert(v);
        return s;
    }

    auto VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) -> VertexSet
    {
        return of(universe, std::span<const Vertex>(members.begin(), members.size()));
    }

    auto VertexSet::size() const noexcept -> std::size_t
    {
        std::size_t total = 0;
        for (auto w : _words)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    auto VertexSet::empty() const noexcept -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
    }

    auto VertexSet::check_member(Vertex v) const -> void
    {
        if (v >= _universe)
            throw ContractViolation("vertex " + std::to_string(v) + " out of range for " +
                                    std::to_string(_universe) + " vertices");
    }

    auto VertexSet::check_same_universe(const VertexSet & other) const -> void
    {
        if (other._universe != _universe)
            throw ContractViolation("vertex sets over different universes (" + std::to_string(_universe) +
                                    " vs " + std::to_string(other._universe) + ")");
    }

    auto VertexSet::contains(Vertex v) const -> bool
    {
        check_member(v);
        return (_words[v / 64] >> (v % 64)) & 1;
    }

    auto VertexSet::insert(Vertex v) -> void
    {
        check_member(v);
        _words[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    auto VertexSet::erase(Vertex v) -> void
    {
        check_member(v);
        _words[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        check_same_universe(other);
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto VertexSet::intersects(const VertexSet & other) const -> bool
    {
        check_same_universe(other);
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto VertexSet::complement() const -> VertexSet
    {
        return full(_universe) - *this;
    }

    auto VertexSet::first() const -> std::optional<Vertex>
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            if (_words[w])
                return static_cast<Vertex>(w * 64 + static_cast<unsigned>(std::countr_zero(_words[w])));
        return std::nullopt;
    }

    auto VertexSet::to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    auto size_lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        auto sa = a.size(), sb = b.size();
        if (sa != sb)
            return sa < sb;
        auto va = a.to_vector(), vb = b.to_vector();
        return va < vb;
    }

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a |= b;
        return a;
    }

    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a &= b;
        return a;
    }

    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet
    {
        a -= b;
        return a;
    }

    auto to_string(const VertexSet & s) -> std::string
    {
        std::string out = "{";
        bool first = true;
        s.for_each([&](Vertex v) {
            if (! first)
                out += ',';
            out += std::to_string(v);
            first = false;
        });
        out += '}';
        return out;
    }

    auto parse_vertex_list(const std::string & text) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        std::size_t i = 0;
        auto is_sep = [](char c) {
            return c == ',' || c == '{' || c == '}' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c));
        };
        while (i < text.size()) {
            if (is_sep(text[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < text.size() && ! is_sep(text[j]))
                ++j;
            Vertex v = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
            if (ec != std::errc{} || ptr != text.data() + j)
                throw ContractViolation("bad vertex '" + text.substr(i, j - i) + "' in list '" + text + "'");
            out.push_back(v);
            i = j;
        }
        return out;
    }
}
