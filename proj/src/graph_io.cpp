#include <qk/graph_io.hpp>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace qk
{
    namespace
    {
        auto tokens(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                    ++j;
                if (j > i)
                    out.push_back(line.substr(i, j - i));
                i = j;
            }
            return out;
        }

        auto number(std::string_view token, std::size_t line) -> std::size_t
        {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
            return value;
        }
    }

    auto parse_graph(std::string_view text) -> Digraph
    {
        std::size_t line_no = 0, header_line = 0;
        bool have_header = false;
        std::size_t n = 0, m = 0;
        std::vector<Arc> arcs;
        std::set<std::pair<Vertex, Vertex>> seen;

        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;

            auto t = tokens(line);
            if (t.empty() || t.front().front() == '#')
                continue;
            if (t.size() != 2)
                throw ParseError(line_no, "expected two fields, got " + std::to_string(t.size()));

            if (! have_header) {
                n = number(t[0], line_no);
                m = number(t[1], line_no);
                have_header = true;
                header_line = line_no;
                arcs.reserve(m);
                continue;
            }

            auto u = number(t[0], line_no), v = number(t[1], line_no);
            if (u >= n || v >= n)
                throw ParseError(line_no, "arc " + std::to_string(u) + " " + std::to_string(v) + " out of range for " +
                                              std::to_string(n) + " vertices");
            if (u == v)
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            if (! seen.emplace(u, v).second)
                throw ParseError(line_no, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
            if (arcs.size() == m)
                throw ParseError(line_no, "more arcs than the " + std::to_string(m) + " declared");
            arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }

        if (! have_header)
            throw ParseError(line_no, "missing 'n m' header");
        if (arcs.size() != m)
            throw ParseError(header_line, "declared " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
        return Digraph::from_arcs(n, arcs);
    }

    auto load_graph(const std::filesystem::path & path) -> Digraph
    {
        std::ifstream in(path);
        if (! in)
            throw IoError("cannot open graph file '" + path.string() + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_graph(buffer.str());
    }

    auto serialize_graph(const Digraph & g) -> std::string
    {
        std::string out = std::to_string(g.order()) + " " + std::to_string(g.arc_count()) + "\n";
        for (auto [u, v] : g.arcs())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    auto save_graph(const Digraph & g, const std::filesystem::path & path) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw IoError("cannot write graph file '" + path.string() + "'");
        out << serialize_graph(g);
    }
}
