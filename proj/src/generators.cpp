#include <qk/generators.hpp>

#include <numeric>

namespace qk
{
    auto gen_cycle(std::size_t len) -> Digraph
    {
        if (len < 2)
            throw ContractViolation("cycle length must be at least 2");
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < len; ++i)
            arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len)});
        return Digraph::from_arcs(len, arcs);
    }

    auto gen_three_hub(std::size_t k) -> GeneratedGraph
    {
        if (k < 1)
            throw ContractViolation("three-hub family needs k >= 1");
        const auto n = 3 * k + 3;
        std::vector<Arc> arcs;
        auto both = [&](std::size_t a, std::size_t b) {
            arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
            arcs.push_back({static_cast<Vertex>(b), static_cast<Vertex>(a)});
        };
        // hubs 0 = v, 1 = u, 2 = w
        both(0, 1);
        both(0, 2);
        both(1, 2);
        GeneratedGraph out;
        out.labels = {"v", "u", "w"};
        const char * names[] = {"v", "u", "w"};
        for (std::size_t hub = 0; hub < 3; ++hub)
            for (std::size_t i = 1; i <= k; ++i) {
                both(hub, 3 + hub * k + (i - 1));
                out.labels.push_back(std::string(names[hub]) + std::to_string(i));
            }
        out.graph = Digraph::from_arcs(n, arcs);
        return out;
    }

    auto gen_tight_hairy(std::size_t n, bool strongly_connected) -> GeneratedGraph
    {
        if (n < 1)
            throw ContractViolation("tight hairy family needs n >= 1");
        const auto m = 2 * n + 1;
        const auto base = m + m * m;
        const auto total = base + (strongly_connected ? 2 : 0);

        std::vector<Arc> arcs;
        GeneratedGraph out;
        for (std::size_t i = 0; i < m; ++i) {
            out.labels.push_back("a" + std::to_string(i));
            for (std::size_t step = 1; step <= n; ++step)
                arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + step) % m)});
        }
        VertexSet tournament(total), hairs(total);
        for (std::size_t i = 0; i < m; ++i)
            tournament.insert(static_cast<Vertex>(i));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t t = 0; t < m; ++t) {
                auto h = static_cast<Vertex>(m + i * m + t);
                arcs.push_back({static_cast<Vertex>(i), h});
                hairs.insert(h);
                out.labels.push_back("h" + std::to_string(i) + "_" + std::to_string(t));
            }
        if (strongly_connected) {
            auto w1 = static_cast<Vertex>(base), w2 = static_cast<Vertex>(base + 1);
            for (std::size_t h = m; h < base; ++h)
                arcs.push_back({static_cast<Vertex>(h), w1});
            arcs.push_back({w1, w2});
            arcs.push_back({w2, 0});
            out.labels.push_back("w1");
            out.labels.push_back("w2");
        }
        out.graph = Digraph::from_arcs(total, arcs);
        // The extra vertices belong to neither part; only the base digraph
        // is a hairy tournament.
        if (! strongly_connected)
            out.partition = make_hairy_partition(out.graph, tournament, hairs);
        return out;
    }

    auto gen_random_digraph(std::size_t n, double arc_prob, bool source_free, Seed seed) -> Digraph
    {
        if (source_free && n < 2)
            throw ContractViolation("a source-free digraph needs at least two vertices");
        if (! (arc_prob >= 0.0 && arc_prob <= 1.0))
            throw ContractViolation("arc probability must lie in [0, 1]");
        Rng rng(seed);
        std::vector<Arc> arcs;
        std::vector<std::size_t> in_degree(n, 0);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (u != v && rng.bernoulli(arc_prob)) {
                    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
                    ++in_degree[v];
                }
        if (source_free)
            for (std::size_t v = 0; v < n; ++v)
                if (in_degree[v] == 0) {
                    auto u = rng.below(n - 1);
                    if (u >= v)
                        ++u;
                    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
                    ++in_degree[v];
                }
        return Digraph::from_arcs(n, arcs);
    }

    namespace
    {
        auto random_tournament_arcs(std::size_t n, Rng & rng) -> std::vector<Arc>
        {
            std::vector<Arc> arcs;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v) {
                    if (rng.bernoulli(0.5))
                        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
                    else
                        arcs.push_back({static_cast<Vertex>(v), static_cast<Vertex>(u)});
                }
            return arcs;
        }
    }

    auto gen_random_tournament(std::size_t n, Seed seed) -> Digraph
    {
        Rng rng(seed);
        return Digraph::from_arcs(n, random_tournament_arcs(n, rng));
    }

    auto gen_random_hairy(std::size_t m, std::size_t max_hairs, Seed seed) -> GeneratedGraph
    {
        if (m < 3)
            throw ContractViolation("a source-free tournament needs at least three vertices");
        Rng rng(seed);
        std::vector<Arc> arcs;
        for (;;) {
            arcs = random_tournament_arcs(m, rng);
            if (sources(Digraph::from_arcs(m, arcs)).empty())
                break;
        }
        std::vector<std::size_t> hair_count(m);
        std::size_t total = m;
        for (auto & c : hair_count) {
            c = rng.between(0, max_hairs);
            total += c;
        }
        VertexSet tournament(total), hairs(total);
        Vertex next = static_cast<Vertex>(m);
        for (std::size_t a = 0; a < m; ++a) {
            tournament.insert(static_cast<Vertex>(a));
            for (std::size_t t = 0; t < hair_count[a]; ++t) {
                arcs.push_back({static_cast<Vertex>(a), next});
                hairs.insert(next++);
            }
        }
        GeneratedGraph out;
        out.graph = Digraph::from_arcs(total, arcs);
        out.partition = make_hairy_partition(out.graph, tournament, hairs);
        return out;
    }

    auto gen_random_unicyclic(std::size_t n, Seed seed) -> GeneratedGraph
    {
        if (n < 3)
            throw ContractViolation("a unicyclic orientation needs at least three vertices");
        Rng rng(seed);
        std::vector<Vertex> label(n);
        std::iota(label.begin(), label.end(), Vertex{0});
        rng.shuffle(label);

        auto len = rng.between(3, n);
        std::vector<Arc> arcs;
        GeneratedGraph out;
        for (std::size_t i = 0; i < len; ++i) {
            arcs.push_back({label[i], label[(i + 1) % len]});
            out.cycle.push_back(label[i]);
        }
        for (std::size_t i = len; i < n; ++i)
            arcs.push_back({label[rng.below(i)], label[i]});
        out.graph = Digraph::from_arcs(n, arcs);
        return out;
    }

    auto all_digraphs_count(std::size_t n) -> std::uint64_t
    {
        if (n > 5)
            throw ContractViolation("exhaustive digraph enumeration supports n <= 5");
        return std::uint64_t{1} << (n * (n - (n > 0)));
    }

    auto digraph_at(std::size_t n, std::uint64_t index) -> Digraph
    {
        if (index >= all_digraphs_count(n))
            throw ContractViolation("digraph index out of range");
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto digit = index & 3;
                index >>= 2;
                if (digit & 1)
                    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                if (digit & 2)
                    arcs.push_back({static_cast<Vertex>(j), static_cast<Vertex>(i)});
            }
        return Digraph::from_arcs(n, arcs);
    }

    auto all_tournaments_count(std::size_t n) -> std::uint64_t
    {
        if (n > 7)
            throw ContractViolation("exhaustive tournament enumeration supports n <= 7");
        return std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    }

    auto tournament_at(std::size_t n, std::uint64_t index) -> Digraph
    {
        if (index >= all_tournaments_count(n))
            throw ContractViolation("tournament index out of range");
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (index & 1)
                    arcs.push_back({static_cast<Vertex>(j), static_cast<Vertex>(i)});
                else
                    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                index >>= 1;
            }
        return Digraph::from_arcs(n, arcs);
    }

    auto enumerate_all_digraphs(std::size_t n) -> IndexedFamily
    {
        return IndexedFamily(n, all_digraphs_count(n), &digraph_at);
    }

    auto enumerate_all_tournaments(std::size_t n) -> IndexedFamily
    {
        return IndexedFamily(n, all_tournaments_count(n), &tournament_at);
    }
}
