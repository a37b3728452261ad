#include <qk/digraph.hpp>

#include <algorithm>

namespace qk
{
    Digraph::Digraph(std::size_t n) :
        _out(n),
        _in(n),
        _out_sets(n, VertexSet(n)),
        _in_sets(n, VertexSet(n))
    {
    }

    auto Digraph::from_arcs(std::size_t n, std::span<const Arc> arcs) -> Digraph
    {
        Digraph g(n);
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw ContractViolation("arc " + std::to_string(u) + "->" + std::to_string(v) + " out of range for " +
                                        std::to_string(n) + " vertices");
            if (u == v)
                throw ContractViolation("loop at vertex " + std::to_string(u));
            if (g._out_sets[u].contains(v))
                throw ContractViolation("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
            g._out[u].push_back(v);
            g._in[v].push_back(u);
            g._out_sets[u].insert(v);
            g._in_sets[v].insert(u);
            ++g._arc_count;
        }
        for (auto & adj : g._out)
            std::sort(adj.begin(), adj.end());
        for (auto & adj : g._in)
            std::sort(adj.begin(), adj.end());
        return g;
    }

    auto Digraph::from_arcs(std::size_t n, std::initializer_list<Arc> arcs) -> Digraph
    {
        return from_arcs(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    auto Digraph::check_vertex(Vertex v) const -> void
    {
        if (v >= order())
            throw ContractViolation("vertex " + std::to_string(v) + " out of range for " + std::to_string(order()) +
                                    " vertices");
    }

    auto Digraph::out(Vertex v) const -> std::span<const Vertex>
    {
        check_vertex(v);
        return _out[v];
    }

    auto Digraph::in(Vertex v) const -> std::span<const Vertex>
    {
        check_vertex(v);
        return _in[v];
    }

    auto Digraph::out_set(Vertex v) const -> const VertexSet &
    {
        check_vertex(v);
        return _out_sets[v];
    }

    auto Digraph::in_set(Vertex v) const -> const VertexSet &
    {
        check_vertex(v);
        return _in_sets[v];
    }

    auto Digraph::has_arc(Vertex tail, Vertex head) const -> bool
    {
        check_vertex(tail);
        check_vertex(head);
        return _out_sets[tail].contains(head);
    }

    auto Digraph::arcs() const -> std::vector<Arc>
    {
        std::vector<Arc> result;
        result.reserve(_arc_count);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : _out[u])
                result.push_back({u, v});
        return result;
    }

    auto Digraph::transpose() const -> Digraph
    {
        auto a = arcs();
        for (auto & arc : a)
            std::swap(arc.tail, arc.head);
        return from_arcs(order(), a);
    }

    auto InducedSubgraph::lift(const VertexSet & s, std::size_t universe) const -> VertexSet
    {
        VertexSet out(universe);
        s.for_each([&](Vertex v) { out.insert(to_old.at(v)); });
        return out;
    }

    auto induced(const Digraph & g, const VertexSet & s) -> InducedSubgraph
    {
        if (s.universe() != g.order())
            throw ContractViolation("vertex set universe does not match digraph order");
        InducedSubgraph result;
        result.to_new.assign(g.order(), std::nullopt);
        s.for_each([&](Vertex v) {
            result.to_new[v] = static_cast<Vertex>(result.to_old.size());
            result.to_old.push_back(v);
        });
        std::vector<Arc> arcs;
        for (auto u : result.to_old)
            for (auto v : g.out(u))
                if (result.to_new[v])
                    arcs.push_back({*result.to_new[u], *result.to_new[v]});
        result.graph = Digraph::from_arcs(result.to_old.size(), arcs);
        return result;
    }

    namespace
    {
        auto check_universe(const Digraph & g, const VertexSet & s) -> void
        {
            if (s.universe() != g.order())
                throw ContractViolation("vertex set over " + std::to_string(s.universe()) +
                                        " vertices used with a digraph on " + std::to_string(g.order()));
        }
    }

    auto out_neighbors(const Digraph & g, const VertexSet & s) -> VertexSet
    {
        check_universe(g, s);
        VertexSet result(g.order());
        s.for_each([&](Vertex v) { result |= g.out_set(v); });
        return result;
    }

    auto in_neighbors(const Digraph & g, const VertexSet & s) -> VertexSet
    {
        check_universe(g, s);
        VertexSet result(g.order());
        s.for_each([&](Vertex v) { result |= g.in_set(v); });
        return result;
    }

    namespace
    {
        template <typename Step>
        auto closure(const Digraph & g, const VertexSet & s, unsigned q, Step step) -> VertexSet
        {
            check_universe(g, s);
            auto reached = s;
            auto frontier = s;
            for (unsigned i = 0; i < q && ! frontier.empty(); ++i) {
                auto next = step(g, frontier) - reached;
                reached |= next;
                frontier = std::move(next);
            }
            return reached;
        }
    }

    auto closed_out(const Digraph & g, const VertexSet & s, unsigned q) -> VertexSet
    {
        return closure(g, s, q, out_neighbors);
    }

    auto closed_in(const Digraph & g, const VertexSet & s, unsigned q) -> VertexSet
    {
        return closure(g, s, q, in_neighbors);
    }

    auto sources(const Digraph & g) -> VertexSet
    {
        VertexSet result(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.in_degree(v) == 0)
                result.insert(v);
        return result;
    }

    auto describe(const CheckReport & r) -> std::string
    {
        if (r.holds)
            return "holds";
        const auto & w = *r.witness;
        switch (w.kind) {
        case WitnessKind::InternalArc:
            return "arc " + std::to_string(w.first) + "->" + std::to_string(w.second) + " inside the set";
        case WitnessKind::Uncovered:
            return "vertex " + std::to_string(w.first) + " not reached";
        case WitnessKind::SmallClosure:
            return "closed out-neighbourhood has only " + std::to_string(w.first) + " vertices";
        }
        return "fails";
    }

    auto is_independent(const Digraph & g, const VertexSet & s) -> CheckReport
    {
        check_universe(g, s);
        std::optional<Witness> found;
        s.for_each([&](Vertex u) {
            if (found)
                return;
            for (auto v : g.out(u))
                if (s.contains(v)) {
                    found = Witness{WitnessKind::InternalArc, u, v};
                    return;
                }
        });
        return found ? CheckReport::fail(*found) : CheckReport::pass();
    }

    namespace
    {
        auto covers(const VertexSet & reached) -> CheckReport
        {
            auto missing = reached.complement().first();
            if (missing)
                return CheckReport::fail({WitnessKind::Uncovered, *missing, 0});
            return CheckReport::pass();
        }
    }

    auto is_kernel(const Digraph & g, const VertexSet & s) -> CheckReport
    {
        return is_q_kernel(g, s, 1);
    }

    auto is_q_kernel(const Digraph & g, const VertexSet & s, unsigned q) -> CheckReport
    {
        if (auto r = is_independent(g, s); ! r)
            return r;
        return covers(closed_out(g, s, q));
    }

    auto is_quasi_kernel(const Digraph & g, const VertexSet & s) -> CheckReport
    {
        return is_q_kernel(g, s, 2);
    }

    auto is_quasi_sink(const Digraph & g, const VertexSet & s) -> CheckReport
    {
        if (auto r = is_independent(g, s); ! r)
            return r;
        return covers(closed_in(g, s, 2));
    }

    auto is_large_qk(const Digraph & g, const VertexSet & s) -> CheckReport
    {
        if (auto r = is_quasi_kernel(g, s); ! r)
            return r;
        auto closed = closed_out(g, s, 1).size();
        if (2 * closed < g.order())
            return CheckReport::fail({WitnessKind::SmallClosure, static_cast<Vertex>(closed), 0});
        return CheckReport::pass();
    }

    auto strongly_connected_components(const Digraph & g) -> std::vector<std::vector<Vertex>>
    {
        // Kosaraju with explicit stacks.
        const auto n = g.order();
        std::vector<Vertex> finish;
        finish.reserve(n);
        std::vector<bool> seen(n, false);
        for (Vertex root = 0; root < n; ++root) {
            if (seen[root])
                continue;
            std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
            seen[root] = true;
            while (! stack.empty()) {
                auto & [v, next] = stack.back();
                auto adj = g.out(v);
                if (next < adj.size()) {
                    auto w = adj[next++];
                    if (! seen[w]) {
                        seen[w] = true;
                        stack.push_back({w, 0});
                    }
                }
                else {
                    finish.push_back(v);
                    stack.pop_back();
                }
            }
        }

        std::vector<std::vector<Vertex>> components;
        std::vector<bool> assigned(n, false);
        for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
            if (assigned[*it])
                continue;
            std::vector<Vertex> component;
            std::vector<Vertex> stack{*it};
            assigned[*it] = true;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                component.push_back(v);
                for (auto w : g.in(v))
                    if (! assigned[w]) {
                        assigned[w] = true;
                        stack.push_back(w);
                    }
            }
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
        std::sort(components.begin(), components.end());
        return components;
    }

    auto has_directed_odd_cycle(const Digraph & g) -> bool
    {
        // A strongly connected digraph has an odd directed cycle iff its
        // underlying graph is not bipartite: every arc lies on a closed walk,
        // and an odd closed walk contains an odd cycle.
        const auto n = g.order();
        std::vector<int> component_of(n, -1);
        auto components = strongly_connected_components(g);
        for (std::size_t c = 0; c < components.size(); ++c)
            for (auto v : components[c])
                component_of[v] = static_cast<int>(c);

        std::vector<int> colour(n, -1);
        for (const auto & component : components) {
            if (component.size() < 2)
                continue;
            auto root = component.front();
            colour[root] = 0;
            std::vector<Vertex> stack{root};
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                auto visit = [&](Vertex w) {
                    if (component_of[w] != component_of[v])
                        return true;
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        stack.push_back(w);
                        return true;
                    }
                    return colour[w] != colour[v];
                };
                for (auto w : g.out(v))
                    if (! visit(w))
                        return true;
                for (auto w : g.in(v))
                    if (! visit(w))
                        return true;
            }
        }
        return false;
    }

    auto is_tournament(const Digraph & g) -> bool
    {
        const auto n = g.order();
        if (g.arc_count() != n * (n - (n > 0 ? 1 : 0)) / 2)
            return false;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (g.has_arc(u, v) == g.has_arc(v, u))
                    return false;
        return true;
    }
}
