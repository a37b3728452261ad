#include <qk/constructive.hpp>

#include <algorithm>
#include <deque>

namespace qk
{
    auto ConstructionTrace::set(const std::string & name) const -> const VertexSet &
    {
        for (const auto & [key, s] : sets)
            if (key == name)
                return s;
        throw ContractViolation("trace has no set named '" + name + "'");
    }

    auto ConstructionTrace::has_set(const std::string & name) const -> bool
    {
        return std::any_of(sets.begin(), sets.end(), [&](const auto & kv) { return kv.first == name; });
    }

    auto ConstructionTrace::value(const std::string & name) const -> std::int64_t
    {
        for (const auto & [key, v] : values)
            if (key == name)
                return v;
        throw ContractViolation("trace has no value named '" + name + "'");
    }

    namespace
    {
        auto count(const VertexSet & s) -> std::int64_t
        {
            return static_cast<std::int64_t>(s.size());
        }

        auto require_source_free(const Digraph & g) -> void
        {
            if (auto s = sources(g).first())
                throw PreconditionError("digraph has a source: vertex " + std::to_string(*s));
        }

        auto require_qk(const Digraph & g, const VertexSet & q, const std::string & what) -> void
        {
            if (auto r = is_quasi_kernel(g, q); ! r)
                throw PreconditionError(what + " " + to_string(q) + " is not a quasi-kernel: " + describe(r));
        }

        // Final gate shared by every construction.
        auto seal(const Digraph & g, ConstructionTrace & trace) -> void
        {
            if (auto r = is_quasi_kernel(g, trace.result); ! r)
                throw VerificationError(trace.method + ": result " + to_string(trace.result) +
                                        " is not a quasi-kernel: " + describe(r));
            if (! trace.bound.admits(count(trace.result)))
                throw VerificationError(trace.method + ": result size " + std::to_string(trace.result.size()) +
                                        " exceeds bound " + trace.bound.to_string());
        }

        auto half(const Digraph & g) -> Rational
        {
            return Rational(static_cast<std::int64_t>(g.order()), 2);
        }

        // Inclusion-minimal subset of `pool` whose out-neighbourhood still
        // contains `target`; members are dropped greedily in ascending order.
        auto minimal_cover(const Digraph & g, const VertexSet & pool, const VertexSet & target) -> VertexSet
        {
            auto chosen = pool;
            pool.for_each([&](Vertex v) {
                auto without = chosen;
                without.erase(v);
                if (target.is_subset_of(out_neighbors(g, without)))
                    chosen = std::move(without);
            });
            return chosen;
        }
    }

    auto is_good_qk(const Digraph & g, const VertexSet & q) -> bool
    {
        return q.is_subset_of(out_neighbors(g, out_neighbors(g, q)));
    }

    auto shrink_good_qk(const Digraph & g, const VertexSet & q) -> ConstructionTrace
    {
        require_source_free(g);
        require_qk(g, q, "Q");
        if (! is_good_qk(g, q)) {
            auto bad = (q - out_neighbors(g, out_neighbors(g, q))).first();
            throw PreconditionError("quasi-kernel " + to_string(q) + " is not good: vertex " + std::to_string(*bad) +
                                    " has no in-neighbour in out(Q)");
        }

        const auto gamma = out_neighbors(g, q);
        VertexSet chosen(g.order()), covered(g.order());
        q.for_each([&](Vertex v) {
            if (! g.out_set(v).is_subset_of(covered)) {
                chosen.insert(v);
                covered |= g.out_set(v);
            }
        });

        if (covered != gamma)
            throw VerificationError("shrink_good_qk: out-neighbourhood changed");

        ConstructionTrace trace;
        trace.method = "good";
        trace.result = chosen;
        trace.sets = {{"Q", q}, {"out(Q)", gamma}};
        trace.values = {{"|Q|", count(q)}, {"|out(Q)|", count(gamma)}};
        trace.bound = half(g);
        if (chosen.size() > std::min(q.size(), gamma.size()))
            throw VerificationError("shrink_good_qk: result larger than min(|Q|, |out(Q)|)");
        seal(g, trace);
        return trace;
    }

    auto small_qk_from_kernel_complement(const Digraph & g, const VertexSet & q, const VertexSet & k)
        -> ConstructionTrace
    {
        require_source_free(g);
        require_qk(g, q, "Q");

        const auto & a = q;
        const auto b = out_neighbors(g, a) - a;
        const auto c = closed_out(g, a, 1).complement();

        if (! k.is_subset_of(c))
            throw PreconditionError("K " + to_string(k) + " is not inside V minus the closed out-neighbourhood of Q");
        {
            auto sub = induced(g, c);
            VertexSet local(sub.graph.order());
            k.for_each([&](Vertex v) { local.insert(*sub.to_new[v]); });
            if (auto r = is_kernel(sub.graph, local); ! r)
                throw PreconditionError("K " + to_string(k) + " is not a kernel of the subgraph induced on " +
                                        to_string(c));
        }

        const auto d = a & out_neighbors(g, k);
        const auto j = out_neighbors(g, d) & b;
        const auto f = (out_neighbors(g, j) & a) - d;
        const auto h = out_neighbors(g, f) - j;
        const auto b_prime = b - (j | h);
        const auto a_prime = minimal_cover(g, a - (d | f), b_prime);
        const auto f2 = minimal_cover(g, f, h);
        const auto f1 = f - f2;
        const auto a_second = a - (a_prime | f | d);
        const auto q1 = k | f | a_prime;
        const auto q2 = a - f1;

        if (! b_prime.is_subset_of(out_neighbors(g, a_prime)) || ! h.is_subset_of(out_neighbors(g, f2)))
            throw VerificationError("complement construction: cover sets do not cover");

        const bool q1_ok = is_quasi_kernel(g, q1).holds;
        const bool q2_ok = is_quasi_kernel(g, q2).holds;

        // If both candidates exceeded n/2 these two would hold together, and
        // the private-neighbour bounds make that impossible.
        const bool large_q1 = 2 * (count(k) + count(a_prime) + count(f)) > count(a) + count(b) + count(c);
        const bool large_q2 = count(a) > 2 * count(f1) + count(b) + count(c);

        ConstructionTrace trace;
        trace.method = "complement";
        trace.sets = {{"A", a},     {"B", b},   {"C", c},   {"K", k},   {"D", d},   {"J", j},
                      {"F", f},     {"H", h},   {"B'", b_prime}, {"A'", a_prime}, {"F2", f2}, {"F1", f1},
                      {"A''", a_second}, {"Q1", q1}, {"Q2", q2}};
        trace.values = {{"q1_verified", q1_ok},           {"q2_verified", q2_ok},
                        {"q1_inequality", large_q1},      {"q2_inequality", large_q2},
                        {"|A'|<=|B'|", a_prime.size() <= b_prime.size()},
                        {"|F2|<=|H|", f2.size() <= h.size()}};
        trace.bound = half(g);

        if (large_q1 && large_q2)
            throw VerificationError("complement construction: both counting inequalities hold");
        if (! q1_ok && ! q2_ok)
            throw VerificationError("complement construction: neither candidate is a quasi-kernel, Q1 = " +
                                    to_string(q1) + ", Q2 = " + to_string(q2));

        if (q1_ok && (! q2_ok || ! size_lex_less(q2, q1)))
            trace.result = q1;
        else
            trace.result = q2;
        seal(g, trace);
        return trace;
    }

    auto make_hairy_partition(const Digraph & g, const VertexSet & tournament, const VertexSet & hairs) -> HairyPartition
    {
        HairyPartition p{tournament, hairs, std::vector<std::optional<Vertex>>(g.order())};
        hairs.for_each([&](Vertex h) {
            for (auto u : g.in(h))
                if (tournament.contains(u)) {
                    p.owner[h] = u;
                    break;
                }
        });
        return p;
    }

    auto infer_hairy_partition(const Digraph & g) -> HairyPartition
    {
        VertexSet hairs(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.out_degree(v) == 0 && g.in_degree(v) == 1)
                hairs.insert(v);
        return make_hairy_partition(g, hairs.complement(), hairs);
    }

    auto validate_hairy_partition(const Digraph & g, const HairyPartition & p, bool relaxed) -> void
    {
        if (p.tournament.universe() != g.order() || p.hairs.universe() != g.order() || p.owner.size() != g.order())
            throw PreconditionError("hairy partition sized for a different digraph");
        if (p.tournament.intersects(p.hairs) || (p.tournament | p.hairs) != g.vertices())
            throw PreconditionError("A and I do not partition the vertex set");

        auto part = induced(g, p.tournament);
        if (! is_tournament(part.graph))
            throw PreconditionError("A = " + to_string(p.tournament) + " does not induce a tournament");

        std::optional<std::string> defect;
        p.hairs.for_each([&](Vertex h) {
            if (defect)
                return;
            auto tag = "hair " + std::to_string(h);
            if (g.out_degree(h) != 0)
                defect = tag + " has an out-arc";
            else if (g.in_degree(h) == 0)
                defect = tag + " has no in-arc";
            else if (! relaxed && g.in_degree(h) != 1)
                defect = tag + " has " + std::to_string(g.in_degree(h)) + " in-arcs";
            else if (! g.in_set(h).is_subset_of(p.tournament))
                defect = tag + " has an in-neighbour outside A";
            else if (! p.owner[h] || ! g.has_arc(*p.owner[h], h))
                defect = tag + " has no owner in A";
        });
        if (defect)
            throw PreconditionError(*defect);
    }

    auto find_king(const Digraph & g) -> Vertex
    {
        if (! is_tournament(g))
            throw PreconditionError("find_king needs a tournament");
        if (g.order() == 0)
            throw PreconditionError("find_king needs a nonempty tournament");
        Vertex best = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.out_degree(v) > g.out_degree(best))
                best = v;
        return best;
    }

    auto hairy_small_qk(const Digraph & g, const HairyPartition & p, bool relaxed) -> ConstructionTrace
    {
        validate_hairy_partition(g, p, relaxed);
        require_source_free(g);

        const auto n = g.order();
        const auto members = p.tournament.to_vector();

        // Blocks: each tournament vertex followed by its hairs, ascending.
        std::vector<std::vector<Vertex>> block_of(n);
        for (auto v : members)
            block_of[v].push_back(v);
        p.hairs.for_each([&](Vertex h) { block_of[*p.owner[h]].push_back(h); });

        // Blow-up tournament: arcs between blocks follow G[A], each block is
        // transitive with its tournament vertex as the source.
        std::vector<Arc> arcs;
        for (auto u : members) {
            const auto & bu = block_of[u];
            for (std::size_t x = 0; x < bu.size(); ++x)
                for (std::size_t y = x + 1; y < bu.size(); ++y)
                    arcs.push_back({bu[x], bu[y]});
            for (auto v : members)
                if (u != v && g.has_arc(u, v))
                    for (auto x : bu)
                        for (auto y : block_of[v])
                            arcs.push_back({x, y});
        }
        const auto blown_up = Digraph::from_arcs(n, arcs);
        const auto king = find_king(blown_up);
        if (! p.tournament.contains(king))
            throw VerificationError("hairy construction: maximum out-degree vertex " + std::to_string(king) +
                                    " of the blow-up is a hair");
        const auto king_degree = blown_up.out_degree(king);
        if (2 * king_degree + 1 < n)
            throw VerificationError("hairy construction: blow-up king out-degree below (n-1)/2");

        VertexSet beats_king(n); // tournament vertices with an arc into the king
        for (auto v : members)
            if (v != king && ! g.has_arc(king, v))
                beats_king.insert(v);

        VertexSet collected(n);
        p.hairs.for_each([&](Vertex h) {
            if (beats_king.contains(*p.owner[h]))
                collected.insert(h);
        });
        // Only bites in relaxed mode, where a hair may also hang off a vertex
        // the king does reach.
        collected -= closed_out(g, VertexSet::of(n, {king}), 2);

        ConstructionTrace trace;
        trace.method = "hairy";
        trace.result = collected;
        trace.result.insert(king);
        trace.sets = {{"A", p.tournament},
                      {"I", p.hairs},
                      {"king", VertexSet::of(n, {king})},
                      {"in(king) in A", beats_king},
                      {"collected hairs", collected}};
        trace.values = {{"king", king}, {"king out-degree in blow-up", static_cast<std::int64_t>(king_degree)}};
        trace.bound = half(g);
        seal(g, trace);
        return trace;
    }

    auto unicyclic_structure(const Digraph & g) -> UnicyclicStructure
    {
        const auto n = g.order();
        if (n < 2)
            throw PreconditionError("unicyclic digraph needs at least two vertices");
        if (auto s = sources(g).first())
            throw PreconditionError("vertex " + std::to_string(*s) + " is a source");

        // Weak connectivity.
        {
            std::vector<bool> seen(n, false);
            std::vector<Vertex> stack{0};
            seen[0] = true;
            std::size_t reached = 0;
            while (! stack.empty()) {
                auto v = stack.back();
                stack.pop_back();
                ++reached;
                for (auto list : {g.out(v), g.in(v)})
                    for (auto w : list)
                        if (! seen[w]) {
                            seen[w] = true;
                            stack.push_back(w);
                        }
            }
            if (reached != n)
                throw PreconditionError("underlying graph is disconnected");
        }

        // Source-free with n arcs means every in-degree is exactly one.
        if (g.arc_count() != n)
            throw PreconditionError("more than one cycle: " + std::to_string(g.arc_count()) + " arcs on " +
                                    std::to_string(n) + " vertices");

        auto pred = [&](Vertex v) { return g.in(v).front(); };

        // Walking predecessors from any vertex ends on the unique cycle.
        std::vector<int> state(n, 0);
        Vertex v = 0;
        while (state[v] == 0) {
            state[v] = 1;
            v = pred(v);
        }
        std::vector<Vertex> cycle_members{v};
        for (auto w = pred(v); w != v; w = pred(w))
            cycle_members.push_back(w);
        const auto start = *std::min_element(cycle_members.begin(), cycle_members.end());

        UnicyclicStructure st;
        st.parent.assign(n, std::nullopt);
        std::vector<bool> on_cycle(n, false);
        for (auto w : cycle_members)
            on_cycle[w] = true;

        st.cycle.push_back(start);
        while (st.cycle.size() < cycle_members.size()) {
            auto cur = st.cycle.back();
            auto next = std::find_if(g.out(cur).begin(), g.out(cur).end(), [&](Vertex w) { return on_cycle[w] && pred(w) == cur; });
            st.cycle.push_back(*next);
        }

        std::deque<Vertex> queue(st.cycle.begin(), st.cycle.end());
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.out(u))
                if (! on_cycle[w] && ! st.parent[w]) {
                    st.parent[w] = u;
                    st.tree_order.push_back(w);
                    queue.push_back(w);
                }
        }
        return st;
    }

    namespace
    {
        struct Colouring
        {
            std::vector<std::pair<std::string, VertexSet>> candidates;
            std::int64_t slack = 0;
        };

        // candidates for the labelling whose v1 is cycle[start]
        auto colour_classes(const UnicyclicStructure & st, std::size_t n, std::size_t start) -> Colouring
        {
            const auto len = st.cycle.size();
            auto v = [&](std::size_t i) { return st.cycle[(start + i) % len]; }; // 0-based v(i+1)

            // Colours live in {1,2,3}. The cycle is coloured by position; when
            // len = 1 (mod 3) the last cycle vertex is recoloured 2 so the
            // wrap-around arc does not join two vertices of colour 1.
            std::vector<int> colour(n, 0);
            for (std::size_t i = 0; i < len; ++i)
                colour[v(i)] = static_cast<int>(i % 3) + 1;
            if (len % 3 == 1)
                colour[v(len - 1)] = 2;
            for (auto w : st.tree_order)
                colour[w] = colour[*st.parent[w]] % 3 + 1;

            std::vector<VertexSet> cls(4, VertexSet(n));
            for (Vertex w = 0; w < n; ++w)
                cls[static_cast<std::size_t>(colour[w])].insert(w);

            Colouring c;
            if (len % 3 == 0) {
                c.candidates = {{"class 1", cls[1]}, {"class 2", cls[2]}, {"class 3", cls[3]}};
            }
            else if (len % 3 == 2) {
                auto c3 = cls[3];
                c3.insert(v(0));
                c.candidates = {{"class 1", cls[1]}, {"class 2", cls[2]}, {"class 3 + v1", c3}};
                c.slack = 1;
            }
            else {
                auto c1 = cls[1];
                c1.insert(v(len - 2));
                auto c3 = cls[3];
                c3.insert(v(0));
                c.candidates = {{"class 2", cls[2]}, {"class 1 + v(l-1)", c1}, {"class 3 + v1", c3}};
                c.slack = 2;
            }
            return c;
        }
    }

    auto unicyclic_small_qk(const Digraph & g) -> ConstructionTrace
    {
        const auto st = unicyclic_structure(g);
        const auto n = g.order();
        const auto len = st.cycle.size();

        // The labelling starts at cycle.front(). If no candidate of that
        // labelling is a quasi-kernel within the bound (class 1 + v(l-1) is
        // not independent once v(l-1) has out-tree children), the other
        // rotations of the cycle are tried in order.
        struct Pick
        {
            std::size_t start;
            Colouring colouring;
            std::vector<bool> ok;
            std::optional<std::size_t> best;
        };
        auto pick = [&](std::size_t start) {
            Pick p{start, colour_classes(st, n, start), {}, std::nullopt};
            for (std::size_t i = 0; i < p.colouring.candidates.size(); ++i) {
                const auto & s = p.colouring.candidates[i].second;
                p.ok.push_back(is_quasi_kernel(g, s).holds);
                if (p.ok.back() && (! p.best || size_lex_less(s, p.colouring.candidates[*p.best].second)))
                    p.best = i;
            }
            return p;
        };
        auto within = [&](const Pick & p) {
            return p.best && static_cast<std::int64_t>(3 * p.colouring.candidates[*p.best].second.size()) <=
                                 static_cast<std::int64_t>(n) + p.colouring.slack;
        };

        auto chosen = pick(0);
        std::size_t tried = 1;
        for (std::size_t r = 1; r < len && ! within(chosen); ++r, ++tried)
            if (auto p = pick(r); within(p))
                chosen = std::move(p);

        ConstructionTrace trace;
        trace.method = "unicyclic";
        trace.sets.emplace_back("cycle", VertexSet::of(n, st.cycle));
        trace.values.emplace_back("cycle length", static_cast<std::int64_t>(len));
        trace.values.emplace_back("v1", static_cast<std::int64_t>(st.cycle[chosen.start]));
        trace.values.emplace_back("rotations tried", static_cast<std::int64_t>(tried));
        for (std::size_t i = 0; i < chosen.colouring.candidates.size(); ++i) {
            const auto & [name, s] = chosen.colouring.candidates[i];
            trace.sets.emplace_back(name, s);
            trace.values.emplace_back(name + " verified", chosen.ok[i]);
        }
        trace.bound = Rational(static_cast<std::int64_t>(n) + chosen.colouring.slack, 3);
        if (! chosen.best)
            throw VerificationError("unicyclic construction: no colour-class candidate is a quasi-kernel");
        trace.result = chosen.colouring.candidates[*chosen.best].second;
        seal(g, trace);
        return trace;
    }

    auto find_good_qk(const Digraph & g, const SolverLimits & limits) -> std::optional<VertexSet>
    {
        for (auto & q : enumerate_q_kernels(g, 2, limits))
            if (is_good_qk(g, q))
                return q;
        return std::nullopt;
    }

    auto find_qk_with_complement_kernel(const Digraph & g, const SolverLimits & limits)
        -> std::optional<std::pair<VertexSet, VertexSet>>
    {
        for (auto & q : enumerate_q_kernels(g, 2, limits)) {
            auto c = closed_out(g, q, 1).complement();
            auto sub = induced(g, c);
            auto kernels = enumerate_kernels(sub.graph, limits);
            if (! kernels.empty())
                return std::pair{q, sub.lift(kernels.front(), g.order())};
        }
        return std::nullopt;
    }
}
