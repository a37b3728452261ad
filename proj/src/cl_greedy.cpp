#include <qk/cl_greedy.hpp>

#include <algorithm>
#include <numeric>

namespace qk
{
    Ordering::Ordering(std::vector<Vertex> perm) :
        _perm(std::move(perm)),
        _pos(_perm.size(), _perm.size())
    {
        for (std::size_t i = 0; i < _perm.size(); ++i) {
            auto v = _perm[i];
            if (v >= _perm.size())
                throw ContractViolation("ordering entry " + std::to_string(v) + " out of range");
            if (_pos[v] != _perm.size())
                throw ContractViolation("ordering repeats vertex " + std::to_string(v));
            _pos[v] = i;
        }
    }

    auto Ordering::natural(std::size_t n) -> Ordering
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        return Ordering(std::move(perm));
    }

    auto Ordering::random(std::size_t n, Seed seed) -> Ordering
    {
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        Rng rng(seed);
        rng.shuffle(perm);
        return Ordering(std::move(perm));
    }

    auto Ordering::reversed() const -> Ordering
    {
        return Ordering(std::vector<Vertex>(_perm.rbegin(), _perm.rend()));
    }

    namespace
    {
        auto check_order(const Digraph & g, const Ordering & ord) -> void
        {
            if (ord.size() != g.order())
                throw ContractViolation("ordering has " + std::to_string(ord.size()) + " entries for a digraph on " +
                                        std::to_string(g.order()) + " vertices");
        }

        // Visits `sequence` in order, picking each vertex that is still
        // unremoved and removing it together with its out-neighbours inside
        // `allowed`.
        auto greedy_phase(const Digraph & g, const std::vector<Vertex> & sequence, const VertexSet & allowed)
            -> std::vector<Vertex>
        {
            std::vector<Vertex> picks;
            auto remaining = allowed;
            for (auto v : sequence) {
                if (! remaining.contains(v))
                    continue;
                picks.push_back(v);
                remaining.erase(v);
                remaining -= g.out_set(v);
            }
            return picks;
        }
    }

    auto cl_run(const Digraph & g, const Ordering & ord) -> ClRun
    {
        check_order(g, ord);
        ClRun run;
        run.phase_one = greedy_phase(g, ord.vertices(), g.vertices());

        // Out-neighbourhoods in phase two are restricted to the induced
        // subgraph on the phase-one picks, which `allowed` enforces.
        auto picked = VertexSet::of(g.order(), run.phase_one);
        std::vector<Vertex> backwards(run.phase_one.rbegin(), run.phase_one.rend());
        run.phase_two = greedy_phase(g, backwards, picked);
        run.result = VertexSet::of(g.order(), run.phase_two);
        return run;
    }

    auto cl_algorithm(const Digraph & g, const Ordering & ord) -> VertexSet
    {
        return cl_run(g, ord).result;
    }

    auto find_unmatched_back_arc(const Digraph & g, const Ordering & ord) -> std::optional<BackArc>
    {
        check_order(g, ord);
        for (std::size_t i = 0; i < ord.size(); ++i)
            for (auto w : g.in(ord.at(i))) {
                auto j = ord.position(w);
                if (j > i && ! g.has_arc(ord.at(i), w))
                    return BackArc{i, j};
            }
        return std::nullopt;
    }

    auto ordering_has_symmetric_back_property(const Digraph & g, const Ordering & ord) -> bool
    {
        return ! find_unmatched_back_arc(g, ord);
    }

    auto modified_cl(const Digraph & g, const Ordering & ord) -> VertexSet
    {
        check_order(g, ord);
        if (auto s = sources(g); ! s.empty())
            throw PreconditionError("modified CL needs a source-free digraph; vertex " + std::to_string(*s.first()) +
                                    " is a source");
        if (auto back = find_unmatched_back_arc(g, ord))
            throw PreconditionError("ordering positions (" + std::to_string(back->earlier) + ", " +
                                    std::to_string(back->later) + "): arc " + std::to_string(ord.at(back->later)) +
                                    "->" + std::to_string(ord.at(back->earlier)) + " has no reverse arc");

        auto remaining = g.vertices();
        VertexSet picks(g.order());
        for (;;) {
            std::optional<Vertex> chosen;
            for (auto v : ord.vertices())
                if (remaining.contains(v) && g.out_set(v).intersects(remaining)) {
                    chosen = v;
                    break;
                }
            if (! chosen)
                break;
            picks.insert(*chosen);
            remaining.erase(*chosen);
            remaining -= g.out_set(*chosen);
        }

        if (auto missing = (remaining - closed_out(g, picks, 2)).first())
            throw VerificationError("modified CL left vertex " + std::to_string(*missing) + " unreached");
        return picks;
    }
}
