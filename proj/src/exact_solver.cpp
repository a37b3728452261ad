#include <qk/exact_solver.hpp>

#include <algorithm>
#include <bit>

namespace qk
{
    namespace
    {
        using Mask = std::uint64_t;

        // Bitmask view of a digraph; n <= 64.
        struct MaskGraph
        {
            std::size_t n;
            Mask all;
            std::vector<Mask> out;
            std::vector<Mask> touching; // out | in

            explicit MaskGraph(const Digraph & g) :
                n(g.order()),
                all(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1),
                out(n, 0),
                touching(n, 0)
            {
                for (auto [u, v] : g.arcs()) {
                    out[u] |= Mask{1} << v;
                    touching[u] |= Mask{1} << v;
                    touching[v] |= Mask{1} << u;
                }
            }

            auto step(Mask s, Mask within) const -> Mask
            {
                Mask result = 0;
                while (s) {
                    result |= out[static_cast<std::size_t>(std::countr_zero(s))];
                    s &= s - 1;
                }
                return result & within;
            }

            auto reach(Mask s, unsigned q, Mask within) const -> Mask
            {
                Mask reached = s, frontier = s;
                for (unsigned i = 0; i < q && frontier; ++i) {
                    frontier = step(frontier, within) & ~reached;
                    reached |= frontier;
                }
                return reached;
            }
        };

        auto to_set(Mask m, std::size_t n) -> VertexSet
        {
            VertexSet s(n);
            while (m) {
                s.insert(static_cast<Vertex>(std::countr_zero(m)));
                m &= m - 1;
            }
            return s;
        }

        class Budget
        {
        public:
            explicit Budget(const SolverLimits & limits) : _cap(limits.max_subsets) {}

            auto charge() -> void
            {
                if (_cap && ++_used > *_cap)
                    throw ResourceLimitError("subset budget of " + std::to_string(*_cap) + " exhausted");
            }

        private:
            std::optional<std::uint64_t> _cap;
            std::uint64_t _used = 0;
        };

        auto check_size(const Digraph & g, const SolverLimits & limits) -> void
        {
            if (g.order() > limits.max_n || g.order() > 64)
                throw ResourceLimitError("digraph has " + std::to_string(g.order()) +
                                         " vertices, exact solver cap is " + std::to_string(std::min<std::size_t>(limits.max_n, 64)));
        }

        // Depth-first walk over the independent subsets of `within` in
        // lexicographic preorder. `visit` returns false to stop the walk.
        // Sets of size `depth_cap` are not extended.
        template <typename Visit>
        auto walk_independent(const MaskGraph & mg, Mask within, std::size_t depth_cap, Budget & budget, Visit && visit)
            -> bool
        {
            struct Frame
            {
                Mask set;
                Mask blocked;
                std::size_t next;
                std::size_t depth;
            };
            std::vector<Frame> stack{{0, 0, 0, 0}};
            budget.charge();
            if (! visit(Mask{0}, std::size_t{0}))
                return false;
            while (! stack.empty()) {
                auto & top = stack.back();
                if (top.depth >= depth_cap) {
                    stack.pop_back();
                    continue;
                }
                std::size_t v = top.next;
                while (v < mg.n && (! ((within >> v) & 1) || ((top.blocked >> v) & 1)))
                    ++v;
                if (v >= mg.n) {
                    stack.pop_back();
                    continue;
                }
                top.next = v + 1;
                Frame child{top.set | (Mask{1} << v), top.blocked | mg.touching[v] | (Mask{1} << v), v + 1, top.depth + 1};
                budget.charge();
                if (! visit(child.set, child.depth))
                    return false;
                stack.push_back(child);
            }
            return true;
        }
    }

    auto enumerate_q_kernels(const Digraph & g, unsigned q, const SolverLimits & limits) -> std::vector<VertexSet>
    {
        check_size(g, limits);
        MaskGraph mg(g);
        Budget budget(limits);
        std::vector<Mask> found;
        walk_independent(mg, mg.all, mg.n, budget, [&](Mask s, std::size_t) {
            if (mg.reach(s, q, mg.all) == mg.all)
                found.push_back(s);
            return true;
        });
        // Preorder is lexicographic; a stable sort by size keeps it within sizes.
        std::stable_sort(found.begin(), found.end(),
                         [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
        std::vector<VertexSet> result;
        result.reserve(found.size());
        for (auto m : found)
            result.push_back(to_set(m, mg.n));
        return result;
    }

    auto smallest_q_kernel(const Digraph & g, unsigned q, const SolverLimits & limits) -> VertexSet
    {
        check_size(g, limits);
        MaskGraph mg(g);
        Budget budget(limits);
        for (std::size_t size = 0; size <= mg.n; ++size) {
            std::optional<Mask> hit;
            walk_independent(mg, mg.all, size, budget, [&](Mask s, std::size_t depth) {
                if (depth == size && mg.reach(s, q, mg.all) == mg.all) {
                    hit = s;
                    return false;
                }
                return true;
            });
            if (hit)
                return to_set(*hit, mg.n);
        }
        // only possible for q <= 1: quasi-kernels always exist
        throw PreconditionError("digraph has no " + std::to_string(q) + "-kernel");
    }

    auto has_two_disjoint_qks(const Digraph & g, const SolverLimits & limits)
        -> std::optional<std::pair<VertexSet, VertexSet>>
    {
        auto all = enumerate_q_kernels(g, 2, limits);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (! all[i].intersects(all[j]))
                    return std::pair{all[i], all[j]};
        return std::nullopt;
    }

    auto enumerate_kernels(const Digraph & g, const SolverLimits & limits) -> std::vector<VertexSet>
    {
        return enumerate_q_kernels(g, 1, limits);
    }

    auto has_kernel(const Digraph & g, const SolverLimits & limits) -> bool
    {
        check_size(g, limits);
        MaskGraph mg(g);
        Budget budget(limits);
        bool found = false;
        walk_independent(mg, mg.all, mg.n, budget, [&](Mask s, std::size_t) {
            found = mg.reach(s, 1, mg.all) == mg.all;
            return ! found;
        });
        return found;
    }

    auto is_kernel_perfect(const Digraph & g, const SolverLimits & limits) -> KernelPerfection
    {
        check_size(g, limits);
        MaskGraph mg(g);
        Budget budget(limits);

        auto induced_has_kernel = [&](Mask within) {
            bool found = false;
            walk_independent(mg, within, mg.n, budget, [&](Mask s, std::size_t) {
                found = mg.reach(s, 1, within) == within;
                return ! found;
            });
            return found;
        };

        // Subsets of each size in lexicographic order of their sorted members.
        for (std::size_t size = 0; size <= mg.n; ++size) {
            std::vector<std::size_t> pick(size);
            for (std::size_t i = 0; i < size; ++i)
                pick[i] = i;
            for (;;) {
                Mask w = 0;
                for (auto v : pick)
                    w |= Mask{1} << v;
                if (! induced_has_kernel(w))
                    return {false, to_set(w, mg.n)};

                std::size_t i = size;
                while (i > 0 && pick[i - 1] == mg.n - size + i - 1)
                    --i;
                if (i == 0)
                    break;
                ++pick[i - 1];
                for (std::size_t j = i; j < size; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
        return {true, std::nullopt};
    }

    auto kls_bound(const Digraph & g) -> Rational
    {
        auto s = sources(g);
        auto gamma = out_neighbors(g, s);
        return Rational(static_cast<std::int64_t>(g.order() + s.size()) - static_cast<std::int64_t>(gamma.size()), 2);
    }
}
