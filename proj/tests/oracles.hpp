#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the library beyond reading the arc list of a Digraph.

#include <qk/digraph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace oracle
{
    using Mask = std::uint64_t;

    struct Matrix
    {
        std::size_t n = 0;
        std::vector<std::vector<bool>> arc;

        explicit Matrix(const qk::Digraph & g) : n(g.order()), arc(n, std::vector<bool>(n, false))
        {
            for (auto a : g.arcs())
                arc[a.tail][a.head] = true;
        }
    };

    inline auto to_mask(const qk::VertexSet & s) -> Mask
    {
        Mask m = 0;
        for (auto v : s.to_vector())
            m |= Mask{1} << v;
        return m;
    }

    inline auto full(std::size_t n) -> Mask
    {
        return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    }

    inline auto independent(const Matrix & m, Mask s) -> bool
    {
        for (std::size_t u = 0; u < m.n; ++u)
            for (std::size_t v = 0; v < m.n; ++v)
                if ((s >> u & 1) && (s >> v & 1) && m.arc[u][v])
                    return false;
        return true;
    }

    // vertices reachable from s by paths of length <= q
    inline auto reach(const Matrix & m, Mask s, unsigned q) -> Mask
    {
        Mask seen = s;
        for (unsigned step = 0; step < q; ++step) {
            Mask next = seen;
            for (std::size_t u = 0; u < m.n; ++u)
                if (seen >> u & 1)
                    for (std::size_t v = 0; v < m.n; ++v)
                        if (m.arc[u][v])
                            next |= Mask{1} << v;
            seen = next;
        }
        return seen;
    }

    inline auto is_q_kernel(const Matrix & m, Mask s, unsigned q) -> bool
    {
        return independent(m, s) && reach(m, s, q) == full(m.n);
    }

    inline auto sources(const Matrix & m) -> Mask
    {
        Mask s = 0;
        for (std::size_t v = 0; v < m.n; ++v) {
            bool any = false;
            for (std::size_t u = 0; u < m.n; ++u)
                any = any || m.arc[u][v];
            if (! any)
                s |= Mask{1} << v;
        }
        return s;
    }

    // ascending popcount, then lexicographic on the sorted member list
    inline auto size_lex(Mask a, Mask b) -> bool
    {
        if (std::popcount(a) != std::popcount(b))
            return std::popcount(a) < std::popcount(b);
        while (a && b) {
            auto x = std::countr_zero(a), y = std::countr_zero(b);
            if (x != y)
                return x < y;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    }

    inline auto all_q_kernels(const Matrix & m, unsigned q) -> std::vector<Mask>
    {
        std::vector<Mask> out;
        for (Mask s = 0; s <= full(m.n); ++s)
            if (is_q_kernel(m, s, q))
                out.push_back(s);
        std::sort(out.begin(), out.end(), size_lex);
        return out;
    }

    inline auto all_kernels(const Matrix & m) -> std::vector<Mask>
    {
        return all_q_kernels(m, 1);
    }

    inline auto sub_has_kernel(const Matrix & m, Mask sub) -> bool
    {
        // kernel of G[sub]: independent K within sub, every x in sub\K has an in-arc from K
        for (Mask k = sub;; k = (k - 1) & sub) {
            if (independent(m, k)) {
                bool ok = true;
                for (std::size_t x = 0; x < m.n && ok; ++x) {
                    if (! (sub >> x & 1) || (k >> x & 1))
                        continue;
                    bool hit = false;
                    for (std::size_t u = 0; u < m.n; ++u)
                        hit = hit || ((k >> u & 1) && m.arc[u][x]);
                    ok = hit;
                }
                if (ok)
                    return true;
            }
            if (k == 0)
                break;
        }
        return false;
    }

    inline auto kernel_perfect(const Matrix & m) -> bool
    {
        for (Mask s = 1; s <= full(m.n); ++s)
            if (! sub_has_kernel(m, s))
                return false;
        return true;
    }

    // enumerates simple directed cycles, smallest vertex first
    inline auto has_odd_cycle(const Matrix & m) -> bool
    {
        std::vector<bool> on(m.n, false);
        auto dfs = [&](auto & self, std::size_t start, std::size_t v, std::size_t len) -> bool {
            for (std::size_t w = 0; w < m.n; ++w) {
                if (! m.arc[v][w])
                    continue;
                if (w == start && len % 2 == 1)
                    return true;
                if (w > start && ! on[w]) {
                    on[w] = true;
                    if (self(self, start, w, len + 1))
                        return true;
                    on[w] = false;
                }
            }
            return false;
        };
        for (std::size_t s = 0; s < m.n; ++s) {
            std::fill(on.begin(), on.end(), false);
            on[s] = true;
            if (dfs(dfs, s, s, 1))
                return true;
        }
        return false;
    }

    inline auto smallest_size(const Matrix & m, unsigned q) -> std::size_t
    {
        std::size_t best = m.n + 1;
        for (Mask s = 0; s <= full(m.n); ++s)
            if (static_cast<std::size_t>(std::popcount(s)) < best && is_q_kernel(m, s, q))
                best = static_cast<std::size_t>(std::popcount(s));
        return best;
    }
}
