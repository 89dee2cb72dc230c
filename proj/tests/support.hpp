#pragma once

// Brute-force reference checks used by the tests. They deliberately share no
// code with the library's search routines.

#include "dicolor/digraph.hpp"
#include "dicolor/oracles.hpp"

#include <cstdint>
#include <vector>

namespace dicolor::testing {

inline Digraph c3()
{
    return Digraph(3, {{0, 1}, {1, 2}, {2, 0}});
}

inline std::vector<std::uint32_t> out_masks(const Digraph& d)
{
    std::vector<std::uint32_t> m(d.size(), 0);
    for (auto [u, v] : d.arcs())
        m[u] |= 1u << v;
    return m;
}

// Reachability closure restricted to `mask`; a cycle exists iff some vertex reaches itself.
inline bool brute_acyclic(const std::vector<std::uint32_t>& out, std::uint32_t mask)
{
    const std::size_t n = out.size();
    std::vector<std::uint32_t> reach(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        if (mask >> v & 1)
            reach[v] = out[v] & mask;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t v = 0; v < n; ++v)
            if (reach[v] >> k & 1)
                reach[v] |= reach[k];
    for (std::size_t v = 0; v < n; ++v)
        if (reach[v] >> v & 1)
            return false;
    return true;
}

inline bool brute_acyclic(const Digraph& d)
{
    return brute_acyclic(out_masks(d), (1u << d.size()) - 1);
}

inline bool brute_stable(const Digraph& d, std::uint32_t mask)
{
    for (auto [u, v] : d.arcs())
        if ((mask >> u & 1) && (mask >> v & 1))
            return false;
    return true;
}

inline int brute_alpha(const Digraph& d)
{
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << d.size()); ++m)
        if (brute_stable(d, m))
            best = std::max(best, __builtin_popcount(m));
    return best;
}

inline int brute_beta(const Digraph& d)
{
    const auto out = out_masks(d);
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << d.size()); ++m)
        if (brute_acyclic(out, m))
            best = std::max(best, __builtin_popcount(m));
    return best;
}

// Smallest k such that some map V -> {0..k-1} has acyclic classes.
inline int brute_chi(const Digraph& d)
{
    const std::size_t n = d.size();
    if (n == 0)
        return 0;
    const auto out = out_masks(d);
    for (int k = 1;; ++k) {
        std::vector<int> colour(n, 0);
        for (;;) {
            bool ok = true;
            for (int c = 0; c < k && ok; ++c) {
                std::uint32_t mask = 0;
                for (std::size_t v = 0; v < n; ++v)
                    if (colour[v] == c)
                        mask |= 1u << v;
                ok = brute_acyclic(out, mask);
            }
            if (ok)
                return k;
            std::size_t i = 0;
            while (i < n && ++colour[i] == k)
                colour[i++] = 0;
            if (i == n)
                break;
        }
    }
}

inline bool brute_has_triangle(const Digraph& d)
{
    const std::size_t n = d.size();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            for (Vertex c = 0; c < n; ++c)
                if (a != b && b != c && a != c && d.has_arc(a, b) && d.has_arc(b, c) && d.has_arc(c, a))
                    return true;
    return false;
}

inline bool classes_acyclic(const Digraph& d, const Coloring& c)
{
    const auto out = out_masks(d);
    for (int k = 0; k < c.num_colors; ++k) {
        std::uint32_t mask = 0;
        for (Vertex v = 0; v < d.size(); ++v)
            if (c[v] == k)
                mask |= 1u << v;
        if (!brute_acyclic(out, mask))
            return false;
    }
    return true;
}

inline VertexSet from_mask(std::size_t n, std::uint64_t mask)
{
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1)
            s.insert(v);
    return s;
}

} // namespace dicolor::testing
