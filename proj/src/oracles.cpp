#include "dicolor/oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

namespace dicolor {

Coloring Coloring::uniform(std::size_t n, int color)
{
    Coloring c;
    c.colors.assign(n, color);
    c.num_colors = n == 0 ? 0 : color + 1;
    return c;
}

std::vector<VertexSet> Coloring::classes() const
{
    std::vector<VertexSet> out(static_cast<std::size_t>(num_colors), VertexSet(colors.size()));
    for (Vertex v = 0; v < colors.size(); ++v)
        if (colors[v] >= 0 && colors[v] < num_colors)
            out[static_cast<std::size_t>(colors[v])].insert(v);
    return out;
}

void Coloring::normalize()
{
    std::map<int, int> remap;
    for (int& c : colors) {
        auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
        c = it->second;
    }
    num_colors = static_cast<int>(remap.size());
}

ColoringCheck verify_coloring(const Digraph& d, const Coloring& c)
{
    if (c.size() != d.size())
        throw std::invalid_argument("colouring covers " + std::to_string(c.size()) +
                                    " vertices, digraph has " + std::to_string(d.size()));
    for (Vertex v = 0; v < c.size(); ++v)
        if (c[v] < 0 || c[v] >= c.num_colors)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is uncoloured");

    const auto classes = c.classes();
    for (std::size_t k = 0; k < classes.size(); ++k) {
        if (is_acyclic_on(d, classes[k]))
            continue;
        InducedSubgraph sub = induced(d, classes[k]);
        AcyclicityResult r = is_acyclic(sub.graph);
        ColoringCheck check;
        check.valid = false;
        check.color = static_cast<int>(k);
        for (Vertex v : r.cycle)
            check.cycle.push_back(sub.to_parent[v]);
        return check;
    }
    return {};
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

struct MaskGraph {
    std::size_t n = 0;
    std::array<Mask, 64> out{};
    std::array<Mask, 64> in{};
    std::array<Mask, 64> adj{};
};

MaskGraph to_masks(const Digraph& d)
{
    if (d.size() > max_oracle_order)
        throw std::length_error("exact oracles support at most " + std::to_string(max_oracle_order) +
                                " vertices, got " + std::to_string(d.size()));
    MaskGraph g;
    g.n = d.size();
    for (auto [u, v] : d.arcs()) {
        g.out[u] |= bit(v);
        g.in[v] |= bit(u);
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
    }
    return g;
}

struct BudgetExhausted {};

// An acyclic vertex class with its reachability closure, so that a candidate
// vertex can be tested for closing a cycle in O(|class|) word operations.
struct AcyclicClass {
    Mask members = 0;
    std::array<Mask, 64> reach{}; // reach[x]: members reachable from x by a non-empty path

    Mask reach_from(const MaskGraph& g, Vertex v) const
    {
        Mask outs = g.out[v] & members;
        Mask r = outs;
        for (Mask m = outs; m; m &= m - 1)
            r |= reach[std::countr_zero(m)];
        return r;
    }

    bool accepts(const MaskGraph& g, Vertex v) const { return (reach_from(g, v) & g.in[v]) == 0; }

    void add(const MaskGraph& g, Vertex v)
    {
        const Mask from_v = reach_from(g, v);
        const Mask preds = g.in[v] & members;
        for (Mask m = members; m; m &= m - 1) {
            const Vertex y = static_cast<Vertex>(std::countr_zero(m));
            if ((preds & bit(y)) || (reach[y] & preds))
                reach[y] |= bit(v) | from_v;
        }
        reach[v] = from_v;
        members |= bit(v);
    }
};

class ChiSearch {
public:
    ChiSearch(const MaskGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    // Tries to colour with at most k colours.
    bool run(int k)
    {
        k_ = k;
        classes_.assign(static_cast<std::size_t>(k), AcyclicClass{});
        assignment_.assign(g_.n, -1);
        return assign(0, 0);
    }

    std::uint64_t explored() const { return explored_; }
    const std::vector<int>& assignment() const { return assignment_; }

private:
    bool assign(Vertex v, int used)
    {
        if (++explored_ > budget_)
            throw BudgetExhausted{};
        if (v == g_.n)
            return true;
        // Colours are introduced in increasing order; vertex 0 always gets colour 0.
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            AcyclicClass& cls = classes_[static_cast<std::size_t>(c)];
            if (!cls.accepts(g_, v))
                continue;
            const AcyclicClass saved = cls;
            cls.add(g_, v);
            assignment_[v] = c;
            if (assign(v + 1, std::max(used, c + 1)))
                return true;
            cls = saved;
            assignment_[v] = -1;
        }
        return false;
    }

    const MaskGraph& g_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    int k_ = 0;
    std::vector<AcyclicClass> classes_;
    std::vector<int> assignment_;
};

} // namespace

OracleResult dichromatic_number(const Digraph& d, std::uint64_t budget)
{
    const MaskGraph g = to_masks(d);
    OracleResult result;
    if (g.n == 0) {
        result.witness = Coloring{};
        return result;
    }
    ChiSearch search(g, budget);
    try {
        for (int k = 1;; ++k) {
            if (search.run(k)) {
                Coloring c;
                c.colors = search.assignment();
                c.num_colors = k;
                result.value = k;
                result.witness = std::move(c);
                break;
            }
        }
    } catch (const BudgetExhausted&) {
        result.status = OracleStatus::undecided;
    }
    result.explored = search.explored();
    return result;
}

namespace {

class StableSearch {
public:
    StableSearch(const MaskGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    void run()
    {
        const Mask all = g_.n == 64 ? ~Mask{0} : bit(g_.n) - 1;
        expand(0, all);
    }

    Mask best() const { return best_; }
    std::uint64_t explored() const { return explored_; }

private:
    void expand(Mask current, Mask candidates)
    {
        if (++explored_ > budget_)
            throw BudgetExhausted{};
        if (std::popcount(current) + std::popcount(candidates) <= std::popcount(best_))
            return;
        if (candidates == 0) {
            best_ = current;
            return;
        }
        const Vertex v = static_cast<Vertex>(std::countr_zero(candidates));
        expand(current | bit(v), candidates & ~g_.adj[v] & ~bit(v));
        expand(current, candidates & ~bit(v));
    }

    const MaskGraph& g_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    Mask best_ = 0;
};

class AcyclicSetSearch {
public:
    AcyclicSetSearch(const MaskGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    void run()
    {
        AcyclicClass empty;
        expand(0, empty);
    }

    Mask best() const { return best_; }
    std::uint64_t explored() const { return explored_; }

private:
    void expand(Vertex v, const AcyclicClass& current)
    {
        if (++explored_ > budget_)
            throw BudgetExhausted{};
        const int size = std::popcount(current.members);
        if (size + static_cast<int>(g_.n - v) <= best_size_)
            return;
        if (v == g_.n) {
            best_ = current.members;
            best_size_ = size;
            return;
        }
        if (current.accepts(g_, v)) {
            AcyclicClass next = current;
            next.add(g_, v);
            expand(v + 1, next);
        }
        expand(v + 1, current);
    }

    const MaskGraph& g_;
    std::uint64_t budget_;
    std::uint64_t explored_ = 0;
    Mask best_ = 0;
    int best_size_ = -1;
};

VertexSet mask_to_set(Mask m, std::size_t n)
{
    VertexSet s(n);
    for (; m; m &= m - 1)
        s.insert(static_cast<Vertex>(std::countr_zero(m)));
    return s;
}

} // namespace

OracleResult independence_number(const Digraph& d, std::uint64_t budget)
{
    const MaskGraph g = to_masks(d);
    StableSearch search(g, budget);
    OracleResult result;
    try {
        search.run();
        result.value = std::popcount(search.best());
        result.witness = mask_to_set(search.best(), g.n);
    } catch (const BudgetExhausted&) {
        result.status = OracleStatus::undecided;
    }
    result.explored = search.explored();
    return result;
}

OracleResult max_acyclic_set(const Digraph& d, std::uint64_t budget)
{
    const MaskGraph g = to_masks(d);
    AcyclicSetSearch search(g, budget);
    OracleResult result;
    try {
        search.run();
        result.value = std::popcount(search.best());
        result.witness = mask_to_set(search.best(), g.n);
    } catch (const BudgetExhausted&) {
        result.status = OracleStatus::undecided;
    }
    result.explored = search.explored();
    return result;
}

namespace {

class InducedCopySearch {
public:
    InducedCopySearch(const Digraph& d, const Digraph& h) : d_(d), h_(h), image_(h.size()), used_(d.size()) {}

    bool run() { return extend(0); }
    const std::vector<Vertex>& image() const { return image_; }

private:
    bool consistent(Vertex hv, Vertex dv) const
    {
        for (Vertex hu = 0; hu < hv; ++hu) {
            const Vertex du = image_[hu];
            if (h_.has_arc(hu, hv) != d_.has_arc(du, dv) || h_.has_arc(hv, hu) != d_.has_arc(dv, du))
                return false;
        }
        return true;
    }

    bool extend(Vertex hv)
    {
        if (hv == h_.size())
            return true;
        for (Vertex dv = 0; dv < d_.size(); ++dv) {
            if (used_.contains(dv) || !consistent(hv, dv))
                continue;
            image_[hv] = dv;
            used_.insert(dv);
            if (extend(hv + 1))
                return true;
            used_.erase(dv);
        }
        return false;
    }

    const Digraph& d_;
    const Digraph& h_;
    std::vector<Vertex> image_;
    VertexSet used_;
};

} // namespace

std::optional<std::vector<Vertex>> find_induced_copy(const Digraph& d, const Digraph& h, std::size_t cap)
{
    if (h.size() > cap)
        throw std::length_error("pattern has " + std::to_string(h.size()) + " vertices, cap is " +
                                std::to_string(cap));
    InducedCopySearch search(d, h);
    if (search.run())
        return search.image();
    return std::nullopt;
}

LocalityCheck is_t_local(const Digraph& d, int t, std::uint64_t budget)
{
    LocalityCheck check;
    for (Vertex v = 0; v < d.size(); ++v) {
        const VertexSet& outs = d.out(v);
        int chi = 0;
        if (!outs.empty()) {
            if (is_acyclic_on(d, outs)) {
                chi = 1;
            } else {
                OracleResult r = dichromatic_number(induced(d, outs).graph, budget);
                if (!r.decided()) {
                    check.status = OracleStatus::undecided;
                    check.violator = v;
                    return check;
                }
                chi = r.value;
            }
        }
        if (chi > t) {
            check.local = false;
            check.violator = v;
            return check;
        }
    }
    return check;
}

} // namespace dicolor
