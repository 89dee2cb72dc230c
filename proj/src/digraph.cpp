#include "dicolor/digraph.hpp"

#include <algorithm>

namespace dicolor {

namespace {

std::string describe(ArcError kind, Arc arc)
{
    std::string pair = "(" + std::to_string(arc.first) + "," + std::to_string(arc.second) + ")";
    switch (kind) {
    case ArcError::loop:
        return "loop " + pair;
    case ArcError::out_of_range:
        return "endpoint out of range in arc " + pair;
    case ArcError::duplicate:
        return "duplicate arc " + pair;
    case ArcError::anti_parallel:
        return "anti-parallel arc " + pair + " violates simplicity";
    }
    return "invalid arc " + pair;
}

} // namespace

InvalidArc::InvalidArc(ArcError kind, Arc arc)
    : std::invalid_argument(describe(kind, arc)), kind_(kind), arc_(arc)
{
}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs)
    : out_(n, VertexSet(n)), in_(n, VertexSet(n)), adj_(n, VertexSet(n))
{
    for (const Arc& a : arcs)
        add_arc(a.first, a.second);
}

Digraph::Digraph(std::size_t n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()))
{
}

void Digraph::add_arc(Vertex u, Vertex v)
{
    const std::size_t n = size();
    if (u >= n || v >= n)
        throw InvalidArc(ArcError::out_of_range, {u, v});
    if (u == v)
        throw InvalidArc(ArcError::loop, {u, v});
    if (out_[u].contains(v))
        throw InvalidArc(ArcError::duplicate, {u, v});
    if (out_[v].contains(u))
        throw InvalidArc(ArcError::anti_parallel, {u, v});
    out_[u].insert(v);
    in_[v].insert(u);
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++arc_count_;
}

VertexSet Digraph::non_neighbours(Vertex v) const
{
    VertexSet s = adj_[v].complement();
    s.erase(v);
    return s;
}

std::vector<Arc> Digraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : out_[u])
            result.emplace_back(u, v);
    return result;
}

Neighbourhoods neighbourhoods(const Digraph& d, Vertex v)
{
    if (v >= d.size())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return {d.out(v), d.in(v), d.non_neighbours(v)};
}

namespace {

void check_universe(const Digraph& d, const VertexSet& x)
{
    if (x.universe() != d.size())
        throw std::out_of_range("vertex set universe " + std::to_string(x.universe()) +
                                " does not match digraph order " + std::to_string(d.size()));
}

} // namespace

VertexSet common_out(const Digraph& d, const VertexSet& x)
{
    check_universe(d, x);
    VertexSet m = d.vertices();
    for (Vertex v : x)
        m &= d.out(v);
    return m;
}

VertexSet common_in(const Digraph& d, const VertexSet& x)
{
    check_universe(d, x);
    VertexSet m = d.vertices();
    for (Vertex v : x)
        m &= d.in(v);
    return m;
}

VertexSet out_of(const Digraph& d, const VertexSet& x)
{
    check_universe(d, x);
    VertexSet m = d.empty_set();
    for (Vertex v : x)
        m |= d.out(v);
    return m;
}

VertexSet in_of(const Digraph& d, const VertexSet& x)
{
    check_universe(d, x);
    VertexSet m = d.empty_set();
    for (Vertex v : x)
        m |= d.in(v);
    return m;
}

VertexSet non_of(const Digraph& d, const VertexSet& x)
{
    check_universe(d, x);
    VertexSet m = d.empty_set();
    for (Vertex v : x)
        m |= d.non_neighbours(v);
    return m;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_size) const
{
    VertexSet s(parent_size);
    for (Vertex v : local)
        s.insert(to_parent[v]);
    return s;
}

InducedSubgraph induced(const Digraph& d, const VertexSet& s)
{
    check_universe(d, s);
    std::vector<Vertex> to_parent = s.to_vector();
    std::vector<Vertex> to_local(d.size(), VertexSet::npos);
    for (Vertex i = 0; i < to_parent.size(); ++i)
        to_local[to_parent[i]] = i;

    std::vector<Arc> arcs;
    for (Vertex u : s)
        for (Vertex v : d.out(u) & s)
            arcs.emplace_back(to_local[u], to_local[v]);
    return {Digraph(to_parent.size(), arcs), std::move(to_parent)};
}

AcyclicityResult is_acyclic(const Digraph& d)
{
    const std::size_t n = d.size();
    enum : char { white, grey, black };
    std::vector<char> colour(n, white);
    std::vector<Vertex> parent(n, VertexSet::npos);
    std::vector<Vertex> finished;
    finished.reserve(n);

    // Iterative DFS; a grey successor closes a cycle.
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] != white)
            continue;
        std::vector<std::pair<Vertex, Vertex>> stack; // (vertex, last successor tried)
        stack.emplace_back(root, VertexSet::npos);
        colour[root] = grey;
        while (!stack.empty()) {
            auto& [v, last] = stack.back();
            const VertexSet& succ = d.out(v);
            Vertex w = last == VertexSet::npos ? succ.first() : succ.next(last);
            if (w == VertexSet::npos) {
                colour[v] = black;
                finished.push_back(v);
                stack.pop_back();
                continue;
            }
            last = w;
            if (colour[w] == white) {
                colour[w] = grey;
                parent[w] = v;
                stack.emplace_back(w, VertexSet::npos);
            } else if (colour[w] == grey) {
                AcyclicityResult r;
                r.acyclic = false;
                for (Vertex x = v; x != w; x = parent[x])
                    r.cycle.push_back(x);
                r.cycle.push_back(w);
                std::reverse(r.cycle.begin(), r.cycle.end());
                std::rotate(r.cycle.begin(), std::min_element(r.cycle.begin(), r.cycle.end()),
                            r.cycle.end());
                return r;
            }
        }
    }
    AcyclicityResult r;
    r.order.assign(finished.rbegin(), finished.rend());
    return r;
}

bool is_acyclic_on(const Digraph& d, const VertexSet& s)
{
    check_universe(d, s);
    // Peel vertices with no in-neighbour among the remaining ones.
    VertexSet remaining = s;
    bool progress = true;
    while (!remaining.empty() && progress) {
        progress = false;
        for (Vertex v : remaining) {
            if (!d.in(v).intersects(remaining)) {
                remaining.erase(v);
                progress = true;
            }
        }
    }
    return remaining.empty();
}

std::optional<Triangle> find_directed_triangle(const Digraph& d, const VertexSet& within)
{
    check_universe(d, within);
    for (Vertex a : within) {
        std::optional<Triangle> best;
        VertexSet later = within;
        for (Vertex x = within.first(); x != VertexSet::npos && x <= a; x = within.next(x))
            later.erase(x);
        // a -> b -> c -> a with b, c > a.
        for (Vertex b : d.out(a) & later) {
            VertexSet closing = d.out(b) & d.in(a) & later;
            if (closing.empty())
                continue;
            Vertex c = closing.first();
            Triangle t{a, b, c};
            auto key = [](const Triangle& x) { return std::minmax(x[1], x[2]); };
            if (!best || key(t) < key(*best))
                best = t;
        }
        if (best)
            return best;
    }
    return std::nullopt;
}

std::optional<Triangle> find_directed_triangle(const Digraph& d)
{
    return find_directed_triangle(d, d.vertices());
}

Digraph reverse(const Digraph& d)
{
    std::vector<Arc> arcs = d.arcs();
    for (Arc& a : arcs)
        std::swap(a.first, a.second);
    return Digraph(d.size(), arcs);
}

} // namespace dicolor
