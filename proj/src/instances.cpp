#include "dicolor/instances.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dicolor {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("bound must be positive");
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i)
        std::swap(items[i - 1], items[rng.below(i)]);
}

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("arc probability must lie in [0, 1]");
}

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::transitive:
        return "transitive";
    case Family::random_digraph:
        return "random-digraph";
    case Family::random_tournament:
        return "random-tournament";
    case Family::c3free_layered:
        return "c3free-layered";
    }
    return "unknown";
}

Family parse_family(std::string_view name)
{
    for (Family f : {Family::transitive, Family::random_digraph, Family::random_tournament, Family::c3free_layered})
        if (family_name(f) == name)
            return f;
    throw std::invalid_argument("unknown instance family '" + std::string(name) + "'");
}

std::string InstanceSpec::id() const
{
    std::ostringstream os;
    os << family_name(family) << " n=" << n;
    if (family == Family::c3free_layered)
        os << " alpha=" << alpha;
    if (family == Family::c3free_layered || family == Family::random_digraph)
        os << " p=" << p;
    os << " seed=" << seed;
    return os.str();
}

Digraph gen_random_tournament(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
    return Digraph(n, arcs);
}

Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed)
{
    check_probability(p);
    SplitMix64 rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool present = rng.uniform() < p;
            const bool forward = rng.coin();
            if (present)
                arcs.push_back(forward ? Arc{u, v} : Arc{v, u});
        }
    }
    return Digraph(n, arcs);
}

Digraph gen_c3free_layered(std::size_t n, std::size_t alpha, double p, std::uint64_t seed)
{
    if (alpha < 1 || alpha > n)
        throw std::invalid_argument("c3free-layered needs 1 <= alpha <= n");
    check_probability(p);
    SplitMix64 rng(seed);

    // Shuffled labels dealt round-robin into parts; each part is transitive
    // in dealing order.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    shuffle(order, rng);
    std::vector<std::size_t> part(n);
    std::vector<std::vector<Vertex>> members(alpha);
    for (std::size_t i = 0; i < n; ++i) {
        part[order[i]] = i % alpha;
        members[i % alpha].push_back(order[i]);
    }

    std::vector<VertexSet> out(n, VertexSet(n)), in(n, VertexSet(n));
    std::vector<Arc> arcs;
    auto add = [&](Vertex u, Vertex v) {
        out[u].insert(v);
        in[v].insert(u);
        arcs.emplace_back(u, v);
    };
    for (const auto& m : members)
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                add(m[i], m[j]);

    std::vector<Arc> candidates;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (part[u] != part[v])
                candidates.emplace_back(u, v);
    shuffle(candidates, rng);
    for (auto [u, v] : candidates) {
        const bool wanted = rng.uniform() < p;
        if (!wanted || out[u].contains(v) || out[v].contains(u))
            continue;
        // u -> v closes a triangle iff some w has v -> w -> u.
        if (out[v].intersects(in[u]))
            continue;
        add(u, v);
    }

    std::sort(arcs.begin(), arcs.end());
    Digraph d(n, arcs);
    if (auto t = find_directed_triangle(d))
        throw std::logic_error("layered generator produced a directed triangle");
    return d;
}

Digraph repair_to_c3_free(const Digraph& d, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Arc> arcs = d.arcs();
    Digraph current = d;
    while (auto t = find_directed_triangle(current)) {
        const std::size_t k = rng.below(3);
        const Arc doomed{(*t)[k], (*t)[(k + 1) % 3]};
        arcs.erase(std::find(arcs.begin(), arcs.end(), doomed));
        current = Digraph(d.size(), arcs);
    }
    return current;
}

Digraph generate(const InstanceSpec& spec)
{
    switch (spec.family) {
    case Family::transitive: {
        std::vector<Arc> arcs;
        for (Vertex i = 0; i < spec.n; ++i)
            for (Vertex j = i + 1; j < spec.n; ++j)
                arcs.emplace_back(i, j);
        return Digraph(spec.n, arcs);
    }
    case Family::random_digraph:
        return gen_random_digraph(spec.n, spec.p, spec.seed);
    case Family::random_tournament:
        return gen_random_tournament(spec.n, spec.seed);
    case Family::c3free_layered:
        return gen_c3free_layered(spec.n, spec.alpha, spec.p, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

} // namespace dicolor
