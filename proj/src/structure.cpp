#include "dicolor/structure.hpp"

#include <map>
#include <stdexcept>

namespace dicolor {

Digraph transitive_tournament(std::size_t k)
{
    if (k == 0)
        throw std::invalid_argument("transitive tournament needs at least one vertex");
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j)
            arcs.emplace_back(i, j);
    return Digraph(k, arcs);
}

namespace {

void append_shifted(std::vector<Arc>& arcs, const Digraph& h, std::size_t offset)
{
    for (auto [u, v] : h.arcs())
        arcs.emplace_back(u + offset, v + offset);
}

void append_complete(std::vector<Arc>& arcs, std::size_t from, std::size_t from_size, std::size_t to,
                     std::size_t to_size)
{
    for (Vertex u = 0; u < from_size; ++u)
        for (Vertex v = 0; v < to_size; ++v)
            arcs.emplace_back(from + u, to + v);
}

} // namespace

Digraph compose_arrow(const Digraph& h1, const Digraph& h2)
{
    const std::size_t a = h1.size(), b = h2.size();
    std::vector<Arc> arcs;
    append_shifted(arcs, h1, 0);
    append_shifted(arcs, h2, a);
    append_complete(arcs, 0, a, a, b);
    return Digraph(a + b, arcs);
}

Digraph compose_delta(const Digraph& h1, const Digraph& h2, const Digraph& h3)
{
    const std::size_t a = h1.size(), b = h2.size(), c = h3.size();
    std::vector<Arc> arcs;
    append_shifted(arcs, h1, 0);
    append_shifted(arcs, h2, a);
    append_shifted(arcs, h3, a + b);
    append_complete(arcs, 0, a, a, b);
    append_complete(arcs, a, b, a + b, c);
    append_complete(arcs, a + b, c, 0, a);
    return Digraph(a + b + c, arcs);
}

std::size_t mountain_size_bound(int r)
{
    std::size_t f = 1;
    for (int i = 2; i <= r; ++i)
        f *= static_cast<std::size_t>(i);
    return f * f;
}

namespace {

std::optional<MountainCertificate> mountain_within(const Digraph& d, int r, const VertexSet& within);

std::optional<RsClique> clique_within(const Digraph& d, int r, int s, const VertexSet& within)
{
    if (s == 1) {
        if (within.empty())
            return std::nullopt;
        return RsClique{{within.first()}, {}, {}};
    }

    // Every r-thick arc inside `within`, keyed by (tail, head).
    std::map<Arc, MountainCertificate> thick;
    std::vector<VertexSet> thick_adj(d.size(), VertexSet(d.size()));
    for (Vertex u : within) {
        for (Vertex v : d.out(u) & within) {
            auto cert = mountain_within(d, r, d.in(u) & d.out(v) & within);
            if (!cert)
                continue;
            thick.emplace(Arc{u, v}, std::move(*cert));
            thick_adj[u].insert(v);
            thick_adj[v].insert(u);
        }
    }

    std::vector<Vertex> members;
    auto extend = [&](auto& self, const VertexSet& candidates) -> bool {
        if (members.size() == static_cast<std::size_t>(s))
            return true;
        for (Vertex v : candidates) {
            members.push_back(v);
            VertexSet rest = candidates & thick_adj[v];
            for (Vertex w = rest.first(); w != VertexSet::npos && w <= v; w = rest.next(w))
                rest.erase(w);
            if (self(self, rest))
                return true;
            members.pop_back();
        }
        return false;
    };
    if (!extend(extend, within))
        return std::nullopt;

    RsClique clique;
    clique.members = members;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Arc arc = d.has_arc(members[i], members[j]) ? Arc{members[i], members[j]} : Arc{members[j], members[i]};
            clique.arcs.push_back(arc);
            clique.certificates.push_back(thick.at(arc));
        }
    }
    return clique;
}

std::optional<MountainCertificate> mountain_within(const Digraph& d, int r, const VertexSet& within)
{
    if (within.empty())
        return std::nullopt;
    MountainCertificate cert;
    cert.level = r;
    cert.vertices = VertexSet(d.size());
    if (r == 1) {
        cert.clique = {within.first()};
        cert.vertices.insert(within.first());
        return cert;
    }
    auto clique = clique_within(d, r - 1, r, within);
    if (!clique)
        return std::nullopt;
    cert.clique = std::move(clique->members);
    cert.thick_arcs = std::move(clique->arcs);
    cert.sub = std::move(clique->certificates);
    for (Vertex v : cert.clique)
        cert.vertices.insert(v);
    for (const auto& sub : cert.sub)
        cert.vertices |= sub.vertices;
    return cert;
}

void check_level(int r, int cap, const char* what)
{
    if (r < 1)
        throw std::invalid_argument(std::string(what) + " level must be at least 1");
    if (r > cap)
        throw CapExceeded(std::string(what) + " level " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
}

} // namespace

std::optional<MountainCertificate> is_r_thick(const Digraph& d, Vertex u, Vertex v, int r, const DetectorCaps& caps)
{
    if (u >= d.size() || v >= d.size() || !d.has_arc(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
    check_level(r, caps.max_mountain_level, "mountain");
    return mountain_within(d, r, d.in(u) & d.out(v));
}

std::optional<RsClique> find_rs_clique(const Digraph& d, int r, int s, const DetectorCaps& caps)
{
    check_level(r, caps.max_clique_level, "clique");
    if (s < 1)
        throw std::invalid_argument("clique size must be at least 1");
    if (s > caps.max_clique_size)
        throw CapExceeded("clique size " + std::to_string(s) + " exceeds cap " + std::to_string(caps.max_clique_size));
    return clique_within(d, r, s, d.vertices());
}

std::optional<MountainCertificate> find_mountain(const Digraph& d, int r, const VertexSet& within,
                                                 const DetectorCaps& caps)
{
    check_level(r, caps.max_mountain_level, "mountain");
    return mountain_within(d, r, within);
}

std::optional<MountainCertificate> find_mountain(const Digraph& d, int r, const DetectorCaps& caps)
{
    return find_mountain(d, r, d.vertices(), caps);
}

std::optional<std::string> check_mountain(const Digraph& d, const MountainCertificate& cert)
{
    const std::string where = "level-" + std::to_string(cert.level) + " certificate: ";
    if (cert.level < 1)
        return where + "level below 1";
    if (cert.vertices.universe() != d.size())
        return where + "vertex set has the wrong universe";
    if (cert.vertices.size() > mountain_size_bound(cert.level))
        return where + "more than (r!)^2 vertices";

    VertexSet expected(d.size());
    for (Vertex v : cert.clique) {
        if (v >= d.size())
            return where + "vertex out of range";
        expected.insert(v);
    }
    if (cert.level == 1) {
        if (cert.clique.size() != 1 || !cert.sub.empty() || !cert.thick_arcs.empty())
            return where + "a 1-mountain is a single vertex";
        return cert.vertices == expected ? std::nullopt : std::optional(where + "vertex set mismatch");
    }

    const std::size_t r = static_cast<std::size_t>(cert.level);
    if (cert.clique.size() != r || expected.size() != r)
        return where + "clique must have exactly r distinct vertices";
    if (cert.thick_arcs.size() != r * (r - 1) / 2 || cert.sub.size() != cert.thick_arcs.size())
        return where + "one certified arc per clique pair required";

    std::map<std::pair<Vertex, Vertex>, int> seen;
    for (std::size_t i = 0; i < cert.thick_arcs.size(); ++i) {
        auto [u, v] = cert.thick_arcs[i];
        if (!expected.contains(u) || !expected.contains(v) || !d.has_arc(u, v))
            return where + "recorded arc is not an arc between clique members";
        if (++seen[std::minmax(u, v)] > 1)
            return where + "pair certified twice";
        const MountainCertificate& sub = cert.sub[i];
        if (sub.level != cert.level - 1)
            return where + "sub-certificate has the wrong level";
        if (!sub.vertices.is_subset_of(d.in(u) & d.out(v)))
            return where + "sub-certificate escapes N-(tail) & N+(head)";
        if (auto defect = check_mountain(d, sub))
            return defect;
        expected |= sub.vertices;
    }
    if (!(cert.vertices == expected))
        return where + "vertex set mismatch";
    return std::nullopt;
}

} // namespace dicolor
