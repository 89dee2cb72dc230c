#pragma once

#include "dicolor/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dicolor {

// Hero grammar.
Digraph transitive_tournament(std::size_t k);
// H1 => H2: disjoint union with every arc oriented from H1 to H2.
Digraph compose_arrow(const Digraph& h1, const Digraph& h2);
// Delta(H1, H2, H3): complete arcs H1 -> H2, H2 -> H3, H3 -> H1.
Digraph compose_delta(const Digraph& h1, const Digraph& h2, const Digraph& h3);

// Witness that a vertex set is an r-mountain.
//
// Level 1 is a single vertex. At level r >= 2, `clique` is an (r-1, r)-clique
// and for each pair of clique members the arc between them (oriented as in D)
// is recorded in `thick_arcs[i]`, certified by the (r-1)-mountain `sub[i]`
// which lies in N-(tail) & N+(head).
struct MountainCertificate {
    int level = 1;
    std::vector<Vertex> clique;
    std::vector<Arc> thick_arcs;
    std::vector<MountainCertificate> sub;
    VertexSet vertices; // clique plus every sub-certificate, deduplicated
};

struct RsClique {
    std::vector<Vertex> members;
    std::vector<Arc> arcs;                       // one per unordered member pair, oriented as in D
    std::vector<MountainCertificate> certificates; // certificates[i] certifies arcs[i]
};

struct DetectorCaps {
    int max_mountain_level = 3;
    int max_clique_level = 2;
    int max_clique_size = 4;
};

class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// r-mountain certificate for arc (u, v) inside N-(u) & N+(v), if any.
// Throws std::invalid_argument if (u, v) is not an arc, CapExceeded above the cap.
std::optional<MountainCertificate> is_r_thick(const Digraph& d, Vertex u, Vertex v, int r,
                                              const DetectorCaps& caps = {});

// Lexicographically least s-set pairwise joined by r-thick arcs.
std::optional<RsClique> find_rs_clique(const Digraph& d, int r, int s, const DetectorCaps& caps = {});

// An r-mountain built from the least (r-1, r)-clique and greedy least certificates.
std::optional<MountainCertificate> find_mountain(const Digraph& d, int r, const DetectorCaps& caps = {});
std::optional<MountainCertificate> find_mountain(const Digraph& d, int r, const VertexSet& within,
                                                 const DetectorCaps& caps = {});

// Re-validates a certificate bottom-up against D; returns a description of the
// first defect, or nullopt when the certificate is sound.
std::optional<std::string> check_mountain(const Digraph& d, const MountainCertificate& cert);

// (r!)^2
std::size_t mountain_size_bound(int r);

} // namespace dicolor
