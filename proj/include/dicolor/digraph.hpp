#pragma once

#include "dicolor/vertex_set.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dicolor {

// Arc (tail, head): tail sees head.
using Arc = std::pair<Vertex, Vertex>;
using Triangle = std::array<Vertex, 3>;

enum class ArcError {
    loop,
    out_of_range,
    duplicate,     // the same ordered pair twice
    anti_parallel, // both (u,v) and (v,u)
};

class InvalidArc : public std::invalid_argument {
public:
    InvalidArc(ArcError kind, Arc arc);

    ArcError kind() const { return kind_; }
    Arc arc() const { return arc_; }

private:
    ArcError kind_;
    Arc arc_;
};

// Simple loopless digraph on vertices 0..n-1. Immutable once built.
class Digraph {
public:
    Digraph() = default;
    // Throws InvalidArc on loops, out-of-range endpoints or simplicity violations.
    Digraph(std::size_t n, std::span<const Arc> arcs);
    Digraph(std::size_t n, std::initializer_list<Arc> arcs);

    std::size_t size() const { return out_.size(); }
    std::size_t arc_count() const { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    const VertexSet& out(Vertex v) const { return out_[v]; }
    const VertexSet& in(Vertex v) const { return in_[v]; }
    const VertexSet& neighbours(Vertex v) const { return adj_[v]; }
    // Vertices other than v with no arc to or from v.
    VertexSet non_neighbours(Vertex v) const;

    VertexSet vertices() const { return VertexSet::full(size()); }
    VertexSet empty_set() const { return VertexSet(size()); }

    // Sorted lexicographically.
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

private:
    void add_arc(Vertex u, Vertex v);

    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<VertexSet> adj_;
    std::size_t arc_count_ = 0;
};

struct Neighbourhoods {
    VertexSet out;
    VertexSet in;
    VertexSet non;
};

Neighbourhoods neighbourhoods(const Digraph& d, Vertex v);

// M+(X): vertices seen by every member of X. M+(empty) = V(D).
VertexSet common_out(const Digraph& d, const VertexSet& x);
// M-(X): vertices seeing every member of X. M-(empty) = V(D).
VertexSet common_in(const Digraph& d, const VertexSet& x);
// N+(X), N-(X), No(X) as unions over members of X.
VertexSet out_of(const Digraph& d, const VertexSet& x);
VertexSet in_of(const Digraph& d, const VertexSet& x);
VertexSet non_of(const Digraph& d, const VertexSet& x);

struct InducedSubgraph {
    Digraph graph;
    std::vector<Vertex> to_parent; // local vertex -> vertex of the parent digraph

    VertexSet lift(const VertexSet& local, std::size_t parent_size) const;
};

InducedSubgraph induced(const Digraph& d, const VertexSet& s);

struct AcyclicityResult {
    bool acyclic = true;
    std::vector<Vertex> order; // topological order when acyclic
    std::vector<Vertex> cycle; // v0 -> v1 -> ... -> v0 when not, starting at its least vertex

    explicit operator bool() const { return acyclic; }
};

AcyclicityResult is_acyclic(const Digraph& d);
// Acyclicity of D[s] without materialising the induced subgraph.
bool is_acyclic_on(const Digraph& d, const VertexSet& s);

// Directed triangle on the lexicographically least vertex triple, returned as
// (a, b, c) with a < b, c and arcs a->b->c->a.
std::optional<Triangle> find_directed_triangle(const Digraph& d);
std::optional<Triangle> find_directed_triangle(const Digraph& d, const VertexSet& within);

Digraph reverse(const Digraph& d);

} // namespace dicolor
