#pragma once

// Polynomial-time acyclic colouring of digraphs with no directed triangle.
//
// The recursion never looks at the independence number: every set it hands
// to a recursive call is contained in the non-neighbourhood of some vertex,
// so each level of recursion strictly lowers alpha. With alpha(D) <= a the
// result uses at most 35^(a-1) * a! colours.

#include "dicolor/digraph.hpp"
#include "dicolor/oracles.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace dicolor {

// g(a) = 35^(a-1) * a!. Throws std::invalid_argument for a = 0 and
// std::overflow_error when the value does not fit in 64 bits (a >= 10).
std::uint64_t color_budget(int alpha);

// Raised when an input that must be free of directed triangles is not.
class NotC3Free : public std::invalid_argument {
public:
    explicit NotC3Free(Triangle witness);
    const Triangle& witness() const { return witness_; }

private:
    Triangle witness_;
};

// An internal guarantee of the colouring procedure failed to hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class NotAcyclic : public std::invalid_argument {
public:
    explicit NotAcyclic(std::vector<Vertex> cycle);
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

// Stable set S dominating every vertex outside it. Requires D acyclic.
VertexSet stable_dominating_set(const Digraph& d);
// Dominating set S with D[S] acyclic.
VertexSet acyclic_dominating_set(const Digraph& d);
// Stable Y with V = Y u No(Y) u N+(Y). Requires D free of directed triangles.
VertexSet out_quasi_dominating_set(const Digraph& d);
// Same for the reversed digraph: V = Y u No(Y) u N-(Y).
VertexSet in_quasi_dominating_set(const Digraph& d);

struct BagCheck {
    bool is_bag = true;
    std::optional<Triangle> violating_triple; // least triple outside B with no common neighbour in B

    explicit operator bool() const { return is_bag; }
};

// B is a bag of D when every three distinct vertices outside B have a common
// (in- or out-) neighbour inside B.
BagCheck is_bag(const Digraph& d, const VertexSet& b);
// Throws std::invalid_argument if B is not a bag.
bool is_poor_bag(const Digraph& d, const VertexSet& b);

// Memoising bag tester bound to one digraph.
class BagTester {
public:
    explicit BagTester(const Digraph& d);

    bool is_bag(const VertexSet& b);
    BagCheck check(const VertexSet& b) const;
    bool is_poor(const VertexSet& b);
    const Digraph& digraph() const { return d_; }

private:
    const Digraph& d_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adjacency_; // row v: neighbours of v, one bit per vertex
    std::unordered_map<VertexSet, bool> cache_;
};

struct NonBagSplit {
    Triangle triple;
    std::array<VertexSet, 3> parts; // parts[i] lies in No(triple[i]); parts partition S
};

// Throws std::invalid_argument if S is a bag.
NonBagSplit split_non_bag(const Digraph& d, const VertexSet& s);

enum class ChainKind { single, chain };

struct ChainResult {
    ChainKind kind = ChainKind::single;
    std::vector<VertexSet> bags;
    std::vector<Vertex> separators; // separators[i] sits between bags[i] and bags[i+1]
    // For each separator, the members of the set it split that were
    // non-adjacent to it; these fall outside every bag.
    std::vector<VertexSet> separator_non_neighbours;
    bool input_was_bag = true;
};

ChainResult find_chain(const Digraph& d, const VertexSet& b);
ChainResult find_chain(BagTester& tester, const VertexSet& b);

struct ZonePartition {
    std::vector<int> zone_of;     // per vertex; -1 for chain vertices
    std::vector<VertexSet> zones; // Z_0 .. Z_t
};

// Zone of v outside the chain: the largest 1-based bag index i such that some
// vertex of bags[i-1] sees v, or 0 if no chain vertex sees v.
ZonePartition assign_zones(const Digraph& d, const std::vector<VertexSet>& bags);

// Counts arcs contradicting the ordering of a chain of bags and its zones:
// no arc B_j -> B_i (j > i), B_j -> Z_i (j > i), Z_j -> B_i (j >= i + 2),
// Z_j -> Z_i (j >= i + 3).
std::size_t count_chain_zone_violations(const Digraph& d, const std::vector<VertexSet>& bags,
                                        const ZonePartition& zones);

// Replaces the bags around zone Z_i by a chain found inside it: keeps
// B_1 .. B_{i-2}, then `inner`, then B_{i+1} .. B_t (i is 0-based over Z_0 .. Z_t).
std::vector<VertexSet> splice_chain(const std::vector<VertexSet>& chain, std::size_t zone,
                                    const std::vector<VertexSet>& inner);

struct ColoringStats {
    std::size_t invariant_violations = 0;
    std::size_t splice_iterations = 0;
    std::size_t splice_progress_failures = 0;
    std::size_t quasi_domination_failures = 0;
    std::size_t non_bag_chain_recursions = 0;
    std::size_t recursive_calls = 0;
    int max_depth = 0;
};

struct C3Coloring {
    Coloring coloring;
    ColoringStats stats;
};

using PartColorer = std::function<Coloring(const Digraph&)>;

// Colours a poor bag B of D. Each independence-reduced part is handed to
// `recurse` as an induced subgraph. The result is indexed by vertices of D;
// vertices outside B get colour -1.
Coloring color_poor_bag(const Digraph& d, const VertexSet& b, const PartColorer& recurse);

// Throws NotC3Free with the least directed triangle if D has one.
C3Coloring color_c3_free(const Digraph& d);

} // namespace dicolor
