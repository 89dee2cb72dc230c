#pragma once

#include "dicolor/digraph.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace dicolor {

// Partition of V(D) into colour classes; colours are 0-based.
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    static Coloring uniform(std::size_t n, int color = 0);

    std::size_t size() const { return colors.size(); }
    int operator[](Vertex v) const { return colors[v]; }
    std::vector<VertexSet> classes() const;
    // Renumbers colours in order of first appearance so they are contiguous from 0.
    void normalize();

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringCheck {
    bool valid = true;
    int color = -1;            // colour class containing the cycle
    std::vector<Vertex> cycle; // monochromatic directed cycle, in D's labels

    explicit operator bool() const { return valid; }
};

// Throws std::invalid_argument if some vertex is uncoloured (negative colour)
// or the colouring does not cover V(D).
ColoringCheck verify_coloring(const Digraph& d, const Coloring& c);

inline constexpr std::uint64_t default_node_budget = 10'000'000;
inline constexpr std::size_t max_oracle_order = 64;

enum class OracleStatus { decided, undecided };

struct OracleResult {
    OracleStatus status = OracleStatus::decided;
    int value = 0;
    std::variant<std::monostate, VertexSet, Coloring> witness;
    std::uint64_t explored = 0;

    bool decided() const { return status == OracleStatus::decided; }
};

// All oracles accept digraphs of order at most max_oracle_order and throw
// std::length_error beyond that. Exhausting the node budget yields an
// undecided result.
OracleResult dichromatic_number(const Digraph& d, std::uint64_t budget = default_node_budget);
OracleResult independence_number(const Digraph& d, std::uint64_t budget = default_node_budget);
OracleResult max_acyclic_set(const Digraph& d, std::uint64_t budget = default_node_budget);

inline constexpr std::size_t default_pattern_cap = 8;

// Injection of V(H) into V(D) preserving both arcs and non-adjacency, least
// in lexicographic order of images. Throws std::length_error when |H| > cap.
std::optional<std::vector<Vertex>> find_induced_copy(const Digraph& d, const Digraph& h,
                                                     std::size_t cap = default_pattern_cap);

struct LocalityCheck {
    OracleStatus status = OracleStatus::decided;
    bool local = true;
    std::optional<Vertex> violator;
};

// Whether chi(D[N+(v)]) <= t for every v; the budget applies per neighbourhood.
LocalityCheck is_t_local(const Digraph& d, int t, std::uint64_t budget = default_node_budget);

} // namespace dicolor
