#pragma once

// Seeded instance generators.
//
// Every generator draws from a single SplitMix64 stream seeded with the
// 64-bit seed. Reals in [0,1) take the top 53 bits of a draw, bounded
// integers use Lemire's multiply-shift with rejection, and shuffles are
// Fisher-Yates from the back. None of this goes through <random>
// distributions, so the output bytes do not depend on the standard library.

#include "dicolor/digraph.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace dicolor {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    double uniform();                         // [0, 1)
    std::uint64_t below(std::uint64_t bound); // [0, bound), bound > 0
    bool coin() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

enum class Family { transitive, random_digraph, random_tournament, c3free_layered };

std::string_view family_name(Family f);
// Throws std::invalid_argument for unknown names.
Family parse_family(std::string_view name);

struct InstanceSpec {
    Family family = Family::c3free_layered;
    std::size_t n = 1;
    std::size_t alpha = 1; // c3free-layered only
    double p = 0.5;        // random-digraph and c3free-layered
    std::uint64_t seed = 0;

    // e.g. "c3free-layered n=12 alpha=2 p=0.5 seed=7"
    std::string id() const;
};

Digraph gen_random_tournament(std::size_t n, std::uint64_t seed);
Digraph gen_random_digraph(std::size_t n, double p, std::uint64_t seed);
// Directed-triangle-free digraph whose vertices are covered by `alpha`
// transitive tournaments, so alpha(D) <= alpha.
Digraph gen_c3free_layered(std::size_t n, std::size_t alpha, double p, std::uint64_t seed);
// Deletes one seeded arc of the least directed triangle until none is left.
Digraph repair_to_c3_free(const Digraph& d, std::uint64_t seed);

Digraph generate(const InstanceSpec& spec);

} // namespace dicolor
