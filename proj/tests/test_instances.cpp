#include "support.hpp"

#include "dicolor/instances.hpp"
#include "dicolor/io.hpp"
#include "dicolor/structure.hpp"

#include <doctest.h>

using namespace dicolor;
using namespace dicolor::testing;

TEST_CASE("SplitMix64 reference stream")
{
    // Published SplitMix64 outputs for seed 1234567.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);

    SplitMix64 r2(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = r2.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(r2.below(7) < 7);
    }
}

TEST_CASE("family names")
{
    for (Family f : {Family::transitive, Family::random_digraph, Family::random_tournament, Family::c3free_layered})
        CHECK(parse_family(family_name(f)) == f);
    CHECK_THROWS_AS(parse_family("cycle"), std::invalid_argument);
    InstanceSpec s{Family::c3free_layered, 12, 2, 0.5, 7};
    CHECK(s.id() == "c3free-layered n=12 alpha=2 p=0.5 seed=7");
}

TEST_CASE("random tournaments")
{
    CHECK(gen_random_tournament(1, 3).size() == 1);
    const Digraph two = gen_random_tournament(2, 3);
    CHECK(two.arc_count() == 1);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Digraph t = gen_random_tournament(9, seed);
        CHECK(t.arc_count() == 36);
        CHECK(independence_number(t).value == 1);
    }
    // Both orientations of the single pair occur across seeds.
    bool forward = false, backward = false;
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        (gen_random_tournament(2, seed).has_arc(0, 1) ? forward : backward) = true;
    CHECK(forward);
    CHECK(backward);
}

TEST_CASE("random digraphs")
{
    const Digraph empty = gen_random_digraph(8, 0.0, 3);
    CHECK(empty.arc_count() == 0);
    CHECK(independence_number(empty).value == 8);
    CHECK(gen_random_digraph(8, 1.0, 3).arc_count() == 28);
    // The constructor validates simplicity on every draw.
    for (std::uint64_t seed = 1; seed <= 1000; ++seed)
        CHECK_NOTHROW(gen_random_digraph(1 + seed % 15, 0.5, seed));
    CHECK_THROWS_AS(gen_random_digraph(4, 1.5, 1), std::invalid_argument);
}

TEST_CASE("layered digraphs without directed triangles")
{
    const Digraph one = gen_c3free_layered(9, 1, 0.5, 4);
    CHECK(one.arc_count() == 36);
    CHECK(is_acyclic(one).acyclic);

    CHECK(gen_c3free_layered(6, 6, 0.0, 4).arc_count() == 0);

    const Digraph d = gen_c3free_layered(12, 2, 0.5, 7);
    CHECK_FALSE(find_directed_triangle(d));
    CHECK(independence_number(d).value <= 2);

    CHECK_THROWS_AS(gen_c3free_layered(3, 4, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_c3free_layered(3, 0, 0.5, 1), std::invalid_argument);
}

TEST_CASE("repair")
{
    const Digraph r = repair_to_c3_free(c3(), 1);
    CHECK(r.arc_count() == 2);
    CHECK(is_acyclic(r).acyclic);

    const Digraph t = transitive_tournament(6);
    CHECK(repair_to_c3_free(t, 5) == t);

    const Digraph tour = gen_random_tournament(8, 11);
    const Digraph fixed = repair_to_c3_free(tour, 11);
    CHECK_FALSE(find_directed_triangle(fixed));
    for (auto [u, v] : fixed.arcs())
        CHECK(tour.has_arc(u, v));
}

TEST_CASE("property: generators are deterministic and well formed")
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        for (Family f : {Family::transitive, Family::random_digraph, Family::random_tournament, Family::c3free_layered}) {
            InstanceSpec s{f, 1 + seed % 14, 1 + seed % 4, 0.4, seed};
            s.alpha = std::min(s.alpha, s.n);
            CHECK(format_digraph(generate(s)) == format_digraph(generate(s)));
        }
        const std::size_t n = 4 + seed % 9, alpha = 1 + seed % 3;
        const Digraph d = gen_c3free_layered(n, alpha, 0.6, seed);
        CHECK_FALSE(find_directed_triangle(d));
        CHECK(brute_alpha(d) <= static_cast<int>(alpha));

        const Digraph r = gen_random_digraph(10, 0.7, seed);
        const Digraph fixed = repair_to_c3_free(r, seed);
        CHECK_FALSE(find_directed_triangle(fixed));
        CHECK(fixed.arc_count() <= r.arc_count());
    }
}
