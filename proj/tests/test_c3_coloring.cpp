#include "support.hpp"

#include "dicolor/c3_coloring.hpp"
#include "dicolor/instances.hpp"
#include "dicolor/structure.hpp"

#include <doctest.h>

using namespace dicolor;
using namespace dicolor::testing;

namespace {

// Definition of a bag, checked over every triple.
std::optional<Triangle> brute_bag_violation(const Digraph& d, const VertexSet& b)
{
    const std::size_t n = d.size();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y)
            for (Vertex z = y + 1; z < n; ++z) {
                if (b.contains(x) || b.contains(y) || b.contains(z))
                    continue;
                if (!(d.neighbours(x) & d.neighbours(y) & d.neighbours(z) & b).empty())
                    continue;
                return Triangle{x, y, z};
            }
    return std::nullopt;
}

bool dominates(const Digraph& d, const VertexSet& s)
{
    return (s | out_of(d, s)) == d.vertices();
}

Coloring recurse_c3(const Digraph& d)
{
    return color_c3_free(d).coloring;
}

} // namespace

TEST_CASE("colour budget")
{
    CHECK(color_budget(1) == 1);
    CHECK(color_budget(2) == 70);
    CHECK(color_budget(3) == 7350);
    for (int a = 2; a <= 9; ++a)
        CHECK(color_budget(a) == 35 * static_cast<std::uint64_t>(a) * color_budget(a - 1));
    CHECK_THROWS_AS(color_budget(0), std::invalid_argument);
    CHECK_THROWS_AS(color_budget(12), std::overflow_error);
}

TEST_CASE("stable dominating set")
{
    CHECK(stable_dominating_set(Digraph(1, {})) == VertexSet(1, {0}));
    CHECK(stable_dominating_set(transitive_tournament(6)) == VertexSet(6, {0}));
    CHECK(stable_dominating_set(Digraph(3, {{0, 1}, {1, 2}})) == VertexSet(3, {0, 2}));
    try {
        stable_dominating_set(c3());
        FAIL("accepted a cyclic digraph");
    } catch (const NotAcyclic& e) {
        CHECK(e.cycle() == std::vector<Vertex>{0, 1, 2});
    }
}

TEST_CASE("acyclic dominating set")
{
    const Digraph p(4, {{0, 1}, {1, 2}, {2, 3}});
    VertexSet s = acyclic_dominating_set(p);
    CHECK(dominates(p, s));
    CHECK(is_acyclic_on(p, s));

    s = acyclic_dominating_set(c3());
    CHECK(s.size() <= 2);
    CHECK(dominates(c3(), s));
    CHECK(is_acyclic_on(c3(), s));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Digraph t = gen_random_tournament(10, seed);
        s = acyclic_dominating_set(t);
        CHECK(dominates(t, s));
        CHECK(is_acyclic_on(t, s));
    }
}

TEST_CASE("quasi-dominating set")
{
    CHECK(out_quasi_dominating_set(Digraph(1, {})) == VertexSet(1, {0}));
    const Digraph t3 = transitive_tournament(3);
    VertexSet y = out_quasi_dominating_set(t3);
    CHECK(y.size() == 1);
    CHECK((y | out_of(t3, y)) == t3.vertices());
    try {
        out_quasi_dominating_set(c3());
        FAIL("accepted a directed triangle");
    } catch (const NotC3Free& e) {
        CHECK(e.witness() == Triangle{0, 1, 2});
    }
    const Digraph d = gen_c3free_layered(10, 3, 0.5, 5);
    y = in_quasi_dominating_set(d);
    CHECK((y | in_of(d, y) | non_of(d, y)) == d.vertices());
}

TEST_CASE("bags")
{
    const Digraph d = gen_random_digraph(6, 0.5, 1);
    CHECK(is_bag(d, d.vertices()).is_bag);

    BagCheck r = is_bag(Digraph(3, {}), VertexSet(3));
    CHECK_FALSE(r.is_bag);
    CHECK(r.violating_triple == Triangle{0, 1, 2});

    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(is_bag(star, VertexSet(4, {0})).is_bag);

    // Fewer than three vertices outside: vacuously a bag.
    CHECK(is_bag(Digraph(2, {}), VertexSet(2)).is_bag);
    CHECK(is_poor_bag(Digraph(2, {}), VertexSet(2)));
    CHECK(is_poor_bag(star, VertexSet(4, {0})));
    CHECK_THROWS_AS(is_poor_bag(Digraph(3, {}), VertexSet(3)), std::invalid_argument);

    // T5 as a whole: vertex 2 has both halves non-empty, hence bags.
    CHECK_FALSE(is_poor_bag(transitive_tournament(5), VertexSet::full(5)));
}

TEST_CASE("splitting a non-bag")
{
    NonBagSplit s = split_non_bag(Digraph(4, {}), VertexSet(4, {3}));
    CHECK(s.triple == Triangle{0, 1, 2});
    CHECK(s.parts[0] == VertexSet(4, {3}));
    CHECK(s.parts[1].empty());
    CHECK(s.parts[2].empty());

    s = split_non_bag(Digraph(3, {}), VertexSet(3));
    for (const auto& part : s.parts)
        CHECK(part.empty());

    CHECK_THROWS_AS(split_non_bag(Digraph(4, {}), VertexSet::full(4)), std::invalid_argument);
}

TEST_CASE("find_chain")
{
    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    ChainResult c = find_chain(star, VertexSet(4, {0}));
    CHECK(c.kind == ChainKind::single);
    CHECK(c.bags == std::vector<VertexSet>{VertexSet(4, {0})});

    c = find_chain(transitive_tournament(5), VertexSet::full(5));
    CHECK(c.kind == ChainKind::chain);
    CHECK(c.bags.size() >= 2);
}

TEST_CASE("zones")
{
    const Digraph d(4, {{0, 1}, {0, 2}, {1, 2}});
    ZonePartition z = assign_zones(d, {VertexSet(4, {0, 1, 2, 3})});
    for (const auto& zone : z.zones)
        CHECK(zone.empty());

    z = assign_zones(d, {VertexSet(4, {0})});
    CHECK(z.zone_of[0] == -1);
    CHECK(z.zone_of[1] == 1);
    CHECK(z.zone_of[2] == 1);
    CHECK(z.zone_of[3] == 0);

    z = assign_zones(d, {VertexSet(4, {0}), VertexSet(4, {1})});
    CHECK(z.zone_of[2] == 2);
    CHECK(z.zones[0] == VertexSet(4, {3}));
}

TEST_CASE("colouring poor bags")
{
    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Coloring c = color_poor_bag(star, VertexSet(4, {0}), recurse_c3);
    CHECK(c.num_colors == 1);
    CHECK(c[0] == 0);
    CHECK(c[1] == -1);

    // Every poor bag of a few small instances, alpha 1 and 2.
    std::size_t seen[3] = {0, 0, 0};
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t alpha = 1 + seed % 2;
        const Digraph d = gen_c3free_layered(8, alpha, 0.5, seed);
        const int exact = independence_number(d).value;
        BagTester tester(d);
        for (std::uint64_t mask = 1; mask < (1u << d.size()); ++mask) {
            const VertexSet b = from_mask(d.size(), mask);
            if (!tester.is_bag(b) || !tester.is_poor(b))
                continue;
            ++seen[exact];
            Coloring col = color_poor_bag(d, b, recurse_c3);
            const InducedSubgraph sub = induced(d, b);
            Coloring local;
            local.num_colors = col.num_colors;
            for (Vertex v : sub.to_parent)
                local.colors.push_back(col[v]);
            CHECK(classes_acyclic(sub.graph, local));
            CHECK(static_cast<std::uint64_t>(col.num_colors) <=
                  8 * static_cast<std::uint64_t>(exact) * (exact == 1 ? 1 : color_budget(exact - 1)));
        }
    }
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);

    CHECK_THROWS_AS(color_poor_bag(transitive_tournament(5), VertexSet::full(5), recurse_c3), std::invalid_argument);
}

TEST_CASE("colouring digraphs without directed triangles")
{
    CHECK(color_c3_free(Digraph(5, {{0, 1}, {2, 3}})).coloring.num_colors == 1);
    CHECK(color_c3_free(transitive_tournament(30)).coloring.num_colors == 1);

    const Digraph d = gen_c3free_layered(12, 2, 0.5, 7);
    REQUIRE(independence_number(d).value == 2);
    C3Coloring r = color_c3_free(d);
    CHECK(verify_coloring(d, r.coloring).valid);
    CHECK(r.coloring.num_colors <= 70);
    CHECK(r.stats.invariant_violations == 0);

    try {
        color_c3_free(compose_arrow(transitive_tournament(2), c3()));
        FAIL("accepted a directed triangle");
    } catch (const NotC3Free& e) {
        CHECK(e.witness() == Triangle{2, 3, 4});
    }
}

TEST_CASE("property: fast bag test agrees with the triple definition")
{
    SplitMix64 rng(5);
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const Digraph d = gen_random_digraph(3 + seed % 8, 0.5, seed);
        BagTester tester(d);
        for (int trial = 0; trial < 8; ++trial) {
            VertexSet b(d.size());
            for (Vertex v = 0; v < d.size(); ++v)
                if (rng.below(3) == 0)
                    b.insert(v);
            const auto expected = brute_bag_violation(d, b);
            const BagCheck got = tester.check(b);
            CHECK(got.is_bag == !expected.has_value());
            CHECK(got.violating_triple == expected);
            CHECK(is_bag(d, b).violating_triple == expected);
            CHECK(tester.is_bag(b) == got.is_bag);
        }
    }
}

TEST_CASE("property: non-bag parts lower the independence number")
{
    std::size_t checked = 0;
    SplitMix64 rng(17);
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const Digraph d = gen_c3free_layered(10, 2 + seed % 2, 0.4, seed);
        const int alpha = independence_number(d).value;
        for (int trial = 0; trial < 6; ++trial) {
            VertexSet s(d.size());
            for (Vertex v = 0; v < d.size(); ++v)
                if (rng.coin())
                    s.insert(v);
            if (is_bag(d, s))
                continue;
            const NonBagSplit split = split_non_bag(d, s);
            VertexSet all(d.size());
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(split.parts[i].is_subset_of(d.non_neighbours(split.triple[i])));
                CHECK_FALSE(all.intersects(split.parts[i]));
                all |= split.parts[i];
                CHECK(independence_number(induced(d, split.parts[i]).graph).value <= alpha - 1);
            }
            CHECK(all == s);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("property: chains of poor bags")
{
    std::size_t chains = 0;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const Digraph d = gen_c3free_layered(8 + seed % 7, 1 + seed % 3, 0.5, seed);
        BagTester tester(d);
        const ChainResult c = find_chain(d, d.vertices());
        REQUIRE(c.separators.size() + 1 == c.bags.size());
        VertexSet used(d.size());
        for (const auto& b : c.bags) {
            CHECK_FALSE(used.intersects(b));
            used |= b;
            CHECK(tester.is_bag(b));
            CHECK(tester.is_poor(b));
        }
        for (std::size_t i = 0; i < c.separators.size(); ++i) {
            const Vertex v = c.separators[i];
            CHECK_FALSE(used.contains(v));
            CHECK(c.bags[i].is_subset_of(d.in(v)));
            CHECK(c.bags[i + 1].is_subset_of(d.out(v)));
            for (Vertex a : c.bags[i + 1])
                CHECK_FALSE(d.out(a).intersects(c.bags[i]));
        }
        if (c.kind == ChainKind::chain) {
            ++chains;
            CHECK(c.bags.size() >= 2);
        }
        const ZonePartition z = assign_zones(d, c.bags);
        CHECK(count_chain_zone_violations(d, c.bags, z) == 0);
        for (Vertex v = 0; v < d.size(); ++v) {
            const int zi = z.zone_of[v];
            if (used.contains(v)) {
                CHECK(zi == -1);
                continue;
            }
            REQUIRE(zi >= 0);
            CHECK(z.zones[static_cast<std::size_t>(zi)].contains(v));
            for (std::size_t j = static_cast<std::size_t>(zi); j < c.bags.size(); ++j)
                CHECK_FALSE(c.bags[j].intersects(d.in(v)));
            if (zi > 0)
                CHECK(c.bags[static_cast<std::size_t>(zi) - 1].intersects(d.in(v)));
        }
    }
    CHECK(chains > 0);
}

TEST_CASE("property: colourings are valid, within budget and deterministic")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t alpha = 1 + seed % 3;
        const Digraph d = gen_c3free_layered(6 + seed % 9, alpha, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
        const int exact = independence_number(d).value;
        const C3Coloring r = color_c3_free(d);
        CHECK(classes_acyclic(d, r.coloring));
        CHECK(static_cast<std::uint64_t>(r.coloring.num_colors) <= color_budget(exact));
        CHECK(dichromatic_number(d).value <= r.coloring.num_colors);
        CHECK(r.stats.invariant_violations == 0);
        CHECK(r.stats.splice_progress_failures == 0);
        CHECK(r.stats.quasi_domination_failures == 0);
        CHECK(color_c3_free(d).coloring == r.coloring);
    }
}

TEST_CASE("splicing a chain found inside a zone")
{
    auto bag = [](Vertex v) { return VertexSet(20, {v}); };
    const std::vector<VertexSet> chain{bag(0), bag(1), bag(2), bag(3)};
    const std::vector<VertexSet> inner{bag(10), bag(11), bag(12)};

    CHECK(splice_chain(chain, 0, inner) ==
          std::vector<VertexSet>{bag(10), bag(11), bag(12), bag(0), bag(1), bag(2), bag(3)});
    CHECK(splice_chain(chain, 1, inner) == std::vector<VertexSet>{bag(10), bag(11), bag(12), bag(1), bag(2), bag(3)});
    CHECK(splice_chain(chain, 3, inner) == std::vector<VertexSet>{bag(0), bag(10), bag(11), bag(12), bag(3)});
    CHECK(splice_chain(chain, 4, inner) == std::vector<VertexSet>{bag(0), bag(1), bag(10), bag(11), bag(12)});
    // A chain of k >= 3 bags always lengthens the chain.
    for (std::size_t i = 0; i <= chain.size(); ++i)
        CHECK(splice_chain(chain, i, inner).size() > chain.size());
    CHECK_THROWS_AS(splice_chain(chain, 5, inner), std::out_of_range);
}
