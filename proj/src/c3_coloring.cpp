#include "dicolor/c3_coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace dicolor {

std::uint64_t color_budget(int alpha)
{
    if (alpha < 1)
        throw std::invalid_argument("independence bound must be at least 1");
    std::uint64_t g = 1;
    for (int a = 2; a <= alpha; ++a) {
        // g(a) = 35 * a * g(a - 1)
        if (__builtin_mul_overflow(g, std::uint64_t{35} * static_cast<std::uint64_t>(a), &g))
            throw std::overflow_error("colour budget for alpha=" + std::to_string(alpha) + " exceeds 64 bits");
    }
    return g;
}

namespace {

std::string triangle_text(const Triangle& t)
{
    return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
}

std::string cycle_text(const std::vector<Vertex>& c)
{
    std::string s;
    for (Vertex v : c)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

} // namespace

NotC3Free::NotC3Free(Triangle witness)
    : std::invalid_argument("digraph contains the directed triangle " + triangle_text(witness)), witness_(witness)
{
}

NotAcyclic::NotAcyclic(std::vector<Vertex> cycle)
    : std::invalid_argument("digraph contains the directed cycle " + cycle_text(cycle)), cycle_(std::move(cycle))
{
}

VertexSet stable_dominating_set(const Digraph& d)
{
    if (auto r = is_acyclic(d); !r)
        throw NotAcyclic(std::move(r.cycle));
    // Take the least source of what remains, then keep only its non-neighbours.
    VertexSet s = d.empty_set();
    VertexSet remaining = d.vertices();
    while (!remaining.empty()) {
        Vertex source = VertexSet::npos;
        for (Vertex v : remaining) {
            if (!d.in(v).intersects(remaining)) {
                source = v;
                break;
            }
        }
        s.insert(source);
        remaining &= d.non_neighbours(source);
    }
    return s;
}

VertexSet acyclic_dominating_set(const Digraph& d)
{
    // Take the least remaining vertex and drop its out-neighbours, which it dominates.
    VertexSet s = d.empty_set();
    VertexSet remaining = d.vertices();
    while (!remaining.empty()) {
        const Vertex v = remaining.first();
        s.insert(v);
        remaining.erase(v);
        remaining -= d.out(v);
    }
    return s;
}

VertexSet out_quasi_dominating_set(const Digraph& d)
{
    if (auto t = find_directed_triangle(d))
        throw NotC3Free(*t);
    const VertexSet dominating = acyclic_dominating_set(d);
    const InducedSubgraph sub = induced(d, dominating);
    return sub.lift(stable_dominating_set(sub.graph), d.size());
}

VertexSet in_quasi_dominating_set(const Digraph& d)
{
    return out_quasi_dominating_set(reverse(d));
}

std::vector<VertexSet> splice_chain(const std::vector<VertexSet>& chain, std::size_t zone,
                                    const std::vector<VertexSet>& inner)
{
    if (zone > chain.size())
        throw std::out_of_range("zone index " + std::to_string(zone) + " beyond chain of " +
                                std::to_string(chain.size()) + " bags");
    // Keep B_1 .. B_{i-2}, insert the new bags, keep B_{i+1} .. B_t.
    std::vector<VertexSet> next(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(zone >= 2 ? zone - 2 : 0));
    next.insert(next.end(), inner.begin(), inner.end());
    next.insert(next.end(), chain.begin() + static_cast<std::ptrdiff_t>(zone), chain.end());
    return next;
}

namespace {

using Word = std::uint64_t;

std::vector<Word> blocks_of(const VertexSet& s)
{
    std::vector<Word> out(s.bits().num_blocks());
    boost::to_block_range(s.bits(), out.begin());
    return out;
}

} // namespace

BagTester::BagTester(const Digraph& d) : d_(d), words_((d.size() + 63) / 64), adjacency_(d.size() * words_)
{
    for (Vertex v = 0; v < d.size(); ++v)
        boost::to_block_range(d.neighbours(v).bits(), adjacency_.begin() + static_cast<std::ptrdiff_t>(v * words_));
}

BagCheck BagTester::check(const VertexSet& b) const
{
    const std::size_t n = d_.size();
    const std::size_t words = words_;
    const std::vector<Word> inside = blocks_of(b);

    std::vector<Vertex> outside;
    for (Vertex v = 0; v < n; ++v)
        if (!b.contains(v))
            outside.push_back(v);
    const std::size_t m = outside.size();
    if (m < 3)
        return {};

    // later[j]: members of `outside` strictly after position j.
    std::vector<Word> later(m * words, 0);
    for (std::size_t j = m - 1; j-- > 0;) {
        std::copy_n(later.begin() + static_cast<std::ptrdiff_t>((j + 1) * words), words,
                    later.begin() + static_cast<std::ptrdiff_t>(j * words));
        const Vertex z = outside[j + 1];
        later[j * words + z / 64] |= Word{1} << (z % 64);
    }

    auto row = [&](Vertex v) { return adjacency_.data() + v * words; };
    std::vector<Word> x_in_bag(words), common(words), covered(words);

    for (std::size_t i = 0; i + 2 < m; ++i) {
        const Vertex x = outside[i];
        const Word* nx = row(x);
        for (std::size_t w = 0; w < words; ++w)
            x_in_bag[w] = nx[w] & inside[w];
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            const Vertex y = outside[j];
            const Word* ny = row(y);
            const Word* targets = later.data() + j * words;
            bool any_common = false;
            for (std::size_t w = 0; w < words; ++w) {
                common[w] = x_in_bag[w] & ny[w];
                any_common |= common[w] != 0;
            }
            if (!any_common)
                return {false, Triangle{x, y, outside[j + 1]}};

            // Grow the set of vertices adjacent to some common neighbour until
            // it swallows every later z.
            std::fill(covered.begin(), covered.end(), 0);
            bool all_covered = false;
            for (std::size_t w = 0; w < words && !all_covered; ++w) {
                for (Word bits = common[w]; bits && !all_covered; bits &= bits - 1) {
                    const Word* nc = row(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                    all_covered = true;
                    for (std::size_t k = 0; k < words; ++k) {
                        covered[k] |= nc[k];
                        all_covered &= (targets[k] & ~covered[k]) == 0;
                    }
                }
            }
            if (all_covered)
                continue;
            for (std::size_t k = 0; k < words; ++k) {
                const Word missed = targets[k] & ~covered[k];
                if (missed)
                    return {false, Triangle{x, y, k * 64 + static_cast<std::size_t>(std::countr_zero(missed))}};
            }
        }
    }
    return {};
}

bool BagTester::is_bag(const VertexSet& b)
{
    if (auto it = cache_.find(b); it != cache_.end())
        return it->second;
    const bool result = check(b).is_bag;
    cache_.emplace(b, result);
    return result;
}

bool BagTester::is_poor(const VertexSet& b)
{
    if (!is_bag(b))
        throw std::invalid_argument("set " + to_string(b) + " is not a bag");
    for (Vertex v : b)
        if (is_bag(d_.in(v) & b) && is_bag(d_.out(v) & b))
            return false;
    return true;
}

BagCheck is_bag(const Digraph& d, const VertexSet& b)
{
    return BagTester(d).check(b);
}

bool is_poor_bag(const Digraph& d, const VertexSet& b)
{
    BagTester tester(d);
    return tester.is_poor(b);
}

namespace {

NonBagSplit split_with_triple(const Digraph& d, const VertexSet& s, const Triangle& triple)
{
    NonBagSplit split{triple, {VertexSet(d.size()), VertexSet(d.size()), VertexSet(d.size())}};
    VertexSet rest = s;
    for (std::size_t i = 0; i < 3; ++i) {
        split.parts[i] = rest & d.non_neighbours(triple[i]);
        rest -= split.parts[i];
    }
    if (!rest.empty())
        throw InvariantViolation("vertices " + to_string(rest) + " are adjacent to all of " + triangle_text(triple));
    return split;
}

} // namespace

NonBagSplit split_non_bag(const Digraph& d, const VertexSet& s)
{
    BagCheck check = BagTester(d).check(s);
    if (check.is_bag)
        throw std::invalid_argument("set " + to_string(s) + " is a bag");
    return split_with_triple(d, s, *check.violating_triple);
}

namespace {

void find_chain_into(BagTester& tester, const VertexSet& b, ChainResult& result)
{
    const Digraph& d = tester.digraph();
    for (Vertex v : b) {
        VertexSet seen_by = d.out(v) & b;
        if (!tester.is_bag(seen_by))
            continue;
        VertexSet seeing = d.in(v) & b;
        if (!tester.is_bag(seeing))
            continue;
        find_chain_into(tester, seeing, result);
        result.separators.push_back(v);
        result.separator_non_neighbours.push_back(d.non_neighbours(v) & b);
        find_chain_into(tester, seen_by, result);
        return;
    }
    result.bags.push_back(b);
}

} // namespace

ChainResult find_chain(BagTester& tester, const VertexSet& b)
{
    ChainResult result;
    result.input_was_bag = tester.is_bag(b);
    find_chain_into(tester, b, result);
    result.kind = result.bags.size() >= 2 ? ChainKind::chain : ChainKind::single;
    return result;
}

ChainResult find_chain(const Digraph& d, const VertexSet& b)
{
    BagTester tester(d);
    return find_chain(tester, b);
}

ZonePartition assign_zones(const Digraph& d, const std::vector<VertexSet>& bags)
{
    const std::size_t n = d.size();
    ZonePartition p;
    p.zone_of.assign(n, 0);
    p.zones.assign(bags.size() + 1, VertexSet(n));
    VertexSet chain(n);
    for (const auto& bag : bags)
        chain |= bag;
    for (Vertex v = 0; v < n; ++v) {
        if (chain.contains(v)) {
            p.zone_of[v] = -1;
            continue;
        }
        int zone = 0;
        for (std::size_t i = bags.size(); i > 0; --i) {
            if (d.in(v).intersects(bags[i - 1])) {
                zone = static_cast<int>(i);
                break;
            }
        }
        p.zone_of[v] = zone;
        p.zones[static_cast<std::size_t>(zone)].insert(v);
    }
    return p;
}

std::size_t count_chain_zone_violations(const Digraph& d, const std::vector<VertexSet>& bags,
                                        const ZonePartition& zones)
{
    const std::size_t n = d.size();
    const std::size_t t = bags.size();
    auto zone = [&](std::size_t i) -> const VertexSet& { return zones.zones[i]; };
    std::size_t violations = 0;

    // Bag j (1-based) may not see earlier bags or zones Z_0 .. Z_{j-1}.
    VertexSet earlier_bags(n), earlier_zones(n);
    for (std::size_t j = 1; j <= t; ++j) {
        earlier_zones |= zone(j - 1);
        const VertexSet forbidden = earlier_bags | earlier_zones;
        for (Vertex u : bags[j - 1])
            violations += (d.out(u) & forbidden).size();
        earlier_bags |= bags[j - 1];
    }
    // Zone j may not see B_1 .. B_{j-2} or Z_0 .. Z_{j-3}.
    for (std::size_t j = 2; j <= t; ++j) {
        VertexSet forbidden(n);
        for (std::size_t i = 1; i + 2 <= j; ++i)
            forbidden |= bags[i - 1];
        for (std::size_t i = 0; i + 3 <= j; ++i)
            forbidden |= zone(i);
        for (Vertex u : zone(j))
            violations += (d.out(u) & forbidden).size();
    }
    return violations;
}

namespace {

// Colours with -1 outside the coloured part; palettes are laid out by
// shifting a part's colours past everything already used.
void paint(Coloring& target, const Coloring& part, int offset)
{
    for (Vertex v = 0; v < part.size(); ++v)
        if (part[v] >= 0)
            target.colors[v] = part[v] + offset;
    target.num_colors = std::max(target.num_colors, offset + part.num_colors);
}

Coloring blank(std::size_t n)
{
    Coloring c;
    c.colors.assign(n, -1);
    return c;
}

class Engine {
public:
    explicit Engine(ColoringStats& stats) : stats_(stats) {}

    Coloring color(const Digraph& d, int depth)
    {
        ++stats_.recursive_calls;
        stats_.max_depth = std::max(stats_.max_depth, depth);
        const std::size_t n = d.size();
        if (n == 0)
            return Coloring{};
        if (n == 1 || is_acyclic_on(d, d.vertices()))
            return Coloring::uniform(n);

        BagTester tester(d);
        auto recurse = [&](const VertexSet& part) { return color_part(d, part, depth); };

        std::vector<VertexSet> chain = find_chain(tester, d.vertices()).bags;
        ZonePartition zones = settle_chain(tester, chain);

        Coloring result = blank(n);
        // The chain shares one palette: arcs between its bags only go forward.
        int chain_palette = 0;
        for (const auto& bag : chain) {
            Coloring c = color_bag(tester, bag, recurse);
            paint(result, c, 0);
            chain_palette = std::max(chain_palette, c.num_colors);
        }

        // Zones whose indices agree mod 3 share a palette.
        std::vector<Coloring> zone_colorings;
        std::array<int, 3> group_palette{0, 0, 0};
        for (std::size_t i = 0; i < zones.zones.size(); ++i) {
            zone_colorings.push_back(color_zone(tester, zones.zones[i], recurse));
            group_palette[i % 3] = std::max(group_palette[i % 3], zone_colorings.back().num_colors);
        }
        const std::array<int, 3> group_offset{chain_palette, chain_palette + group_palette[0],
                                              chain_palette + group_palette[0] + group_palette[1]};
        for (std::size_t i = 0; i < zone_colorings.size(); ++i)
            paint(result, zone_colorings[i], group_offset[i % 3]);

        result.num_colors = group_offset[2] + group_palette[2];
        compact(result);
        return result;
    }

    Coloring color_bag(BagTester& tester, const VertexSet& bag, const std::function<Coloring(const VertexSet&)>& recurse)
    {
        const Digraph& d = tester.digraph();
        const std::size_t n = d.size();
        Coloring result = blank(n);
        if (bag.empty())
            return result;

        VertexSet left(n), right(n);
        for (Vertex v : bag) {
            if (!tester.is_bag(d.in(v) & bag))
                left.insert(v);
            else if (!tester.is_bag(d.out(v) & bag))
                right.insert(v);
            else
                throw InvariantViolation("bag " + to_string(bag) + " is not poor at vertex " + std::to_string(v));
        }

        int next = 0;
        color_side(tester, right, /*forward=*/true, recurse, result, next);
        color_side(tester, left, /*forward=*/false, recurse, result, next);
        result.num_colors = next;
        return result;
    }

private:
    Coloring color_part(const Digraph& d, const VertexSet& part, int depth)
    {
        Coloring lifted = blank(d.size());
        if (part.empty())
            return lifted;
        const InducedSubgraph sub = induced(d, part);
        const Coloring local = color(sub.graph, depth + 1);
        for (Vertex v = 0; v < local.size(); ++v)
            lifted.colors[sub.to_parent[v]] = local[v];
        lifted.num_colors = local.num_colors;
        return lifted;
    }

    // Step 3: splice longer chains found inside zones until none has three bags.
    ZonePartition settle_chain(BagTester& tester, std::vector<VertexSet>& chain)
    {
        const Digraph& d = tester.digraph();
        std::size_t iterations = 0;
        for (;;) {
            ZonePartition zones = assign_zones(d, chain);
            stats_.invariant_violations += count_chain_zone_violations(d, chain, zones);

            bool spliced = false;
            for (std::size_t i = 0; i < zones.zones.size() && !spliced; ++i) {
                if (zones.zones[i].empty())
                    continue;
                ChainResult inner = find_chain(tester, zones.zones[i]);
                note_chain(inner);
                if (inner.bags.size() < 3)
                    continue;

                std::vector<VertexSet> next = splice_chain(chain, i, inner.bags);
                if (next.size() <= chain.size())
                    ++stats_.splice_progress_failures;
                chain = std::move(next);
                ++stats_.splice_iterations;
                spliced = true;
                if (++iterations > d.size()) {
                    ++stats_.splice_progress_failures;
                    throw InvariantViolation("chain splicing did not terminate within n iterations");
                }
            }
            if (!spliced)
                return zones;
        }
    }

    Coloring color_zone(BagTester& tester, const VertexSet& zone, const std::function<Coloring(const VertexSet&)>& recurse)
    {
        const Digraph& d = tester.digraph();
        Coloring result = blank(d.size());
        if (zone.empty())
            return result;

        ChainResult inner = find_chain(tester, zone);
        if (inner.kind == ChainKind::single) {
            if (tester.is_bag(zone))
                return color_bag(tester, zone, recurse);
            BagCheck check = tester.check(zone);
            NonBagSplit split = split_with_triple(d, zone, *check.violating_triple);
            int next = 0;
            for (const auto& part : split.parts) {
                Coloring c = recurse(part);
                paint(result, c, next);
                next += c.num_colors;
            }
            result.num_colors = next;
            return result;
        }

        int next = 0;
        for (const auto& bag : inner.bags) {
            Coloring c = color_bag(tester, bag, recurse);
            paint(result, c, 0);
            next = std::max(next, c.num_colors);
        }
        for (std::size_t j = 0; j < inner.separators.size(); ++j) {
            Coloring c = recurse(inner.separator_non_neighbours[j]);
            paint(result, c, next);
            // The separator is non-adjacent to its whole palette's part.
            result.colors[inner.separators[j]] = next;
            next += std::max(c.num_colors, 1);
        }
        result.num_colors = next;
        return result;
    }

    // Colours one half of a poor bag. `forward`: the half whose out-neighbourhoods
    // are not bags, covered as Y u N+(Y) u No(Y); otherwise the mirror image.
    void color_side(BagTester& tester, const VertexSet& side, bool forward,
                    const std::function<Coloring(const VertexSet&)>& recurse, Coloring& result, int& next)
    {
        const Digraph& d = tester.digraph();
        if (side.empty())
            return;
        const InducedSubgraph sub = induced(d, side);
        const VertexSet ys = sub.lift(forward ? out_quasi_dominating_set(sub.graph) : in_quasi_dominating_set(sub.graph), d.size());
        check_quasi_domination(d, side, ys, forward);

        VertexSet assigned = ys;
        for (Vertex y : ys) {
            VertexSet beyond = ((forward ? d.out(y) : d.in(y)) & side) - assigned;
            if (!beyond.empty()) {
                BagCheck check = tester.check(beyond);
                if (check.is_bag)
                    throw InvariantViolation("restricted neighbourhood " + to_string(beyond) + " of " +
                                             std::to_string(y) + " is a bag");
                for (const auto& part : split_with_triple(d, beyond, *check.violating_triple).parts) {
                    Coloring c = recurse(part);
                    paint(result, c, next);
                    next += c.num_colors;
                }
                assigned |= beyond;
            }
            VertexSet apart = (d.non_neighbours(y) & side) - assigned;
            Coloring c = recurse(apart);
            paint(result, c, next);
            result.colors[y] = next;
            next += std::max(c.num_colors, 1);
            assigned |= apart;
        }
        if (!(assigned == side))
            throw InvariantViolation("quasi-dominating set misses " + to_string(side - assigned));
    }

    void check_quasi_domination(const Digraph& d, const VertexSet& side, const VertexSet& ys, bool forward)
    {
        VertexSet covered = ys;
        bool stable = true;
        for (Vertex y : ys) {
            covered |= (forward ? d.out(y) : d.in(y)) | d.non_neighbours(y);
            stable &= !d.neighbours(y).intersects(ys);
        }
        if (!side.is_subset_of(covered) || !stable)
            ++stats_.quasi_domination_failures;
    }

    void note_chain(const ChainResult& chain)
    {
        if (!chain.input_was_bag && chain.bags.size() > 1)
            ++stats_.non_bag_chain_recursions;
    }

    static void compact(Coloring& c)
    {
        std::vector<int> used(static_cast<std::size_t>(c.num_colors), 0);
        for (Vertex v = 0; v < c.size(); ++v)
            if (c[v] < 0)
                throw InvariantViolation("vertex " + std::to_string(v) + " left uncoloured");
        for (int x : c.colors)
            used[static_cast<std::size_t>(x)] = 1;
        std::vector<int> remap(used.size(), -1);
        int k = 0;
        for (std::size_t i = 0; i < used.size(); ++i)
            if (used[i])
                remap[i] = k++;
        for (int& x : c.colors)
            x = remap[static_cast<std::size_t>(x)];
        c.num_colors = k;
    }

    ColoringStats& stats_;
};

} // namespace

Coloring color_poor_bag(const Digraph& d, const VertexSet& b, const PartColorer& recurse)
{
    ColoringStats stats;
    Engine engine(stats);
    BagTester tester(d);
    if (!tester.is_poor(b))
        throw std::invalid_argument("set " + to_string(b) + " is not a poor bag");
    auto lift = [&](const VertexSet& part) {
        Coloring lifted = blank(d.size());
        if (part.empty())
            return lifted;
        const InducedSubgraph sub = induced(d, part);
        const Coloring local = recurse(sub.graph);
        for (Vertex v = 0; v < local.size(); ++v)
            lifted.colors[sub.to_parent[v]] = local[v];
        lifted.num_colors = local.num_colors;
        return lifted;
    };
    return engine.color_bag(tester, b, lift);
}

C3Coloring color_c3_free(const Digraph& d)
{
    if (auto t = find_directed_triangle(d))
        throw NotC3Free(*t);
    C3Coloring out;
    Engine engine(out.stats);
    out.coloring = engine.color(d, 0);
    return out;
}

} // namespace dicolor
