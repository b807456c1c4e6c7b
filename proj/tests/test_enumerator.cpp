#include <chrono>
#include <random>

#include "doctest.h"
#include "support/test_support.hpp"
#include "tkplex/enumerator.hpp"
#include "tkplex/heuristics.hpp"
#include "tkplex/oracle.hpp"

using namespace tkplex;
using namespace tkplex::testing;

namespace {

struct Run {
    std::vector<PlexRecord> records;
    RunStats stats;
};

Run run(const TemporalGraph& g, TimeStep delta, std::uint32_t k, bool pivoting = false, bool connected = false,
        const CallObserver& observer = {})
{
    SearchConfig config;
    config.delta = delta;
    config.k = k;
    config.pivoting = pivoting;
    config.connectedness = connected;
    Run r;
    r.stats = enumerate_maximal_plexes(
        g, config, [&](const PlexRecord& p) { r.records.push_back(p); }, observer);
    return r;
}

TemporalGraph complete_graph(std::size_t n, TimeStep lifetime)
{
    std::vector<TemporalEdge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            for (TimeStep t = 1; t <= lifetime; ++t) {
                edges.push_back({u, v, t});
            }
        }
    }
    return TemporalGraph(n, std::move(edges), lifetime);
}

// c=0 meets p=1 only at t=1,2; w=2 meets both throughout.
TemporalGraph pivot_trap()
{
    std::vector<TemporalEdge> edges{{0, 1, 1}, {0, 1, 2}};
    for (TimeStep t = 1; t <= 5; ++t) {
        edges.push_back({0, 2, t});
        edges.push_back({1, 2, t});
    }
    return TemporalGraph(3, std::move(edges), 5);
}

}  // namespace

TEST_SUITE("enumerator")
{
    TEST_CASE("triangle, delta 1, k 2")
    {
        const auto g = triangle();
        const auto r = run(g, 1, 2);
        const PlexRecord abc{{0, 1, 2}, Interval(4, 5)};
        CHECK(std::find(r.records.begin(), r.records.end(), abc) != r.records.end());
        CHECK(sorted(r.records) == oracle::enumerate_all_maximal(g, 1, 2));
        CHECK(r.stats.plex_count == r.records.size());
        CHECK(r.stats.max_plex_order == 3);
        CHECK(r.stats.max_lifetime_length == 5);
        CHECK_FALSE(r.stats.timed_out);
    }

    TEST_CASE("triangle, delta 1, k 1")
    {
        const auto g = triangle();
        CHECK(sorted(run(g, 1, 1).records) == oracle::enumerate_all_maximal(g, 1, 1));
    }

    TEST_CASE("edgeless graph yields the k-subsets")
    {
        const auto r = run(edgeless(4, 3), 0, 2);
        CHECK(r.records.size() == 6);
        for (const auto& rec : r.records) {
            CHECK(rec.vertices.size() == 2);
            CHECK(rec.frames == Interval(1, 3));
        }
    }

    TEST_CASE("parameter validation")
    {
        const auto g = triangle();
        CHECK_THROWS_AS(run(g, 6, 1), std::invalid_argument);
        CHECK_THROWS_AS(run(g, -1, 1), std::invalid_argument);
        CHECK_THROWS_AS(run(g, 1, 0), std::invalid_argument);
        const NonNeighborhoodIndex index(g, FrameDomain::make(6, 2));
        SearchConfig config;
        config.delta = 1;
        CHECK_THROWS_AS(enumerate_maximal_plexes(g, index, config, [](const PlexRecord&) {}),
                        std::invalid_argument);
        config.delta = 2;
        CHECK_NOTHROW(enumerate_maximal_plexes(g, index, config, [](const PlexRecord&) {}));
    }

    TEST_CASE("output order is deterministic")
    {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 20; ++i) {
            const auto g = random_graph(rng, 0.4);
            CHECK(run(g, 1, 2, true).records == run(g, 1, 2, true).records);
        }
    }

    TEST_CASE("random graphs agree with the oracle")
    {
        const auto corpus = sweep_corpus(40, 99);
        for (const auto& g : corpus) {
            for (TimeStep delta = 0; delta <= 2; ++delta) {
                for (std::uint32_t k = 1; k <= 3; ++k) {
                    const auto truth = oracle::enumerate_all_maximal(g, delta, k);
                    const auto plain = run(g, delta, k);
                    REQUIRE(sorted(plain.records) == truth);
                    REQUIRE(sorted(run(g, delta, k, true).records) == truth);
                    REQUIRE(sorted(run(g, delta, k, false, true).records) == filter_min_size(truth, 2 * k + 1));
                }
            }
        }
    }

    TEST_CASE("a call emits at most one plex per interval of its frames")
    {
        const auto corpus = sweep_corpus(40, 7);
        std::size_t multi = 0;
        for (const auto& g : corpus) {
            for (TimeStep delta = 0; delta <= 2; ++delta) {
                std::size_t budget = 0;
                std::size_t emitted = 0;
                std::size_t over = 0;
                SearchConfig config;
                config.delta = delta;
                config.k = 2;
                (void)enumerate_maximal_plexes(
                    g, config,
                    [&](const PlexRecord&) {
                        ++emitted;
                        over += emitted > budget;
                        multi += emitted == 2;
                    },
                    [&](const CallState& s) {
                        budget = s.frames.size();
                        emitted = 0;
                    });
                REQUIRE(over == 0);
            }
        }
        CHECK(multi > 0);
    }

    TEST_CASE("pool matches a naive count at every call")
    {
        const auto corpus = sweep_corpus(15, 5);
        for (const auto& g : corpus) {
            for (TimeStep delta = 0; delta <= 1; ++delta) {
                const NonNeighborhoodIndex index(g, FrameDomain::make(g.lifetime(), delta));
                std::size_t violations = 0;
                auto check = [&](Vertex w, const IntervalSet& frames, const CallState& s) {
                    for (const auto& iv : frames) {
                        for (TimeStep t = iv.start; t <= iv.end; ++t) {
                            std::uint32_t expected = 0;
                            for (Vertex u : s.plex) {
                                if (u == w || !linked(g, u, w, t, delta)) {
                                    ++expected;
                                }
                            }
                            violations += s.pool.count(w, t) != expected;
                        }
                    }
                };
                (void)run(g, delta, 2, true, false, [&](const CallState& s) {
                    for (const auto& e : s.candidates) {
                        check(e.vertex, e.frames, s);
                    }
                    for (const auto& e : s.excluded) {
                        check(e.vertex, e.frames, s);
                    }
                    for (Vertex c : s.plex) {
                        check(c, s.frames, s);
                    }
                });
                CHECK(violations == 0);
            }
        }
    }

    TEST_CASE("time limit stops the search")
    {
        std::mt19937_64 rng(1);
        const auto g = random_graph(rng, 0.5, {40, 40, 200, 200});
        SearchConfig config;
        config.delta = 3;
        config.k = 3;
        config.time_limit = 0.05;
        std::uint64_t delivered = 0;
        const auto start = std::chrono::steady_clock::now();
        const auto stats = enumerate_maximal_plexes(g, config, [&](const PlexRecord&) { ++delivered; });
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        CHECK(stats.timed_out);
        CHECK(stats.plex_count == delivered);
        CHECK(elapsed < 5.0);
    }
}

TEST_SUITE("heuristics")
{
    TEST_CASE("complete graph: the root pivot suppresses every other vertex")
    {
        const auto g = complete_graph(5, 4);
        const NonNeighborhoodIndex index(g, FrameDomain::make(4, 0));
        PairSet p;
        for (Vertex v = 0; v < 5; ++v) {
            p.push_back_sorted(v, IntervalSet{{1, 4}});
        }
        const auto choice = select_pivot({}, IntervalSet{{1, 4}}, p, PairSet{}, index);
        REQUIRE(choice);
        CHECK(choice->pivot == 0);
        CHECK(choice->suppressed == std::vector<Vertex>{1, 2, 3, 4});

        std::size_t root_children = 0;
        const auto r = run(g, 0, 1, true, false, [&](const CallState& s) { root_children += s.plex.size() == 1; });
        CHECK(root_children == 1);
        REQUIRE(r.records.size() == 1);
        CHECK(r.records[0] == PlexRecord{{0, 1, 2, 3, 4}, Interval(1, 4)});
    }

    TEST_CASE("triangle root pivot")
    {
        const auto g = triangle();
        const NonNeighborhoodIndex index(g, FrameDomain::make(6, 1));
        PairSet p;
        for (Vertex v = 0; v < 3; ++v) {
            p.push_back_sorted(v, IntervalSet{{1, 5}});
        }
        const auto choice = select_pivot({}, IntervalSet{{1, 5}}, p, PairSet{}, index);
        REQUIRE(choice);
        CHECK(choice->pivot == 0);
        CHECK(choice->suppressed.empty());
    }

    TEST_CASE("no candidates, no pivot")
    {
        const auto g = triangle();
        const NonNeighborhoodIndex index(g, FrameDomain::make(6, 1));
        CHECK_FALSE(select_pivot({}, IntervalSet{{1, 5}}, PairSet{}, PairSet({{0, {{1, 5}}}}), index));
    }

    TEST_CASE("pivot must cover the frames of what it suppresses")
    {
        // At C={c}, p=1 is adjacent to c on its frames [1,2] and to w=2 always,
        // yet w over [1,5] must still be explored: p cannot join beyond [1,2].
        const auto g = pivot_trap();
        const NonNeighborhoodIndex index(g, FrameDomain::make(5, 0));
        const std::vector<Vertex> plex{0};
        const PairSet p({{1, {{1, 2}}}, {2, {{1, 5}}}});
        const auto choice = select_pivot(plex, IntervalSet{{1, 5}}, p, PairSet{}, index);
        if (choice && choice->pivot == 1) {
            CHECK(choice->suppressed.empty());
        }
        const auto truth = oracle::enumerate_all_maximal(g, 0, 1);
        CHECK(std::find(truth.begin(), truth.end(), PlexRecord{{0, 2}, Interval(1, 5)}) != truth.end());
        CHECK(sorted(run(g, 0, 1, true).records) == truth);
    }

    TEST_CASE("suppressed candidates satisfy the pivot conditions")
    {
        const auto corpus = sweep_corpus(30, 23);
        std::size_t checked = 0;
        for (const auto& g : corpus) {
            const NonNeighborhoodIndex index(g, FrameDomain::make(g.lifetime(), 1));
            (void)run(g, 1, 2, false, false, [&](const CallState& s) {
                const auto choice = select_pivot(s.plex, s.frames, s.candidates, s.excluded, index);
                if (!choice) {
                    return;
                }
                const IntervalSet* pf = s.candidates.find(choice->pivot);
                if (!pf) {
                    pf = s.excluded.find(choice->pivot);
                }
                REQUIRE(pf != nullptr);
                for (Vertex c : s.plex) {
                    REQUIRE_FALSE(overlaps(*pf, index.non_neighbor_frames(choice->pivot, c)));
                }
                for (Vertex w : choice->suppressed) {
                    REQUIRE(w != choice->pivot);
                    const IntervalSet* wf = s.candidates.find(w);
                    REQUIRE(wf != nullptr);
                    REQUIRE(is_covered(*wf, *pf));
                    REQUIRE_FALSE(overlaps(*wf, index.non_neighbor_frames(choice->pivot, w)));
                    ++checked;
                }
            });
        }
        CHECK(checked > 0);
    }

    TEST_CASE("connected candidates")
    {
        const auto g = triangle();
        const NonNeighborhoodIndex index(g, FrameDomain::make(6, 1));
        const std::vector<Vertex> plex{0};
        const PairSet p({{1, {{1, 5}}}, {2, {{1, 5}}}});
        CHECK(connected_candidates(p, plex, IntervalSet{{1, 5}}, index) == p);
        CHECK(connected_candidates(p, {}, IntervalSet{{1, 5}}, index) == p);
        // b only over frames where it misses a.
        const PairSet hidden({{1, {{3, 4}}}, {2, {{3, 5}}}});
        CHECK(connected_candidates(hidden, plex, IntervalSet{{1, 5}}, index) == PairSet({{2, {{3, 5}}}}));
        // The plex frames restrict the search as well.
        CHECK(connected_candidates(p, plex, IntervalSet{{3, 4}}, index) == PairSet({{2, {{1, 5}}}}));
    }
}
