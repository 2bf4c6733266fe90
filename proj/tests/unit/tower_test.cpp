#include <majcol/tower.hpp>
#include <majcol/solver.hpp>

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace majcol;
using gen::colours;

namespace {

constexpr ColourId a{0}, b{1};

auto synthetic(std::vector<Colouring> colourings) -> TowerTrace
{
    TowerTrace trace;
    trace.n_max = colourings.size();
    trace.colourings = std::move(colourings);
    trace.majority.assign(trace.n_max, true);
    trace.conflicts.assign(trace.n_max, 0);
    return trace;
}

auto restricted_two_lists(std::size_t n) -> Constraints
{
    return Constraints(ListSystem::uniform(n, colours({0, 1})));
}

} // namespace

TEST(PrefixColourings, RayPrefixesAreMajority)
{
    auto trace = prefix_colourings(builtin_family("ray"), restricted_two_lists(3), 2, 3);
    ASSERT_EQ(trace.colourings.size(), 3u);
    for (std::size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(trace.at(n).order(), n);
        EXPECT_TRUE(trace.majority[n - 1]);
    }
}

TEST(PrefixColourings, SingleVertex)
{
    auto trace = prefix_colourings(builtin_family("ray"), restricted_two_lists(1), 2, 1);
    ASSERT_EQ(trace.colourings.size(), 1u);
    EXPECT_EQ(trace.at(1)[1], a);
}

TEST(PrefixColourings, StarCentreConflicts)
{
    auto star = builtin_family("star");
    auto k = restricted_two_lists(5);
    auto trace = prefix_colourings(star, k, 2, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto g = materialize_graph(star, n);
        auto report = verify_majority(g, trace.at(n), k, 2);
        EXPECT_TRUE(report.pass);
        EXPECT_LE(report.vertices[0].conflicts, (n - 1) / 2) << n;
    }
}

TEST(PrefixColourings, DirectedUsesDagGreedy)
{
    auto p = builtin_family("random_dag", FamilyParams{4, 0.2});
    auto k = restricted_two_lists(60);
    auto trace = prefix_colourings(p, k, 2, 60);
    for (std::size_t n = 1; n <= 60; n += 7)
        EXPECT_EQ(trace.at(n), dag_greedy(materialize_digraph(p, n), k, 2));
    for (bool ok : trace.majority)
        EXPECT_TRUE(ok);
}

TEST(PrefixColourings, RejectsCyclicDirectedPresentation)
{
    auto p = builtin_family("directed_ray");
    p.acyclic = false;
    EXPECT_THROW(prefix_colourings(p, restricted_two_lists(4), 2, 4), InputError);
}

TEST(PrefixColourings, RejectsShortOrMixedLists)
{
    auto ray = builtin_family("ray");
    EXPECT_THROW(prefix_colourings(ray, restricted_two_lists(3), 2, 4), InputError);
    EXPECT_THROW(prefix_colourings(ray, Constraints(ListSystem({colours({0, 1}), colours({0})})), 2, 2), InputError);
}

TEST(Stabilize, FullAgreement)
{
    std::vector<Colouring> cs;
    for (std::size_t n = 1; n <= 10; ++n) {
        Colouring chi(n);
        for (Vertex v = 1; v <= n; ++v)
            chi.assign(v, v % 2 ? a : b);
        cs.push_back(chi);
    }
    auto s = stabilize(synthetic(cs), 4, 2);
    EXPECT_EQ(s.length, 4u);
    EXPECT_FALSE(s.truncated);
    EXPECT_EQ(s.colouring, cs.back().prefix(4));
    EXPECT_EQ(s.survivors.size(), 5u);
    EXPECT_EQ(s.final_survivors(), s.survivors.front());
    EXPECT_EQ(s.survivors.front(), (std::vector<std::size_t>{4, 5, 6, 7, 8, 9, 10}));
}

TEST(Stabilize, AlternatingClasses)
{
    // Odd n colour everything a, even n everything b; t = 3 leaves n = 3..10.
    std::vector<Colouring> cs;
    for (std::size_t n = 1; n <= 10; ++n)
        cs.push_back(Colouring(std::vector<ColourId>(n, n % 2 ? a : b)));
    auto s = stabilize(synthetic(cs), 3, 2);
    EXPECT_EQ(s.length, 3u);
    // Four odd and four even survivors: the tie goes to the lower colour.
    EXPECT_EQ(s.colouring.colours(), colours({0, 0, 0}));
    ASSERT_EQ(s.survivors.size(), 4u);
    EXPECT_EQ(s.survivors[0].size(), 8u);
    for (std::size_t j = 1; j <= 3; ++j)
        EXPECT_EQ(s.survivors[j], (std::vector<std::size_t>{3, 5, 7, 9}));
}

TEST(Stabilize, MajorityClassWins)
{
    std::vector<Colouring> cs;
    for (std::size_t n = 1; n <= 9; ++n)
        cs.push_back(Colouring(std::vector<ColourId>(n, n % 3 == 0 ? a : b)));
    auto s = stabilize(synthetic(cs), 2, 1);
    EXPECT_EQ(s.colouring.colours(), colours({1, 1}));
    EXPECT_EQ(s.final_survivors(), (std::vector<std::size_t>{2, 4, 5, 7, 8}));
}

TEST(Stabilize, FloorUnattainableTruncatesAtZero)
{
    std::vector<Colouring> cs;
    for (std::size_t n = 1; n <= 6; ++n)
        cs.push_back(Colouring(std::vector<ColourId>(n, n % 2 ? a : b)));
    auto s = stabilize(synthetic(cs), 1, 6);
    EXPECT_TRUE(s.truncated);
    EXPECT_EQ(s.length, 0u);
    EXPECT_EQ(s.colouring.order(), 0u);
}

TEST(Stabilize, InputErrors)
{
    auto trace = synthetic({Colouring(colours({0})), Colouring(colours({0, 1}))});
    EXPECT_THROW(stabilize(trace, 3, 1), InputError);
    EXPECT_THROW(stabilize(trace, 0, 1), InputError);
    EXPECT_THROW(stabilize(trace, 1, 0), InputError);
}

TEST(Certify, RayEnclosedVerticesPass)
{
    TowerConfig config;
    config.family = "ray";
    config.n_max = 512;
    config.t = 32;
    config.survivor_floor = 8;
    auto run = run_tower(config);
    ASSERT_GE(run.stabilized.length, 1u);
    auto & r = run.certificate;
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.infinite.empty());
    std::vector<Vertex> enclosed;
    for (auto & e : r.enclosed) {
        EXPECT_TRUE(e.pass) << e.vertex;
        enclosed.push_back(e.vertex);
    }
    if (run.stabilized.length == 32) {
        for (Vertex v = 2; v <= 31; ++v)
            EXPECT_NE(std::find(enclosed.begin(), enclosed.end(), v), enclosed.end()) << v;
        EXPECT_EQ(r.not_enclosed, (std::vector<Vertex>{32}));
    }
}

TEST(Certify, StarWitnessesAtALongHorizon)
{
    TowerConfig config;
    config.family = "star";
    config.n_max = 128;
    config.t = 16;
    config.horizon = 1000;
    auto run = run_tower(config);
    ASSERT_EQ(run.certificate.infinite.size(), 1u);
    auto & check = run.certificate.infinite[0];
    EXPECT_EQ(check.vertex, 1u);
    auto & ledger = run.restriction.ledger;
    auto * entry = ledger.entry(0, run.stabilized.colouring[1]);
    ASSERT_NE(entry, nullptr);
    EXPECT_GE(check.witness_count, entry->processed - entry->shortfalls);
    EXPECT_EQ(check.witness_violations, 0u);
    EXPECT_TRUE(check.pass);
}

TEST(Certify, RefusesWithoutALedgerFamily)
{
    auto star = builtin_family("star");
    auto k = restricted_two_lists(20);
    auto trace = prefix_colourings(star, k, 2, 20);
    auto s = stabilize(trace, 4, 2);
    WitnessLedger empty;
    EXPECT_THROW(certify(CertificationInput{star, trace, s, k, nullptr, empty, 2, 20}), CertificationRefused);
}

TEST(Certify, HorizonBelowTIsAnInputError)
{
    auto ray = builtin_family("ray");
    auto k = restricted_two_lists(20);
    auto trace = prefix_colourings(ray, k, 2, 20);
    auto s = stabilize(trace, 8, 2);
    WitnessLedger empty;
    EXPECT_THROW(certify(CertificationInput{ray, trace, s, k, nullptr, empty, 2, 4}), InputError);
}

TEST(RunTower, CorrespondenceModePasses)
{
    for (auto family : {"ray", "star", "complete", "binary_tree"}) {
        TowerConfig config;
        config.family = family;
        config.mode = Mode::correspondence;
        config.n_max = 128;
        config.t = 16;
        auto run = run_tower(config);
        EXPECT_TRUE(run.certificate.pass) << family;
        for (bool ok : run.trace.majority)
            EXPECT_TRUE(ok) << family;
        EXPECT_EQ(run.restricted.mode(), Mode::correspondence);
    }
}

TEST(RunTower, DirectedFamiliesPass)
{
    for (auto family : {"directed_ray", "directed_star", "random_dag"}) {
        TowerConfig config;
        config.family = family;
        config.n_max = 128;
        config.t = 16;
        auto run = run_tower(config);
        EXPECT_TRUE(run.certificate.pass) << family;
    }
}

TEST(RunTower, HigherK)
{
    TowerConfig config;
    config.family = "grid";
    config.k = 3;
    config.n_max = 200;
    config.t = 20;
    auto run = run_tower(config);
    EXPECT_EQ(run.config.list_size, 4u);
    EXPECT_EQ(run.restricted.lists().uniform_size(), 3u);
    EXPECT_TRUE(run.certificate.pass);
}

TEST(RunTower, ListsTooShortToRestrict)
{
    TowerConfig config;
    config.list_size = 2;
    EXPECT_THROW(run_tower(config), InputError);
}

TEST(RunTower, ListsArePrefixConsistent)
{
    auto small = presentation_lists(3, 50, 3, 5);
    auto large = presentation_lists(3, 200, 3, 5);
    EXPECT_EQ(small, large.prefix(50));
    auto star = builtin_family("star");
    auto cs = presentation_correspondence(3, star, 50, small);
    auto cl = presentation_correspondence(3, star, 200, large);
    for (Vertex v = 2; v <= 50; ++v)
        EXPECT_EQ(cs.pairs(1, v), cl.pairs(1, v));
}
