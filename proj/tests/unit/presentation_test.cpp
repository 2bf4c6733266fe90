#include <majcol/presentation.hpp>

#include <gtest/gtest.h>

using namespace majcol;

TEST(Presentation, RayPrefixIsAPath)
{
    auto g = materialize_graph(builtin_family("ray"), 3);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(Presentation, StarPrefixCentredAtOne)
{
    auto g = materialize_graph(builtin_family("star"), 4);
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}}));
    EXPECT_EQ(g.degree(1), 3u);
}

TEST(Presentation, RadoFollowsTheBitPredicate)
{
    auto rado = builtin_family("rado");
    auto g = materialize_graph(rado, 40);
    for (Vertex n = 2; n <= 40; ++n)
        for (Vertex m = 1; m < n; ++m)
            EXPECT_EQ(g.adjacent(m, n), bool((std::uint64_t{n} - 1) >> (m - 1) & 1)) << m << " " << n;
    EXPECT_EQ(materialize_graph(rado, 3).edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
}

TEST(Presentation, PrefixesAreConsistent)
{
    for (auto & name : builtin_family_names()) {
        auto p = builtin_family(name, FamilyParams{5, 0.3});
        if (p.directed) {
            auto big = materialize_digraph(p, 60);
            for (std::size_t n : {1u, 7u, 31u})
                EXPECT_EQ(materialize_digraph(p, n), big.induced_prefix(n)) << name;
        }
        else {
            auto big = materialize_graph(p, 60);
            for (std::size_t n : {1u, 7u, 31u})
                EXPECT_EQ(materialize_graph(p, n), big.induced_prefix(n)) << name;
        }
    }
}

TEST(Presentation, LowerNeighbourhoodsStayBelow)
{
    for (auto & name : builtin_family_names()) {
        auto p = builtin_family(name, FamilyParams{3, 0.5});
        for (Vertex n = 1; n <= 100; ++n)
            for (auto m : p.lower(n))
                EXPECT_TRUE(m >= 1 && m < n) << name << " " << n;
    }
}

TEST(Presentation, DeclaredInfiniteDegree)
{
    auto star = builtin_family("star");
    EXPECT_TRUE(star.infinite_degree(1));
    for (Vertex v = 2; v < 50; ++v)
        EXPECT_FALSE(star.infinite_degree(v));
    auto ray = builtin_family("ray");
    auto complete = builtin_family("complete");
    for (Vertex v = 1; v < 50; ++v) {
        EXPECT_FALSE(ray.infinite_degree(v));
        EXPECT_TRUE(complete.infinite_degree(v));
    }
}

TEST(Presentation, ClosureBoundCoversTheNeighbourhood)
{
    for (auto & name : {"ray", "two_way_path", "grid", "binary_tree", "directed_ray", "random_dag"}) {
        auto p = builtin_family(name, FamilyParams{9, 0.4});
        const std::size_t big = 2000;
        Graph g;
        Digraph d;
        if (p.directed)
            d = materialize_digraph(p, big);
        else
            g = materialize_graph(p, big);
        for (Vertex v = 1; v <= 100; ++v) {
            auto bound = p.closure_bound(v);
            ASSERT_TRUE(bound) << name << " " << v;
            Vertex highest = v;
            for (auto u : p.directed ? d.out_neighbours(v) : g.neighbours(v))
                highest = std::max(highest, u);
            EXPECT_EQ(*bound, highest) << name << " " << v;
        }
    }
}

TEST(Presentation, GridDegrees)
{
    auto g = materialize_graph(builtin_family("grid"), 300);
    EXPECT_EQ(g.degree(1), 2u);
    std::size_t fours = 0;
    for (Vertex v = 1; v <= 50; ++v) {
        EXPECT_LE(g.degree(v), 4u);
        fours += g.degree(v) == 4;
    }
    EXPECT_GT(fours, 0u);
}

TEST(Presentation, BinaryTreeIsAHeap)
{
    auto g = materialize_graph(builtin_family("binary_tree"), 15);
    for (Vertex v = 2; v <= 15; ++v)
        EXPECT_TRUE(g.adjacent(v / 2, v));
    EXPECT_EQ(g.edge_count(), 14u);
}

TEST(Presentation, RandomDagDependsOnSeedAndIsAcyclic)
{
    auto p1 = builtin_family("random_dag", FamilyParams{1, 0.3});
    auto p2 = builtin_family("random_dag", FamilyParams{2, 0.3});
    EXPECT_TRUE(p1.directed && p1.acyclic);
    auto d1 = materialize_digraph(p1, 80);
    EXPECT_NE(d1, materialize_digraph(p2, 80));
    for (auto & arc : d1.arcs())
        EXPECT_GT(arc.first, arc.second);
    EXPECT_EQ(reverse_topological_order(d1).size(), 80u);
}

TEST(Presentation, Errors)
{
    EXPECT_THROW(builtin_family("petersen"), InputError);
    EXPECT_THROW(builtin_family("random_dag", FamilyParams{1, 1.5}), InputError);
    EXPECT_THROW(materialize_graph(builtin_family("ray"), 0), InputError);
    EXPECT_THROW(materialize_graph(builtin_family("directed_ray"), 4), InputError);
    EXPECT_THROW(materialize_digraph(builtin_family("ray"), 4), InputError);
}
