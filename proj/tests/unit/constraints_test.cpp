#include <majcol/constraints.hpp>

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace majcol;
using gen::colours;

namespace {

constexpr ColourId a{0}, b{1}, c{2}, d{3};

auto pair_list(const CorrespondenceSystem & s, Vertex u, Vertex v) -> std::vector<ColourPair>
{
    return s.pairs(u, v);
}

} // namespace

TEST(Palette, IdsFollowSortedNames)
{
    Palette p({"red", "blue", "green", "blue"});
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ(p.name(ColourId{0}), "blue");
    EXPECT_EQ(p.id("red"), ColourId{2});
    EXPECT_FALSE(p.id("pink"));
}

TEST(Palette, GeneratedNames)
{
    auto p = Palette::generated(3);
    EXPECT_EQ(p.names(), (std::vector<std::string>{"c00", "c01", "c02"}));
}

TEST(ListSystem, ListsAreSortedAndUniform)
{
    ListSystem lists({colours({1, 0}), colours({2, 0})});
    EXPECT_EQ(std::vector<ColourId>(lists.list(1).begin(), lists.list(1).end()), colours({0, 1}));
    EXPECT_EQ(lists.uniform_size(), 2u);
    EXPECT_EQ(lists.colours(), colours({0, 1, 2}));
    EXPECT_TRUE(lists.contains(2, c));
    EXPECT_FALSE(lists.contains(2, b));
}

TEST(ListSystem, RejectsRepeatedColour)
{
    EXPECT_THROW(ListSystem({colours({0, 0})}), InputError);
}

TEST(ListSystem, MixedSizesAreNotUniform)
{
    ListSystem lists({colours({0}), colours({0, 1})});
    EXPECT_FALSE(lists.uniform_size());
}

TEST(IsBadEdge, ListModeMonochromatic)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    Constraints k(ListSystem::uniform(2, colours({0, 1})));
    EXPECT_TRUE(is_bad_edge(g, 1, 2, Colouring(colours({0, 0})), k));
    EXPECT_FALSE(is_bad_edge(g, 1, 2, Colouring(colours({0, 1})), k));
}

TEST(IsBadEdge, CorrespondencePairPresent)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    CorrespondenceSystem s;
    s.add(1, 2, a, b);
    Constraints k(ListSystem::uniform(2, colours({0, 1})), s);
    EXPECT_TRUE(is_bad_edge(g, 1, 2, Colouring(colours({0, 1})), k));
    EXPECT_FALSE(is_bad_edge(g, 1, 2, Colouring(colours({0, 0})), k));
    // Orientation is respected: (b at 1, a at 2) is not the stored pair.
    EXPECT_FALSE(is_bad_edge(g, 1, 2, Colouring(colours({1, 0})), k));
    EXPECT_TRUE(is_bad_edge(g, 2, 1, Colouring(colours({0, 1})), k));
}

TEST(IsBadEdge, RejectsNonEdgeAndUncoloured)
{
    auto g = Graph::build(3, std::vector<Edge>{{1, 2}});
    Constraints k(ListSystem::uniform(3, colours({0, 1})));
    EXPECT_THROW(is_bad_edge(g, 1, 3, Colouring(colours({0, 0, 0})), k), InputError);
    Colouring partial(3);
    partial.assign(1, a);
    EXPECT_THROW(is_bad_edge(g, 1, 2, partial, k), InputError);
}

TEST(ListToCorrespondence, Intersection)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    ListSystem lists({colours({0, 1}), colours({1, 2})});
    auto s = list_to_correspondence(lists, g);
    EXPECT_EQ(pair_list(s, 1, 2), (std::vector<ColourPair>{{b, b}}));
}

TEST(ListToCorrespondence, DisjointListsGiveNoPairs)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    ListSystem lists({colours({0, 1}), colours({2, 3})});
    EXPECT_TRUE(pair_list(list_to_correspondence(lists, g), 1, 2).empty());
}

TEST(ListToCorrespondence, IdentityMatching)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    auto s = list_to_correspondence(ListSystem::uniform(2, colours({0, 1})), g);
    EXPECT_EQ(pair_list(s, 1, 2), (std::vector<ColourPair>{{a, a}, {b, b}}));
    EXPECT_EQ(pair_list(s, 2, 1), (std::vector<ColourPair>{{a, a}, {b, b}}));
}

TEST(Correspondence, PairsAreOrientedOnRequest)
{
    CorrespondenceSystem s;
    s.add(3, 1, a, b); // a at 3, b at 1
    EXPECT_EQ(pair_list(s, 1, 3), (std::vector<ColourPair>{{b, a}}));
    EXPECT_EQ(pair_list(s, 3, 1), (std::vector<ColourPair>{{a, b}}));
    EXPECT_TRUE(s.bad(3, a, 1, b));
    EXPECT_EQ(s.partner(1, 3, a), b);
    EXPECT_EQ(s.edge_keys(), (std::vector<Edge>{{1, 3}}));
}

TEST(ValidateCorrespondence, ColourOfLowerEndpointTwice)
{
    CorrespondenceSystem s;
    s.add(1, 2, a, b);
    s.add(1, 2, a, c);
    auto lists = ListSystem::uniform(2, colours({0, 1, 2}));
    auto v = validate_correspondence(s, lists);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, CorrespondenceViolation::Kind::repeated_at_lower);
    EXPECT_EQ(v[0].vertex, 1u);
    EXPECT_EQ(v[0].colour, a);
}

TEST(ValidateCorrespondence, ColourOfHigherEndpointTwice)
{
    CorrespondenceSystem s;
    s.add(1, 2, a, b);
    s.add(1, 2, c, b);
    auto v = validate_correspondence(s, ListSystem::uniform(2, colours({0, 1, 2})));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].kind, CorrespondenceViolation::Kind::repeated_at_higher);
    EXPECT_EQ(v[0].vertex, 2u);
    EXPECT_EQ(v[0].colour, b);
}

TEST(ValidateCorrespondence, SwapIsAValidMatching)
{
    CorrespondenceSystem s;
    s.add(1, 2, a, b);
    s.add(1, 2, b, a);
    EXPECT_TRUE(validate_correspondence(s, ListSystem::uniform(2, colours({0, 1}))).empty());
}

TEST(ValidateCorrespondence, ColourOutsideListAndNonEdge)
{
    CorrespondenceSystem s;
    s.add(1, 2, a, d);
    s.add(2, 3, a, a);
    auto host = Graph::build(3, std::vector<Edge>{{1, 2}});
    auto v = validate_correspondence(s, ListSystem::uniform(3, colours({0, 1})), &host);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0].kind, CorrespondenceViolation::Kind::not_in_list);
    EXPECT_EQ(v[1].kind, CorrespondenceViolation::Kind::not_an_edge);
}

TEST(Constraints, InvalidSystemIsRejected)
{
    CorrespondenceSystem s;
    s.add(1, 2, a, b);
    s.add(1, 2, a, c);
    EXPECT_THROW(Constraints(ListSystem::uniform(2, colours({0, 1, 2})), s), InputError);
}

TEST(VerifyMajority, ProperPathPasses)
{
    auto g = Graph::build(3, std::vector<Edge>{{1, 2}, {2, 3}});
    Constraints k(ListSystem::uniform(3, colours({0, 1})));
    auto report = verify_majority(g, Colouring(colours({0, 1, 0})), k, 2);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.vertices[1].conflicts, 0u);
    EXPECT_EQ(report.vertices[1].degree, 2u);
}

TEST(VerifyMajority, MonochromaticTriangleFailsEverywhere)
{
    auto g = Graph::build(3, std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}});
    Constraints k(ListSystem::uniform(3, colours({0, 1})));
    auto report = verify_majority(g, Colouring(colours({0, 0, 0})), k, 2);
    EXPECT_FALSE(report.pass);
    EXPECT_EQ(report.failing(), (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(report.total_conflicts(), 6u);
}

TEST(VerifyMajority, ExactlyHalfPasses)
{
    auto g = Graph::build(5, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    Constraints k(ListSystem::uniform(5, colours({0, 1})));
    auto report = verify_majority(g, Colouring(colours({0, 0, 0, 1, 1})), k, 2);
    EXPECT_TRUE(report.vertices[0].pass);
    EXPECT_EQ(report.vertices[0].conflicts, 2u);
    EXPECT_EQ(report.vertices[0].degree, 4u);
}

TEST(VerifyMajority, ThresholdUsesIntegerCrossMultiplication)
{
    // Degree 3, k = 2: one conflict passes (2 <= 3), two fail (4 > 3).
    auto g = Graph::build(4, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
    Constraints k(ListSystem::uniform(4, colours({0, 1})));
    EXPECT_TRUE(verify_majority(g, Colouring(colours({0, 0, 1, 1})), k, 2).vertices[0].pass);
    EXPECT_FALSE(verify_majority(g, Colouring(colours({0, 0, 0, 1})), k, 2).vertices[0].pass);
    // k = 3: one conflict of degree 3 is exactly a third.
    EXPECT_TRUE(verify_majority(g, Colouring(colours({0, 0, 1, 1})), k, 3).vertices[0].pass);
}

TEST(VerifyMajority, IsolatedVertexPassesVacuously)
{
    auto g = Graph::build(1, std::vector<Edge>{});
    Constraints k(ListSystem::uniform(1, colours({0, 1})));
    EXPECT_TRUE(verify_majority(g, Colouring(colours({1})), k, 2).pass);
}

TEST(VerifyMajority, DirectedCountsOutArcsOnly)
{
    auto d = Digraph::build(3, std::vector<Edge>{{1, 2}, {3, 1}});
    Constraints k(ListSystem::uniform(3, colours({0, 1})));
    auto report = verify_majority(d, Colouring(colours({0, 0, 0})), k, 2);
    EXPECT_EQ(report.vertices[0].degree, 1u);
    EXPECT_EQ(report.vertices[0].conflicts, 1u);
    EXPECT_FALSE(report.vertices[0].pass);
    EXPECT_TRUE(report.vertices[1].pass);
    EXPECT_FALSE(report.vertices[2].pass);
}

TEST(VerifyMajority, InputErrors)
{
    auto g = Graph::build(2, std::vector<Edge>{{1, 2}});
    Constraints k(ListSystem::uniform(2, colours({0, 1})));
    EXPECT_THROW(verify_majority(g, Colouring(colours({0, 1})), k, 1), InputError);
    EXPECT_THROW(verify_majority(g, Colouring(colours({0, 2})), k, 2), InputError);
    EXPECT_THROW(verify_majority(g, Colouring(2), k, 2), InputError);
}
