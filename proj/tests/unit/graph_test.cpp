#include <majcol/graph.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace majcol;

namespace {

auto edges(std::initializer_list<Edge> list) -> std::vector<Edge>
{
    return list;
}

} // namespace

TEST(Graph, SingleEdgeDegrees)
{
    auto g = Graph::build(2, edges({{1, 2}}));
    EXPECT_EQ(g.degree(1), 1u);
    EXPECT_EQ(g.degree(2), 1u);
    EXPECT_TRUE(g.adjacent(2, 1));
}

TEST(Graph, TriangleDegrees)
{
    auto g = Graph::build(3, edges({{1, 2}, {2, 3}, {1, 3}}));
    for (Vertex v = 1; v <= 3; ++v)
        EXPECT_EQ(g.degree(v), 2u);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(Graph, RejectsSelfLoop)
{
    try {
        Graph::build(3, edges({{1, 1}}));
        FAIL() << "self-loop accepted";
    }
    catch (const InputError & e) {
        EXPECT_EQ(e.path(), "/edges/0");
        EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
    }
}

TEST(Graph, RejectsOutOfRange)
{
    EXPECT_THROW(Graph::build(3, edges({{1, 4}})), InputError);
    EXPECT_THROW(Graph::build(3, edges({{0, 2}})), InputError);
    EXPECT_THROW(Digraph::build(2, edges({{3, 1}})), InputError);
}

TEST(Graph, CollapsesDuplicatesInEitherOrientation)
{
    auto g = Graph::build(3, edges({{1, 2}, {2, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.duplicates_collapsed(), 2u);
    EXPECT_EQ(g.degree(2), 2u);
}

TEST(Graph, EdgesAreNormalisedAndSorted)
{
    auto g = Graph::build(4, edges({{4, 1}, {3, 2}, {2, 1}}));
    EXPECT_EQ(g.edges(), edges({{1, 2}, {1, 4}, {2, 3}}));
}

TEST(Graph, InducedPrefixOfTriangle)
{
    auto g = Graph::build(3, edges({{1, 2}, {2, 3}, {1, 3}}));
    auto p = g.induced_prefix(2);
    EXPECT_EQ(p.order(), 2u);
    EXPECT_EQ(p.edges(), edges({{1, 2}}));
    EXPECT_EQ(g.induced_prefix(3), g);
}

TEST(Graph, InducedPrefixOfPathToOneVertex)
{
    auto g = Graph::build(3, edges({{1, 2}, {2, 3}}));
    auto p = g.induced_prefix(1);
    EXPECT_EQ(p.order(), 1u);
    EXPECT_EQ(p.edge_count(), 0u);
    EXPECT_THROW(g.induced_prefix(4), InputError);
}

TEST(Digraph, ArcsAndDegrees)
{
    auto d = Digraph::build(3, edges({{1, 2}, {2, 1}, {1, 3}, {1, 3}}));
    EXPECT_EQ(d.arc_count(), 3u);
    EXPECT_EQ(d.duplicates_collapsed(), 1u);
    EXPECT_EQ(d.out_degree(1), 2u);
    EXPECT_TRUE(d.has_arc(2, 1));
    EXPECT_FALSE(d.has_arc(3, 1));
    EXPECT_EQ(d.in_neighbours(3).size(), 1u);
    EXPECT_EQ(d.induced_prefix(2).arc_count(), 2u);
}

TEST(ReverseTopologicalOrder, Chain)
{
    auto d = Digraph::build(3, edges({{1, 2}, {2, 3}}));
    EXPECT_EQ(reverse_topological_order(d), (std::vector<Vertex>{3, 2, 1}));
}

TEST(ReverseTopologicalOrder, LowestReadyVertexFirst)
{
    auto d = Digraph::build(3, edges({{1, 2}, {1, 3}}));
    EXPECT_EQ(reverse_topological_order(d), (std::vector<Vertex>{2, 3, 1}));
}

TEST(ReverseTopologicalOrder, TwoCycle)
{
    auto d = Digraph::build(2, edges({{1, 2}, {2, 1}}));
    try {
        reverse_topological_order(d);
        FAIL() << "cycle accepted";
    }
    catch (const CycleError & e) {
        EXPECT_TRUE(e.vertex() == 1 || e.vertex() == 2);
    }
}

TEST(ReverseTopologicalOrder, CycleVertexLiesOnTheCycle)
{
    // 1 -> 2 -> 3 -> 2, with a tail 3 -> 4.
    auto d = Digraph::build(4, edges({{1, 2}, {2, 3}, {3, 2}, {3, 4}}));
    try {
        reverse_topological_order(d);
        FAIL();
    }
    catch (const CycleError & e) {
        EXPECT_TRUE(e.vertex() == 2 || e.vertex() == 3) << e.vertex();
    }
}

TEST(ReverseTopologicalOrder, EveryArcPointsBackwards)
{
    auto d = Digraph::build(6, edges({{6, 1}, {5, 2}, {4, 3}, {6, 5}, {2, 1}, {3, 2}}));
    auto order = reverse_topological_order(d);
    std::vector<std::size_t> position(7);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    for (auto & a : d.arcs())
        EXPECT_LT(position[a.second], position[a.first]);
}

TEST(EdgeList, ParsesCommentsAndOrderHeader)
{
    std::istringstream in("# order 5\n1 2\n\n# a comment\n2 3 # trailing\n");
    auto text = read_edge_list(in);
    EXPECT_EQ(text.order, 5u);
    EXPECT_EQ(text.edges, edges({{1, 2}, {2, 3}}));
}

TEST(EdgeList, OrderDefaultsToLargestEndpoint)
{
    std::istringstream in("1 4\n");
    EXPECT_EQ(read_edge_list(in).order, 4u);
}

TEST(EdgeList, MalformedLineNamesTheLine)
{
    std::istringstream in("1 2\n3\n");
    try {
        read_edge_list(in);
        FAIL();
    }
    catch (const InputError & e) {
        EXPECT_EQ(e.path(), "line 2");
    }
}

TEST(EdgeList, RejectsNonNumericLine)
{
    std::istringstream in("1 2\nfoo bar\n");
    EXPECT_THROW(read_edge_list(in), InputError);
}
