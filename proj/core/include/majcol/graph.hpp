#pragma once

#include <majcol/types.hpp>

#include <cstddef>
#include <istream>
#include <span>
#include <vector>

namespace majcol {

namespace detail {

// Compressed adjacency over vertices 1..order, each row sorted ascending.
class Adjacency
{
public:
    Adjacency() = default;
    Adjacency(std::size_t order, const std::vector<Edge> & arcs);

    auto order() const -> std::size_t { return _offsets.empty() ? 0 : _offsets.size() - 1; }
    auto row(Vertex v) const -> std::span<const Vertex>;
    auto contains(Vertex from, Vertex to) const -> bool;

    friend auto operator==(const Adjacency &, const Adjacency &) -> bool = default;

private:
    std::vector<std::size_t> _offsets;
    std::vector<Vertex> _targets;
};

} // namespace detail

class Graph
{
public:
    Graph() = default;

    // Validates endpoints and self-loops. Duplicate edges, in either
    // orientation, are collapsed and counted in duplicates_collapsed().
    static auto build(std::size_t order, std::span<const Edge> edges) -> Graph;

    auto order() const -> std::size_t { return _adjacency.order(); }
    auto edge_count() const -> std::size_t { return _edges.size(); }
    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency.row(v); }
    auto degree(Vertex v) const -> std::size_t { return neighbours(v).size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool { return _adjacency.contains(u, v); }
    auto duplicates_collapsed() const -> std::size_t { return _duplicates; }

    // Subgraph induced by v_1..v_n.
    auto induced_prefix(std::size_t n) const -> Graph;

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._edges == b._edges && a.order() == b.order();
    }

private:
    std::vector<Edge> _edges;
    detail::Adjacency _adjacency;
    std::size_t _duplicates = 0;
};

class Digraph
{
public:
    Digraph() = default;

    static auto build(std::size_t order, std::span<const Edge> arcs) -> Digraph;

    auto order() const -> std::size_t { return _out.order(); }
    auto arc_count() const -> std::size_t { return _arcs.size(); }
    auto arcs() const -> const std::vector<Edge> & { return _arcs; }
    auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return _out.row(v); }
    auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return _in.row(v); }
    auto out_degree(Vertex v) const -> std::size_t { return out_neighbours(v).size(); }
    auto has_arc(Vertex from, Vertex to) const -> bool { return _out.contains(from, to); }
    auto duplicates_collapsed() const -> std::size_t { return _duplicates; }

    auto induced_prefix(std::size_t n) const -> Digraph;

    friend auto operator==(const Digraph & a, const Digraph & b) -> bool
    {
        return a._arcs == b._arcs && a.order() == b.order();
    }

private:
    std::vector<Edge> _arcs;
    detail::Adjacency _out, _in;
    std::size_t _duplicates = 0;
};

// Every vertex appears after all of its out-neighbours. Among the vertices
// that are ready, the lowest index is emitted first. Throws CycleError
// naming a vertex that lies on a directed cycle.
auto reverse_topological_order(const Digraph & digraph) -> std::vector<Vertex>;

struct EdgeListText
{
    std::size_t order = 0;
    std::vector<Edge> edges;
};

// One "u v" pair per line; '#' starts a comment. The order is the largest
// endpoint seen unless a "# order N" header line raises it.
auto read_edge_list(std::istream & in) -> EdgeListText;

} // namespace majcol
