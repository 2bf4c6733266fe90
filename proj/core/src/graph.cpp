#include <majcol/graph.hpp>

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>

namespace majcol {

using std::size_t;
using std::string;
using std::vector;

namespace detail {

Adjacency::Adjacency(size_t order, const vector<Edge> & arcs) :
    _offsets(order + 1, 0)
{
    vector<size_t> counts(order + 1, 0);
    for (auto & a : arcs)
        ++counts[a.first];
    for (size_t v = 1; v <= order; ++v)
        _offsets[v] = _offsets[v - 1] + counts[v];

    _targets.resize(arcs.size());
    vector<size_t> fill(_offsets.begin(), _offsets.end() - 1);
    for (auto & a : arcs)
        _targets[fill[a.first - 1]++] = a.second;

    for (size_t v = 1; v <= order; ++v)
        std::sort(_targets.begin() + _offsets[v - 1], _targets.begin() + _offsets[v]);
}

auto Adjacency::row(Vertex v) const -> std::span<const Vertex>
{
    return {_targets.data() + _offsets[v - 1], _offsets[v] - _offsets[v - 1]};
}

auto Adjacency::contains(Vertex from, Vertex to) const -> bool
{
    if (from < 1 || from > order())
        return false;
    auto r = row(from);
    return std::binary_search(r.begin(), r.end(), to);
}

} // namespace detail

namespace {

auto check_endpoints(size_t order, const Edge & e, size_t index) -> void
{
    auto where = "/edges/" + std::to_string(index);
    if (e.first < 1 || e.first > order || e.second < 1 || e.second > order)
        throw InputError(where, "endpoint out of range in (" + std::to_string(e.first) + "," +
                std::to_string(e.second) + ") for order " + std::to_string(order));
    if (e.first == e.second)
        throw InputError(where, "self-loop (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
}

auto collapse(vector<Edge> & edges) -> size_t
{
    std::sort(edges.begin(), edges.end());
    auto before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return before - edges.size();
}

} // namespace

auto Graph::build(size_t order, std::span<const Edge> edges) -> Graph
{
    Graph g;
    g._edges.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        check_endpoints(order, edges[i], i);
        auto [u, v] = edges[i];
        g._edges.push_back(Edge{std::min(u, v), std::max(u, v)});
    }
    g._duplicates = collapse(g._edges);

    vector<Edge> arcs;
    arcs.reserve(2 * g._edges.size());
    for (auto & e : g._edges) {
        arcs.push_back(e);
        arcs.push_back(Edge{e.second, e.first});
    }
    g._adjacency = detail::Adjacency(order, arcs);
    return g;
}

auto Graph::induced_prefix(size_t n) const -> Graph
{
    if (n < 1 || n > order())
        throw InputError("", "prefix length " + std::to_string(n) + " outside [1," + std::to_string(order()) + "]");
    vector<Edge> kept;
    for (auto & e : _edges)
        if (e.second <= n)
            kept.push_back(e);
    return build(n, kept);
}

auto Digraph::build(size_t order, std::span<const Edge> arcs) -> Digraph
{
    Digraph d;
    d._arcs.reserve(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i) {
        check_endpoints(order, arcs[i], i);
        d._arcs.push_back(arcs[i]);
    }
    d._duplicates = collapse(d._arcs);

    vector<Edge> reversed;
    reversed.reserve(d._arcs.size());
    for (auto & a : d._arcs)
        reversed.push_back(Edge{a.second, a.first});
    d._out = detail::Adjacency(order, d._arcs);
    d._in = detail::Adjacency(order, reversed);
    return d;
}

auto Digraph::induced_prefix(size_t n) const -> Digraph
{
    if (n < 1 || n > order())
        throw InputError("", "prefix length " + std::to_string(n) + " outside [1," + std::to_string(order()) + "]");
    vector<Edge> kept;
    for (auto & a : _arcs)
        if (a.first <= n && a.second <= n)
            kept.push_back(a);
    return build(n, kept);
}

auto reverse_topological_order(const Digraph & digraph) -> vector<Vertex>
{
    auto n = digraph.order();
    vector<size_t> pending(n + 1, 0);
    std::priority_queue<Vertex, vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 1; v <= n; ++v) {
        pending[v] = digraph.out_degree(v);
        if (pending[v] == 0)
            ready.push(v);
    }

    vector<Vertex> order;
    order.reserve(n);
    while (! ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto u : digraph.in_neighbours(v))
            if (--pending[u] == 0)
                ready.push(u);
    }

    if (order.size() != n) {
        // Every stuck vertex still has a stuck out-neighbour, so walking
        // forward must revisit something, and that vertex is on a cycle.
        vector<char> seen(n + 1, 0);
        Vertex v = 1;
        while (pending[v] == 0)
            ++v;
        while (! seen[v]) {
            seen[v] = 1;
            for (auto w : digraph.out_neighbours(v))
                if (pending[w] != 0) {
                    v = w;
                    break;
                }
        }
        throw CycleError(v);
    }
    return order;
}

auto read_edge_list(std::istream & in) -> EdgeListText
{
    EdgeListText result;
    string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        auto hash = line.find('#');
        if (hash != string::npos) {
            std::istringstream header(line.substr(hash + 1));
            string word;
            size_t declared = 0;
            if (header >> word && word == "order" && header >> declared)
                result.order = std::max(result.order, declared);
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == string::npos)
            continue;
        std::istringstream fields(line);
        long long u = 0, v = 0;
        string rest;
        if (! (fields >> u) || ! (fields >> v) || (fields >> rest))
            throw InputError("line " + std::to_string(line_number), "expected exactly two vertex ids");
        if (u < 1 || v < 1)
            throw InputError("line " + std::to_string(line_number), "vertex ids are 1-based");
        result.edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
        result.order = std::max<size_t>(result.order, static_cast<size_t>(std::max(u, v)));
    }
    return result;
}

} // namespace majcol
