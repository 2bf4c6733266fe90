#include <majcol/random.hpp>

#include <algorithm>
#include <limits>
#include <numeric>

namespace majcol {

using std::size_t;
using std::uint64_t;
using std::vector;

auto mix64(uint64_t x) -> uint64_t
{
    // splitmix64 finaliser
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

auto hash_combine(uint64_t seed, uint64_t a, uint64_t b) -> uint64_t
{
    return mix64(mix64(mix64(seed) ^ a) ^ b);
}

auto Rng::below(uint64_t bound) -> uint64_t
{
    if (bound == 0)
        return 0;
    // rejection sampling keeps the result exactly uniform
    auto limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do
        x = _engine();
    while (x >= limit);
    return x % bound;
}

auto Rng::chance(double p) -> bool
{
    return static_cast<double>(_engine() >> 11) * 0x1.0p-53 < p;
}

auto random_graph(Rng & rng, size_t order, double edge_probability) -> Graph
{
    vector<Edge> edges;
    for (Vertex u = 1; u <= order; ++u)
        for (Vertex v = u + 1; v <= order; ++v)
            if (rng.chance(edge_probability))
                edges.push_back(Edge{u, v});
    return Graph::build(order, edges);
}

auto random_dag(Rng & rng, size_t order, double expected_out) -> Digraph
{
    vector<Vertex> position(order);
    std::iota(position.begin(), position.end(), Vertex{1});
    rng.shuffle(position);

    vector<Edge> arcs;
    for (size_t hi = 1; hi < order; ++hi) {
        double p = std::min(1.0, expected_out / static_cast<double>(hi));
        for (size_t lo = 0; lo < hi; ++lo)
            if (rng.chance(p))
                arcs.push_back(Edge{position[hi], position[lo]});
    }
    return Digraph::build(order, arcs);
}

auto random_lists(Rng & rng, size_t order, size_t size, size_t palette) -> ListSystem
{
    vector<vector<ColourId>> lists(order);
    vector<ColourId> all(palette);
    for (size_t c = 0; c < palette; ++c)
        all[c] = ColourId{static_cast<std::uint32_t>(c)};
    for (auto & l : lists) {
        // partial Fisher-Yates
        auto pool = all;
        for (size_t i = 0; i < size; ++i)
            std::swap(pool[i], pool[i + rng.below(palette - i)]);
        l.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    }
    return ListSystem(std::move(lists));
}

auto random_correspondence(Rng & rng, const Graph & graph, const ListSystem & lists, double density)
    -> CorrespondenceSystem
{
    CorrespondenceSystem result;
    for (auto & e : graph.edges()) {
        auto a = lists.list(e.first);
        vector<ColourId> b(lists.list(e.second).begin(), lists.list(e.second).end());
        rng.shuffle(b);
        size_t next = 0;
        for (auto c : a) {
            if (next == b.size())
                break;
            if (rng.chance(density))
                result.add(e.first, e.second, c, b[next++]);
        }
    }
    return result;
}

} // namespace majcol
