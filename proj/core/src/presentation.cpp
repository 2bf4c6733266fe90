#include <majcol/presentation.hpp>
#include <majcol/random.hpp>

#include <algorithm>
#include <cmath>

namespace majcol {

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace {

auto none(Vertex) -> bool { return false; }
auto all(Vertex) -> bool { return true; }
auto unbounded(Vertex) -> optional<Vertex> { return std::nullopt; }
auto no_lower(Vertex) -> vector<Vertex> { return {}; }

// Integers enumerated 0, 1, -1, 2, -2, ... as v_1, v_2, v_3, ...
auto integer_at(Vertex n) -> long long
{
    return n % 2 == 0 ? static_cast<long long>(n / 2) : -static_cast<long long>((n - 1) / 2);
}

auto index_of_integer(long long z) -> Vertex
{
    return static_cast<Vertex>(z > 0 ? 2 * z : 1 - 2 * z);
}

// Quarter-plane points enumerated by anti-diagonals (Cantor pairing).
struct Point
{
    long long x, y;
};

auto point_at(Vertex n) -> Point
{
    auto i = static_cast<long long>(n) - 1;
    auto d = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(i) + 1.0) - 1.0) / 2.0);
    while (d * (d + 1) / 2 > i)
        --d;
    while ((d + 1) * (d + 2) / 2 <= i)
        ++d;
    auto y = i - d * (d + 1) / 2;
    return {d - y, y};
}

auto index_of_point(Point p) -> Vertex
{
    auto d = p.x + p.y;
    return static_cast<Vertex>(d * (d + 1) / 2 + p.y + 1);
}

auto grid_neighbours(Vertex n) -> vector<Vertex>
{
    auto p = point_at(n);
    vector<Vertex> result;
    if (p.x > 0)
        result.push_back(index_of_point({p.x - 1, p.y}));
    if (p.y > 0)
        result.push_back(index_of_point({p.x, p.y - 1}));
    result.push_back(index_of_point({p.x + 1, p.y}));
    result.push_back(index_of_point({p.x, p.y + 1}));
    return result;
}

auto below(vector<Vertex> candidates, Vertex n) -> vector<Vertex>
{
    std::erase_if(candidates, [n](Vertex m) { return m >= n; });
    std::sort(candidates.begin(), candidates.end());
    return candidates;
}

auto closed_max(vector<Vertex> candidates, Vertex v) -> optional<Vertex>
{
    candidates.push_back(v);
    return *std::max_element(candidates.begin(), candidates.end());
}

} // namespace

auto builtin_family_names() -> vector<string>
{
    return {"ray", "two_way_path", "grid", "binary_tree", "star", "complete", "rado", "directed_ray", "directed_star",
        "random_dag"};
}

auto builtin_family(const string & name, const FamilyParams & params) -> CountablePresentation
{
    CountablePresentation p;
    p.name = name;
    p.params = params;
    p.lower_in = no_lower;
    p.infinite_degree = none;

    if (name == "ray") {
        p.lower = [](Vertex n) { return n > 1 ? vector<Vertex>{n - 1} : vector<Vertex>{}; };
        p.closure_bound = [](Vertex v) -> optional<Vertex> { return v + 1; };
    }
    else if (name == "two_way_path") {
        auto around = [](Vertex n) {
            auto z = integer_at(n);
            return vector<Vertex>{index_of_integer(z - 1), index_of_integer(z + 1)};
        };
        p.lower = [around](Vertex n) { return below(around(n), n); };
        p.closure_bound = [around](Vertex v) { return closed_max(around(v), v); };
    }
    else if (name == "grid") {
        p.lower = [](Vertex n) { return below(grid_neighbours(n), n); };
        p.closure_bound = [](Vertex v) { return closed_max(grid_neighbours(v), v); };
    }
    else if (name == "binary_tree") {
        p.lower = [](Vertex n) { return n > 1 ? vector<Vertex>{n / 2} : vector<Vertex>{}; };
        p.closure_bound = [](Vertex v) -> optional<Vertex> { return 2 * v + 1; };
    }
    else if (name == "star") {
        p.lower = [](Vertex n) { return n > 1 ? vector<Vertex>{1} : vector<Vertex>{}; };
        p.infinite_degree = [](Vertex v) { return v == 1; };
        p.closure_bound = [](Vertex v) -> optional<Vertex> {
            if (v == 1)
                return std::nullopt;
            return v;
        };
    }
    else if (name == "complete") {
        p.lower = [](Vertex n) {
            vector<Vertex> result(n - 1);
            for (Vertex m = 1; m < n; ++m)
                result[m - 1] = m;
            return result;
        };
        p.infinite_degree = all;
        p.closure_bound = unbounded;
    }
    else if (name == "rado") {
        // v_m ~ v_n (m < n) iff bit m-1 of n-1 is set.
        p.lower = [](Vertex n) {
            vector<Vertex> result;
            std::uint64_t bits = n - 1;
            for (Vertex m = 1; bits != 0 && m < n; ++m, bits >>= 1)
                if (bits & 1)
                    result.push_back(m);
            return result;
        };
        p.infinite_degree = all;
        p.closure_bound = unbounded;
    }
    else if (name == "directed_ray") {
        p.directed = p.acyclic = true;
        p.lower = no_lower;
        p.lower_in = [](Vertex n) { return n > 1 ? vector<Vertex>{n - 1} : vector<Vertex>{}; };
        p.closure_bound = [](Vertex v) -> optional<Vertex> { return v + 1; };
    }
    else if (name == "directed_star") {
        p.directed = p.acyclic = true;
        p.lower = no_lower;
        p.lower_in = [](Vertex n) { return n > 1 ? vector<Vertex>{1} : vector<Vertex>{}; };
        p.infinite_degree = [](Vertex v) { return v == 1; };
        p.closure_bound = [](Vertex v) -> optional<Vertex> {
            if (v == 1)
                return std::nullopt;
            return v;
        };
    }
    else if (name == "random_dag") {
        if (! (params.density >= 0.0 && params.density <= 1.0))
            throw InputError("/params/density", "density must lie in [0, 1]");
        p.directed = p.acyclic = true;
        auto seed = params.seed;
        auto threshold = params.density;
        p.lower = [seed, threshold](Vertex n) {
            vector<Vertex> result;
            for (Vertex m = 1; m < n; ++m)
                if (static_cast<double>(hash_combine(seed, m, n) >> 11) * 0x1.0p-53 < threshold)
                    result.push_back(m);
            return result;
        };
        p.closure_bound = [](Vertex v) -> optional<Vertex> { return v; };
    }
    else
        throw InputError("/family", "unknown family '" + name + "'");

    return p;
}

auto materialize_graph(const CountablePresentation & presentation, size_t n) -> Graph
{
    if (presentation.directed)
        throw InputError("/family", presentation.name + " is a directed presentation");
    if (n < 1)
        throw InputError("/n", "prefix length must be at least 1");
    vector<Edge> edges;
    for (Vertex v = 2; v <= n; ++v)
        for (auto m : presentation.lower(v))
            edges.push_back(Edge{m, v});
    return Graph::build(n, edges);
}

auto materialize_digraph(const CountablePresentation & presentation, size_t n) -> Digraph
{
    if (! presentation.directed)
        throw InputError("/family", presentation.name + " is an undirected presentation");
    if (n < 1)
        throw InputError("/n", "prefix length must be at least 1");
    vector<Edge> arcs;
    for (Vertex v = 2; v <= n; ++v) {
        for (auto m : presentation.lower(v))
            arcs.push_back(Edge{v, m});
        for (auto m : presentation.lower_in(v))
            arcs.push_back(Edge{m, v});
    }
    return Digraph::build(n, arcs);
}

} // namespace majcol
