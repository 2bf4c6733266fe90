#pragma once

#include <majcol/constraints.hpp>
#include <majcol/graph.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace majcol {

// Stateless mixing used where a value must be a pure function of its
// arguments (lazily presented graphs must be prefix-consistent).
auto mix64(std::uint64_t x) -> std::uint64_t;
auto hash_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) -> std::uint64_t;

// mt19937_64 with sampling helpers whose results do not depend on the
// standard library's distribution implementations.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    auto next() -> std::uint64_t { return _engine(); }
    // Uniform in [0, bound).
    auto below(std::uint64_t bound) -> std::uint64_t;
    auto between(std::uint64_t lo, std::uint64_t hi) -> std::uint64_t { return lo + below(hi - lo + 1); }
    auto chance(double p) -> bool;

    template <typename T>
    auto shuffle(std::vector<T> & items) -> void
    {
        for (auto i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 _engine;
};

// Erdos-Renyi G(n, p).
auto random_graph(Rng & rng, std::size_t order, double edge_probability) -> Graph;

// Acyclic digraph: arcs from higher to lower positions of a random
// permutation, each present with the given probability. `expected_out` is
// an alternative density expressed as mean out-degree.
auto random_dag(Rng & rng, std::size_t order, double expected_out) -> Digraph;

// Each list is a uniformly random `size`-subset of colours 0..palette-1.
auto random_lists(Rng & rng, std::size_t order, std::size_t size, std::size_t palette) -> ListSystem;

// A random partial matching between L(u) and L(v) on every edge; each
// colour of u is matched with probability `density`.
auto random_correspondence(Rng & rng, const Graph & graph, const ListSystem & lists, double density = 0.75)
    -> CorrespondenceSystem;

} // namespace majcol
