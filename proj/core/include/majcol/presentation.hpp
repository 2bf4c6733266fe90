#pragma once

#include <majcol/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace majcol {

struct FamilyParams
{
    std::uint64_t seed = 0;
    double density = 0.5; // random_dag arc probability
};

// A countable graph v_1, v_2, ... given by what each vertex sees below it.
// All callables are pure functions of their argument, so every prefix is
// determined and prefixes are mutually consistent.
struct CountablePresentation
{
    std::string name;
    FamilyParams params;
    bool directed = false;
    bool acyclic = false;

    // Undirected: {m < n : v_m ~ v_n}. Directed: {m < n : v_n -> v_m}.
    std::function<std::vector<Vertex>(Vertex)> lower;
    // Directed only: {m < n : v_m -> v_n}.
    std::function<std::vector<Vertex>(Vertex)> lower_in;
    // Declared, not detected: whether v has infinite (out-)degree.
    std::function<bool(Vertex)> infinite_degree;
    // Largest index in the closed (out-)neighbourhood of a finite-degree
    // vertex; nullopt for declared infinite-degree vertices.
    std::function<std::optional<Vertex>(Vertex)> closure_bound;
};

auto builtin_family_names() -> std::vector<std::string>;

// ray, two_way_path, grid, binary_tree, star, complete, rado, directed_ray,
// directed_star, random_dag. Throws InputError for an unknown name.
auto builtin_family(const std::string & name, const FamilyParams & params = {}) -> CountablePresentation;

// G_n. Throws InputError for n < 1 or a presentation of the wrong kind.
auto materialize_graph(const CountablePresentation & presentation, std::size_t n) -> Graph;
auto materialize_digraph(const CountablePresentation & presentation, std::size_t n) -> Digraph;

} // namespace majcol
