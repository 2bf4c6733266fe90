#pragma once

#include <majcol/constraints.hpp>
#include <majcol/graph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace majcol {

struct SearchStep
{
    Vertex vertex;
    ColourId from;
    ColourId to;
    std::size_t conflicts_after; // total bad edges after the move

    friend auto operator==(const SearchStep &, const SearchStep &) -> bool = default;
};

// Record of a descent. Conflict totals strictly decrease along `steps`.
struct SearchTrace
{
    std::size_t initial_conflicts = 0;
    std::size_t final_conflicts = 0;
    std::vector<SearchStep> steps;

    friend auto operator==(const SearchTrace &, const SearchTrace &) -> bool = default;
};

struct SearchResult
{
    Colouring colouring;
    SearchTrace trace;
};

// Lowest colour id of every list. Throws InputError on an empty list.
auto initial_colouring(const ListSystem & lists) -> Colouring;

// Conflicts v would have with its current neighbours if it took colour c.
auto conflicts_under(const Graph & graph, const Colouring & colouring, Vertex v, ColourId c,
    const Constraints & constraints) -> std::size_t;

// The colour of L(v) minimising v's conflicts (lowest id on ties), if it is
// strictly better than v's current colour.
auto improving_move(const Graph & graph, const Colouring & colouring, Vertex v, const Constraints & constraints)
    -> std::optional<ColourId>;

// Single-vertex descent from initial_colouring(). Each round applies the
// improving move of the lowest-indexed vertex that has one, which is the
// same as rescanning from v_1 after every move. Lists must be uniform of
// size k >= 2; the result then passes verify_majority at k.
auto local_search(const Graph & graph, const Constraints & constraints, std::size_t k) -> SearchResult;

// Colours in reverse topological order, each vertex taking the list colour
// with the fewest conflicts against its already-coloured out-neighbours.
auto dag_greedy(const Digraph & digraph, const Constraints & constraints, std::size_t k) -> Colouring;

inline constexpr std::size_t kDefaultSearchCap = 10'000'000;

struct Optimum
{
    std::size_t min_conflicts = 0;
    Colouring witness; // lexicographically first minimiser
};

// Exact minimum number of bad edges over all list-respecting colourings.
// Lists may have any nonempty sizes. Throws CapExceeded when the product of
// list sizes exceeds `cap`.
auto brute_force_optimum(const Graph & graph, const Constraints & constraints,
    std::size_t cap = kDefaultSearchCap) -> Optimum;

// Some list-respecting colouring passing the directed audit at k, or
// nullopt when none exists. Throws CapExceeded as above.
auto exhaustive_digraph_search(const Digraph & digraph, const Constraints & constraints, std::size_t k,
    std::size_t cap = kDefaultSearchCap) -> std::optional<Colouring>;

} // namespace majcol
