#pragma once

// Plain enumeration oracles. They share no code with the library's solver
// or verifier: instances are flattened to vectors and every colouring is
// visited with an odometer.

#include <majcol/constraints.hpp>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using Lists = std::vector<std::vector<std::uint32_t>>;
using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>; // 1-based endpoints
using BadRule = std::function<bool(std::uint32_t u, std::uint32_t cu, std::uint32_t v, std::uint32_t cv)>;

auto monochromatic() -> BadRule;
auto flatten(const majcol::ListSystem & lists) -> Lists;
auto flatten(const std::vector<majcol::Edge> & edges) -> Edges;
// The bad-pair rule of a correspondence system, read pair by pair.
auto pair_rule(const majcol::CorrespondenceSystem & system) -> BadRule;

auto bad_edges(const Edges & edges, const std::vector<std::uint32_t> & colouring, const BadRule & bad) -> std::size_t;

// Per-vertex counts over incident edges (out-arcs when directed).
auto majority_ok(std::size_t order, const Edges & edges, const std::vector<std::uint32_t> & colouring,
    const BadRule & bad, std::size_t k, bool directed) -> bool;
auto failing_vertices(std::size_t order, const Edges & edges, const std::vector<std::uint32_t> & colouring,
    const BadRule & bad, std::size_t k, bool directed) -> std::vector<std::uint32_t>;

// Minimum number of bad edges over every colouring from the lists.
auto min_bad_edges(std::size_t order, const Edges & edges, const Lists & lists, const BadRule & bad) -> std::size_t;

// Whether some colouring from the lists passes the audit.
auto majority_exists(std::size_t order, const Edges & edges, const Lists & lists, const BadRule & bad, std::size_t k,
    bool directed) -> bool;

auto colours_of(const majcol::Colouring & colouring) -> std::vector<std::uint32_t>;

} // namespace oracle
