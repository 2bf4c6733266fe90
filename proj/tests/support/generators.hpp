#pragma once

#include <majcol/constraints.hpp>
#include <majcol/graph.hpp>
#include <majcol/random.hpp>

#include <cstddef>
#include <vector>

namespace gen {

struct SmallGraph
{
    std::size_t order = 0;
    std::vector<majcol::Edge> edges;

    auto graph() const -> majcol::Graph { return majcol::Graph::build(order, edges); }
};

// One representative per isomorphism class of connected graphs on
// 1..max_order vertices (max_order <= 7).
auto connected_graphs(std::size_t max_order) -> std::vector<SmallGraph>;

auto complete(std::size_t order) -> SmallGraph;
auto cycle(std::size_t order) -> SmallGraph;
auto path(std::size_t order) -> SmallGraph;

// G(n, p) with n uniform in [min_order, max_order].
auto random_small_graph(majcol::Rng & rng, std::size_t min_order, std::size_t max_order, double p) -> SmallGraph;

// Each vertex draws `size` distinct colours out of 0..palette-1.
auto uniform_lists(majcol::Rng & rng, std::size_t order, std::size_t size, std::size_t palette) -> majcol::ListSystem;

// A random partial matching on every edge, each colour of the lower
// endpoint matched with probability one half.
auto matchings(majcol::Rng & rng, const SmallGraph & g, const majcol::ListSystem & lists)
    -> majcol::CorrespondenceSystem;

auto colours(std::initializer_list<std::uint32_t> ids) -> std::vector<majcol::ColourId>;

} // namespace gen
