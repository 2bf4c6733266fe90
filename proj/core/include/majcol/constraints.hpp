#pragma once

#include <majcol/graph.hpp>
#include <majcol/types.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace majcol {

// Bijection between colour names and ids. Ids follow the sorted order of
// the names, so "lowest colour id" tie-breaks are name-order tie-breaks.
class Palette
{
public:
    Palette() = default;
    explicit Palette(std::vector<std::string> names);

    // Palette of `size` generated names c00, c01, ...
    static auto generated(std::size_t size) -> Palette;

    auto size() const -> std::size_t { return _names.size(); }
    auto id(const std::string & name) const -> std::optional<ColourId>;
    auto name(ColourId c) const -> const std::string &;
    auto names() const -> const std::vector<std::string> & { return _names; }

    friend auto operator==(const Palette &, const Palette &) -> bool = default;

private:
    std::vector<std::string> _names;
};

// Per-vertex colour lists for v_1..v_order, each kept sorted by id.
class ListSystem
{
public:
    ListSystem() = default;
    explicit ListSystem(std::vector<std::vector<ColourId>> lists);

    static auto uniform(std::size_t order, std::vector<ColourId> list) -> ListSystem;

    auto order() const -> std::size_t { return _lists.size(); }
    auto list(Vertex v) const -> std::span<const ColourId> { return _lists[v - 1]; }
    auto contains(Vertex v, ColourId c) const -> bool;
    auto uniform_size() const -> std::optional<std::size_t>;
    // Sorted union of all lists.
    auto colours() const -> std::vector<ColourId>;
    auto prefix(std::size_t n) const -> ListSystem;

    friend auto operator==(const ListSystem &, const ListSystem &) -> bool = default;

private:
    std::vector<std::vector<ColourId>> _lists;
};

struct ColourPair
{
    ColourId first;
    ColourId second;

    friend auto operator<=>(const ColourPair &, const ColourPair &) = default;
};

// Bad pairs B_uv. Stored under the canonical key (min, max): a stored pair
// (c, c') means colour c at the lower endpoint and c' at the higher one.
class CorrespondenceSystem
{
public:
    // Pairs are given in the orientation (colour at from, colour at to).
    auto add(Vertex from, Vertex to, ColourId at_from, ColourId at_to) -> void;

    // Pairs oriented as (colour at u, colour at v).
    auto pairs(Vertex u, Vertex v) const -> std::vector<ColourPair>;
    auto bad(Vertex u, ColourId at_u, Vertex v, ColourId at_v) const -> bool;
    // The colour c at u with (c, at_v) a bad pair on uv, if any.
    auto partner(Vertex u, Vertex v, ColourId at_v) const -> std::optional<ColourId>;

    auto edge_keys() const -> std::vector<Edge>;
    auto pair_count() const -> std::size_t;

    friend auto operator==(const CorrespondenceSystem &, const CorrespondenceSystem &) -> bool = default;

private:
    std::map<Edge, std::vector<ColourPair>> _pairs;
};

struct CorrespondenceViolation
{
    enum class Kind
    {
        repeated_at_lower,  // a colour of the lower endpoint occurs in two pairs
        repeated_at_higher, // likewise for the higher endpoint
        not_in_list,
        not_an_edge
    };

    Edge edge;
    Vertex vertex;
    ColourId colour;
    Kind kind;

    auto describe() const -> std::string;
};

// Every violation of the partial-matching condition and of list
// membership. `host` is optional; when given, keys must be edges of it.
auto validate_correspondence(const CorrespondenceSystem & system, const ListSystem & lists,
    const Graph * host = nullptr) -> std::vector<CorrespondenceViolation>;

// B_uv = {(c, c) : c in L(u) and L(v)} on every edge.
auto list_to_correspondence(const ListSystem & lists, const Graph & graph) -> CorrespondenceSystem;
auto list_to_correspondence(const ListSystem & lists, const Digraph & digraph) -> CorrespondenceSystem;

enum class Mode
{
    list,
    correspondence
};

// Lists plus the rule deciding when an edge is bad: monochromatic in list
// mode, a stored bad pair in correspondence mode.
class Constraints
{
public:
    Constraints() = default;
    explicit Constraints(ListSystem lists);
    // Throws InputError listing the violations when the system is not a
    // partial matching over the lists.
    Constraints(ListSystem lists, CorrespondenceSystem correspondence);

    auto mode() const -> Mode { return _correspondence ? Mode::correspondence : Mode::list; }
    auto lists() const -> const ListSystem & { return _lists; }
    auto correspondence() const -> const CorrespondenceSystem * { return _correspondence ? &*_correspondence : nullptr; }
    auto order() const -> std::size_t { return _lists.order(); }

    auto bad(Vertex u, ColourId at_u, Vertex v, ColourId at_v) const -> bool;
    // The colour in L(u) that would make uv bad against colour at_v on v.
    auto conflicting_colour(Vertex u, Vertex v, ColourId at_v) const -> std::optional<ColourId>;

    friend auto operator==(const Constraints &, const Constraints &) -> bool = default;

private:
    ListSystem _lists;
    std::optional<CorrespondenceSystem> _correspondence;
};

class Colouring
{
public:
    Colouring() = default;
    explicit Colouring(std::size_t order) : _colours(order, kNoColour) {}
    explicit Colouring(std::vector<ColourId> colours) : _colours(std::move(colours)) {}

    auto order() const -> std::size_t { return _colours.size(); }
    auto coloured(Vertex v) const -> bool { return v >= 1 && v <= order() && _colours[v - 1] != kNoColour; }
    auto operator[](Vertex v) const -> ColourId { return _colours[v - 1]; }
    auto assign(Vertex v, ColourId c) -> void { _colours[v - 1] = c; }
    auto colours() const -> const std::vector<ColourId> & { return _colours; }
    auto prefix(std::size_t n) const -> Colouring;

    friend auto operator==(const Colouring &, const Colouring &) -> bool = default;

private:
    std::vector<ColourId> _colours;
};

struct VertexAudit
{
    std::size_t degree = 0; // out-degree for digraphs
    std::size_t conflicts = 0;
    bool pass = true;

    friend auto operator==(const VertexAudit &, const VertexAudit &) -> bool = default;
};

// Audit against the threshold conflicts <= degree / k, decided exactly as
// conflicts * k <= degree.
struct MajorityReport
{
    std::size_t k = 2;
    std::vector<VertexAudit> vertices; // index v - 1
    bool pass = true;

    auto failing() const -> std::vector<Vertex>;
    auto total_conflicts() const -> std::size_t;

    friend auto operator==(const MajorityReport &, const MajorityReport &) -> bool = default;
};

// Throws InputError if uv is not an edge of the host graph or an endpoint
// is uncoloured.
auto is_bad_edge(const Graph & graph, Vertex u, Vertex v, const Colouring & colouring,
    const Constraints & constraints) -> bool;
auto is_bad_edge(const Digraph & digraph, Vertex from, Vertex to, const Colouring & colouring,
    const Constraints & constraints) -> bool;

// Throws InputError for k < 2, an uncoloured vertex, or a colour outside
// its list.
auto verify_majority(const Graph & graph, const Colouring & colouring, const Constraints & constraints,
    std::size_t k) -> MajorityReport;
auto verify_majority(const Digraph & digraph, const Colouring & colouring, const Constraints & constraints,
    std::size_t k) -> MajorityReport;

// Number of bad edges (or arcs) in total.
auto count_bad_edges(const Graph & graph, const Colouring & colouring, const Constraints & constraints) -> std::size_t;

} // namespace majcol
