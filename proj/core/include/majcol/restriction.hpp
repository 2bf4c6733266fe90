#pragma once

#include <majcol/constraints.hpp>
#include <majcol/presentation.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace majcol {

// A designated (intended infinite) set, materialized over a finite prefix
// as an ascending stream: vertices in colour form, (vertex, colour) pairs
// with distinct vertices in pair form.
class WitnessFamily
{
public:
    enum class Kind
    {
        colour_form,
        pair_form
    };

    // Throws InputError unless members are strictly ascending.
    static auto colour_form(std::string label, std::vector<Vertex> members,
        std::optional<Vertex> anchor = std::nullopt) -> WitnessFamily;
    static auto pair_form(std::string label, std::vector<std::pair<Vertex, ColourId>> members,
        std::optional<Vertex> anchor = std::nullopt, std::optional<ColourId> anchor_colour = std::nullopt)
        -> WitnessFamily;

    auto kind() const -> Kind { return _kind; }
    auto label() const -> const std::string & { return _label; }
    // The vertex u when this family is N(u) or X_{u,c}, and c for the latter.
    auto anchor() const -> std::optional<Vertex> { return _anchor; }
    auto anchor_colour() const -> std::optional<ColourId> { return _anchor_colour; }
    auto size() const -> std::size_t { return _vertices.size(); }
    auto vertex(std::size_t i) const -> Vertex { return _vertices[i]; }
    // Pair form only.
    auto colour(std::size_t i) const -> ColourId { return _colours[i]; }
    auto vertices() const -> const std::vector<Vertex> & { return _vertices; }
    auto contains(Vertex v) const -> bool;

private:
    Kind _kind = Kind::colour_form;
    std::string _label;
    std::optional<Vertex> _anchor;
    std::optional<ColourId> _anchor_colour;
    std::vector<Vertex> _vertices;
    std::vector<ColourId> _colours;
};

struct ScheduleItem
{
    std::size_t family = 0;          // 0-based index into the family set
    std::optional<ColourId> colour;  // absent in pair form
    std::size_t round = 1;           // i >= 1

    friend auto operator==(const ScheduleItem &, const ScheduleItem &) -> bool = default;
};

// Diagonal enumeration of families x colours x N: items whose max(family
// rank, round) is d precede those where it is d + 1, and within a diagonal
// the order is lexicographic in (round, family, colour). The colour set is
// finite, so each diagonal runs through all of it. Truncated after
// `budget` items.
auto enumerate_schedule(std::size_t family_count, std::span<const ColourId> colours, std::size_t budget)
    -> std::vector<ScheduleItem>;
// Pair form: families x N, the same rule without the colour coordinate.
auto enumerate_pair_schedule(std::size_t family_count, std::size_t budget) -> std::vector<ScheduleItem>;

struct SublistAssignment
{
    ListSystem sublists;
    // Colour deleted for a scheduled witness, index v - 1. Default sublists
    // and witnesses whose list lacked the colour leave this empty.
    std::vector<std::optional<ColourId>> removed;
};

enum class Outcome
{
    removed,  // the scheduled colour was deleted from the witness's list
    absent,   // the witness was consumed but its list lacked the colour
    shortfall // no unused member of the family is left within the prefix
};

struct LedgerEvent
{
    ScheduleItem item;
    Outcome outcome;
    std::optional<Vertex> witness;
};

struct LedgerEntry
{
    std::size_t family = 0;
    std::optional<ColourId> colour;
    std::size_t processed = 0;
    std::size_t shortfalls = 0;
    std::size_t absent = 0;
    std::vector<Vertex> witnesses; // removed and absent outcomes, in order
};

struct WitnessLedger
{
    WitnessFamily::Kind kind = WitnessFamily::Kind::colour_form;
    std::vector<std::string> labels;
    std::vector<std::optional<Vertex>> anchors;
    std::vector<std::optional<ColourId>> anchor_colours;
    std::vector<LedgerEvent> schedule;
    std::vector<LedgerEntry> entries; // one per processed (family, colour)

    auto entry(std::size_t family, std::optional<ColourId> colour) const -> const LedgerEntry *;
    // Family index anchored at u (and at colour c in pair form).
    auto family_for(Vertex u, std::optional<ColourId> c = std::nullopt) const -> std::optional<std::size_t>;
    auto consumed() const -> std::vector<Vertex>;
};

struct RestrictionResult
{
    SublistAssignment assignment;
    WitnessLedger ledger;
};

// Shrinks (l+1)-lists on v_1..v_N to l-lists. Each scheduled (X, c, i)
// consumes the least unused v in X; c is removed from L(v) when present.
// Untouched vertices drop their highest colour id. Members beyond N are
// ignored and exhausted families are recorded as shortfalls.
auto restrict_lists(std::size_t prefix, const ListSystem & lists, const std::vector<WitnessFamily> & families,
    std::size_t budget) -> RestrictionResult;

// Pair form: each scheduled (X, i) consumes the least pair (v, c) in X
// whose vertex is unused and removes c from L(v).
auto restrict_pairs(std::size_t prefix, const ListSystem & lists, const std::vector<WitnessFamily> & families,
    std::size_t budget) -> RestrictionResult;

// N(u) (out-neighbourhoods for digraphs) for every declared infinite-degree
// u <= prefix, materialized over v_1..v_prefix.
auto build_neighbourhood_families(const CountablePresentation & presentation, std::size_t prefix)
    -> std::vector<WitnessFamily>;

// X_{u,c} = {(v, c') : v in N(u), (c, c') in B_uv} for every declared
// infinite-degree u <= prefix and every c in L(u).
auto build_correspondence_families(const CountablePresentation & presentation, std::size_t prefix,
    const ListSystem & lists, const CorrespondenceSystem & correspondence) -> std::vector<WitnessFamily>;

} // namespace majcol
