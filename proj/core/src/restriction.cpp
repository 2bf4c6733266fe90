#include <majcol/restriction.hpp>

#include <algorithm>
#include <map>

namespace majcol {

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

auto WitnessFamily::colour_form(string label, vector<Vertex> members, optional<Vertex> anchor) -> WitnessFamily
{
    if (std::adjacent_find(members.begin(), members.end(), std::greater_equal<>()) != members.end())
        throw InputError("/families/" + label, "members must be strictly ascending");
    WitnessFamily f;
    f._kind = Kind::colour_form;
    f._label = std::move(label);
    f._anchor = anchor;
    f._vertices = std::move(members);
    return f;
}

auto WitnessFamily::pair_form(string label, vector<pair<Vertex, ColourId>> members, optional<Vertex> anchor,
    optional<ColourId> anchor_colour) -> WitnessFamily
{
    WitnessFamily f;
    f._kind = Kind::pair_form;
    f._label = std::move(label);
    f._anchor = anchor;
    f._anchor_colour = anchor_colour;
    for (auto & [v, c] : members) {
        if (! f._vertices.empty() && v <= f._vertices.back())
            throw InputError("/families/" + f._label, "pair vertices must be distinct and ascending");
        f._vertices.push_back(v);
        f._colours.push_back(c);
    }
    return f;
}

auto WitnessFamily::contains(Vertex v) const -> bool
{
    return std::binary_search(_vertices.begin(), _vertices.end(), v);
}

namespace {

template <typename Emit>
auto diagonals(size_t family_count, size_t colour_count, size_t budget, Emit && emit) -> void
{
    // colour_count == 0 means the pair form: one implicit colour.
    auto colours = std::max<size_t>(colour_count, 1);
    if (family_count == 0 || budget == 0)
        return;
    size_t emitted = 0;
    for (size_t d = 1;; ++d) {
        // Past the last family only round d can reach max = d.
        for (size_t i = d > family_count ? d : 1; i <= d; ++i)
            for (size_t f = 1; f <= std::min(d, family_count); ++f) {
                if (std::max(i, f) != d)
                    continue;
                for (size_t c = 0; c < colours; ++c) {
                    emit(f - 1, c, i);
                    if (++emitted == budget)
                        return;
                }
            }
    }
}

auto drop_highest(std::span<const ColourId> list) -> vector<ColourId>
{
    return {list.begin(), list.end() - 1};
}

auto without(std::span<const ColourId> list, ColourId c) -> vector<ColourId>
{
    vector<ColourId> result;
    for (auto x : list)
        if (x != c)
            result.push_back(x);
    return result;
}

auto check_lists(size_t prefix, const ListSystem & lists) -> size_t
{
    if (lists.order() < prefix)
        throw InputError("/lists", "lists cover " + std::to_string(lists.order()) + " vertices, prefix is " +
                std::to_string(prefix));
    auto size = lists.prefix(prefix).uniform_size();
    if (! size)
        throw InputError("/lists", "restriction needs lists of one uniform size l + 1");
    if (*size < 2)
        throw InputError("/lists", "restriction needs l >= 1, i.e. lists of size at least 2");
    return *size;
}

// State shared by the colour-form and pair-form procedures.
struct Run
{
    size_t prefix;
    const ListSystem & lists;
    const vector<WitnessFamily> & families;
    vector<char> used;
    vector<size_t> cursor;
    vector<optional<vector<ColourId>>> chosen;
    RestrictionResult result;
    std::map<pair<size_t, std::uint32_t>, LedgerEntry> entries;

    Run(size_t n, const ListSystem & l, const vector<WitnessFamily> & fs) :
        prefix(n), lists(l), families(fs), used(n + 1, 0), cursor(fs.size(), 0), chosen(n + 1)
    {
        result.assignment.removed.assign(n, std::nullopt);
        for (auto & f : fs) {
            result.ledger.labels.push_back(f.label());
            result.ledger.anchors.push_back(f.anchor());
            result.ledger.anchor_colours.push_back(f.anchor_colour());
        }
    }

    // Index into family f of its least member whose vertex is unused.
    auto next_unused(size_t f) -> optional<size_t>
    {
        auto & fam = families[f];
        auto & at = cursor[f];
        while (at < fam.size() && fam.vertex(at) <= prefix && used[fam.vertex(at)])
            ++at;
        if (at < fam.size() && fam.vertex(at) <= prefix)
            return at;
        return std::nullopt;
    }

    auto record(const ScheduleItem & item, Outcome outcome, optional<Vertex> witness) -> void
    {
        auto key = pair{item.family, item.colour ? to_index(*item.colour) : ~std::uint32_t{0}};
        auto & e = entries[key];
        e.family = item.family;
        e.colour = item.colour;
        ++e.processed;
        if (outcome == Outcome::shortfall)
            ++e.shortfalls;
        else
            e.witnesses.push_back(*witness);
        if (outcome == Outcome::absent)
            ++e.absent;
        result.ledger.schedule.push_back(LedgerEvent{item, outcome, witness});
    }

    auto finish() -> RestrictionResult
    {
        vector<vector<ColourId>> sublists(prefix);
        for (Vertex v = 1; v <= prefix; ++v)
            sublists[v - 1] = chosen[v] ? *chosen[v] : drop_highest(lists.list(v));
        result.assignment.sublists = ListSystem(std::move(sublists));
        for (auto & [_, e] : entries)
            result.ledger.entries.push_back(std::move(e));
        return std::move(result);
    }
};

} // namespace

auto enumerate_schedule(size_t family_count, std::span<const ColourId> colours, size_t budget)
    -> vector<ScheduleItem>
{
    vector<ScheduleItem> items;
    if (colours.empty())
        return items;
    diagonals(family_count, colours.size(), budget,
        [&](size_t f, size_t c, size_t i) { items.push_back(ScheduleItem{f, colours[c], i}); });
    return items;
}

auto enumerate_pair_schedule(size_t family_count, size_t budget) -> vector<ScheduleItem>
{
    vector<ScheduleItem> items;
    diagonals(family_count, 0, budget,
        [&](size_t f, size_t, size_t i) { items.push_back(ScheduleItem{f, std::nullopt, i}); });
    return items;
}

auto WitnessLedger::entry(size_t family, optional<ColourId> colour) const -> const LedgerEntry *
{
    for (auto & e : entries)
        if (e.family == family && e.colour == colour)
            return &e;
    return nullptr;
}

auto WitnessLedger::family_for(Vertex u, optional<ColourId> c) const -> optional<size_t>
{
    for (size_t f = 0; f < anchors.size(); ++f)
        if (anchors[f] == u && (! c || anchor_colours[f] == c))
            return f;
    return std::nullopt;
}

auto WitnessLedger::consumed() const -> vector<Vertex>
{
    vector<Vertex> result;
    for (auto & e : schedule)
        if (e.witness)
            result.push_back(*e.witness);
    return result;
}

auto restrict_lists(size_t prefix, const ListSystem & lists, const vector<WitnessFamily> & families, size_t budget)
    -> RestrictionResult
{
    check_lists(prefix, lists);
    for (auto & f : families)
        if (f.kind() != WitnessFamily::Kind::colour_form)
            throw InputError("/families/" + f.label(), "restrict_lists takes colour-form families");

    Run run(prefix, lists, families);
    run.result.ledger.kind = WitnessFamily::Kind::colour_form;
    auto colours = lists.prefix(prefix).colours();
    for (auto & item : enumerate_schedule(families.size(), colours, budget)) {
        auto at = run.next_unused(item.family);
        if (! at) {
            run.record(item, Outcome::shortfall, std::nullopt);
            continue;
        }
        auto v = families[item.family].vertex(*at);
        run.used[v] = 1;
        if (lists.contains(v, *item.colour)) {
            run.chosen[v] = without(lists.list(v), *item.colour);
            run.result.assignment.removed[v - 1] = *item.colour;
            run.record(item, Outcome::removed, v);
        }
        else {
            run.chosen[v] = drop_highest(lists.list(v));
            run.record(item, Outcome::absent, v);
        }
    }
    return run.finish();
}

auto restrict_pairs(size_t prefix, const ListSystem & lists, const vector<WitnessFamily> & families, size_t budget)
    -> RestrictionResult
{
    check_lists(prefix, lists);
    for (auto & f : families) {
        if (f.kind() != WitnessFamily::Kind::pair_form)
            throw InputError("/families/" + f.label(), "restrict_pairs takes pair-form families");
        for (size_t i = 0; i < f.size() && f.vertex(i) <= prefix; ++i)
            if (! lists.contains(f.vertex(i), f.colour(i)))
                throw InputError("/families/" + f.label(),
                    "pair (" + std::to_string(f.vertex(i)) + ", colour " + std::to_string(to_index(f.colour(i))) +
                        ") names a colour outside the vertex's list");
    }

    Run run(prefix, lists, families);
    run.result.ledger.kind = WitnessFamily::Kind::pair_form;
    for (auto & item : enumerate_pair_schedule(families.size(), budget)) {
        auto at = run.next_unused(item.family);
        if (! at) {
            run.record(item, Outcome::shortfall, std::nullopt);
            continue;
        }
        auto & fam = families[item.family];
        auto v = fam.vertex(*at);
        auto c = fam.colour(*at);
        run.used[v] = 1;
        run.chosen[v] = without(lists.list(v), c);
        run.result.assignment.removed[v - 1] = c;
        run.record(item, Outcome::removed, v);
    }
    return run.finish();
}

namespace {

template <typename Visit>
auto for_each_infinite_neighbourhood(const CountablePresentation & presentation, size_t prefix, Visit && visit)
    -> void
{
    if (presentation.directed) {
        auto d = materialize_digraph(presentation, prefix);
        for (Vertex u = 1; u <= prefix; ++u)
            if (presentation.infinite_degree(u))
                visit(u, d.out_neighbours(u));
    }
    else {
        auto g = materialize_graph(presentation, prefix);
        for (Vertex u = 1; u <= prefix; ++u)
            if (presentation.infinite_degree(u))
                visit(u, g.neighbours(u));
    }
}

} // namespace

auto build_neighbourhood_families(const CountablePresentation & presentation, size_t prefix) -> vector<WitnessFamily>
{
    vector<WitnessFamily> families;
    for_each_infinite_neighbourhood(presentation, prefix, [&](Vertex u, std::span<const Vertex> nbrs) {
        families.push_back(WitnessFamily::colour_form(
            (presentation.directed ? "N+(" : "N(") + std::to_string(u) + ")", {nbrs.begin(), nbrs.end()}, u));
    });
    return families;
}

auto build_correspondence_families(const CountablePresentation & presentation, size_t prefix,
    const ListSystem & lists, const CorrespondenceSystem & correspondence) -> vector<WitnessFamily>
{
    vector<WitnessFamily> families;
    for_each_infinite_neighbourhood(presentation, prefix, [&](Vertex u, std::span<const Vertex> nbrs) {
        for (auto c : lists.list(u)) {
            vector<pair<Vertex, ColourId>> members;
            for (auto v : nbrs)
                for (auto & p : correspondence.pairs(u, v))
                    if (p.first == c)
                        members.emplace_back(v, p.second);
            families.push_back(WitnessFamily::pair_form(
                "X(" + std::to_string(u) + "," + std::to_string(to_index(c)) + ")", std::move(members), u, c));
        }
    });
    return families;
}

} // namespace majcol
