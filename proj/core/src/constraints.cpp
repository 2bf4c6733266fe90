#include <majcol/constraints.hpp>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace majcol {

using std::optional;
using std::size_t;
using std::string;
using std::vector;

Palette::Palette(vector<string> names) :
    _names(std::move(names))
{
    std::sort(_names.begin(), _names.end());
    _names.erase(std::unique(_names.begin(), _names.end()), _names.end());
}

auto Palette::generated(size_t size) -> Palette
{
    vector<string> names;
    for (size_t i = 0; i < size; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "c%02zu", i);
        names.emplace_back(buf);
    }
    return Palette(std::move(names));
}

auto Palette::id(const string & name) const -> optional<ColourId>
{
    auto it = std::lower_bound(_names.begin(), _names.end(), name);
    if (it == _names.end() || *it != name)
        return std::nullopt;
    return ColourId{static_cast<std::uint32_t>(it - _names.begin())};
}

auto Palette::name(ColourId c) const -> const string &
{
    if (to_index(c) >= _names.size())
        throw InputError("", "colour id " + std::to_string(to_index(c)) + " has no name");
    return _names[to_index(c)];
}

ListSystem::ListSystem(vector<vector<ColourId>> lists) :
    _lists(std::move(lists))
{
    for (size_t i = 0; i < _lists.size(); ++i) {
        auto & l = _lists[i];
        std::sort(l.begin(), l.end());
        if (std::adjacent_find(l.begin(), l.end()) != l.end())
            throw InputError("/lists/" + std::to_string(i + 1), "list repeats a colour");
    }
}

auto ListSystem::uniform(size_t order, vector<ColourId> list) -> ListSystem
{
    return ListSystem(vector<vector<ColourId>>(order, std::move(list)));
}

auto ListSystem::contains(Vertex v, ColourId c) const -> bool
{
    auto l = list(v);
    return std::binary_search(l.begin(), l.end(), c);
}

auto ListSystem::uniform_size() const -> optional<size_t>
{
    if (_lists.empty())
        return std::nullopt;
    auto size = _lists.front().size();
    for (auto & l : _lists)
        if (l.size() != size)
            return std::nullopt;
    return size;
}

auto ListSystem::colours() const -> vector<ColourId>
{
    std::set<ColourId> all;
    for (auto & l : _lists)
        all.insert(l.begin(), l.end());
    return {all.begin(), all.end()};
}

auto ListSystem::prefix(size_t n) const -> ListSystem
{
    ListSystem result;
    result._lists.assign(_lists.begin(), _lists.begin() + static_cast<std::ptrdiff_t>(std::min(n, _lists.size())));
    return result;
}

auto CorrespondenceSystem::add(Vertex from, Vertex to, ColourId at_from, ColourId at_to) -> void
{
    if (from == to)
        throw InputError("", "bad pair on a self-loop at vertex " + std::to_string(from));
    auto & bucket = from < to ? _pairs[Edge{from, to}] : _pairs[Edge{to, from}];
    auto p = from < to ? ColourPair{at_from, at_to} : ColourPair{at_to, at_from};
    if (std::find(bucket.begin(), bucket.end(), p) == bucket.end()) {
        bucket.push_back(p);
        std::sort(bucket.begin(), bucket.end());
    }
}

auto CorrespondenceSystem::pairs(Vertex u, Vertex v) const -> vector<ColourPair>
{
    auto it = _pairs.find(Edge{std::min(u, v), std::max(u, v)});
    if (it == _pairs.end())
        return {};
    auto result = it->second;
    if (u > v)
        for (auto & p : result)
            std::swap(p.first, p.second);
    return result;
}

auto CorrespondenceSystem::bad(Vertex u, ColourId at_u, Vertex v, ColourId at_v) const -> bool
{
    auto it = _pairs.find(Edge{std::min(u, v), std::max(u, v)});
    if (it == _pairs.end())
        return false;
    auto p = u < v ? ColourPair{at_u, at_v} : ColourPair{at_v, at_u};
    return std::binary_search(it->second.begin(), it->second.end(), p);
}

auto CorrespondenceSystem::partner(Vertex u, Vertex v, ColourId at_v) const -> optional<ColourId>
{
    auto it = _pairs.find(Edge{std::min(u, v), std::max(u, v)});
    if (it == _pairs.end())
        return std::nullopt;
    for (auto & p : it->second) {
        if (u < v && p.second == at_v)
            return p.first;
        if (u > v && p.first == at_v)
            return p.second;
    }
    return std::nullopt;
}

auto CorrespondenceSystem::edge_keys() const -> vector<Edge>
{
    vector<Edge> keys;
    for (auto & [e, _] : _pairs)
        keys.push_back(e);
    return keys;
}

auto CorrespondenceSystem::pair_count() const -> size_t
{
    size_t total = 0;
    for (auto & [_, ps] : _pairs)
        total += ps.size();
    return total;
}

auto CorrespondenceViolation::describe() const -> string
{
    std::ostringstream s;
    s << "edge (" << edge.first << "," << edge.second << "): colour " << to_index(colour) << " of vertex " << vertex;
    switch (kind) {
    case Kind::repeated_at_lower:
    case Kind::repeated_at_higher: s << " occurs in more than one bad pair"; break;
    case Kind::not_in_list: s << " is not in its list"; break;
    case Kind::not_an_edge: s << " sits on a non-edge"; break;
    }
    return s.str();
}

auto validate_correspondence(const CorrespondenceSystem & system, const ListSystem & lists, const Graph * host)
    -> vector<CorrespondenceViolation>
{
    using Kind = CorrespondenceViolation::Kind;
    vector<CorrespondenceViolation> violations;
    for (auto & e : system.edge_keys()) {
        auto ps = system.pairs(e.first, e.second);
        if (e.second > lists.order()) {
            violations.push_back({e, e.second, ps.front().second, Kind::not_in_list});
            continue;
        }
        if (host && ! host->adjacent(e.first, e.second))
            violations.push_back({e, e.first, ps.front().first, Kind::not_an_edge});

        std::map<ColourId, int> lower, higher;
        for (auto & p : ps) {
            if (++lower[p.first] == 2)
                violations.push_back({e, e.first, p.first, Kind::repeated_at_lower});
            if (++higher[p.second] == 2)
                violations.push_back({e, e.second, p.second, Kind::repeated_at_higher});
        }
        for (auto & [c, _] : lower)
            if (! lists.contains(e.first, c))
                violations.push_back({e, e.first, c, Kind::not_in_list});
        for (auto & [c, _] : higher)
            if (! lists.contains(e.second, c))
                violations.push_back({e, e.second, c, Kind::not_in_list});
    }
    return violations;
}

namespace {

auto identity_pairs(const ListSystem & lists, Vertex u, Vertex v, CorrespondenceSystem & out) -> void
{
    auto a = lists.list(u), b = lists.list(v);
    vector<ColourId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    for (auto c : common)
        out.add(u, v, c, c);
}

} // namespace

auto list_to_correspondence(const ListSystem & lists, const Graph & graph) -> CorrespondenceSystem
{
    CorrespondenceSystem result;
    for (auto & e : graph.edges())
        identity_pairs(lists, e.first, e.second, result);
    return result;
}

auto list_to_correspondence(const ListSystem & lists, const Digraph & digraph) -> CorrespondenceSystem
{
    CorrespondenceSystem result;
    for (auto & a : digraph.arcs())
        identity_pairs(lists, a.first, a.second, result);
    return result;
}

Constraints::Constraints(ListSystem lists) :
    _lists(std::move(lists))
{
}

Constraints::Constraints(ListSystem lists, CorrespondenceSystem correspondence) :
    _lists(std::move(lists)),
    _correspondence(std::move(correspondence))
{
    auto violations = validate_correspondence(*_correspondence, _lists);
    if (! violations.empty()) {
        string message = "correspondence system violates the matching condition:";
        for (auto & v : violations)
            message += " [" + v.describe() + "]";
        throw InputError("/correspondence", message);
    }
}

auto Constraints::bad(Vertex u, ColourId at_u, Vertex v, ColourId at_v) const -> bool
{
    if (_correspondence)
        return _correspondence->bad(u, at_u, v, at_v);
    return at_u == at_v;
}

auto Constraints::conflicting_colour(Vertex u, Vertex v, ColourId at_v) const -> optional<ColourId>
{
    if (_correspondence)
        return _correspondence->partner(u, v, at_v);
    if (_lists.contains(u, at_v))
        return at_v;
    return std::nullopt;
}

auto Colouring::prefix(size_t n) const -> Colouring
{
    return Colouring(vector<ColourId>(_colours.begin(), _colours.begin() + static_cast<std::ptrdiff_t>(std::min(n, _colours.size()))));
}

auto MajorityReport::failing() const -> vector<Vertex>
{
    vector<Vertex> result;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (! vertices[i].pass)
            result.push_back(static_cast<Vertex>(i + 1));
    return result;
}

auto MajorityReport::total_conflicts() const -> size_t
{
    size_t total = 0;
    for (auto & a : vertices)
        total += a.conflicts;
    return total;
}

namespace {

auto check_colouring(size_t order, const Colouring & colouring, const Constraints & constraints) -> void
{
    if (constraints.order() < order)
        throw InputError("/lists", "lists cover " + std::to_string(constraints.order()) + " vertices, graph has " +
                std::to_string(order));
    for (Vertex v = 1; v <= order; ++v) {
        if (! colouring.coloured(v))
            throw InputError("/colouring/" + std::to_string(v), "vertex is uncoloured");
        if (! constraints.lists().contains(v, colouring[v]))
            throw InputError("/colouring/" + std::to_string(v), "colour is not in the vertex's list");
    }
}

template <typename Neighbours>
auto audit(size_t order, Neighbours && neighbours, const Colouring & colouring, const Constraints & constraints,
    size_t k) -> MajorityReport
{
    if (k < 2)
        throw InputError("/k", "k must be at least 2");
    check_colouring(order, colouring, constraints);

    MajorityReport report;
    report.k = k;
    report.vertices.resize(order);
    for (Vertex v = 1; v <= order; ++v) {
        auto & a = report.vertices[v - 1];
        for (auto u : neighbours(v)) {
            ++a.degree;
            if (constraints.bad(v, colouring[v], u, colouring[u]))
                ++a.conflicts;
        }
        a.pass = a.conflicts * k <= a.degree;
        report.pass = report.pass && a.pass;
    }
    return report;
}

auto require_coloured(const Colouring & colouring, Vertex v) -> void
{
    if (! colouring.coloured(v))
        throw InputError("/colouring/" + std::to_string(v), "vertex is uncoloured");
}

} // namespace

auto is_bad_edge(const Graph & graph, Vertex u, Vertex v, const Colouring & colouring,
    const Constraints & constraints) -> bool
{
    if (! graph.adjacent(u, v))
        throw InputError("", "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    require_coloured(colouring, u);
    require_coloured(colouring, v);
    return constraints.bad(u, colouring[u], v, colouring[v]);
}

auto is_bad_edge(const Digraph & digraph, Vertex from, Vertex to, const Colouring & colouring,
    const Constraints & constraints) -> bool
{
    if (! digraph.has_arc(from, to))
        throw InputError("", "(" + std::to_string(from) + "," + std::to_string(to) + ") is not an arc");
    require_coloured(colouring, from);
    require_coloured(colouring, to);
    return constraints.bad(from, colouring[from], to, colouring[to]);
}

auto verify_majority(const Graph & graph, const Colouring & colouring, const Constraints & constraints, size_t k)
    -> MajorityReport
{
    return audit(graph.order(), [&](Vertex v) { return graph.neighbours(v); }, colouring, constraints, k);
}

auto verify_majority(const Digraph & digraph, const Colouring & colouring, const Constraints & constraints, size_t k)
    -> MajorityReport
{
    return audit(digraph.order(), [&](Vertex v) { return digraph.out_neighbours(v); }, colouring, constraints, k);
}

auto count_bad_edges(const Graph & graph, const Colouring & colouring, const Constraints & constraints) -> size_t
{
    size_t total = 0;
    for (auto & e : graph.edges())
        if (constraints.bad(e.first, colouring[e.first], e.second, colouring[e.second]))
            ++total;
    return total;
}

} // namespace majcol
