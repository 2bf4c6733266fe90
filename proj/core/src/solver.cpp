#include <majcol/solver.hpp>

#include <algorithm>
#include <limits>
#include <set>

namespace majcol {

using std::optional;
using std::size_t;
using std::vector;

namespace {

auto require_uniform(const Constraints & constraints, size_t order, size_t k) -> void
{
    if (k < 2)
        throw InputError("/k", "k must be at least 2");
    if (constraints.order() < order)
        throw InputError("/lists", "lists cover fewer vertices than the graph");
    for (Vertex v = 1; v <= order; ++v)
        if (constraints.lists().list(v).size() != k)
            throw InputError("/lists/" + std::to_string(v),
                "list has " + std::to_string(constraints.lists().list(v).size()) + " colours, expected k = " +
                    std::to_string(k));
}

auto slot_of(std::span<const ColourId> list, ColourId c) -> size_t
{
    return static_cast<size_t>(std::find(list.begin(), list.end(), c) - list.begin());
}

auto lowest_slot(const vector<size_t> & counts) -> size_t
{
    return static_cast<size_t>(std::min_element(counts.begin(), counts.end()) - counts.begin());
}

auto check_cap(const Constraints & constraints, size_t order, size_t cap) -> void
{
    size_t space = 1;
    for (Vertex v = 1; v <= order; ++v) {
        auto size = constraints.lists().list(v).size();
        if (size == 0)
            throw InputError("/lists/" + std::to_string(v), "empty list");
        if (space > cap / size)
            throw CapExceeded("search space exceeds the cap of " + std::to_string(cap) + " colourings");
        space *= size;
    }
}

} // namespace

auto initial_colouring(const ListSystem & lists) -> Colouring
{
    Colouring result(lists.order());
    for (Vertex v = 1; v <= lists.order(); ++v) {
        auto l = lists.list(v);
        if (l.empty())
            throw InputError("/lists/" + std::to_string(v), "empty list");
        result.assign(v, l.front());
    }
    return result;
}

auto conflicts_under(const Graph & graph, const Colouring & colouring, Vertex v, ColourId c,
    const Constraints & constraints) -> size_t
{
    size_t conflicts = 0;
    for (auto u : graph.neighbours(v))
        if (constraints.bad(v, c, u, colouring[u]))
            ++conflicts;
    return conflicts;
}

auto improving_move(const Graph & graph, const Colouring & colouring, Vertex v, const Constraints & constraints)
    -> optional<ColourId>
{
    auto current = conflicts_under(graph, colouring, v, colouring[v], constraints);
    optional<ColourId> best;
    auto best_count = current;
    for (auto c : constraints.lists().list(v)) {
        auto count = conflicts_under(graph, colouring, v, c, constraints);
        if (count < best_count) {
            best = c;
            best_count = count;
        }
    }
    return best;
}

auto local_search(const Graph & graph, const Constraints & constraints, size_t k) -> SearchResult
{
    auto n = graph.order();
    require_uniform(constraints, n, k);
    const auto & lists = constraints.lists();

    SearchResult result;
    result.colouring = initial_colouring(lists.prefix(n));
    auto & colouring = result.colouring;

    // counts[v][s]: neighbours that would conflict with v if v took slot s.
    vector<vector<size_t>> counts(n + 1, vector<size_t>(k, 0));
    vector<size_t> current(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
        for (auto u : graph.neighbours(v))
            if (auto c = constraints.conflicting_colour(v, u, colouring[u]))
                ++counts[v][slot_of(lists.list(v), *c)];

    size_t total = 0;
    for (Vertex v = 1; v <= n; ++v)
        total += counts[v][current[v]];
    total /= 2;

    std::set<Vertex> improvable;
    auto refresh = [&](Vertex v) {
        auto & cv = counts[v];
        if (cv[lowest_slot(cv)] < cv[current[v]])
            improvable.insert(v);
        else
            improvable.erase(v);
    };
    for (Vertex v = 1; v <= n; ++v)
        refresh(v);

    result.trace.initial_conflicts = total;
    while (! improvable.empty()) {
        auto v = *improvable.begin();
        auto to_slot = lowest_slot(counts[v]);
        auto from = colouring[v], to = lists.list(v)[to_slot];
        total -= counts[v][current[v]] - counts[v][to_slot];

        colouring.assign(v, to);
        current[v] = to_slot;
        for (auto w : graph.neighbours(v)) {
            if (auto c = constraints.conflicting_colour(w, v, from))
                --counts[w][slot_of(lists.list(w), *c)];
            if (auto c = constraints.conflicting_colour(w, v, to))
                ++counts[w][slot_of(lists.list(w), *c)];
        }
        refresh(v);
        for (auto w : graph.neighbours(v))
            refresh(w);

        result.trace.steps.push_back(SearchStep{v, from, to, total});
    }
    result.trace.final_conflicts = total;
    return result;
}

auto dag_greedy(const Digraph & digraph, const Constraints & constraints, size_t k) -> Colouring
{
    auto n = digraph.order();
    require_uniform(constraints, n, k);
    const auto & lists = constraints.lists();

    Colouring colouring(n);
    vector<size_t> counts(k);
    for (auto v : reverse_topological_order(digraph)) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto u : digraph.out_neighbours(v))
            if (auto c = constraints.conflicting_colour(v, u, colouring[u]))
                ++counts[slot_of(lists.list(v), *c)];
        colouring.assign(v, lists.list(v)[lowest_slot(counts)]);
    }
    return colouring;
}

auto brute_force_optimum(const Graph & graph, const Constraints & constraints, size_t cap) -> Optimum
{
    auto n = graph.order();
    if (constraints.order() < n)
        throw InputError("/lists", "lists cover fewer vertices than the graph");
    check_cap(constraints, n, cap);

    Colouring partial(n);
    Optimum best;
    best.min_conflicts = std::numeric_limits<size_t>::max();

    // Depth-first in lexicographic order; only strictly better colourings
    // replace the incumbent, so the witness is the lexicographically first.
    auto descend = [&](auto & self, Vertex v, size_t so_far) -> void {
        if (so_far >= best.min_conflicts)
            return;
        if (v > n) {
            best.min_conflicts = so_far;
            best.witness = partial;
            return;
        }
        for (auto c : constraints.lists().list(v)) {
            size_t added = 0;
            for (auto u : graph.neighbours(v)) {
                if (u >= v)
                    break;
                if (constraints.bad(v, c, u, partial[u]))
                    ++added;
            }
            partial.assign(v, c);
            self(self, v + 1, so_far + added);
        }
        partial.assign(v, kNoColour);
    };
    descend(descend, 1, 0);
    if (n == 0)
        best.min_conflicts = 0;
    return best;
}

auto exhaustive_digraph_search(const Digraph & digraph, const Constraints & constraints, size_t k, size_t cap)
    -> optional<Colouring>
{
    if (k < 2)
        throw InputError("/k", "k must be at least 2");
    auto n = digraph.order();
    if (constraints.order() < n)
        throw InputError("/lists", "lists cover fewer vertices than the graph");
    check_cap(constraints, n, cap);

    // A vertex's audit is decided once it and all its out-neighbours are coloured.
    vector<vector<Vertex>> decided_at(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
        Vertex last = v;
        for (auto u : digraph.out_neighbours(v))
            last = std::max(last, u);
        decided_at[last].push_back(v);
    }

    Colouring partial(n);
    auto passes = [&](Vertex v) {
        size_t conflicts = 0;
        for (auto u : digraph.out_neighbours(v))
            if (constraints.bad(v, partial[v], u, partial[u]))
                ++conflicts;
        return conflicts * k <= digraph.out_degree(v);
    };

    auto descend = [&](auto & self, Vertex v) -> bool {
        if (v > n)
            return true;
        for (auto c : constraints.lists().list(v)) {
            partial.assign(v, c);
            if (std::all_of(decided_at[v].begin(), decided_at[v].end(), passes) && self(self, v + 1))
                return true;
        }
        partial.assign(v, kNoColour);
        return false;
    };
    if (descend(descend, 1))
        return partial;
    return std::nullopt;
}

} // namespace majcol
