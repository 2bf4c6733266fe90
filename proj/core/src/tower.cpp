#include <majcol/random.hpp>
#include <majcol/solver.hpp>
#include <majcol/tower.hpp>

#include <algorithm>
#include <map>

namespace majcol {

using std::optional;
using std::size_t;
using std::vector;

namespace {

constexpr std::uint64_t kListSalt = 0x6c697374;
constexpr std::uint64_t kPairSalt = 0x70616972;

auto count_bad_arcs(const Digraph & d, const Colouring & colouring, const Constraints & constraints) -> size_t
{
    size_t total = 0;
    for (auto & a : d.arcs())
        if (constraints.bad(a.first, colouring[a.first], a.second, colouring[a.second]))
            ++total;
    return total;
}

} // namespace

auto prefix_colourings(const CountablePresentation & presentation, const Constraints & restricted, size_t k,
    size_t n_max) -> TowerTrace
{
    if (presentation.directed && ! presentation.acyclic)
        throw InputError("/family", "cyclic directed presentations are not supported");
    if (n_max < 1)
        throw InputError("/n_max", "n_max must be at least 1");
    if (restricted.order() < n_max)
        throw InputError("/lists", "restricted lists do not cover v_1..v_n_max");
    auto size = restricted.lists().prefix(n_max).uniform_size();
    if (! size || *size < 2)
        throw InputError("/lists", "restricted lists must have one uniform size of at least 2");

    TowerTrace trace;
    trace.k = k;
    trace.n_max = n_max;
    if (presentation.directed) {
        auto whole = materialize_digraph(presentation, n_max);
        for (size_t n = 1; n <= n_max; ++n) {
            auto g = n == n_max ? whole : whole.induced_prefix(n);
            auto chi = dag_greedy(g, restricted, *size);
            trace.majority.push_back(verify_majority(g, chi, restricted, k).pass);
            trace.conflicts.push_back(count_bad_arcs(g, chi, restricted));
            trace.colourings.push_back(std::move(chi));
        }
    }
    else {
        auto whole = materialize_graph(presentation, n_max);
        for (size_t n = 1; n <= n_max; ++n) {
            auto g = n == n_max ? whole : whole.induced_prefix(n);
            auto result = local_search(g, restricted, *size);
            trace.majority.push_back(verify_majority(g, result.colouring, restricted, k).pass);
            trace.conflicts.push_back(result.trace.final_conflicts);
            trace.colourings.push_back(std::move(result.colouring));
        }
    }
    return trace;
}

auto stabilize(const TowerTrace & trace, size_t t, size_t survivor_floor) -> StabilizedColouring
{
    if (t < 1 || t > trace.n_max)
        throw InputError("/t", "t must lie in [1, n_max]");
    if (survivor_floor < 1)
        throw InputError("/survivor_floor", "survivor floor must be at least 1");

    StabilizedColouring s;
    s.requested_t = t;
    s.survivor_floor = survivor_floor;
    vector<size_t> alive;
    for (size_t n = t; n <= trace.n_max; ++n)
        alive.push_back(n);
    s.survivors.push_back(alive);

    vector<ColourId> chosen;
    if (alive.size() < survivor_floor)
        s.truncated = true;
    for (Vertex j = 1; j <= t && ! s.truncated; ++j) {
        std::map<ColourId, size_t> votes;
        for (auto n : s.survivors.back())
            ++votes[trace.at(n)[j]];
        auto best = votes.begin();
        for (auto it = votes.begin(); it != votes.end(); ++it)
            if (it->second > best->second)
                best = it;

        if (best->second < survivor_floor) {
            s.truncated = true;
            break;
        }
        vector<size_t> next;
        for (auto n : s.survivors.back())
            if (trace.at(n)[j] == best->first)
                next.push_back(n);
        s.survivors.push_back(std::move(next));
        chosen.push_back(best->first);
    }
    s.length = chosen.size();
    s.colouring = Colouring(std::move(chosen));
    return s;
}

auto certify(const CertificationInput & in) -> CertificationReport
{
    const auto & stable = in.stabilized;
    auto t = stable.length;
    if (in.horizon < stable.requested_t)
        throw InputError("/horizon", "horizon must be at least t");
    if (in.restricted.order() < in.horizon)
        throw InputError("/horizon", "restricted lists do not reach the horizon");
    bool pair_form = in.restricted.mode() == Mode::correspondence;
    if (pair_form && ! in.correspondence)
        throw InputError("/correspondence", "correspondence mode needs the unrestricted bad pairs");

    CertificationReport report;
    report.t = t;
    report.horizon = in.horizon;
    if (t == 0)
        return report;

    auto n_star = stable.final_survivors().front();
    report.n_star = n_star;
    const auto & chi = in.trace.at(n_star); // agrees with the stabilized colouring on v_1..v_t
    const auto & lists = in.restricted.lists();

    Graph g;
    Digraph d;
    if (in.presentation.directed)
        d = materialize_digraph(in.presentation, in.horizon);
    else
        g = materialize_graph(in.presentation, in.horizon);
    auto neighbours = [&](Vertex v) { return in.presentation.directed ? d.out_neighbours(v) : g.neighbours(v); };

    bool pass = true;
    for (Vertex i = 1; i <= t; ++i) {
        if (! in.presentation.infinite_degree(i)) {
            auto bound = in.presentation.closure_bound(i);
            if (! bound || *bound > t) {
                report.not_enclosed.push_back(i);
                continue;
            }
            EnclosedCheck check{i, 0, 0, false};
            for (auto j : neighbours(i)) {
                ++check.degree;
                if (in.restricted.bad(i, chi[i], j, chi[j]))
                    ++check.conflicts;
            }
            check.pass = check.conflicts * in.k <= check.degree;
            pass = pass && check.pass;
            report.enclosed.push_back(check);
            continue;
        }

        InfiniteDegreeCheck check;
        check.vertex = i;
        check.colour = chi[i];
        auto family = pair_form ? in.ledger.family_for(i, chi[i]) : in.ledger.family_for(i);
        if (! family)
            throw CertificationRefused("ledger has no witness family for infinite-degree vertex " + std::to_string(i));
        check.family = in.ledger.labels[*family];

        // The colour at v_j that would make v_i v_j bad, before restriction.
        auto threat = [&](Vertex j) -> optional<ColourId> {
            if (! pair_form)
                return chi[i];
            for (auto & p : in.correspondence->pairs(i, j))
                if (p.first == chi[i])
                    return p.second;
            return std::nullopt;
        };

        for (auto j : neighbours(i))
            if (auto c = threat(j); c && ! lists.contains(j, *c))
                ++check.witness_count;

        if (auto entry = in.ledger.entry(*family, pair_form ? optional<ColourId>{} : optional{chi[i]})) {
            check.ledger_processed = entry->processed;
            check.ledger_shortfalls = entry->shortfalls;
            for (auto j : entry->witnesses) {
                if (j > in.horizon)
                    continue;
                ++check.ledger_witnesses;
                auto c = threat(j);
                if (! c || lists.contains(j, *c))
                    ++check.witness_violations;
                else if (j <= n_star) {
                    ++check.witnesses_coloured;
                    if (in.restricted.bad(i, chi[i], j, chi[j]) ||
                        (pair_form && in.correspondence->bad(i, chi[i], j, chi[j])))
                        ++check.witness_violations;
                }
            }
        }
        check.pass = check.witness_count >= check.ledger_witnesses && check.witness_violations == 0;
        pass = pass && check.pass;
        report.infinite.push_back(check);
    }
    report.pass = pass;
    return report;
}

auto presentation_lists(std::uint64_t seed, size_t prefix, size_t list_size, size_t palette) -> ListSystem
{
    if (list_size == 0 || palette < list_size)
        throw InputError("/palette", "palette must hold at least list_size colours");
    vector<vector<ColourId>> lists(prefix);
    for (Vertex v = 1; v <= prefix; ++v) {
        Rng rng(hash_combine(seed, kListSalt, v));
        vector<ColourId> pool(palette);
        for (size_t c = 0; c < palette; ++c)
            pool[c] = ColourId{static_cast<std::uint32_t>(c)};
        for (size_t i = 0; i < list_size; ++i)
            std::swap(pool[i], pool[i + rng.below(palette - i)]);
        lists[v - 1].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(list_size));
    }
    return ListSystem(std::move(lists));
}

auto presentation_correspondence(std::uint64_t seed, const CountablePresentation & presentation, size_t prefix,
    const ListSystem & lists) -> CorrespondenceSystem
{
    vector<Edge> edges;
    if (presentation.directed)
        edges = materialize_digraph(presentation, prefix).arcs();
    else
        edges = materialize_graph(presentation, prefix).edges();

    CorrespondenceSystem result;
    for (auto & e : edges) {
        auto lo = std::min(e.first, e.second), hi = std::max(e.first, e.second);
        Rng rng(hash_combine(seed ^ kPairSalt, lo, hi));
        vector<ColourId> targets(lists.list(hi).begin(), lists.list(hi).end());
        rng.shuffle(targets);
        size_t next = 0;
        for (auto c : lists.list(lo))
            if (next < targets.size() && rng.chance(0.75))
                result.add(lo, hi, c, targets[next++]);
    }
    return result;
}

auto restrict_correspondence(const CorrespondenceSystem & system, const ListSystem & lists) -> CorrespondenceSystem
{
    CorrespondenceSystem result;
    for (auto & e : system.edge_keys()) {
        if (e.second > lists.order())
            continue;
        for (auto & p : system.pairs(e.first, e.second))
            if (lists.contains(e.first, p.first) && lists.contains(e.second, p.second))
                result.add(e.first, e.second, p.first, p.second);
    }
    return result;
}

auto run_tower(const TowerConfig & config) -> TowerRun
{
    TowerRun run;
    run.config = config;
    auto & c = run.config;
    if (c.list_size == 0)
        c.list_size = c.k + 1;
    if (c.palette == 0)
        c.palette = c.list_size + 2;
    if (c.horizon == 0)
        c.horizon = c.n_max;
    if (c.list_size < 3)
        throw InputError("/list_size", "lists must have at least 3 colours to restrict to 2");

    run.presentation = builtin_family(c.family, c.params);
    run.prefix = std::max(c.n_max, c.horizon);
    run.lists = presentation_lists(c.seed, run.prefix, c.list_size, c.palette);

    if (c.mode == Mode::correspondence) {
        run.correspondence = presentation_correspondence(c.seed, run.presentation, run.prefix, run.lists);
        run.families = build_correspondence_families(run.presentation, run.prefix, run.lists, *run.correspondence);
        run.restriction = restrict_pairs(run.prefix, run.lists, run.families, c.budget);
        auto & sub = run.restriction.assignment.sublists;
        run.restricted = Constraints(sub, restrict_correspondence(*run.correspondence, sub));
    }
    else {
        run.families = build_neighbourhood_families(run.presentation, run.prefix);
        run.restriction = restrict_lists(run.prefix, run.lists, run.families, c.budget);
        run.restricted = Constraints(run.restriction.assignment.sublists);
    }

    run.trace = prefix_colourings(run.presentation, run.restricted, c.k, c.n_max);
    run.stabilized = stabilize(run.trace, c.t, c.survivor_floor);
    run.certificate = certify(CertificationInput{run.presentation, run.trace, run.stabilized, run.restricted,
        run.correspondence ? &*run.correspondence : nullptr, run.restriction.ledger, c.k, c.horizon});
    return run;
}

} // namespace majcol
