#include <majcol/fuzz.hpp>
#include <majcol/random.hpp>

namespace majcol {

using std::size_t;
using std::string;

namespace {

auto with_edges(const Instance & instance, const std::vector<Edge> & edges) -> Instance
{
    auto copy = instance;
    copy.graph = Graph::build(instance.order(), edges);
    if (auto c = instance.constraints.correspondence()) {
        CorrespondenceSystem kept;
        for (auto & e : c->edge_keys())
            if (copy.graph.adjacent(e.first, e.second))
                for (auto & p : c->pairs(e.first, e.second))
                    kept.add(e.first, e.second, p.first, p.second);
        copy.constraints = Constraints(instance.constraints.lists(), std::move(kept));
    }
    return copy;
}

} // namespace

auto check_instance(const Instance & instance, size_t cap, bool * oracle_ran) -> string
{
    if (oracle_ran)
        *oracle_ran = false;
    auto result = local_search(instance.graph, instance.constraints, instance.k);
    auto report = verify_majority(instance.graph, result.colouring, instance.constraints, instance.k);
    if (! report.pass)
        return "local search result fails the audit at vertex " + std::to_string(report.failing().front());

    auto & trace = result.trace;
    auto previous = trace.initial_conflicts;
    for (auto & step : trace.steps) {
        if (step.conflicts_after >= previous)
            return "conflict total did not decrease at the move of vertex " + std::to_string(step.vertex);
        previous = step.conflicts_after;
    }
    auto actual = count_bad_edges(instance.graph, result.colouring, instance.constraints);
    if (previous != trace.final_conflicts || actual != trace.final_conflicts)
        return "trace total " + std::to_string(trace.final_conflicts) + " disagrees with the colouring's " +
            std::to_string(actual);

    try {
        auto optimum = brute_force_optimum(instance.graph, instance.constraints, cap);
        if (oracle_ran)
            *oracle_ran = true;
        if (optimum.min_conflicts > trace.final_conflicts)
            return "oracle minimum " + std::to_string(optimum.min_conflicts) + " exceeds local search total " +
                std::to_string(trace.final_conflicts);
        if (count_bad_edges(instance.graph, optimum.witness, instance.constraints) != optimum.min_conflicts)
            return "oracle witness does not attain the reported minimum";
    }
    catch (const CapExceeded &) {
    }
    return {};
}

auto random_instance(std::uint64_t seed, size_t max_order, size_t k, Mode mode) -> Instance
{
    Rng rng(seed);
    Instance instance;
    auto order = static_cast<size_t>(rng.between(1, max_order));
    instance.graph = random_graph(rng, order, 0.5);
    auto palette = 2 * k;
    instance.palette = Palette::generated(palette);
    auto lists = random_lists(rng, order, k, palette);
    if (mode == Mode::correspondence) {
        auto pairs = random_correspondence(rng, instance.graph, lists);
        instance.constraints = Constraints(std::move(lists), std::move(pairs));
    }
    else
        instance.constraints = Constraints(std::move(lists));
    instance.k = k;
    return instance;
}

auto shrink(const Instance & instance, size_t cap) -> Instance
{
    auto current = instance;
    bool progress = true;
    while (progress) {
        progress = false;
        auto edges = current.graph.edges();
        for (size_t i = 0; i < edges.size(); ++i) {
            auto fewer = edges;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
            auto candidate = with_edges(current, fewer);
            if (! check_instance(candidate, cap).empty()) {
                current = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return current;
}

auto run_fuzz(const FuzzConfig & config) -> FuzzReport
{
    if (config.trials < 1)
        throw InputError("/trials", "at least one trial is required");
    if (config.max_order < 1)
        throw InputError("/max_order", "max_order must be at least 1");
    if (config.k < 2)
        throw InputError("/k", "k must be at least 2");

    FuzzReport report;
    report.trials = config.trials;
    for (size_t trial = 0; trial < config.trials; ++trial) {
        auto instance = random_instance(hash_combine(config.seed, trial), config.max_order, config.k, config.mode);
        bool oracle = false;
        auto problem = check_instance(instance, config.cap, &oracle);
        if (oracle)
            ++report.oracle_checked;
        if (! problem.empty()) {
            report.failures.push_back(FuzzFailure{trial, problem, shrink(instance, config.cap)});
            continue;
        }
        ++report.final_conflicts[local_search(instance.graph, instance.constraints, instance.k).trace.final_conflicts];
    }
    return report;
}

auto to_json(const FuzzReport & report) -> nlohmann::json
{
    nlohmann::json failures = nlohmann::json::array();
    for (auto & f : report.failures)
        failures.push_back({{"trial", f.trial}, {"reason", f.reason}, {"reproducer", to_json(f.reproducer)}});
    nlohmann::json histogram = nlohmann::json::object();
    for (auto & [conflicts, count] : report.final_conflicts)
        histogram[std::to_string(conflicts)] = count;
    return {{"trials", report.trials}, {"oracle_checked", report.oracle_checked}, {"pass", report.pass()},
        {"failures", failures}, {"final_conflicts", histogram}};
}

} // namespace majcol
