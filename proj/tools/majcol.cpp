#include <majcol/fuzz.hpp>
#include <majcol/instance.hpp>
#include <majcol/tower.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace majcol;
using nlohmann::json;

namespace {

struct Options
{
    std::string input = "-";
    std::string output = "-";
    std::uint64_t seed = 1;
    std::optional<std::size_t> k;
    std::string format = "json";
    bool directed = false;

    // oracle, fuzz
    std::size_t cap = kDefaultSearchCap;
    std::size_t trials = 100;
    std::size_t max_order = 6;

    // verify
    std::string colouring;

    // restrict, tower, gen
    std::string family;
    std::optional<std::uint64_t> family_seed;
    double density = 0.5;
    std::size_t n_max = 512;
    std::size_t t = 64;
    std::optional<std::size_t> budget;
    std::size_t survivor_floor = 8;
    std::size_t horizon = 0;
    std::size_t list_size = 0;
    std::size_t palette = 0;
    std::string mode = "list";
    bool reference = false;
};

auto read_text(const std::string & path) -> std::string
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("", "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

auto write_text(const std::string & path, const std::string & text) -> void
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InputError("", "cannot write " + path);
    out << text;
}

auto parse_json(const std::string & text) -> json
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
}

auto mode_of(const Options & o) -> Mode
{
    return o.mode == "correspondence" ? Mode::correspondence : Mode::list;
}

auto load_instance(const Options & o) -> Instance
{
    auto text = read_text(o.input);
    Instance instance;
    if (o.format == "edgelist") {
        std::istringstream in(text);
        instance = instance_from_edge_list(read_edge_list(in), o.directed, o.k.value_or(2));
    }
    else {
        auto document = parse_json(text);
        instance = parse_instance(document.contains("instance") ? document["instance"] : document);
    }
    if (o.k) {
        if (*o.k < 2)
            throw InputError("/k", "k must be at least 2");
        instance.k = *o.k;
    }
    return instance;
}

auto started(const std::string & command, const Options & o) -> ResultDocument
{
    ResultDocument result;
    result.command = command;
    result.seed = o.seed;
    return result;
}

auto finish(const Options & o, const ResultDocument & result) -> ExitStatus
{
    write_text(o.output, dump(to_json(result)));
    return result.status;
}

auto verdict(bool pass) -> ExitStatus
{
    return pass ? ExitStatus::ok : ExitStatus::verification_failed;
}

auto solve(const Options & o) -> ExitStatus
{
    auto result = started("solve", o);
    auto instance = load_instance(o);
    if (instance.directed) {
        auto chi = dag_greedy(instance.digraph, instance.constraints, instance.k);
        result.report = verify_majority(instance.digraph, chi, instance.constraints, instance.k);
        result.colouring = std::move(chi);
    }
    else {
        auto found = local_search(instance.graph, instance.constraints, instance.k);
        result.report = verify_majority(instance.graph, found.colouring, instance.constraints, instance.k);
        result.colouring = std::move(found.colouring);
        result.trace = std::move(found.trace);
    }
    result.status = verdict(result.report->pass);
    result.instance = std::move(instance);
    return finish(o, result);
}

auto verify(const Options & o) -> ExitStatus
{
    auto result = started("verify", o);
    auto text = read_text(o.input);
    Instance instance;
    Colouring chi;
    std::optional<MajorityReport> embedded;
    if (o.colouring.empty()) {
        auto document = parse_json(text);
        if (! document.contains("instance") || ! document.contains("colouring"))
            throw InputError("", "without --colouring the input must be a result document with instance and colouring");
        auto previous = result_from_json(document);
        instance = *previous.instance;
        chi = *previous.colouring;
        embedded = previous.report;
        if (o.k)
            instance.k = *o.k;
    }
    else {
        instance = load_instance(o);
        chi = colouring_from_json(parse_json(read_text(o.colouring)), instance.palette, instance.order());
    }

    auto report = instance.directed ? verify_majority(instance.digraph, chi, instance.constraints, instance.k)
                                    : verify_majority(instance.graph, chi, instance.constraints, instance.k);
    if (embedded)
        result.details["matches_embedded_report"] = to_json(*embedded) == to_json(report);
    result.status = verdict(report.pass);
    result.report = std::move(report);
    result.colouring = std::move(chi);
    result.instance = std::move(instance);
    return finish(o, result);
}

auto oracle(const Options & o) -> ExitStatus
{
    auto result = started("oracle", o);
    auto instance = load_instance(o);
    result.details["cap"] = o.cap;
    if (instance.directed) {
        auto found = exhaustive_digraph_search(instance.digraph, instance.constraints, instance.k, o.cap);
        result.details["exists"] = found.has_value();
        if (found) {
            result.report = verify_majority(instance.digraph, *found, instance.constraints, instance.k);
            result.colouring = std::move(found);
        }
        result.status = verdict(result.report && result.report->pass);
    }
    else {
        auto optimum = brute_force_optimum(instance.graph, instance.constraints, o.cap);
        auto report = verify_majority(instance.graph, optimum.witness, instance.constraints, instance.k);
        result.details["min_conflicts"] = optimum.min_conflicts;
        if (instance.constraints.lists().uniform_size() == instance.k) {
            auto found = local_search(instance.graph, instance.constraints, instance.k);
            result.details["local_search_conflicts"] = found.trace.final_conflicts;
            result.details["sandwich"] = optimum.min_conflicts <= found.trace.final_conflicts;
        }
        result.status = verdict(report.pass);
        result.report = std::move(report);
        result.colouring = std::move(optimum.witness);
    }
    result.instance = std::move(instance);
    return finish(o, result);
}

auto restrict(const Options & o) -> ExitStatus
{
    auto result = started("restrict", o);
    RestrictionInput in;
    if (! o.family.empty()) {
        auto k = o.k.value_or(2);
        auto list_size = o.list_size ? o.list_size : k + 1;
        FamilyParams params{o.family_seed.value_or(o.seed), o.density};
        auto presentation = builtin_family(o.family, params);
        in.prefix = o.n_max;
        in.palette = Palette::generated(o.palette ? o.palette : list_size + 2);
        in.lists = presentation_lists(o.seed, in.prefix, list_size, in.palette.size());
        if (mode_of(o) == Mode::correspondence) {
            auto system = presentation_correspondence(o.seed, presentation, in.prefix, in.lists);
            in.families = build_correspondence_families(presentation, in.prefix, in.lists, system);
            in.pair_form = true;
        }
        else
            in.families = build_neighbourhood_families(presentation, in.prefix);
        in.budget = o.budget.value_or(300);
        result.details["family"] = o.family;
    }
    else {
        in = parse_restriction(parse_json(read_text(o.input)));
        if (o.budget)
            in.budget = *o.budget;
    }
    auto restricted = run_restriction(in);
    result.details["prefix"] = in.prefix;
    result.details["budget"] = in.budget;
    result.details["lists"] = to_json(restricted.assignment, in.palette)["sublists"];
    result.details["removed"] = to_json(restricted.assignment, in.palette)["removed"];
    result.details["ledger"] = to_json(restricted.ledger, in.palette);
    return finish(o, result);
}

auto directed_variant(const std::string & family) -> std::string
{
    if (family == "ray")
        return "directed_ray";
    if (family == "star")
        return "directed_star";
    auto p = builtin_family(family, {});
    if (! p.directed)
        throw InputError("/family", "family '" + family + "' has no directed variant");
    return family;
}

auto tower(const Options & o) -> ExitStatus
{
    auto result = started("tower", o);
    TowerConfig config;
    config.family = o.family.empty() ? "ray" : o.family;
    if (o.directed)
        config.family = directed_variant(config.family);
    config.params = FamilyParams{o.family_seed.value_or(o.seed), o.density};
    config.seed = o.seed;
    config.n_max = o.n_max;
    config.t = o.t;
    config.k = o.k.value_or(2);
    config.list_size = o.list_size;
    config.palette = o.palette;
    config.budget = o.budget.value_or(300);
    config.survivor_floor = o.survivor_floor;
    config.horizon = o.horizon;
    config.mode = mode_of(o);
    if (config.k < 2)
        throw InputError("/k", "k must be at least 2");

    auto run = run_tower(config);
    auto palette = Palette::generated(run.config.palette);
    result.details = to_json(run, palette);
    bool all_majority = std::all_of(run.trace.majority.begin(), run.trace.majority.end(), [](bool b) { return b; });
    result.status = verdict(all_majority && run.certificate.pass);
    return finish(o, result);
}

auto fuzz(const Options & o) -> ExitStatus
{
    auto result = started("fuzz", o);
    FuzzConfig config{o.seed, o.trials, o.max_order, o.k.value_or(2), mode_of(o), o.cap};
    auto report = run_fuzz(config);
    result.details = to_json(report);
    result.status = verdict(report.pass());
    return finish(o, result);
}

auto gen(const Options & o) -> ExitStatus
{
    if (o.family.empty())
        throw InputError("/family", "gen needs --family");
    auto k = o.k.value_or(2);
    if (k < 2)
        throw InputError("/k", "k must be at least 2");
    auto order = o.n_max;
    if (order < 1)
        throw InputError("/n_max", "order must be at least 1");
    auto family = o.directed ? directed_variant(o.family) : o.family;
    FamilyParams params{o.family_seed.value_or(o.seed), o.density};
    auto presentation = builtin_family(family, params);

    if (o.format == "edgelist") {
        std::ostringstream out;
        out << "# order " << order << "\n";
        auto edges = presentation.directed ? materialize_digraph(presentation, order).arcs()
                                           : materialize_graph(presentation, order).edges();
        for (auto & e : edges)
            out << e.first << " " << e.second << "\n";
        write_text(o.output, out.str());
        return ExitStatus::ok;
    }

    Instance instance;
    instance.directed = presentation.directed;
    if (instance.directed)
        instance.digraph = materialize_digraph(presentation, order);
    else
        instance.graph = materialize_graph(presentation, order);
    if (o.reference)
        instance.reference = GraphReference{family, params, order};

    auto list_size = o.list_size ? o.list_size : k;
    auto palette_size = o.palette ? o.palette : list_size;
    instance.palette = Palette::generated(palette_size);
    auto lists = presentation_lists(o.seed, order, list_size, palette_size);
    if (mode_of(o) == Mode::correspondence) {
        auto system = presentation_correspondence(o.seed, presentation, order, lists);
        instance.constraints = Constraints(std::move(lists), std::move(system));
    }
    else
        instance.constraints = Constraints(std::move(lists));
    instance.k = k;
    write_text(o.output, dump(to_json(instance)));
    return ExitStatus::ok;
}

auto error_document(const std::string & command, const Options & o, ExitStatus status, const std::string & message)
    -> void
{
    auto result = started(command, o);
    result.status = status;
    result.details["error"] = message;
    if (o.output != "-")
        write_text(o.output, dump(to_json(result)));
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Majority list and correspondence colouring toolkit"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App * sub) {
        sub->add_option("--input", o.input, "Input file ('-' for stdin)");
        sub->add_option("--output", o.output, "Output file ('-' for stdout)");
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--k", o.k, "Majority parameter k")->check(CLI::PositiveNumber);
        sub->add_option("--format", o.format, "Instance format")->check(CLI::IsMember({"json", "edgelist"}));
        sub->add_flag("--directed", o.directed, "Treat the graph or family as directed");
    };
    auto mode = [&](CLI::App * sub) {
        sub->add_option("--mode", o.mode, "Constraint mode")->check(CLI::IsMember({"list", "correspondence"}));
    };
    auto family = [&](CLI::App * sub) {
        sub->add_option("--family", o.family, "Built-in family");
        sub->add_option("--family-seed", o.family_seed, "Seed of random families (defaults to --seed)");
        sub->add_option("--density", o.density, "Arc probability of random_dag");
        sub->add_option("--list-size", o.list_size, "List size (default k + 1; gen: k)");
        sub->add_option("--palette", o.palette, "Palette size");
    };

    auto solve_cmd = app.add_subcommand("solve", "Majority colouring by local search or DAG greedy");
    common(solve_cmd);
    auto verify_cmd = app.add_subcommand("verify", "Audit a colouring");
    common(verify_cmd);
    verify_cmd->add_option("--colouring", o.colouring, "Colouring JSON (omit when --input is a result document)");
    auto oracle_cmd = app.add_subcommand("oracle", "Exhaustive search");
    common(oracle_cmd);
    oracle_cmd->add_option("--cap", o.cap, "Maximum number of colourings to enumerate");
    auto restrict_cmd = app.add_subcommand("restrict", "Shrink lists against witness families");
    common(restrict_cmd);
    mode(restrict_cmd);
    family(restrict_cmd);
    restrict_cmd->add_option("--n-max", o.n_max, "Prefix length for --family");
    restrict_cmd->add_option("--budget", o.budget, "Schedule length");
    auto tower_cmd = app.add_subcommand("tower", "Finite prefix colourings, stabilization and certification");
    common(tower_cmd);
    mode(tower_cmd);
    family(tower_cmd);
    tower_cmd->add_option("--n-max", o.n_max, "Largest prefix coloured");
    tower_cmd->add_option("--t", o.t, "Stabilization depth");
    tower_cmd->add_option("--budget", o.budget, "Restriction schedule length");
    tower_cmd->add_option("--survivor-floor", o.survivor_floor, "Minimum surviving prefix colourings");
    tower_cmd->add_option("--horizon", o.horizon, "Certification horizon (default n-max)");
    auto fuzz_cmd = app.add_subcommand("fuzz", "Random instances checked against the oracle");
    common(fuzz_cmd);
    mode(fuzz_cmd);
    fuzz_cmd->add_option("--trials", o.trials, "Number of random instances");
    fuzz_cmd->add_option("--max-order", o.max_order, "Largest graph order");
    fuzz_cmd->add_option("--cap", o.cap, "Oracle cap");
    auto gen_cmd = app.add_subcommand("gen", "Emit a built-in family prefix as an instance");
    common(gen_cmd);
    mode(gen_cmd);
    family(gen_cmd);
    gen_cmd->add_option("--n-max", o.n_max, "Prefix length");
    gen_cmd->add_flag("--reference", o.reference, "Describe the graph by family reference");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return static_cast<int>(ExitStatus::input_error);
    }

    auto sub = app.get_subcommands().front();
    auto name = sub->get_name();
    try {
        ExitStatus status;
        if (sub == solve_cmd)
            status = solve(o);
        else if (sub == verify_cmd)
            status = verify(o);
        else if (sub == oracle_cmd)
            status = oracle(o);
        else if (sub == restrict_cmd)
            status = restrict(o);
        else if (sub == tower_cmd)
            status = tower(o);
        else if (sub == fuzz_cmd)
            status = fuzz(o);
        else
            status = gen(o);
        return static_cast<int>(status);
    }
    catch (const InputError & e) {
        std::string message = e.what();
        std::cerr << "majcol " << name << ": " << message << "\n";
        error_document(name, o, ExitStatus::input_error, message);
        return static_cast<int>(ExitStatus::input_error);
    }
    catch (const CycleError & e) {
        std::cerr << "majcol " << name << ": " << e.what() << "\n";
        error_document(name, o, ExitStatus::input_error, e.what());
        return static_cast<int>(ExitStatus::input_error);
    }
    catch (const CapExceeded & e) {
        std::cerr << "majcol " << name << ": " << e.what() << "\n";
        error_document(name, o, ExitStatus::resource_cap, e.what());
        return static_cast<int>(ExitStatus::resource_cap);
    }
    catch (const CertificationRefused & e) {
        std::cerr << "majcol " << name << ": " << e.what() << "\n";
        error_document(name, o, ExitStatus::verification_failed, e.what());
        return static_cast<int>(ExitStatus::verification_failed);
    }
    catch (const std::exception & e) {
        std::cerr << "majcol " << name << ": " << e.what() << "\n";
        error_document(name, o, ExitStatus::input_error, e.what());
        return static_cast<int>(ExitStatus::input_error);
    }
}
