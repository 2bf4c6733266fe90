#include <majcol/instance.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace majcol {

using nlohmann::json;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace {

auto require(const json & j, const string & key, const string & path) -> const json &
{
    if (! j.is_object() || ! j.contains(key))
        throw InputError(path, "missing required field '" + key + "'");
    return j.at(key);
}

auto as_natural(const json & j, const string & path) -> size_t
{
    if (! j.is_number_integer() || j.get<long long>() < 0)
        throw InputError(path, "expected a non-negative integer");
    return j.get<size_t>();
}

auto as_vertex(const json & j, size_t order, const string & path) -> Vertex
{
    auto v = as_natural(j, path);
    if (v < 1 || v > order)
        throw InputError(path, "vertex " + std::to_string(v) + " out of range [1," + std::to_string(order) + "]");
    return static_cast<Vertex>(v);
}

auto vertex_key(const string & key, size_t order, const string & path) -> Vertex
{
    size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(key, &used);
    }
    catch (const std::exception &) {
        used = 0;
    }
    if (used != key.size() || key.empty())
        throw InputError(path, "expected a vertex id key, got '" + key + "'");
    if (v < 1 || v > order)
        throw InputError(path, "vertex " + key + " out of range [1," + std::to_string(order) + "]");
    return static_cast<Vertex>(v);
}

auto as_name_array(const json & j, const string & path) -> vector<string>
{
    if (! j.is_array())
        throw InputError(path, "expected an array of colour names");
    vector<string> names;
    for (size_t i = 0; i < j.size(); ++i) {
        if (! j[i].is_string())
            throw InputError(path + "/" + std::to_string(i), "colour names must be strings");
        names.push_back(j[i].get<string>());
    }
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError(path, "colour names must be unique within a list");
    return names;
}

auto colour_named(const Palette & palette, const string & name, const string & path) -> ColourId
{
    auto id = palette.id(name);
    if (! id)
        throw InputError(path, "unknown colour '" + name + "'");
    return *id;
}

// Colour names per vertex; ids are assigned afterwards from the sorted palette.
auto parse_named_lists(const json & j, size_t n) -> vector<vector<string>>
{
    vector<vector<string>> named(n);
    if (j.contains("uniform_list")) {
        auto names = as_name_array(j["uniform_list"], "/uniform_list");
        std::fill(named.begin(), named.end(), names);
    }
    else if (j.contains("lists")) {
        auto & ls = j["lists"];
        if (! ls.is_object())
            throw InputError("/lists", "expected an object mapping vertex ids to colour arrays");
        vector<char> seen(n + 1, 0);
        for (auto & [key, value] : ls.items()) {
            auto v = vertex_key(key, n, "/lists/" + key);
            named[v - 1] = as_name_array(value, "/lists/" + key);
            seen[v] = 1;
        }
        for (Vertex v = 1; v <= n; ++v)
            if (! seen[v])
                throw InputError("/lists/" + std::to_string(v), "vertex has no list");
    }
    else
        throw InputError("", "missing required field 'lists' (or 'uniform_list')");
    for (Vertex v = 1; v <= n; ++v)
        if (named[v - 1].empty())
            throw InputError("/lists/" + std::to_string(v), "empty list");
    return named;
}

auto palette_of(const vector<vector<string>> & named) -> Palette
{
    vector<string> all;
    for (auto & l : named)
        all.insert(all.end(), l.begin(), l.end());
    return Palette(std::move(all));
}

// An explicit "palette" may name colours no list uses; it must cover the lists.
auto palette_for(const json & j, const vector<vector<string>> & named) -> Palette
{
    if (! j.contains("palette"))
        return palette_of(named);
    Palette palette(as_name_array(j["palette"], "/palette"));
    for (size_t i = 0; i < named.size(); ++i)
        for (auto & name : named[i])
            if (! palette.id(name))
                throw InputError("/lists/" + std::to_string(i + 1), "colour '" + name + "' is not in the palette");
    return palette;
}

auto to_list_system(const vector<vector<string>> & named, const Palette & palette) -> ListSystem
{
    vector<vector<ColourId>> ids(named.size());
    for (size_t i = 0; i < named.size(); ++i)
        for (auto & name : named[i])
            ids[i].push_back(*palette.id(name));
    return ListSystem(std::move(ids));
}

struct GraphPart
{
    bool directed = false;
    Graph graph;
    Digraph digraph;
    optional<GraphReference> reference;
    size_t order = 0;
};

auto parse_graph(const json & j, const string & base) -> GraphPart
{
    GraphPart part;
    if (! j.is_object())
        throw InputError(base, "expected an object");

    if (j.contains("family")) {
        if (! j["family"].is_string())
            throw InputError(base + "/family", "expected a family name");
        GraphReference ref;
        ref.family = j["family"].get<string>();
        const json none = json::object();
        auto & params = j.contains("params") ? j["params"] : none;
        if (! params.is_object())
            throw InputError(base + "/params", "expected an object");
        if (j.contains("order"))
            ref.order = as_natural(j["order"], base + "/order");
        else
            ref.order = as_natural(require(params, "order", base), base + "/params/order");
        if (j.contains("seed"))
            ref.params.seed = as_natural(j["seed"], base + "/seed");
        else if (params.contains("seed"))
            ref.params.seed = as_natural(params["seed"], base + "/params/seed");
        if (params.contains("density")) {
            if (! params["density"].is_number())
                throw InputError(base + "/params/density", "expected a number");
            ref.params.density = params["density"].get<double>();
        }
        if (ref.order < 1)
            throw InputError(base + "/order", "order must be at least 1");
        CountablePresentation p;
        try {
            p = builtin_family(ref.family, ref.params);
        }
        catch (const InputError & e) {
            throw InputError(base + e.path(), string(e.what()).substr(e.path().size() + 2));
        }
        part.directed = p.directed;
        part.order = ref.order;
        if (p.directed)
            part.digraph = materialize_digraph(p, ref.order);
        else
            part.graph = materialize_graph(p, ref.order);
        part.reference = ref;
        return part;
    }

    part.order = as_natural(require(j, "order", base), base + "/order");
    if (j.contains("directed")) {
        if (! j["directed"].is_boolean())
            throw InputError(base + "/directed", "expected a boolean");
        part.directed = j["directed"].get<bool>();
    }
    vector<Edge> edges;
    if (j.contains("edges")) {
        auto & es = j["edges"];
        if (! es.is_array())
            throw InputError(base + "/edges", "expected an array of vertex pairs");
        for (size_t i = 0; i < es.size(); ++i) {
            auto path = base + "/edges/" + std::to_string(i);
            if (! es[i].is_array() || es[i].size() != 2)
                throw InputError(path, "expected a pair [u, v]");
            auto u = as_vertex(es[i][0], part.order, path + "/0");
            auto v = as_vertex(es[i][1], part.order, path + "/1");
            if (u == v)
                throw InputError(path, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
            edges.push_back(Edge{u, v});
        }
    }
    if (part.directed)
        part.digraph = Digraph::build(part.order, edges);
    else
        part.graph = Graph::build(part.order, edges);
    return part;
}

auto names_of(const std::vector<ColourId> & ids, const Palette & palette) -> json
{
    json a = json::array();
    for (auto c : ids)
        a.push_back(palette.name(c));
    return a;
}

auto lists_to_json(const ListSystem & lists, const Palette & palette) -> json
{
    json j = json::object();
    for (Vertex v = 1; v <= lists.order(); ++v)
        j[std::to_string(v)] = names_of({lists.list(v).begin(), lists.list(v).end()}, palette);
    return j;
}

auto optional_colour(const optional<ColourId> & c, const Palette & palette) -> json
{
    if (! c)
        return nullptr;
    return palette.name(*c);
}

auto outcome_name(Outcome o) -> const char *
{
    switch (o) {
    case Outcome::removed: return "removed";
    case Outcome::absent: return "absent";
    case Outcome::shortfall: return "shortfall";
    }
    return "?";
}

} // namespace

auto parse_instance(std::string_view text) -> Instance
{
    json document;
    try {
        document = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw InputError("", string("malformed JSON: ") + e.what());
    }
    return parse_instance(document);
}

auto parse_instance(const json & j) -> Instance
{
    if (! j.is_object())
        throw InputError("", "instance must be a JSON object");

    Instance instance;
    if (! j.contains("graph") && ! j.contains("order") && ! j.contains("family"))
        throw InputError("", "missing required field 'graph'");
    // A bare {order, edges} object at the top level is also accepted.
    auto graph = j.contains("graph") ? parse_graph(j["graph"], "/graph") : parse_graph(j, "");
    instance.directed = graph.directed;
    instance.graph = std::move(graph.graph);
    instance.digraph = std::move(graph.digraph);
    instance.reference = graph.reference;
    auto n = graph.order;

    auto named = parse_named_lists(j, n);
    instance.palette = palette_for(j, named);
    auto lists = to_list_system(named, instance.palette);

    string mode = j.contains("correspondence") ? "correspondence" : "list";
    if (j.contains("mode")) {
        if (! j["mode"].is_string() || (j["mode"] != "list" && j["mode"] != "correspondence"))
            throw InputError("/mode", "expected \"list\" or \"correspondence\"");
        mode = j["mode"].get<string>();
    }

    if (mode == "correspondence") {
        auto & cs = require(j, "correspondence", "");
        if (! cs.is_array())
            throw InputError("/correspondence", "expected an array of {edge, pairs} objects");
        CorrespondenceSystem system;
        for (size_t i = 0; i < cs.size(); ++i) {
            auto path = "/correspondence/" + std::to_string(i);
            auto & entry = cs[i];
            auto & edge = require(entry, "edge", path);
            if (! edge.is_array() || edge.size() != 2)
                throw InputError(path + "/edge", "expected a pair [u, v]");
            auto u = as_vertex(edge[0], n, path + "/edge/0");
            auto v = as_vertex(edge[1], n, path + "/edge/1");
            bool present = instance.directed ? instance.digraph.has_arc(u, v) || instance.digraph.has_arc(v, u)
                                             : instance.graph.adjacent(u, v);
            if (! present)
                throw InputError(path + "/edge", "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
            auto & pairs = require(entry, "pairs", path);
            if (! pairs.is_array())
                throw InputError(path + "/pairs", "expected an array of colour pairs");
            // Check the matching condition on the raw input so duplicates
            // are reported rather than silently merged.
            std::set<string> at_u, at_v;
            for (size_t p = 0; p < pairs.size(); ++p) {
                auto pp = path + "/pairs/" + std::to_string(p);
                if (! pairs[p].is_array() || pairs[p].size() != 2 || ! pairs[p][0].is_string() || ! pairs[p][1].is_string())
                    throw InputError(pp, "expected a pair of colour names");
                auto a = pairs[p][0].get<string>(), b = pairs[p][1].get<string>();
                if (! at_u.insert(a).second)
                    throw InputError(pp, "matching condition violated: colour '" + a + "' of vertex " +
                            std::to_string(u) + " is in more than one pair");
                if (! at_v.insert(b).second)
                    throw InputError(pp, "matching condition violated: colour '" + b + "' of vertex " +
                            std::to_string(v) + " is in more than one pair");
                system.add(u, v, colour_named(instance.palette, a, pp + "/0"), colour_named(instance.palette, b, pp + "/1"));
            }
        }
        instance.constraints = Constraints(std::move(lists), std::move(system));
    }
    else
        instance.constraints = Constraints(std::move(lists));

    if (j.contains("k"))
        instance.k = as_natural(j["k"], "/k");
    else if (auto size = instance.constraints.lists().uniform_size())
        instance.k = *size;
    else
        throw InputError("", "missing required field 'k' (lists are not uniform)");
    if (instance.k < 2)
        throw InputError("/k", "k must be at least 2");
    return instance;
}

auto parse_restriction(const json & j) -> RestrictionInput
{
    if (! j.is_object())
        throw InputError("", "restriction input must be a JSON object");
    RestrictionInput in;
    if (j.contains("budget"))
        in.budget = as_natural(j["budget"], "/budget");

    optional<Instance> instance;
    if (j.contains("graph")) {
        instance = parse_instance(j);
        in.prefix = instance->order();
        in.palette = instance->palette;
        in.lists = instance->constraints.lists();
    }
    else {
        in.prefix = as_natural(require(j, "prefix", ""), "/prefix");
        auto named = parse_named_lists(j, in.prefix);
        in.palette = palette_for(j, named);
        in.lists = to_list_system(named, in.palette);
    }

    auto presentation = [&](const string & path) {
        if (! instance || ! instance->reference)
            throw InputError(path, "generated families need a graph given by family reference");
        return builtin_family(instance->reference->family, instance->reference->params);
    };

    auto & fs = require(j, "families", "");
    if (fs.is_string()) {
        auto kind = fs.get<string>();
        if (kind == "neighbourhoods")
            in.families = build_neighbourhood_families(presentation("/families"), in.prefix);
        else if (kind == "correspondence") {
            auto p = presentation("/families");
            auto c = instance->constraints.correspondence();
            if (! c)
                throw InputError("/families", "correspondence families need a correspondence system");
            in.families = build_correspondence_families(p, in.prefix, in.lists, *c);
        }
        else
            throw InputError("/families", "expected \"neighbourhoods\", \"correspondence\" or an array");
    }
    else if (fs.is_array()) {
        for (size_t i = 0; i < fs.size(); ++i) {
            auto path = "/families/" + std::to_string(i);
            auto & f = fs[i];
            if (! f.is_object())
                throw InputError(path, "expected an object");
            string label = f.contains("label") && f["label"].is_string() ? f["label"].get<string>()
                                                                        : "X" + std::to_string(i + 1);
            if (f.contains("neighbourhood_of")) {
                if (! instance)
                    throw InputError(path, "neighbourhood families need a graph");
                auto u = as_vertex(f["neighbourhood_of"], in.prefix, path + "/neighbourhood_of");
                auto row = instance->directed ? instance->digraph.out_neighbours(u) : instance->graph.neighbours(u);
                if (! f.contains("label"))
                    label = (instance->directed ? "N+(" : "N(") + std::to_string(u) + ")";
                in.families.push_back(WitnessFamily::colour_form(label, {row.begin(), row.end()}, u));
            }
            else if (f.contains("members")) {
                auto & ms = f["members"];
                if (! ms.is_array())
                    throw InputError(path + "/members", "expected an array of vertices");
                vector<Vertex> members;
                for (size_t m = 0; m < ms.size(); ++m)
                    members.push_back(as_vertex(ms[m], in.prefix, path + "/members/" + std::to_string(m)));
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                in.families.push_back(WitnessFamily::colour_form(label, std::move(members)));
            }
            else if (f.contains("pairs")) {
                auto & ps = f["pairs"];
                if (! ps.is_array())
                    throw InputError(path + "/pairs", "expected an array of [vertex, colour] pairs");
                vector<std::pair<Vertex, ColourId>> members;
                for (size_t m = 0; m < ps.size(); ++m) {
                    auto pp = path + "/pairs/" + std::to_string(m);
                    if (! ps[m].is_array() || ps[m].size() != 2 || ! ps[m][1].is_string())
                        throw InputError(pp, "expected [vertex, colour]");
                    auto v = as_vertex(ps[m][0], in.prefix, pp + "/0");
                    auto c = colour_named(in.palette, ps[m][1].get<string>(), pp + "/1");
                    if (! in.lists.contains(v, c))
                        throw InputError(pp, "colour '" + ps[m][1].get<string>() + "' is not in the list of vertex " +
                                std::to_string(v));
                    members.emplace_back(v, c);
                }
                std::sort(members.begin(), members.end());
                for (size_t m = 1; m < members.size(); ++m)
                    if (members[m].first == members[m - 1].first)
                        throw InputError(path + "/pairs", "vertex " + std::to_string(members[m].first) +
                                " appears twice");
                in.families.push_back(WitnessFamily::pair_form(label, std::move(members)));
            }
            else
                throw InputError(path, "expected one of 'members', 'neighbourhood_of' or 'pairs'");
        }
    }
    else
        throw InputError("/families", "expected a string or an array");

    in.pair_form = ! in.families.empty() && in.families.front().kind() == WitnessFamily::Kind::pair_form;
    for (size_t i = 0; i < in.families.size(); ++i)
        if ((in.families[i].kind() == WitnessFamily::Kind::pair_form) != in.pair_form)
            throw InputError("/families/" + std::to_string(i), "colour-form and pair-form families cannot be mixed");
    return in;
}

auto run_restriction(const RestrictionInput & in) -> RestrictionResult
{
    return in.pair_form ? restrict_pairs(in.prefix, in.lists, in.families, in.budget)
                        : restrict_lists(in.prefix, in.lists, in.families, in.budget);
}

auto to_json(const Instance & instance) -> json
{
    json j;
    if (instance.reference) {
        auto & r = *instance.reference;
        j["graph"] = {{"family", r.family}, {"order", r.order}, {"seed", r.params.seed},
            {"params", {{"density", r.params.density}}}};
    }
    else {
        json edges = json::array();
        for (auto & e : instance.directed ? instance.digraph.arcs() : instance.graph.edges())
            edges.push_back({e.first, e.second});
        j["graph"] = {{"order", instance.order()}, {"directed", instance.directed}, {"edges", edges}};
    }
    j["palette"] = instance.palette.names();
    j["lists"] = lists_to_json(instance.constraints.lists(), instance.palette);
    j["k"] = instance.k;
    j["mode"] = instance.mode() == Mode::list ? "list" : "correspondence";
    if (auto c = instance.constraints.correspondence()) {
        json cs = json::array();
        for (auto & e : c->edge_keys()) {
            json pairs = json::array();
            for (auto & p : c->pairs(e.first, e.second))
                pairs.push_back({instance.palette.name(p.first), instance.palette.name(p.second)});
            cs.push_back({{"edge", {e.first, e.second}}, {"pairs", pairs}});
        }
        j["correspondence"] = cs;
    }
    return j;
}

auto instance_from_edge_list(const EdgeListText & text, bool directed, size_t k) -> Instance
{
    if (k < 2)
        throw InputError("/k", "k must be at least 2");
    Instance instance;
    instance.directed = directed;
    if (directed)
        instance.digraph = Digraph::build(text.order, text.edges);
    else
        instance.graph = Graph::build(text.order, text.edges);
    instance.palette = Palette::generated(k);
    vector<ColourId> list;
    for (size_t c = 0; c < k; ++c)
        list.push_back(ColourId{static_cast<std::uint32_t>(c)});
    instance.constraints = Constraints(ListSystem::uniform(text.order, list));
    instance.k = k;
    return instance;
}

auto to_edge_list(const Instance & instance) -> string
{
    std::ostringstream out;
    out << "# order " << instance.order() << "\n";
    for (auto & e : instance.directed ? instance.digraph.arcs() : instance.graph.edges())
        out << e.first << " " << e.second << "\n";
    return out.str();
}

auto colouring_to_json(const Colouring & colouring, const Palette & palette) -> json
{
    json j = json::object();
    for (Vertex v = 1; v <= colouring.order(); ++v)
        if (colouring.coloured(v))
            j[std::to_string(v)] = palette.name(colouring[v]);
    return j;
}

auto colouring_from_json(const json & document, const Palette & palette, size_t order) -> Colouring
{
    const json * j = &document;
    string base = "/colouring";
    if (document.is_object() && document.contains("colouring"))
        j = &document["colouring"];
    else
        base = "";
    if (! j->is_object())
        throw InputError(base, "expected an object mapping vertex ids to colour names");
    Colouring colouring(order);
    for (auto & [key, value] : j->items()) {
        auto path = base + "/" + key;
        auto v = vertex_key(key, order, path);
        if (! value.is_string())
            throw InputError(path, "expected a colour name");
        colouring.assign(v, colour_named(palette, value.get<string>(), path));
    }
    return colouring;
}

auto to_json(const MajorityReport & report) -> json
{
    json vertices = json::array();
    for (size_t i = 0; i < report.vertices.size(); ++i) {
        auto & a = report.vertices[i];
        vertices.push_back({{"vertex", i + 1}, {"degree", a.degree}, {"conflicts", a.conflicts},
            {"threshold", std::to_string(a.degree) + "/" + std::to_string(report.k)}, {"pass", a.pass}});
    }
    return {{"k", report.k}, {"pass", report.pass}, {"total_conflicts", report.total_conflicts()},
        {"failing", report.failing()}, {"vertices", vertices}};
}

auto report_from_json(const json & j) -> MajorityReport
{
    MajorityReport report;
    report.k = as_natural(require(j, "k", "/report"), "/report/k");
    report.pass = require(j, "pass", "/report").get<bool>();
    for (auto & v : require(j, "vertices", "/report"))
        report.vertices.push_back(VertexAudit{v.at("degree").get<size_t>(), v.at("conflicts").get<size_t>(),
            v.at("pass").get<bool>()});
    return report;
}

auto to_json(const SearchTrace & trace, const Palette & palette) -> json
{
    json steps = json::array();
    for (auto & s : trace.steps)
        steps.push_back({{"vertex", s.vertex}, {"from", palette.name(s.from)}, {"to", palette.name(s.to)},
            {"conflicts_after", s.conflicts_after}});
    return {{"initial_conflicts", trace.initial_conflicts}, {"final_conflicts", trace.final_conflicts},
        {"moves", trace.steps.size()}, {"steps", steps}};
}

auto trace_from_json(const json & j, const Palette & palette) -> SearchTrace
{
    SearchTrace trace;
    trace.initial_conflicts = require(j, "initial_conflicts", "/trace").get<size_t>();
    trace.final_conflicts = require(j, "final_conflicts", "/trace").get<size_t>();
    for (auto & s : require(j, "steps", "/trace"))
        trace.steps.push_back(SearchStep{s.at("vertex").get<Vertex>(),
            colour_named(palette, s.at("from").get<string>(), "/trace/steps"),
            colour_named(palette, s.at("to").get<string>(), "/trace/steps"), s.at("conflicts_after").get<size_t>()});
    return trace;
}

auto to_json(const WitnessLedger & ledger, const Palette & palette, bool with_schedule) -> json
{
    json families = json::array();
    for (size_t f = 0; f < ledger.labels.size(); ++f) {
        json fam = {{"label", ledger.labels[f]}};
        fam["anchor"] = ledger.anchors[f] ? json(*ledger.anchors[f]) : json(nullptr);
        if (ledger.kind == WitnessFamily::Kind::pair_form)
            fam["anchor_colour"] = optional_colour(ledger.anchor_colours[f], palette);
        families.push_back(fam);
    }
    json entries = json::array();
    for (auto & e : ledger.entries)
        entries.push_back({{"family", ledger.labels[e.family]}, {"colour", optional_colour(e.colour, palette)},
            {"processed", e.processed}, {"shortfalls", e.shortfalls}, {"absent", e.absent},
            {"witnesses", e.witnesses}});
    json j = {{"kind", ledger.kind == WitnessFamily::Kind::colour_form ? "colour_form" : "pair_form"},
        {"families", families}, {"entries", entries}, {"processed", ledger.schedule.size()}};
    if (with_schedule) {
        json schedule = json::array();
        for (auto & e : ledger.schedule) {
            json item = {{"family", ledger.labels[e.item.family]}, {"round", e.item.round},
                {"outcome", outcome_name(e.outcome)}};
            if (e.item.colour)
                item["colour"] = palette.name(*e.item.colour);
            item["witness"] = e.witness ? json(*e.witness) : json(nullptr);
            schedule.push_back(item);
        }
        j["schedule"] = schedule;
    }
    return j;
}

auto to_json(const SublistAssignment & assignment, const Palette & palette) -> json
{
    json removed = json::object();
    for (size_t i = 0; i < assignment.removed.size(); ++i)
        if (assignment.removed[i])
            removed[std::to_string(i + 1)] = palette.name(*assignment.removed[i]);
    return {{"sublists", lists_to_json(assignment.sublists, palette)}, {"removed", removed}};
}

auto to_json(const TowerRun & run, const Palette & palette) -> json
{
    auto & c = run.config;
    json config = {{"family", c.family}, {"seed", c.seed}, {"family_seed", c.params.seed},
        {"density", c.params.density}, {"n_max", c.n_max}, {"t", c.t}, {"k", c.k}, {"list_size", c.list_size},
        {"palette", c.palette}, {"budget", c.budget}, {"survivor_floor", c.survivor_floor}, {"horizon", c.horizon},
        {"mode", c.mode == Mode::list ? "list" : "correspondence"}};

    vector<size_t> failing;
    for (size_t n = 1; n <= run.trace.n_max; ++n)
        if (! run.trace.majority[n - 1])
            failing.push_back(n);
    json trace = {{"n_max", run.trace.n_max}, {"k", run.trace.k}, {"all_majority", failing.empty()},
        {"failing_prefixes", failing}, {"conflicts", run.trace.conflicts}};

    auto & s = run.stabilized;
    vector<size_t> sizes;
    for (auto & level : s.survivors)
        sizes.push_back(level.size());
    json stabilized = {{"requested_t", s.requested_t}, {"length", s.length}, {"truncated", s.truncated},
        {"survivor_floor", s.survivor_floor}, {"colouring", colouring_to_json(s.colouring, palette)},
        {"survivor_counts", sizes}, {"final_survivors", s.final_survivors()}};

    auto & r = run.certificate;
    json enclosed = json::array();
    for (auto & e : r.enclosed)
        enclosed.push_back({{"vertex", e.vertex}, {"degree", e.degree}, {"conflicts", e.conflicts}, {"pass", e.pass}});
    json infinite = json::array();
    for (auto & i : r.infinite)
        infinite.push_back({{"vertex", i.vertex}, {"colour", palette.name(i.colour)}, {"family", i.family},
            {"witness_count", i.witness_count}, {"ledger_processed", i.ledger_processed},
            {"ledger_shortfalls", i.ledger_shortfalls}, {"ledger_witnesses", i.ledger_witnesses},
            {"witnesses_coloured", i.witnesses_coloured}, {"witness_violations", i.witness_violations},
            {"pass", i.pass}});
    json certificate = {{"t", r.t}, {"horizon", r.horizon}, {"n_star", r.n_star ? json(*r.n_star) : json(nullptr)},
        {"enclosed", enclosed}, {"not_enclosed", r.not_enclosed}, {"infinite_degree", infinite}, {"pass", r.pass}};

    return {{"config", config},
        {"presentation", {{"name", run.presentation.name}, {"directed", run.presentation.directed},
                             {"acyclic", run.presentation.acyclic}, {"prefix", run.prefix}}},
        {"trace", trace}, {"stabilized", stabilized}, {"ledger", to_json(run.restriction.ledger, palette, false)},
        {"certificate", certificate}};
}

auto status_name(ExitStatus status) -> string
{
    switch (status) {
    case ExitStatus::ok: return "ok";
    case ExitStatus::verification_failed: return "verification_failed";
    case ExitStatus::input_error: return "input_error";
    case ExitStatus::resource_cap: return "resource_cap";
    }
    return "unknown";
}

auto to_json(const ResultDocument & result) -> json
{
    json j = {{"tool", kToolName}, {"version", kToolVersion}, {"command", result.command}, {"seed", result.seed},
        {"status", status_name(result.status)}, {"exit_code", static_cast<int>(result.status)}};
    if (result.instance) {
        j["instance"] = to_json(*result.instance);
        if (result.colouring)
            j["colouring"] = colouring_to_json(*result.colouring, result.instance->palette);
        if (result.trace)
            j["trace"] = to_json(*result.trace, result.instance->palette);
    }
    if (result.report)
        j["report"] = to_json(*result.report);
    if (! result.details.empty())
        j["details"] = result.details;
    return j;
}

auto result_from_json(const json & j) -> ResultDocument
{
    ResultDocument result;
    result.command = require(j, "command", "").get<string>();
    result.seed = require(j, "seed", "").get<std::uint64_t>();
    auto code = require(j, "exit_code", "").get<int>();
    if (code < 0 || code > 3)
        throw InputError("/exit_code", "unknown exit code");
    result.status = static_cast<ExitStatus>(code);
    if (j.contains("instance")) {
        result.instance = parse_instance(j["instance"]);
        if (j.contains("colouring"))
            result.colouring = colouring_from_json(j["colouring"], result.instance->palette, result.instance->order());
        if (j.contains("trace"))
            result.trace = trace_from_json(j["trace"], result.instance->palette);
    }
    if (j.contains("report"))
        result.report = report_from_json(j["report"]);
    if (j.contains("details"))
        result.details = j["details"];
    return result;
}

auto dump(const json & document) -> string
{
    return document.dump(2) + "\n";
}

} // namespace majcol
