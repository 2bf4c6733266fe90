#pragma once

#include <majcol/constraints.hpp>
#include <majcol/graph.hpp>
#include <majcol/presentation.hpp>
#include <majcol/restriction.hpp>
#include <majcol/solver.hpp>
#include <majcol/tower.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace majcol {

inline constexpr std::string_view kToolName = "majcol";
inline constexpr std::string_view kToolVersion = "0.3.0";

// A finite graph given by a built-in family prefix instead of edges.
struct GraphReference
{
    std::string family;
    FamilyParams params;
    std::size_t order = 0;

    friend auto operator==(const GraphReference & a, const GraphReference & b) -> bool
    {
        return a.family == b.family && a.params.seed == b.params.seed && a.params.density == b.params.density &&
            a.order == b.order;
    }
};

struct Instance
{
    bool directed = false;
    Graph graph;     // undirected instances
    Digraph digraph; // directed instances
    std::optional<GraphReference> reference;
    Palette palette;
    Constraints constraints;
    std::size_t k = 2;

    auto order() const -> std::size_t { return directed ? digraph.order() : graph.order(); }
    auto mode() const -> Mode { return constraints.mode(); }

    friend auto operator==(const Instance &, const Instance &) -> bool = default;
};

// Schema, range and matching-condition checks; errors are InputError
// carrying a JSON-pointer-like path.
auto parse_instance(std::string_view text) -> Instance;
auto parse_instance(const nlohmann::json & document) -> Instance;
inline auto parse_instance(const std::string & text) -> Instance { return parse_instance(std::string_view(text)); }
inline auto parse_instance(const char * text) -> Instance { return parse_instance(std::string_view(text)); }
auto to_json(const Instance & instance) -> nlohmann::json;

// Input of the restrict command: lists on v_1..v_prefix plus witness
// families, given extensionally or generated from a family reference.
struct RestrictionInput
{
    std::size_t prefix = 0;
    Palette palette;
    ListSystem lists;
    std::vector<WitnessFamily> families;
    std::size_t budget = 300;
    bool pair_form = false;
};

auto parse_restriction(const nlohmann::json & document) -> RestrictionInput;
auto run_restriction(const RestrictionInput & input) -> RestrictionResult;

// A bare graph from edge-list text with the uniform list c00..c{k-1}.
auto instance_from_edge_list(const EdgeListText & text, bool directed, std::size_t k) -> Instance;
auto to_edge_list(const Instance & instance) -> std::string;

auto colouring_to_json(const Colouring & colouring, const Palette & palette) -> nlohmann::json;
// Accepts a {vertex: name} object or a result document carrying one.
auto colouring_from_json(const nlohmann::json & document, const Palette & palette, std::size_t order) -> Colouring;

auto to_json(const MajorityReport & report) -> nlohmann::json;
auto report_from_json(const nlohmann::json & document) -> MajorityReport;
auto to_json(const SearchTrace & trace, const Palette & palette) -> nlohmann::json;
auto trace_from_json(const nlohmann::json & document, const Palette & palette) -> SearchTrace;

auto to_json(const WitnessLedger & ledger, const Palette & palette, bool with_schedule = true) -> nlohmann::json;
auto to_json(const SublistAssignment & assignment, const Palette & palette) -> nlohmann::json;
auto to_json(const TowerRun & run, const Palette & palette) -> nlohmann::json;

enum class ExitStatus : int
{
    ok = 0,
    verification_failed = 1,
    input_error = 2,
    resource_cap = 3
};

auto status_name(ExitStatus status) -> std::string;

struct ResultDocument
{
    std::string command;
    std::uint64_t seed = 0;
    ExitStatus status = ExitStatus::ok;
    std::optional<Instance> instance;
    std::optional<Colouring> colouring;
    std::optional<MajorityReport> report;
    std::optional<SearchTrace> trace;
    nlohmann::json details = nlohmann::json::object(); // command-specific payload

    friend auto operator==(const ResultDocument &, const ResultDocument &) -> bool = default;
};

auto to_json(const ResultDocument & result) -> nlohmann::json;
auto result_from_json(const nlohmann::json & document) -> ResultDocument;

// Stable text form: two-space indentation and a trailing newline.
auto dump(const nlohmann::json & document) -> std::string;

} // namespace majcol
