#pragma once

#include <majcol/instance.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace majcol {

struct FuzzConfig
{
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t max_order = 8;
    std::size_t k = 2;
    Mode mode = Mode::list;
    std::size_t cap = kDefaultSearchCap; // oracle runs only below this
};

struct FuzzFailure
{
    std::size_t trial = 0;
    std::string reason;
    Instance reproducer; // shrunk by greedy edge deletion
};

struct FuzzReport
{
    std::size_t trials = 0;
    std::size_t oracle_checked = 0;
    std::vector<FuzzFailure> failures;
    std::map<std::size_t, std::size_t> final_conflicts; // histogram

    auto pass() const -> bool { return failures.empty(); }
};

// The problem with an instance, or an empty string: the local search must
// pass the audit with a strictly decreasing trace, and stay above the exact
// optimum when the oracle fits under `cap`.
auto check_instance(const Instance & instance, std::size_t cap, bool * oracle_ran = nullptr) -> std::string;

auto random_instance(std::uint64_t seed, std::size_t max_order, std::size_t k, Mode mode) -> Instance;

// Removes edges one at a time while the instance keeps failing.
auto shrink(const Instance & instance, std::size_t cap) -> Instance;

auto run_fuzz(const FuzzConfig & config) -> FuzzReport;
auto to_json(const FuzzReport & report) -> nlohmann::json;

} // namespace majcol
