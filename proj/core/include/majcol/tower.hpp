#pragma once

#include <majcol/constraints.hpp>
#include <majcol/presentation.hpp>
#include <majcol/restriction.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace majcol {

// chi_1 .. chi_{n_max}: chi_n is a majority colouring of G_n from the
// restricted lists.
struct TowerTrace
{
    std::size_t k = 2;
    std::size_t n_max = 0;
    std::vector<Colouring> colourings; // index n - 1
    std::vector<bool> majority;        // verify_majority of chi_n on G_n
    std::vector<std::size_t> conflicts; // total bad edges of chi_n

    auto at(std::size_t n) const -> const Colouring & { return colourings[n - 1]; }
};

// Undirected presentations use local_search, acyclic directed ones
// dag_greedy. `restricted` must cover v_1..v_{n_max} with k-lists.
auto prefix_colourings(const CountablePresentation & presentation, const Constraints & restricted, std::size_t k,
    std::size_t n_max) -> TowerTrace;

// Levelwise agreement: survivors[j] holds the n whose chi_n agrees with the
// stabilized colouring on v_1..v_j. survivors[0] = {requested_t..n_max}.
struct StabilizedColouring
{
    std::size_t requested_t = 0;
    std::size_t length = 0; // stabilized prefix actually reached
    std::size_t survivor_floor = 1;
    Colouring colouring;    // v_1..v_length
    std::vector<std::vector<std::size_t>> survivors;
    bool truncated = false;

    auto final_survivors() const -> const std::vector<std::size_t> & { return survivors.back(); }
};

// At level j the colour of v_j is the most frequent among surviving chi_n
// (lowest id on ties). Stops early, with truncated set, when fewer than
// survivor_floor colourings would survive. Throws InputError for t > n_max
// or a zero floor.
auto stabilize(const TowerTrace & trace, std::size_t t, std::size_t survivor_floor) -> StabilizedColouring;

struct EnclosedCheck
{
    Vertex vertex = 0;
    std::size_t degree = 0;
    std::size_t conflicts = 0;
    bool pass = false;
};

struct InfiniteDegreeCheck
{
    Vertex vertex = 0;
    ColourId colour = kNoColour;
    std::string family;
    // Materialized neighbours v_j <= horizon that can never conflict with
    // v_i: chi(v_i) missing from L'(v_j), or in pair form the matched
    // colour c' missing from L'(v_j).
    std::size_t witness_count = 0;
    std::size_t ledger_processed = 0;
    std::size_t ledger_shortfalls = 0;
    std::size_t ledger_witnesses = 0;
    std::size_t witnesses_coloured = 0; // ledger witnesses with a known colour
    std::size_t witness_violations = 0;
    bool pass = false;
};

struct CertificationReport
{
    std::size_t t = 0;
    std::size_t horizon = 0;
    std::optional<std::size_t> n_star;
    std::vector<EnclosedCheck> enclosed;
    std::vector<Vertex> not_enclosed; // finite degree but neighbourhood reaches past t
    std::vector<InfiniteDegreeCheck> infinite;
    bool pass = false;
};

class CertificationRefused : public Error
{
public:
    using Error::Error;
};

struct CertificationInput
{
    const CountablePresentation & presentation;
    const TowerTrace & trace;
    const StabilizedColouring & stabilized;
    // Restricted lists L' (and, in correspondence mode, bad pairs over them).
    const Constraints & restricted;
    // Unrestricted bad pairs, needed to evaluate X_{u,c}; null in list mode.
    const CorrespondenceSystem * correspondence = nullptr;
    const WitnessLedger & ledger;
    std::size_t k = 2;
    std::size_t horizon = 0;
};

// Audits the stabilized colouring over G_horizon. Enclosed finite-degree
// vertices are checked against the audit threshold under chi extended by a
// surviving chi_{n*}; declared infinite-degree vertices are checked against
// the ledger's witness counts. Throws CertificationRefused when the ledger
// has no family for a declared infinite-degree vertex.
auto certify(const CertificationInput & input) -> CertificationReport;

struct TowerConfig
{
    std::string family = "ray";
    FamilyParams params;
    std::uint64_t seed = 1;      // lists and bad pairs
    std::size_t n_max = 512;
    std::size_t t = 64;
    std::size_t k = 2;
    std::size_t list_size = 0;   // 0: k + 1
    std::size_t palette = 0;     // 0: list_size + 2
    std::size_t budget = 300;
    std::size_t survivor_floor = 8;
    std::size_t horizon = 0;     // 0: n_max
    Mode mode = Mode::list;
};

struct TowerRun
{
    TowerConfig config;
    CountablePresentation presentation;
    std::size_t prefix = 0; // vertices with lists: max(n_max, horizon)
    ListSystem lists;
    std::optional<CorrespondenceSystem> correspondence;
    std::vector<WitnessFamily> families;
    RestrictionResult restriction;
    Constraints restricted;
    TowerTrace trace;
    StabilizedColouring stabilized;
    CertificationReport certificate;
};

// Lists, and in correspondence mode bad pairs, drawn as pure functions of
// (seed, vertex) and (seed, edge) so every prefix sees the same system.
auto presentation_lists(std::uint64_t seed, std::size_t prefix, std::size_t list_size, std::size_t palette)
    -> ListSystem;
auto presentation_correspondence(std::uint64_t seed, const CountablePresentation & presentation,
    std::size_t prefix, const ListSystem & lists) -> CorrespondenceSystem;

// Drops pairs whose colours left the lists.
auto restrict_correspondence(const CorrespondenceSystem & system, const ListSystem & lists) -> CorrespondenceSystem;

// restrict -> prefix colourings -> stabilize -> certify.
auto run_tower(const TowerConfig & config) -> TowerRun;

} // namespace majcol
