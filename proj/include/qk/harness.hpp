#pragma once

#include <qk/exact_solver.hpp>
#include <qk/json_io.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qk
{
    enum class ClaimId
    {
        SmallQk,
        Kls,
        Moon,
        JacobMeyniel,
        GutinUnique,
        CroitoruTwo,
        Richardson,
        Q3Half,
        SpiroSqrt,
        LargeQkExists,
        MaxDegreeKing
    };

    auto all_claims() -> std::vector<ClaimId>;
    auto claim_name(ClaimId id) -> std::string_view;
    /// Throws ContractViolation for an unknown name.
    auto parse_claim(std::string_view name) -> ClaimId;
    /// Open conjectures, as opposed to proved theorems. A violation of a
    /// conjecture is a finding; a violation of a theorem is a bug.
    auto is_conjecture(ClaimId id) -> bool;

    enum class Verdict
    {
        Pass,
        Skip, // hypothesis does not apply
        Fail
    };

    struct ClaimOutcome
    {
        Verdict verdict;
        Json witness; // null unless Fail
    };

    /// Evaluates one claim on one digraph. ResourceLimitError propagates.
    auto evaluate_claim(ClaimId id, const Digraph & g, const SolverLimits & limits) -> ClaimOutcome;

    struct Instance
    {
        Digraph graph;
        std::optional<std::uint64_t> seed; // per-instance seed for random families
    };

    /// An indexable family of digraphs; `at` must be pure so that instances
    /// can be produced out of order by parallel workers.
    struct Family
    {
        std::string description;
        std::uint64_t size = 0;
        std::function<Instance(std::uint64_t)> at;
        std::optional<std::uint64_t> base_seed; // random families: seeds base..base+size-1
    };

    struct FamilyOptions
    {
        std::size_t n_min = 1;
        std::size_t n_max = 4;
        std::uint64_t samples = 1000;
        std::uint64_t seed = 1;
        std::size_t max_hairs = 3; // random-hairy
    };

    /// Recognised names: all-digraphs, all-tournaments, cycles, random
    /// (source-free random digraphs), random-tournament, random-hairy,
    /// random-unicyclic. For the exhaustive families every order in
    /// [n_min, n_max] is included; for random ones n is drawn per sample.
    auto make_family(std::string_view name, const FamilyOptions & options) -> Family;

    /// Seed of sample i in a random family seeded with `base`.
    auto sample_seed(std::uint64_t base, std::uint64_t i) -> std::uint64_t;

    struct Violation
    {
        std::uint64_t index;
        std::optional<std::uint64_t> seed;
        Digraph graph;
        Json witness;
    };

    /// passes + skips + violations.size() + aborted == instances.
    struct SweepReport
    {
        ClaimId claim;
        std::string family;
        std::optional<std::uint64_t> seed_first, seed_count;
        std::uint64_t instances = 0;
        std::uint64_t passes = 0;
        std::uint64_t skips = 0;
        std::uint64_t aborted = 0;
        std::vector<Violation> violations; // sorted by index
        double wall_seconds = 0;
    };

    /// Evaluates the claim on every member of the family. With jobs > 1 the
    /// index range is split across threads; the merged report does not
    /// depend on the split (apart from wall time).
    auto run_claim(ClaimId claim, const Family & family, const SolverLimits & limits, unsigned jobs = 1) -> SweepReport;

    enum class ReportFormat
    {
        Json,
        Csv,
        Text
    };

    auto parse_report_format(std::string_view name) -> ReportFormat;
    auto report_to_json(const SweepReport & r) -> Json;
    auto report_emit(const SweepReport & r, ReportFormat format) -> std::string;
}
