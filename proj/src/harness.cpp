#include <qk/generators.hpp>
#include <qk/graph_io.hpp>
#include <qk/harness.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace qk
{
    namespace
    {
        struct ClaimInfo
        {
            ClaimId id;
            std::string_view name;
            bool conjecture;
        };

        constexpr std::array<ClaimInfo, 11> claim_table{{
            {ClaimId::SmallQk, "small-qk", true},
            {ClaimId::Kls, "kls", true},
            {ClaimId::Moon, "moon", false},
            {ClaimId::JacobMeyniel, "jacob-meyniel", false},
            {ClaimId::GutinUnique, "gutin-unique", false},
            {ClaimId::CroitoruTwo, "croitoru-two", false},
            {ClaimId::Richardson, "richardson", false},
            {ClaimId::Q3Half, "q3-half", false},
            {ClaimId::SpiroSqrt, "spiro-sqrt", false},
            {ClaimId::LargeQkExists, "large-qk-exists", true},
            {ClaimId::MaxDegreeKing, "max-degree-king", false},
        }};

        auto info(ClaimId id) -> const ClaimInfo &
        {
            for (const auto & c : claim_table)
                if (c.id == id)
                    return c;
            throw ContractViolation("unknown claim id");
        }

        auto pass() -> ClaimOutcome { return {Verdict::Pass, nullptr}; }
        auto skip() -> ClaimOutcome { return {Verdict::Skip, nullptr}; }
        auto fail(Json witness) -> ClaimOutcome { return {Verdict::Fail, std::move(witness)}; }

        auto sets_json(const std::vector<VertexSet> & sets) -> Json
        {
            auto j = Json::array();
            for (const auto & s : sets)
                j.push_back(to_json(s));
            return j;
        }

        auto source_free(const Digraph & g) -> bool
        {
            return g.order() > 0 && sources(g).empty();
        }

        auto evaluate(ClaimId id, const Digraph & g, const SolverLimits & limits) -> ClaimOutcome
        {
            const auto n = static_cast<std::int64_t>(g.order());
            switch (id) {
            case ClaimId::SmallQk: {
                if (! source_free(g))
                    return skip();
                auto q = smallest_q_kernel(g, 2, limits);
                if (2 * static_cast<std::int64_t>(q.size()) <= n)
                    return pass();
                return fail({{"smallest_qk", to_json(q)}, {"size", q.size()}, {"bound", Rational(n, 2).to_string()}});
            }
            case ClaimId::Kls: {
                auto q = smallest_q_kernel(g, 2, limits);
                auto bound = kls_bound(g);
                if (bound.admits(static_cast<std::int64_t>(q.size())))
                    return pass();
                return fail({{"smallest_qk", to_json(q)}, {"size", q.size()}, {"bound", bound.to_string()}});
            }
            case ClaimId::Moon: {
                if (! is_tournament(g) || ! source_free(g))
                    return skip();
                auto all = enumerate_q_kernels(g, 2, limits);
                if (all.size() >= 3)
                    return pass();
                return fail({{"quasi_kernels", sets_json(all)}});
            }
            case ClaimId::JacobMeyniel: {
                if (has_kernel(g, limits))
                    return skip();
                auto all = enumerate_q_kernels(g, 2, limits);
                if (all.size() >= 3)
                    return pass();
                return fail({{"quasi_kernels", sets_json(all)}});
            }
            case ClaimId::GutinUnique: {
                auto all = enumerate_q_kernels(g, 2, limits);
                const bool unique = all.size() == 1;
                const bool sources_kernel = is_kernel(g, sources(g)).holds;
                if (unique == sources_kernel)
                    return pass();
                return fail({{"quasi_kernels", sets_json(all)}, {"sources", to_json(sources(g))},
                             {"sources_form_kernel", sources_kernel}});
            }
            case ClaimId::CroitoruTwo: {
                auto all = enumerate_q_kernels(g, 2, limits);
                if (all.size() != 2)
                    return skip();
                const bool one_kernel = is_kernel(g, all[0]).holds || is_kernel(g, all[1]).holds;
                const bool meet_is_sources = (all[0] & all[1]) == sources(g);
                if (one_kernel && meet_is_sources)
                    return pass();
                return fail({{"quasi_kernels", sets_json(all)}, {"sources", to_json(sources(g))},
                             {"one_is_kernel", one_kernel}, {"intersection_is_sources", meet_is_sources}});
            }
            case ClaimId::Richardson: {
                if (has_directed_odd_cycle(g))
                    return skip();
                auto kp = is_kernel_perfect(g, limits);
                if (kp.perfect)
                    return pass();
                return fail({{"kernel_free_induced_set", to_json(*kp.witness)}});
            }
            case ClaimId::Q3Half: {
                if (! source_free(g))
                    return skip();
                auto q = smallest_q_kernel(g, 3, limits);
                if (2 * static_cast<std::int64_t>(q.size()) <= n)
                    return pass();
                return fail({{"smallest_3_kernel", to_json(q)}, {"size", q.size()}, {"bound", Rational(n, 2).to_string()}});
            }
            case ClaimId::SpiroSqrt: {
                if (! source_free(g))
                    return skip();
                auto q = smallest_q_kernel(g, 2, limits);
                // |Q| <= n - sqrt(n)  <=>  n - |Q| >= 0 and (n - |Q|)^2 >= n
                auto gap = n - static_cast<std::int64_t>(q.size());
                if (gap >= 0 && gap * gap >= n)
                    return pass();
                return fail({{"smallest_qk", to_json(q)}, {"size", q.size()}, {"bound", "n - sqrt(" + std::to_string(n) + ")"}});
            }
            case ClaimId::LargeQkExists: {
                if (! source_free(g))
                    return skip();
                auto all = enumerate_q_kernels(g, 2, limits);
                for (const auto & q : all)
                    if (is_large_qk(g, q))
                        return pass();
                return fail({{"quasi_kernels", sets_json(all)}});
            }
            case ClaimId::MaxDegreeKing: {
                if (g.order() == 0 || ! is_tournament(g))
                    return skip();
                std::size_t best = 0;
                for (Vertex v = 0; v < g.order(); ++v)
                    best = std::max(best, g.out_degree(v));
                for (Vertex v = 0; v < g.order(); ++v)
                    if (g.out_degree(v) == best)
                        if (auto r = is_quasi_kernel(g, VertexSet::of(g.order(), {v})); ! r)
                            return fail({{"vertex", v}, {"out_degree", best}, {"reason", describe(r)}});
                return pass();
            }
            }
            throw ContractViolation("unknown claim id");
        }
    }

    auto all_claims() -> std::vector<ClaimId>
    {
        std::vector<ClaimId> out;
        for (const auto & c : claim_table)
            out.push_back(c.id);
        return out;
    }

    auto claim_name(ClaimId id) -> std::string_view
    {
        return info(id).name;
    }

    auto parse_claim(std::string_view name) -> ClaimId
    {
        for (const auto & c : claim_table)
            if (c.name == name)
                return c.id;
        throw ContractViolation("unknown claim '" + std::string(name) + "'");
    }

    auto is_conjecture(ClaimId id) -> bool
    {
        return info(id).conjecture;
    }

    auto evaluate_claim(ClaimId id, const Digraph & g, const SolverLimits & limits) -> ClaimOutcome
    {
        return evaluate(id, g, limits);
    }

    auto sample_seed(std::uint64_t base, std::uint64_t i) -> std::uint64_t
    {
        return splitmix64(base + i);
    }

    namespace
    {
        auto exhaustive(std::string name, std::size_t lo, std::size_t hi, std::uint64_t (*count)(std::size_t),
                        Digraph (*make)(std::size_t, std::uint64_t)) -> Family
        {
            std::vector<std::uint64_t> offsets; // offsets[i] = first index of order lo + i
            std::uint64_t total = 0;
            for (auto n = lo; n <= hi; ++n) {
                offsets.push_back(total);
                total += count(n);
            }
            Family f;
            f.description = name + " n=" + std::to_string(lo) + ".." + std::to_string(hi);
            f.size = total;
            f.at = [offsets, lo, make](std::uint64_t index) {
                auto it = std::upper_bound(offsets.begin(), offsets.end(), index);
                auto i = static_cast<std::size_t>(it - offsets.begin()) - 1;
                return Instance{make(lo + i, index - offsets[i]), std::nullopt};
            };
            return f;
        }

        template <typename Make>
        auto random_family(std::string name, const FamilyOptions & o, std::size_t floor, Make make) -> Family
        {
            auto lo = std::max(o.n_min, floor), hi = o.n_max;
            if (hi < lo)
                throw ContractViolation(name + " needs n_max >= " + std::to_string(lo));
            Family f;
            f.description = name + " n=" + std::to_string(lo) + ".." + std::to_string(hi) + " samples=" +
                            std::to_string(o.samples) + " seed=" + std::to_string(o.seed);
            f.size = o.samples;
            f.base_seed = o.seed;
            f.at = [base = o.seed, lo, hi, make](std::uint64_t index) {
                auto seed = sample_seed(base, index);
                Rng params(Seed{seed ^ 0x5bd1e995ULL});
                auto n = static_cast<std::size_t>(params.between(lo, hi));
                return Instance{make(n, params, Seed{seed}), seed};
            };
            return f;
        }
    }

    auto make_family(std::string_view name, const FamilyOptions & o) -> Family
    {
        if (o.n_max < o.n_min)
            throw ContractViolation("family needs n_min <= n_max");
        if (name == "all-digraphs")
            return exhaustive("all-digraphs", o.n_min, o.n_max, &all_digraphs_count, &digraph_at);
        if (name == "all-tournaments")
            return exhaustive("all-tournaments", o.n_min, o.n_max, &all_tournaments_count, &tournament_at);
        if (name == "cycles") {
            auto lo = std::max<std::size_t>(o.n_min, 2);
            Family f;
            f.description = "cycles length=" + std::to_string(lo) + ".." + std::to_string(o.n_max);
            f.size = o.n_max >= lo ? o.n_max - lo + 1 : 0;
            f.at = [lo](std::uint64_t i) { return Instance{gen_cycle(lo + i), std::nullopt}; };
            return f;
        }
        if (name == "random")
            return random_family("random", o, 2, [](std::size_t n, Rng & params, Seed seed) {
                auto p = 0.1 + 0.5 * params.unit();
                return gen_random_digraph(n, p, true, seed);
            });
        if (name == "random-tournament")
            return random_family("random-tournament", o, 1,
                                 [](std::size_t n, Rng &, Seed seed) { return gen_random_tournament(n, seed); });
        if (name == "random-hairy") {
            auto hairs = o.max_hairs;
            return random_family("random-hairy", o, 3, [hairs](std::size_t m, Rng &, Seed seed) {
                return gen_random_hairy(m, hairs, seed).graph;
            });
        }
        if (name == "random-unicyclic")
            return random_family("random-unicyclic", o, 3,
                                 [](std::size_t n, Rng &, Seed seed) { return gen_random_unicyclic(n, seed).graph; });
        throw ContractViolation("unknown family '" + std::string(name) + "'");
    }

    auto run_claim(ClaimId claim, const Family & family, const SolverLimits & limits, unsigned jobs) -> SweepReport
    {
        const auto start = std::chrono::steady_clock::now();
        SweepReport report;
        report.claim = claim;
        report.family = family.description;
        if (family.base_seed) {
            report.seed_first = family.base_seed;
            report.seed_count = family.size;
        }

        std::mutex merge;
        auto work = [&](std::uint64_t lo, std::uint64_t hi) {
            SweepReport local;
            for (auto i = lo; i < hi; ++i) {
                auto inst = family.at(i);
                ++local.instances;
                try {
                    auto outcome = evaluate(claim, inst.graph, limits);
                    switch (outcome.verdict) {
                    case Verdict::Pass: ++local.passes; break;
                    case Verdict::Skip: ++local.skips; break;
                    case Verdict::Fail:
                        local.violations.push_back({i, inst.seed, std::move(inst.graph), std::move(outcome.witness)});
                        break;
                    }
                }
                catch (const ResourceLimitError &) {
                    ++local.aborted;
                }
            }
            std::lock_guard lock(merge);
            report.instances += local.instances;
            report.passes += local.passes;
            report.skips += local.skips;
            report.aborted += local.aborted;
            for (auto & v : local.violations)
                report.violations.push_back(std::move(v));
        };

        jobs = std::max(1u, jobs);
        if (jobs == 1 || family.size < 2)
            work(0, family.size);
        else {
            std::vector<std::thread> pool;
            auto chunk = (family.size + jobs - 1) / jobs;
            for (std::uint64_t lo = 0; lo < family.size; lo += chunk)
                pool.emplace_back(work, lo, std::min(family.size, lo + chunk));
            for (auto & t : pool)
                t.join();
        }
        std::sort(report.violations.begin(), report.violations.end(),
                  [](const Violation & a, const Violation & b) { return a.index < b.index; });
        report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    auto parse_report_format(std::string_view name) -> ReportFormat
    {
        if (name == "json")
            return ReportFormat::Json;
        if (name == "csv")
            return ReportFormat::Csv;
        if (name == "text")
            return ReportFormat::Text;
        throw ContractViolation("unknown report format '" + std::string(name) + "'");
    }

    auto report_to_json(const SweepReport & r) -> Json
    {
        Json j;
        j["claim"] = claim_name(r.claim);
        j["kind"] = is_conjecture(r.claim) ? "conjecture" : "theorem";
        j["family"] = r.family;
        if (r.seed_first)
            j["seed_range"] = {{"first", *r.seed_first}, {"count", *r.seed_count}};
        else
            j["seed_range"] = nullptr;
        j["instances"] = r.instances;
        j["passes"] = r.passes;
        j["skips"] = r.skips;
        j["violation_count"] = r.violations.size();
        j["aborted"] = r.aborted;
        j["wall_seconds"] = r.wall_seconds;
        auto list = Json::array();
        for (const auto & v : r.violations) {
            Json e;
            e["index"] = v.index;
            e["seed"] = v.seed ? Json(*v.seed) : Json(nullptr);
            e["n"] = v.graph.order();
            e["witness"] = v.witness;
            e["graph"] = serialize_graph(v.graph);
            list.push_back(std::move(e));
        }
        j["violations"] = std::move(list);
        return j;
    }

    namespace
    {
        auto csv_field(const std::string & s) -> std::string
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (auto c : s) {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }
    }

    auto report_emit(const SweepReport & r, ReportFormat format) -> std::string
    {
        switch (format) {
        case ReportFormat::Json:
            return report_to_json(r).dump(2) + "\n";

        case ReportFormat::Csv: {
            std::string out = "claim,family,index,seed,n,arcs,witness,graph\n";
            for (const auto & v : r.violations) {
                out += csv_field(std::string(claim_name(r.claim))) + ',' + csv_field(r.family) + ',' +
                       std::to_string(v.index) + ',' + (v.seed ? std::to_string(*v.seed) : "") + ',' +
                       std::to_string(v.graph.order()) + ',' + std::to_string(v.graph.arc_count()) + ',' +
                       csv_field(v.witness.dump()) + ',' + csv_field(serialize_graph(v.graph)) + '\n';
            }
            return out;
        }

        case ReportFormat::Text: {
            std::ostringstream out;
            out << "claim      " << claim_name(r.claim) << (is_conjecture(r.claim) ? " (conjecture)" : " (theorem)")
                << "\nfamily     " << r.family << "\ninstances  " << r.instances << "\npasses     " << r.passes
                << "\nskips      " << r.skips << "\nviolations " << r.violations.size() << "\naborted    "
                << r.aborted << "\nwall time  " << r.wall_seconds << " s\n";
            if (r.seed_first)
                out << "seeds      " << *r.seed_first << " + [0, " << *r.seed_count << ")\n";
            for (const auto & v : r.violations) {
                out << "\n"
                    << (is_conjecture(r.claim) ? "FINDING" : "VIOLATION") << " at index " << v.index;
                if (v.seed)
                    out << " (seed " << *v.seed << ")";
                out << ": " << v.witness.dump() << "\n" << serialize_graph(v.graph);
            }
            return out.str();
        }
        }
        throw ContractViolation("unknown report format");
    }
}
