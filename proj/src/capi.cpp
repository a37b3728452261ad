#define QK_BUILDING_LIBRARY
#include <qk/qk.h>

#include <qk/cl_greedy.hpp>
#include <qk/constructive.hpp>
#include <qk/exact_solver.hpp>
#include <qk/generators.hpp>
#include <qk/graph_io.hpp>
#include <qk/harness.hpp>
#include <qk/json_io.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

struct qk_graph
{
    qk::Digraph graph;
};

struct qk_report
{
    qk::SweepReport report;
};

namespace
{
    thread_local std::string last_error;

    auto fail(qk_status status, const std::string & message) -> qk_status
    {
        last_error = message;
        return status;
    }

    template <typename F>
    auto guarded(F && f) -> qk_status
    {
        try {
            f();
            return QK_OK;
        }
        catch (const qk::ParseError & e) {
            return fail(QK_ERR_PARSE, e.what());
        }
        catch (const nlohmann::json::exception & e) {
            return fail(QK_ERR_PARSE, e.what());
        }
        catch (const qk::ContractViolation & e) {
            return fail(QK_ERR_ARGUMENT, e.what());
        }
        catch (const qk::PreconditionError & e) {
            return fail(QK_ERR_PRECONDITION, e.what());
        }
        catch (const qk::ResourceLimitError & e) {
            return fail(QK_ERR_RESOURCE, e.what());
        }
        catch (const qk::VerificationError & e) {
            return fail(QK_ERR_VERIFICATION, e.what());
        }
        catch (const qk::IoError & e) {
            return fail(QK_ERR_IO, e.what());
        }
        catch (const std::exception & e) {
            return fail(QK_ERR_INTERNAL, e.what());
        }
        catch (...) {
            return fail(QK_ERR_INTERNAL, "unknown exception");
        }
    }

    auto require(const void * p, const char * what) -> void
    {
        if (! p)
            throw qk::ContractViolation(std::string(what) + " must not be null");
    }

    auto dup(const std::string & s) -> char *
    {
        auto * out = static_cast<char *>(std::malloc(s.size() + 1));
        if (! out)
            throw std::bad_alloc();
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    auto to_list(const qk::VertexSet & s, qk_vertex_list * out) -> void
    {
        auto v = s.to_vector();
        out->size = v.size();
        out->data = nullptr;
        if (! v.empty()) {
            out->data = static_cast<uint32_t *>(std::malloc(v.size() * sizeof(uint32_t)));
            if (! out->data)
                throw std::bad_alloc();
            std::memcpy(out->data, v.data(), v.size() * sizeof(uint32_t));
        }
    }

    auto to_set(const qk::Digraph & g, const uint32_t * data, size_t size) -> qk::VertexSet
    {
        if (size > 0)
            require(data, "vertex array");
        return qk::VertexSet::of(g.order(), std::span<const qk::Vertex>(data, size));
    }

    auto to_limits(const qk_limits * limits) -> qk::SolverLimits
    {
        qk::SolverLimits out;
        if (limits) {
            if (limits->max_n < 1)
                throw qk::ContractViolation("max_n must be at least 1");
            out.max_n = limits->max_n;
            if (limits->max_subsets)
                out.max_subsets = limits->max_subsets;
        }
        return out;
    }
}

extern "C" {

QK_API const char * qk_version(void)
{
    return "1.0.0";
}

QK_API const char * qk_last_error(void)
{
    return last_error.c_str();
}

QK_API const char * qk_status_name(qk_status status)
{
    switch (status) {
    case QK_OK: return "ok";
    case QK_ERR_ARGUMENT: return "argument";
    case QK_ERR_PARSE: return "parse";
    case QK_ERR_PRECONDITION: return "precondition";
    case QK_ERR_RESOURCE: return "resource";
    case QK_ERR_VERIFICATION: return "verification";
    case QK_ERR_IO: return "io";
    case QK_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

QK_API qk_limits qk_default_limits(void)
{
    qk::SolverLimits d;
    return {d.max_n, 0};
}

QK_API void qk_string_free(char * s)
{
    std::free(s);
}

QK_API void qk_vertex_list_free(qk_vertex_list * list)
{
    if (list) {
        std::free(list->data);
        list->data = nullptr;
        list->size = 0;
    }
}

QK_API qk_status qk_graph_parse(const char * text, qk_graph ** out)
{
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new qk_graph{qk::parse_graph(text)};
    });
}

QK_API qk_status qk_graph_load(const char * path, qk_graph ** out)
{
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new qk_graph{qk::load_graph(path)};
    });
}

QK_API qk_status qk_graph_from_arcs(size_t n, const uint32_t * arcs, size_t arc_count, qk_graph ** out)
{
    return guarded([&] {
        require(out, "out");
        if (arc_count > 0)
            require(arcs, "arcs");
        std::vector<qk::Arc> list;
        list.reserve(arc_count);
        for (size_t i = 0; i < arc_count; ++i)
            list.push_back({arcs[2 * i], arcs[2 * i + 1]});
        *out = new qk_graph{qk::Digraph::from_arcs(n, list)};
    });
}

QK_API void qk_graph_free(qk_graph * g)
{
    delete g;
}

QK_API size_t qk_graph_order(const qk_graph * g)
{
    return g ? g->graph.order() : 0;
}

QK_API size_t qk_graph_arc_count(const qk_graph * g)
{
    return g ? g->graph.arc_count() : 0;
}

QK_API qk_status qk_graph_serialize(const qk_graph * g, char ** out_text)
{
    return guarded([&] {
        require(g, "graph");
        require(out_text, "out_text");
        *out_text = dup(qk::serialize_graph(g->graph));
    });
}

QK_API qk_status qk_check(const qk_graph * g, const uint32_t * set, size_t set_size, qk_check_mode mode, unsigned q,
                          qk_check_result * out, char ** description)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto s = to_set(g->graph, set, set_size);
        qk::CheckReport r;
        switch (mode) {
        case QK_CHECK_KERNEL: r = qk::is_kernel(g->graph, s); break;
        case QK_CHECK_QK: r = qk::is_quasi_kernel(g->graph, s); break;
        case QK_CHECK_Q_KERNEL: r = qk::is_q_kernel(g->graph, s, q); break;
        case QK_CHECK_QUASI_SINK: r = qk::is_quasi_sink(g->graph, s); break;
        case QK_CHECK_LARGE: r = qk::is_large_qk(g->graph, s); break;
        default: throw qk::ContractViolation("unknown check mode");
        }
        out->holds = r.holds ? 1 : 0;
        out->witness_kind = QK_WITNESS_NONE;
        out->witness_first = out->witness_second = 0;
        if (r.witness) {
            out->witness_kind = static_cast<qk_witness_kind>(static_cast<int>(r.witness->kind));
            out->witness_first = r.witness->first;
            out->witness_second = r.witness->second;
        }
        if (description)
            *description = dup(qk::describe(r));
    });
}

QK_API qk_status qk_cl(const qk_graph * g, const uint32_t * order, size_t order_size, int modified,
                       qk_vertex_list * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        auto ord = order ? qk::Ordering(std::vector<qk::Vertex>(order, order + order_size))
                         : qk::Ordering::natural(g->graph.order());
        auto result = modified ? qk::modified_cl(g->graph, ord) : qk::cl_algorithm(g->graph, ord);
        to_list(result, out);
    });
}

QK_API qk_status qk_random_order(size_t n, uint64_t seed, qk_vertex_list * out)
{
    return guarded([&] {
        require(out, "out");
        auto ord = qk::Ordering::random(n, qk::Seed{seed});
        auto v = ord.vertices();
        out->size = v.size();
        out->data = nullptr;
        if (! v.empty()) {
            out->data = static_cast<uint32_t *>(std::malloc(v.size() * sizeof(uint32_t)));
            if (! out->data)
                throw std::bad_alloc();
            std::memcpy(out->data, v.data(), v.size() * sizeof(uint32_t));
        }
    });
}

QK_API qk_status qk_solve(const qk_graph * g, qk_solve_mode mode, unsigned q, const qk_limits * limits,
                          char ** out_json)
{
    return guarded([&] {
        require(g, "graph");
        require(out_json, "out_json");
        const auto & graph = g->graph;
        auto lim = to_limits(limits);
        qk::Json j;
        j["n"] = graph.order();
        switch (mode) {
        case QK_SOLVE_SMALLEST: {
            auto s = qk::smallest_q_kernel(graph, q, lim);
            j["mode"] = "smallest";
            j["q"] = q;
            j["set"] = qk::to_json(s);
            j["size"] = s.size();
            break;
        }
        case QK_SOLVE_ENUMERATE: {
            auto all = qk::enumerate_q_kernels(graph, q, lim);
            j["mode"] = "enumerate";
            j["q"] = q;
            j["count"] = all.size();
            j["sets"] = qk::Json::array();
            for (const auto & s : all)
                j["sets"].push_back(qk::to_json(s));
            break;
        }
        case QK_SOLVE_KERNELS: {
            auto all = qk::enumerate_kernels(graph, lim);
            j["mode"] = "kernels";
            j["count"] = all.size();
            j["sets"] = qk::Json::array();
            for (const auto & s : all)
                j["sets"].push_back(qk::to_json(s));
            break;
        }
        case QK_SOLVE_KERNEL_PERFECT: {
            auto kp = qk::is_kernel_perfect(graph, lim);
            j["mode"] = "kernel-perfect";
            j["perfect"] = kp.perfect;
            j["witness"] = kp.witness ? qk::to_json(*kp.witness) : qk::Json(nullptr);
            break;
        }
        case QK_SOLVE_DISJOINT_PAIR: {
            auto pair = qk::has_two_disjoint_qks(graph, lim);
            j["mode"] = "disjoint-pair";
            j["pair"] = pair ? qk::Json::array({qk::to_json(pair->first), qk::to_json(pair->second)}) : qk::Json(nullptr);
            break;
        }
        default: throw qk::ContractViolation("unknown solve mode");
        }
        *out_json = dup(j.dump(2) + "\n");
    });
}

QK_API qk_status qk_smallest_q_kernel(const qk_graph * g, unsigned q, const qk_limits * limits, qk_vertex_list * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        to_list(qk::smallest_q_kernel(g->graph, q, to_limits(limits)), out);
    });
}

QK_API qk_status qk_kls_bound(const qk_graph * g, int64_t * numerator, int64_t * denominator)
{
    return guarded([&] {
        require(g, "graph");
        require(numerator, "numerator");
        require(denominator, "denominator");
        auto b = qk::kls_bound(g->graph);
        *numerator = b.num;
        *denominator = b.den;
    });
}

QK_API qk_construct_options qk_default_construct_options(void)
{
    qk_construct_options o{};
    o.limits = qk_default_limits();
    return o;
}

QK_API qk_status qk_construct(const qk_graph * g, qk_method method, const qk_construct_options * options,
                              char ** out_trace_json)
{
    return guarded([&] {
        require(g, "graph");
        require(out_trace_json, "out_trace_json");
        const auto & graph = g->graph;
        auto opts = options ? *options : qk_default_construct_options();
        auto lim = to_limits(&opts.limits);

        qk::ConstructionTrace trace;
        switch (method) {
        case QK_METHOD_GOOD: {
            std::optional<qk::VertexSet> q;
            if (opts.has_qk)
                q = to_set(graph, opts.qk, opts.qk_size);
            else if (! (q = qk::find_good_qk(graph, lim)))
                throw qk::PreconditionError("digraph has no good quasi-kernel");
            trace = qk::shrink_good_qk(graph, *q);
            break;
        }
        case QK_METHOD_COMPLEMENT: {
            if (opts.has_qk != opts.has_kernel)
                throw qk::ContractViolation("complement method needs both a quasi-kernel and a kernel, or neither");
            if (opts.has_qk)
                trace = qk::small_qk_from_kernel_complement(graph, to_set(graph, opts.qk, opts.qk_size),
                                                            to_set(graph, opts.kernel, opts.kernel_size));
            else {
                auto found = qk::find_qk_with_complement_kernel(graph, lim);
                if (! found)
                    throw qk::PreconditionError(
                        "no quasi-kernel has a kernel on the complement of its closed out-neighbourhood");
                trace = qk::small_qk_from_kernel_complement(graph, found->first, found->second);
            }
            break;
        }
        case QK_METHOD_HAIRY: {
            auto p = opts.partition_json ? qk::partition_from_json(qk::Json::parse(opts.partition_json), graph)
                                         : qk::infer_hairy_partition(graph);
            trace = qk::hairy_small_qk(graph, p, opts.relaxed != 0);
            break;
        }
        case QK_METHOD_UNICYCLIC: trace = qk::unicyclic_small_qk(graph); break;
        default: throw qk::ContractViolation("unknown construction method");
        }
        *out_trace_json = dup(qk::trace_to_json(trace).dump(2) + "\n");
    });
}

QK_API qk_status qk_find_king(const qk_graph * g, uint32_t * out)
{
    return guarded([&] {
        require(g, "graph");
        require(out, "out");
        *out = qk::find_king(g->graph);
    });
}

QK_API qk_gen_params qk_default_gen_params(void)
{
    qk_gen_params p{};
    p.n = 4;
    p.k = 1;
    p.max_hairs = 3;
    p.arc_prob = 0.3;
    p.seed = 1;
    return p;
}

QK_API qk_status qk_generate(const char * family, const qk_gen_params * params, qk_graph ** out,
                             char ** out_meta_json)
{
    return guarded([&] {
        require(family, "family");
        require(out, "out");
        auto p = params ? *params : qk_default_gen_params();
        std::string name = family;
        qk::GeneratedGraph gen;
        qk::Json args;
        qk::Seed seed{p.seed};
        if (name == "cycle") {
            gen.graph = qk::gen_cycle(p.n);
            args = {{"length", p.n}};
        }
        else if (name == "three-hub") {
            gen = qk::gen_three_hub(p.k);
            args = {{"k", p.k}};
        }
        else if (name == "tight-hairy") {
            gen = qk::gen_tight_hairy(p.n, p.strongly_connected != 0);
            args = {{"n", p.n}, {"strongly_connected", p.strongly_connected != 0}};
        }
        else if (name == "random") {
            gen.graph = qk::gen_random_digraph(p.n, p.arc_prob, p.source_free != 0, seed);
            args = {{"n", p.n}, {"arc_prob", p.arc_prob}, {"source_free", p.source_free != 0}, {"seed", p.seed}};
        }
        else if (name == "random-tournament") {
            gen.graph = qk::gen_random_tournament(p.n, seed);
            args = {{"n", p.n}, {"seed", p.seed}};
        }
        else if (name == "random-hairy") {
            gen = qk::gen_random_hairy(p.n, p.max_hairs, seed);
            args = {{"m", p.n}, {"max_hairs", p.max_hairs}, {"seed", p.seed}};
        }
        else if (name == "random-unicyclic") {
            gen = qk::gen_random_unicyclic(p.n, seed);
            args = {{"n", p.n}, {"seed", p.seed}};
        }
        else
            throw qk::ContractViolation("unknown family '" + name + "'");

        if (out_meta_json)
            *out_meta_json = dup(qk::sidecar_json(gen, name, args).dump(2) + "\n");
        *out = new qk_graph{std::move(gen.graph)};
    });
}

QK_API qk_sweep_options qk_default_sweep_options(void)
{
    qk_sweep_options o{};
    qk::FamilyOptions f;
    o.n_min = f.n_min;
    o.n_max = f.n_max;
    o.samples = f.samples;
    o.seed = f.seed;
    o.max_hairs = f.max_hairs;
    o.jobs = 1;
    o.limits = qk_default_limits();
    return o;
}

QK_API qk_status qk_sweep_run(const qk_sweep_options * options, qk_report ** out)
{
    return guarded([&] {
        require(options, "options");
        require(options->claim, "claim");
        require(options->family, "family");
        require(out, "out");
        auto claim = qk::parse_claim(options->claim);
        qk::FamilyOptions f;
        f.n_min = options->n_min;
        f.n_max = options->n_max;
        f.samples = options->samples;
        f.seed = options->seed;
        f.max_hairs = options->max_hairs;
        auto family = qk::make_family(options->family, f);
        auto report = qk::run_claim(claim, family, to_limits(&options->limits), options->jobs);
        *out = new qk_report{std::move(report)};
    });
}

QK_API void qk_report_free(qk_report * r)
{
    delete r;
}

QK_API uint64_t qk_report_instances(const qk_report * r)
{
    return r ? r->report.instances : 0;
}

QK_API uint64_t qk_report_passes(const qk_report * r)
{
    return r ? r->report.passes : 0;
}

QK_API uint64_t qk_report_skips(const qk_report * r)
{
    return r ? r->report.skips : 0;
}

QK_API uint64_t qk_report_violations(const qk_report * r)
{
    return r ? r->report.violations.size() : 0;
}

QK_API uint64_t qk_report_aborted(const qk_report * r)
{
    return r ? r->report.aborted : 0;
}

QK_API int qk_report_is_conjecture(const qk_report * r)
{
    return r && qk::is_conjecture(r->report.claim) ? 1 : 0;
}

QK_API qk_status qk_report_emit(const qk_report * r, const char * format, char ** out)
{
    return guarded([&] {
        require(r, "report");
        require(format, "format");
        require(out, "out");
        *out = dup(qk::report_emit(r->report, qk::parse_report_format(format)));
    });
}

} // extern "C"
