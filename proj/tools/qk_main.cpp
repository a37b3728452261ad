// qk: command-line front end over the C API in libqk.

#include <qk/qk.h>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_violation = 1,
        exit_usage = 2,
        exit_resource = 3
    };

    struct Failure
    {
        int code;
        std::string message;
    };

    auto exit_for(qk_status s) -> int
    {
        switch (s) {
        case QK_OK: return exit_ok;
        case QK_ERR_RESOURCE: return exit_resource;
        case QK_ERR_VERIFICATION:
        case QK_ERR_INTERNAL: return exit_violation;
        default: return exit_usage;
        }
    }

    void check(qk_status s)
    {
        if (s != QK_OK)
            throw Failure{exit_for(s), std::string(qk_status_name(s)) + " error: " + qk_last_error()};
    }

    struct GraphDeleter
    {
        void operator()(qk_graph * g) const { qk_graph_free(g); }
    };
    using Graph = std::unique_ptr<qk_graph, GraphDeleter>;

    struct ReportDeleter
    {
        void operator()(qk_report * r) const { qk_report_free(r); }
    };

    // takes ownership of a malloc'd string from the library
    auto take(char * s) -> std::string
    {
        std::string out = s ? s : "";
        qk_string_free(s);
        return out;
    }

    auto take(qk_vertex_list & list) -> std::vector<uint32_t>
    {
        std::vector<uint32_t> out(list.data, list.data + list.size);
        qk_vertex_list_free(&list);
        return out;
    }

    auto load(const std::string & path) -> Graph
    {
        qk_graph * g = nullptr;
        check(qk_graph_load(path.c_str(), &g));
        return Graph(g);
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw Failure{exit_usage, "cannot open '" + path + "'"};
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write_output(const std::string & path, const std::string & text)
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (! out || ! (out << text))
            throw Failure{exit_usage, "cannot write '" + path + "'"};
    }

    // "0,2", "{0, 2}", "0 2" and "" all parse
    auto parse_list(const std::string & text) -> std::vector<uint32_t>
    {
        std::vector<uint32_t> out;
        std::string token;
        auto flush = [&] {
            if (token.empty())
                return;
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(token, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size() || v > UINT32_MAX)
                throw Failure{exit_usage, "bad vertex '" + token + "' in list '" + text + "'"};
            out.push_back(static_cast<uint32_t>(v));
            token.clear();
        };
        for (char c : text) {
            if (c == ',' || c == ' ' || c == '\t')
                flush();
            else if (c != '{' && c != '}')
                token += c;
        }
        flush();
        return out;
    }

    auto join(const std::vector<uint32_t> & v) -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }

    auto format_set(const std::vector<uint32_t> & v) -> std::string
    {
        return "{" + join(v) + "}";
    }

    struct LimitFlags
    {
        std::size_t max_n = qk_default_limits().max_n;
        uint64_t max_subsets = 0;

        void add(CLI::App * app)
        {
            app->add_option("--max-n", max_n, "exact-solver vertex cap")->capture_default_str();
            app->add_option("--max-subsets", max_subsets, "exact-solver subset budget (0 = none)");
        }

        auto get() const -> qk_limits { return {max_n, max_subsets}; }
    };

    // ---- qk cl ---------------------------------------------------------

    struct ClArgs
    {
        std::string graph, order;
        std::optional<uint64_t> seed;
        bool modified = false;
    };

    auto run_cl(const ClArgs & a) -> int
    {
        auto g = load(a.graph);
        std::vector<uint32_t> order;
        if (! a.order.empty())
            order = parse_list(a.order);
        else if (a.seed) {
            qk_vertex_list l{};
            check(qk_random_order(qk_graph_order(g.get()), *a.seed, &l));
            order = take(l);
        }
        qk_vertex_list out{};
        bool natural = a.order.empty() && ! a.seed;
        check(qk_cl(g.get(), natural ? nullptr : order.data(), order.size(), a.modified ? 1 : 0, &out));
        auto set = take(out);

        qk_check_result r{};
        char * desc = nullptr;
        check(qk_check(g.get(), set.data(), set.size(), QK_CHECK_QK, 2, &r, &desc));
        auto line = take(desc);

        if (! natural)
            std::cout << "order: " << join(order) << "\n";
        std::cout << "qk: " << format_set(set) << "\n";
        std::cout << "size: " << set.size() << " of " << qk_graph_order(g.get()) << "\n";
        std::cout << "verify: " << line << "\n";
        return r.holds ? exit_ok : exit_violation;
    }

    // ---- qk solve ------------------------------------------------------

    struct SolveArgs
    {
        std::string graph;
        bool smallest = false, enumerate = false, kernels = false, kernel_perfect = false, disjoint = false;
        unsigned q = 2;
        LimitFlags limits;
    };

    auto run_solve(const SolveArgs & a) -> int
    {
        auto mode = QK_SOLVE_SMALLEST;
        if (a.enumerate)
            mode = QK_SOLVE_ENUMERATE;
        else if (a.kernels)
            mode = QK_SOLVE_KERNELS;
        else if (a.kernel_perfect)
            mode = QK_SOLVE_KERNEL_PERFECT;
        else if (a.disjoint)
            mode = QK_SOLVE_DISJOINT_PAIR;
        auto g = load(a.graph);
        auto lim = a.limits.get();
        char * json = nullptr;
        check(qk_solve(g.get(), mode, a.q, &lim, &json));
        std::cout << take(json);
        return exit_ok;
    }

    // ---- qk construct --------------------------------------------------

    struct ConstructArgs
    {
        std::string graph, method, qk, kernel, partition;
        bool has_qk = false, has_kernel = false, relaxed = false;
        LimitFlags limits;
    };

    auto run_construct(const ConstructArgs & a) -> int
    {
        auto g = load(a.graph);
        auto opts = qk_default_construct_options();
        opts.limits = a.limits.get();
        opts.relaxed = a.relaxed;
        std::vector<uint32_t> q, k;
        if (a.has_qk) {
            q = parse_list(a.qk);
            opts.qk = q.data();
            opts.qk_size = q.size();
            opts.has_qk = 1;
        }
        if (a.has_kernel) {
            k = parse_list(a.kernel);
            opts.kernel = k.data();
            opts.kernel_size = k.size();
            opts.has_kernel = 1;
        }
        std::string partition;
        if (! a.partition.empty()) {
            partition = read_file(a.partition);
            opts.partition_json = partition.c_str();
        }
        qk_method method = QK_METHOD_GOOD;
        if (a.method == "complement")
            method = QK_METHOD_COMPLEMENT;
        else if (a.method == "hairy")
            method = QK_METHOD_HAIRY;
        else if (a.method == "unicyclic")
            method = QK_METHOD_UNICYCLIC;
        char * json = nullptr;
        check(qk_construct(g.get(), method, &opts, &json));
        std::cout << take(json);
        return exit_ok;
    }

    // ---- qk gen --------------------------------------------------------

    struct GenArgs
    {
        std::string family, output, meta;
        qk_gen_params params = qk_default_gen_params();
        bool source_free = false, strongly_connected = false;
    };

    auto run_gen(GenArgs a) -> int
    {
        a.params.source_free = a.source_free;
        a.params.strongly_connected = a.strongly_connected;
        qk_graph * raw = nullptr;
        char * meta = nullptr;
        check(qk_generate(a.family.c_str(), &a.params, &raw, a.meta.empty() ? nullptr : &meta));
        Graph g(raw);
        auto meta_text = take(meta);
        char * text = nullptr;
        check(qk_graph_serialize(g.get(), &text));
        write_output(a.output, take(text));
        if (! a.meta.empty())
            write_output(a.meta, meta_text);
        return exit_ok;
    }

    // ---- qk sweep ------------------------------------------------------

    struct SweepArgs
    {
        std::string claim, family, format = "text", output;
        std::optional<std::size_t> n, n_min;
        uint64_t samples = qk_default_sweep_options().samples;
        uint64_t seed = qk_default_sweep_options().seed;
        std::size_t max_hairs = qk_default_sweep_options().max_hairs;
        unsigned jobs = 1;
        LimitFlags limits;
    };

    auto run_sweep(const SweepArgs & a) -> int
    {
        auto opts = qk_default_sweep_options();
        opts.claim = a.claim.c_str();
        opts.family = a.family.c_str();
        opts.samples = a.samples;
        opts.seed = a.seed;
        opts.max_hairs = a.max_hairs;
        opts.jobs = a.jobs;
        opts.limits = a.limits.get();

        bool digraphs = a.family == "all-digraphs";
        bool tournaments = a.family == "all-tournaments";
        if (tournaments)
            opts.n_max = 6;
        if (a.n)
            opts.n_max = *a.n;
        if (a.n_min)
            opts.n_min = *a.n_min;
        if (digraphs && opts.n_max > 4)
            std::cerr << "warning: all digraphs on " << opts.n_max
                      << " vertices is a large sweep (4^(n(n-1)/2) graphs per order)\n";
        if (tournaments && opts.n_max > 6)
            std::cerr << "warning: all tournaments on " << opts.n_max
                      << " vertices is a large sweep (2^(n(n-1)/2) graphs per order)\n";

        qk_report * raw = nullptr;
        check(qk_sweep_run(&opts, &raw));
        std::unique_ptr<qk_report, ReportDeleter> r(raw);
        char * text = nullptr;
        check(qk_report_emit(r.get(), a.format.c_str(), &text));
        write_output(a.output, take(text));

        if (qk_report_violations(r.get()) > 0) {
            if (qk_report_is_conjecture(r.get()))
                std::cerr << "FINDING: " << qk_report_violations(r.get()) << " counterexample(s) to conjecture "
                          << a.claim << "\n";
            return exit_violation;
        }
        if (qk_report_aborted(r.get()) > 0) {
            std::cerr << qk_report_aborted(r.get()) << " instance(s) aborted on solver limits\n";
            return exit_resource;
        }
        return exit_ok;
    }

    // ---- qk check ------------------------------------------------------

    struct CheckArgs
    {
        std::string graph, set, mode = "qk";
        unsigned q = 2;
    };

    auto run_check(const CheckArgs & a) -> int
    {
        auto g = load(a.graph);
        qk_check_mode mode = QK_CHECK_QK;
        if (a.mode == "kernel")
            mode = QK_CHECK_KERNEL;
        else if (a.mode == "q-kernel")
            mode = QK_CHECK_Q_KERNEL;
        else if (a.mode == "quasi-sink")
            mode = QK_CHECK_QUASI_SINK;
        else if (a.mode == "large")
            mode = QK_CHECK_LARGE;
        auto set = parse_list(a.set);
        qk_check_result r{};
        char * desc = nullptr;
        check(qk_check(g.get(), set.data(), set.size(), mode, a.q, &r, &desc));
        std::cout << take(desc) << "\n";
        return r.holds ? exit_ok : exit_violation;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"quasi-kernel algorithms, exact solvers and claim sweeps"};
    app.set_version_flag("--version", std::string(qk_version()));
    app.require_subcommand(1);

    ClArgs cl;
    auto * cl_cmd = app.add_subcommand("cl", "two-phase greedy quasi-kernel");
    cl_cmd->add_option("--graph", cl.graph, "graph file")->required();
    auto * order_opt = cl_cmd->add_option("--order", cl.order, "vertex ordering, e.g. \"2,0,1\"");
    cl_cmd->add_option("--seed", cl.seed, "random ordering seed")->excludes(order_opt);
    cl_cmd->add_flag("--modified", cl.modified, "single-phase variant");

    SolveArgs solve;
    auto * solve_cmd = app.add_subcommand("solve", "exact solvers");
    solve_cmd->add_option("--graph", solve.graph, "graph file")->required();
    auto * modes = solve_cmd->add_option_group("mode");
    modes->add_flag("--smallest", solve.smallest, "smallest q-kernel (default)");
    modes->add_flag("--enumerate", solve.enumerate, "all q-kernels");
    modes->add_flag("--kernels", solve.kernels, "all kernels");
    modes->add_flag("--kernel-perfect", solve.kernel_perfect, "kernel-perfectness test");
    modes->add_flag("--disjoint-pair", solve.disjoint, "two disjoint quasi-kernels");
    modes->require_option(0, 1);
    solve_cmd->add_option("--q", solve.q, "reach q (2 = quasi-kernel)")->capture_default_str()
        ->check(CLI::Range(1u, 64u));
    solve.limits.add(solve_cmd);

    ConstructArgs con;
    auto * con_cmd = app.add_subcommand("construct", "constructive small quasi-kernels");
    con_cmd->add_option("--graph", con.graph, "graph file")->required();
    con_cmd->add_option("--method", con.method)->required()
        ->check(CLI::IsMember({"good", "complement", "hairy", "unicyclic"}));
    auto * qk_opt = con_cmd->add_option("--qk", con.qk, "starting quasi-kernel");
    auto * kernel_opt = con_cmd->add_option("--kernel", con.kernel, "kernel of the complement");
    con_cmd->add_option("--partition", con.partition, "hairy partition JSON (or gen sidecar)");
    con_cmd->add_flag("--relaxed", con.relaxed, "allow hairs with extra in-arcs from the tournament");
    con.limits.add(con_cmd);

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "generate a digraph");
    gen_cmd->add_option("--family", gen.family)->required()
        ->check(CLI::IsMember({"cycle", "three-hub", "tight-hairy", "random", "random-tournament", "random-hairy",
                               "random-unicyclic"}));
    gen_cmd->add_option("--n", gen.params.n, "order / cycle length / tournament size")->capture_default_str();
    gen_cmd->add_option("--k", gen.params.k, "three-hub leaves per hub")->capture_default_str();
    gen_cmd->add_option("--max-hairs", gen.params.max_hairs)->capture_default_str();
    gen_cmd->add_option("--p", gen.params.arc_prob, "arc probability")->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_flag("--source-free", gen.source_free);
    gen_cmd->add_flag("--strongly-connected", gen.strongly_connected);
    gen_cmd->add_option("--seed", gen.params.seed)->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "graph file (default stdout)");
    gen_cmd->add_option("--meta", gen.meta, "sidecar JSON file");

    SweepArgs sweep;
    auto * sweep_cmd = app.add_subcommand("sweep", "run a claim over a family");
    sweep_cmd->add_option("--claim", sweep.claim)->required()
        ->check(CLI::IsMember({"small-qk", "kls", "moon", "jacob-meyniel", "gutin-unique", "croitoru-two",
                               "richardson", "q3-half", "spiro-sqrt", "large-qk-exists", "max-degree-king"}));
    sweep_cmd->add_option("--family", sweep.family)->required()
        ->check(CLI::IsMember({"all-digraphs", "all-tournaments", "cycles", "random", "random-tournament",
                               "random-hairy", "random-unicyclic"}));
    sweep_cmd->add_option("--n", sweep.n, "largest order");
    sweep_cmd->add_option("--n-min", sweep.n_min, "smallest order");
    sweep_cmd->add_option("--samples", sweep.samples, "random families")->capture_default_str();
    sweep_cmd->add_option("--seed", sweep.seed)->capture_default_str();
    sweep_cmd->add_option("--max-hairs", sweep.max_hairs)->capture_default_str();
    sweep_cmd->add_option("--jobs", sweep.jobs)->capture_default_str()->check(CLI::Range(1u, 256u));
    sweep_cmd->add_option("--format", sweep.format)->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sweep_cmd->add_option("-o,--output", sweep.output, "report file (default stdout)");
    sweep.limits.add(sweep_cmd);

    CheckArgs chk;
    auto * check_cmd = app.add_subcommand("check", "verify a vertex set");
    check_cmd->add_option("--graph", chk.graph, "graph file")->required();
    check_cmd->add_option("--set", chk.set, "vertex set, e.g. \"0,2\"")->required();
    check_cmd->add_option("--mode", chk.mode)->capture_default_str()
        ->check(CLI::IsMember({"kernel", "qk", "q-kernel", "quasi-sink", "large"}));
    check_cmd->add_option("--q", chk.q)->capture_default_str()->check(CLI::Range(0u, 64u));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*cl_cmd)
            return run_cl(cl);
        if (*solve_cmd)
            return run_solve(solve);
        if (*con_cmd) {
            con.has_qk = qk_opt->count() > 0;
            con.has_kernel = kernel_opt->count() > 0;
            return run_construct(con);
        }
        if (*gen_cmd)
            return run_gen(gen);
        if (*sweep_cmd)
            return run_sweep(sweep);
        if (*check_cmd)
            return run_check(chk);
    }
    catch (const Failure & f) {
        std::cerr << "qk: " << f.message << "\n";
        return f.code;
    }
    return exit_usage;
}
