// Exercises libqk through its C header only.

#include <qk/qk.h>

#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace
{
    struct Graph
    {
        qk_graph * g = nullptr;
        explicit Graph(const char * text) { REQUIRE(qk_graph_parse(text, &g) == QK_OK); }
        ~Graph() { qk_graph_free(g); }
    };

    auto take(char * s) -> std::string
    {
        std::string out = s;
        qk_string_free(s);
        return out;
    }

    auto take(qk_vertex_list & l) -> std::vector<uint32_t>
    {
        std::vector<uint32_t> out(l.data, l.data + l.size);
        qk_vertex_list_free(&l);
        return out;
    }

    const char * c3 = "3 3\n0 1\n1 2\n2 0\n";
    const char * c5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
}

TEST_CASE("status names and version")
{
    CHECK(std::string(qk_version()).size() > 0);
    CHECK(std::string(qk_status_name(QK_OK)) == "ok");
    CHECK(std::string(qk_status_name(QK_ERR_RESOURCE)) == "resource");
    CHECK(qk_default_limits().max_n == 24);
    CHECK(qk_default_limits().max_subsets == 0);
}

TEST_CASE("graph handles")
{
    Graph g(c3);
    CHECK(qk_graph_order(g.g) == 3);
    CHECK(qk_graph_arc_count(g.g) == 3);
    char * text = nullptr;
    REQUIRE(qk_graph_serialize(g.g, &text) == QK_OK);
    CHECK(take(text) == c3);

    uint32_t arcs[] = {0, 1, 1, 0};
    qk_graph * h = nullptr;
    REQUIRE(qk_graph_from_arcs(2, arcs, 2, &h) == QK_OK);
    CHECK(qk_graph_arc_count(h) == 2);
    qk_graph_free(h);

    uint32_t loop[] = {1, 1};
    CHECK(qk_graph_from_arcs(2, loop, 1, &h) == QK_ERR_ARGUMENT);
    CHECK(qk_graph_order(nullptr) == 0);
}

TEST_CASE("parse errors set the thread-local message")
{
    qk_graph * g = nullptr;
    CHECK(qk_graph_parse("2 1\n0 0\n", &g) == QK_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(std::string(qk_last_error()).find("line 2") != std::string::npos);

    std::string other;
    std::thread([&] {
        qk_graph * x = nullptr;
        qk_graph_parse("oops", &x);
        other = qk_last_error();
    }).join();
    CHECK(other.find("line 1") != std::string::npos);
    CHECK(std::string(qk_last_error()).find("line 2") != std::string::npos);

    CHECK(qk_graph_load("/nonexistent/qk/graph.txt", &g) == QK_ERR_IO);
    CHECK(qk_graph_parse(nullptr, &g) == QK_ERR_ARGUMENT);
}

TEST_CASE("checks")
{
    Graph g(c5);
    uint32_t set[] = {0};
    qk_check_result r{};
    char * desc = nullptr;
    REQUIRE(qk_check(g.g, set, 1, QK_CHECK_QK, 2, &r, &desc) == QK_OK);
    CHECK(r.holds == 0);
    CHECK(r.witness_kind == QK_WITNESS_UNCOVERED);
    CHECK(r.witness_first == 3);
    CHECK(take(desc) == "vertex 3 not reached");

    uint32_t good[] = {0, 3};
    REQUIRE(qk_check(g.g, good, 2, QK_CHECK_QK, 2, &r, nullptr) == QK_OK);
    CHECK(r.holds == 1);
    CHECK(r.witness_kind == QK_WITNESS_NONE);

    uint32_t adjacent[] = {0, 1};
    REQUIRE(qk_check(g.g, adjacent, 2, QK_CHECK_KERNEL, 0, &r, nullptr) == QK_OK);
    CHECK(r.witness_kind == QK_WITNESS_ARC);
    CHECK(r.witness_second == 1);

    uint32_t out_of_range[] = {9};
    CHECK(qk_check(g.g, out_of_range, 1, QK_CHECK_QK, 2, &r, nullptr) == QK_ERR_ARGUMENT);
}

TEST_CASE("greedy")
{
    Graph g(c3);
    qk_vertex_list out{};
    REQUIRE(qk_cl(g.g, nullptr, 0, 0, &out) == QK_OK);
    CHECK(take(out) == std::vector<uint32_t>{2});

    uint32_t order[] = {1, 2, 0};
    REQUIRE(qk_cl(g.g, order, 3, 0, &out) == QK_OK);
    CHECK(take(out).size() == 1);

    uint32_t bad[] = {1, 1, 0};
    CHECK(qk_cl(g.g, bad, 3, 0, &out) == QK_ERR_ARGUMENT);
    CHECK(qk_cl(g.g, nullptr, 0, 1, &out) == QK_ERR_PRECONDITION);
    CHECK(std::string(qk_last_error()).find("2->0") != std::string::npos);

    REQUIRE(qk_random_order(6, 9, &out) == QK_OK);
    CHECK(take(out).size() == 6);
}

TEST_CASE("solver json")
{
    Graph g(c5);
    char * json = nullptr;
    REQUIRE(qk_solve(g.g, QK_SOLVE_ENUMERATE, 2, nullptr, &json) == QK_OK);
    auto j = nlohmann::json::parse(take(json));
    CHECK(j["mode"] == "enumerate");
    CHECK(j["count"] == 5);
    CHECK(j["sets"][0] == nlohmann::json::array({0, 2}));

    REQUIRE(qk_solve(g.g, QK_SOLVE_KERNEL_PERFECT, 2, nullptr, &json) == QK_OK);
    j = nlohmann::json::parse(take(json));
    CHECK(j["perfect"] == false);
    CHECK(j["witness"] == nlohmann::json::array({0, 1, 2, 3, 4}));

    REQUIRE(qk_solve(g.g, QK_SOLVE_DISJOINT_PAIR, 2, nullptr, &json) == QK_OK);
    j = nlohmann::json::parse(take(json));
    CHECK(j["pair"].size() == 2);

    qk_limits tiny{3, 0};
    CHECK(qk_solve(g.g, QK_SOLVE_SMALLEST, 2, &tiny, &json) == QK_ERR_RESOURCE);

    int64_t num = 0, den = 0;
    REQUIRE(qk_kls_bound(g.g, &num, &den) == QK_OK);
    CHECK(num == 5);
    CHECK(den == 2);

    qk_vertex_list out{};
    REQUIRE(qk_smallest_q_kernel(g.g, 3, nullptr, &out) == QK_OK);
    CHECK(take(out).size() == 2);
}

TEST_CASE("constructions")
{
    Graph g(c5);
    char * json = nullptr;
    REQUIRE(qk_construct(g.g, QK_METHOD_UNICYCLIC, nullptr, &json) == QK_OK);
    auto j = nlohmann::json::parse(take(json));
    CHECK(j["method"] == "unicyclic");
    CHECK(j["size"] == 2);

    auto opts = qk_default_construct_options();
    uint32_t q[] = {0, 2};
    uint32_t k[] = {4};
    opts.qk = q;
    opts.qk_size = 2;
    opts.has_qk = 1;
    opts.kernel = k;
    opts.kernel_size = 1;
    opts.has_kernel = 1;
    REQUIRE(qk_construct(g.g, QK_METHOD_COMPLEMENT, &opts, &json) == QK_OK);
    j = nlohmann::json::parse(take(json));
    CHECK(j["sets"]["Q1"] == nlohmann::json::array({2, 4}));
    CHECK(j["bound"] == "5/2");

    REQUIRE(qk_construct(g.g, QK_METHOD_COMPLEMENT, nullptr, &json) == QK_OK);
    qk_string_free(json);

    CHECK(qk_construct(g.g, QK_METHOD_GOOD, &opts, &json) == QK_ERR_PRECONDITION);

    Graph t(c3);
    uint32_t king = 99;
    REQUIRE(qk_find_king(t.g, &king) == QK_OK);
    CHECK(king == 0);
    CHECK(qk_find_king(g.g, &king) == QK_ERR_PRECONDITION);
}

TEST_CASE("generators and partitions")
{
    auto p = qk_default_gen_params();
    p.n = 1;
    qk_graph * g = nullptr;
    char * meta = nullptr;
    REQUIRE(qk_generate("tight-hairy", &p, &g, &meta) == QK_OK);
    CHECK(qk_graph_order(g) == 12);
    auto side = take(meta);
    CHECK(nlohmann::json::parse(side).contains("partition"));

    auto opts = qk_default_construct_options();
    opts.partition_json = side.c_str();
    char * json = nullptr;
    REQUIRE(qk_construct(g, QK_METHOD_HAIRY, &opts, &json) == QK_OK);
    CHECK(nlohmann::json::parse(take(json))["size"] == 4);

    opts.partition_json = "{not json";
    CHECK(qk_construct(g, QK_METHOD_HAIRY, &opts, &json) == QK_ERR_PARSE);
    qk_graph_free(g);

    CHECK(qk_generate("no-such-family", &p, &g, nullptr) == QK_ERR_ARGUMENT);
    p.k = 2;
    REQUIRE(qk_generate("three-hub", &p, &g, nullptr) == QK_OK);
    CHECK(qk_graph_order(g) == 9);
    qk_graph_free(g);
}

TEST_CASE("sweeps")
{
    auto o = qk_default_sweep_options();
    o.claim = "moon";
    o.family = "all-tournaments";
    o.n_min = 3;
    o.n_max = 5;
    o.jobs = 2;
    qk_report * r = nullptr;
    REQUIRE(qk_sweep_run(&o, &r) == QK_OK);
    CHECK(qk_report_instances(r) == 8 + 64 + 1024);
    CHECK(qk_report_violations(r) == 0);
    CHECK(qk_report_passes(r) + qk_report_skips(r) + qk_report_aborted(r) == qk_report_instances(r));
    CHECK(qk_report_is_conjecture(r) == 0);
    char * csv = nullptr;
    REQUIRE(qk_report_emit(r, "csv", &csv) == QK_OK);
    CHECK(take(csv) == "claim,family,index,seed,n,arcs,witness,graph\n");
    CHECK(qk_report_emit(r, "yaml", &csv) == QK_ERR_ARGUMENT);
    qk_report_free(r);

    o.claim = "bogus";
    CHECK(qk_sweep_run(&o, &r) == QK_ERR_ARGUMENT);
}
