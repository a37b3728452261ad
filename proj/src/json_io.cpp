#include <qk/json_io.hpp>

namespace qk
{
    auto to_json(const VertexSet & s) -> Json
    {
        auto j = Json::array();
        s.for_each([&](Vertex v) { j.push_back(v); });
        return j;
    }

    auto vertex_set_from_json(const Json & j, std::size_t universe) -> VertexSet
    {
        if (! j.is_array())
            throw ContractViolation("expected a JSON array of vertices");
        VertexSet s(universe);
        for (const auto & v : j) {
            if (! v.is_number_unsigned())
                throw ContractViolation("vertex list entries must be non-negative integers");
            s.insert(v.get<Vertex>());
        }
        return s;
    }

    auto trace_to_json(const ConstructionTrace & t) -> Json
    {
        Json j;
        j["method"] = t.method;
        j["result"] = to_json(t.result);
        j["size"] = t.result.size();
        j["bound"] = t.bound.to_string();
        auto sets = Json::object();
        for (const auto & [name, s] : t.sets)
            sets[name] = to_json(s);
        j["sets"] = std::move(sets);
        auto values = Json::object();
        for (const auto & [name, v] : t.values)
            values[name] = v;
        j["values"] = std::move(values);
        return j;
    }

    auto partition_to_json(const HairyPartition & p) -> Json
    {
        Json j;
        j["tournament"] = to_json(p.tournament);
        j["hairs"] = to_json(p.hairs);
        auto owner = Json::object();
        p.hairs.for_each([&](Vertex h) {
            if (p.owner[h])
                owner[std::to_string(h)] = *p.owner[h];
        });
        j["owner"] = std::move(owner);
        return j;
    }

    auto partition_from_json(const Json & j, const Digraph & g) -> HairyPartition
    {
        const auto & p = j.contains("partition") ? j.at("partition") : j;
        if (! p.is_object() || ! p.contains("tournament") || ! p.contains("hairs"))
            throw ContractViolation("partition needs 'tournament' and 'hairs' lists");
        return make_hairy_partition(g, vertex_set_from_json(p.at("tournament"), g.order()),
                                    vertex_set_from_json(p.at("hairs"), g.order()));
    }

    auto sidecar_json(const GeneratedGraph & gen, const std::string & family, const Json & params) -> Json
    {
        Json j;
        j["family"] = family;
        j["params"] = params;
        j["n"] = gen.graph.order();
        j["arcs"] = gen.graph.arc_count();
        if (! gen.labels.empty())
            j["labels"] = gen.labels;
        if (gen.partition)
            j["partition"] = partition_to_json(*gen.partition);
        if (! gen.cycle.empty())
            j["cycle"] = gen.cycle;
        return j;
    }
}
