#pragma once

#include <qk/constructive.hpp>
#include <qk/generators.hpp>

#include <json.hpp>

namespace qk
{
    using Json = nlohmann::ordered_json;

    /// Sorted vertex list.
    auto to_json(const VertexSet & s) -> Json;
    auto vertex_set_from_json(const Json & j, std::size_t universe) -> VertexSet;

    auto trace_to_json(const ConstructionTrace & t) -> Json;

    /// {"tournament": [...], "hairs": [...], "owner": {"h": a, ...}}
    auto partition_to_json(const HairyPartition & p) -> Json;
    /// Accepts either a bare partition object or a sidecar with a
    /// "partition" member; owners are recomputed from the digraph.
    auto partition_from_json(const Json & j, const Digraph & g) -> HairyPartition;

    /// Sidecar metadata for a generated graph: family, parameters, labels,
    /// partition and cycle when known.
    auto sidecar_json(const GeneratedGraph & gen, const std::string & family, const Json & params) -> Json;
}
