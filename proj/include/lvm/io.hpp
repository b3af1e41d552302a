#pragma once

#include "lvm/bounds.hpp"
#include "lvm/colouring.hpp"
#include "lvm/construction.hpp"
#include "lvm/graph.hpp"
#include "lvm/kempe.hpp"
#include "lvm/minor.hpp"
#include "lvm/montecarlo.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace lvm {

using json = nlohmann::ordered_json;

inline constexpr const char* library_version = "0.3.0";

// graph/1: {"format":"graph/1","order":N,"edges":[[u,v],...]}, u < v, sorted.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// lvm-graph/1: {"format":"lvm-graph/1","n":N,"seed":S|null,"exclusions":[{"i","j","choice"}...]}.
// Edges are never stored; they are rederived on load.
json instance_to_json(const LvmInstance& inst);
LvmInstance instance_from_json(const json& j);

/// Either file format, dispatched on the "format" field.
using GraphInput = std::variant<Graph, LvmInstance>;
GraphInput graph_input_from_json(const json& j);
const Graph& graph_of(const GraphInput& in);

json colouring_to_json(const Colouring& c);
json partition_to_json(const ColourPartition& p);
json bags_to_json(const BagFamily& bags);
json witness_to_json(const MinorWitness& w, bool verified);
json kempe_report_to_json(const KempeClassReport& r, std::size_t k);
json estimate_to_json(const EstimateReport& r);
json bound_to_json(const BoundReport& b);
json combined_bound_to_json(const CombinedBound& c);

/// One header line then one row per report: n,parameter,formula,log_value,value,flag.
std::string bound_scan_csv(const std::vector<BoundReport>& rows);
json bound_scan_to_json(const std::vector<BoundReport>& rows);

/// Graphviz with a_i / b_i labels, a side and b side in different colours.
std::string instance_to_dot(const LvmInstance& inst);
std::string graph_to_dot(const Graph& g);

/// Reads and parses a JSON file; InvalidArgument on I/O or parse errors.
json read_json_file(const std::filesystem::path& path);
/// Writes text; InvalidArgument if the path cannot be opened.
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Canonical text form of a JSON artifact: two-space indent, trailing newline.
std::string dump(const json& j);

} // namespace lvm
