#include "lvm/io.hpp"

#include "lvm/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lvm {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::uint64_t unsigned_field(const json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number_unsigned()) throw InvalidArgument(std::string("field '") + name + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

void expect_format(const json& j, const char* format) {
    const auto& f = field(j, "format");
    if (!f.is_string() || f.get<std::string>() != format)
        throw InvalidArgument(std::string("expected format '") + format + "'");
}

void reject_unknown(const json& j, std::initializer_list<const char*> known) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) throw InvalidArgument("unknown field '" + key + "'");
    }
}

std::string number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

} // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"format", "graph/1"}, {"order", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    expect_format(j, "graph/1");
    reject_unknown(j, {"format", "order", "edges"});
    const auto order = unsigned_field(j, "order");
    const auto& list = field(j, "edges");
    if (!list.is_array()) throw InvalidArgument("'edges' must be an array");
    std::vector<Edge> edges;
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
            throw InvalidArgument("each edge must be a pair of non-negative integers");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    return make_graph(order, edges);
}

json instance_to_json(const LvmInstance& inst) {
    json table = json::array();
    for (const auto& e : inst.exclusion_table())
        table.push_back({{"i", e.i}, {"j", e.j}, {"choice", std::string(to_string(e.choice))}});
    json j{{"format", "lvm-graph/1"}, {"n", inst.n()}};
    j["seed"] = inst.seed() ? json(*inst.seed()) : json(nullptr);
    j["exclusions"] = table;
    return j;
}

LvmInstance instance_from_json(const json& j) {
    expect_format(j, "lvm-graph/1");
    reject_unknown(j, {"format", "n", "seed", "exclusions"});
    const auto n = unsigned_field(j, "n");
    const auto& seed = field(j, "seed");
    if (!seed.is_null() && !seed.is_number_unsigned()) throw InvalidArgument("'seed' must be null or an unsigned integer");
    const auto& list = field(j, "exclusions");
    if (!list.is_array()) throw InvalidArgument("'exclusions' must be an array");
    std::vector<ExclusionEntry> table;
    for (const auto& e : list) {
        reject_unknown(e, {"i", "j", "choice"});
        const auto& choice = field(e, "choice");
        if (!choice.is_string()) throw InvalidArgument("'choice' must be a string");
        table.push_back({unsigned_field(e, "i"), unsigned_field(e, "j"), parse_exclusion_choice(choice.get<std::string>())});
    }
    auto inst = from_exclusions(n, table);
    // A seeded file must agree with what the seed generates.
    if (seed.is_number_unsigned()) {
        auto regenerated = generate(n, seed.get<std::uint64_t>());
        if (regenerated.exclusion_table() != inst.exclusion_table())
            throw InvalidArgument("exclusion table does not match the recorded seed");
        return regenerated;
    }
    return inst;
}

GraphInput graph_input_from_json(const json& j) {
    const auto& f = field(j, "format");
    if (f == "graph/1") return graph_from_json(j);
    if (f == "lvm-graph/1") return instance_from_json(j);
    throw InvalidArgument("unsupported format " + f.dump());
}

const Graph& graph_of(const GraphInput& in) {
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    return std::get<LvmInstance>(in).graph();
}

json colouring_to_json(const Colouring& c) {
    return json{{"palette", c.palette_size()}, {"colours", c.assignment()}};
}

json partition_to_json(const ColourPartition& p) { return json(p.blocks()); }

json bags_to_json(const BagFamily& bags) { return json(bags.bags()); }

json witness_to_json(const MinorWitness& w, bool verified) {
    return json{{"format", "witness/1"},
                {"kind", std::string(to_string(w.kind))},
                {"bags", bags_to_json(w.bags)},
                {"verified", verified}};
}

json kempe_report_to_json(const KempeClassReport& r, std::size_t k) {
    json classes = json::array();
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        json partitions = json::array();
        for (const auto& p : r.partition_classes[i]) partitions.push_back(partition_to_json(p));
        classes.push_back({{"size", r.classes[i].size()},
                           {"representative", r.classes[i].front().assignment()},
                           {"partitions", partitions}});
    }
    return json{{"format", "kempe-report/1"},
                {"version", library_version},
                {"k", k},
                {"colourings", r.colouring_count},
                {"classCount", r.class_count()},
                {"partitionClassCount", r.partition_class_count()},
                {"classes", classes}};
}

json estimate_to_json(const EstimateReport& r) {
    json j{{"format", "estimate/1"},
           {"version", library_version},
           {"eventId", r.event_id},
           {"n", r.n},
           {"trials", r.trials},
           {"seedBase", r.seed_base},
           {"bernoulli", r.bernoulli},
           {"successes", r.successes},
           {"mean", r.mean},
           {"standardError", r.standard_error}};
    if (r.interval99) j["interval99"] = {r.interval99->first, r.interval99->second};
    else j["interval99"] = nullptr;
    return j;
}

json bound_to_json(const BoundReport& b) {
    return json{{"formulaId", b.formula_id}, {"n", b.n},         {"parameter", b.parameter},
                {"logValue", b.log_value},   {"value", finite_or_null(b.value)}, {"flag", to_string(b.flag)}};
}

json combined_bound_to_json(const CombinedBound& c) {
    return json{{"format", "combined-bound/1"},
                {"version", library_version},
                {"simple", bound_to_json(c.simple)},
                {"double", bound_to_json(c.doubles)},
                {"logFailure", c.log_failure},
                {"failure", finite_or_null(c.failure)},
                {"excludedSimple", c.excluded_simple},
                {"excludedDouble", c.excluded_double},
                {"tripleCap", c.triple_cap},
                {"minExcludedMinor", c.min_excluded_minor}};
}

std::string bound_scan_csv(const std::vector<BoundReport>& rows) {
    std::string out = "n,parameter,formula,log_value,value,flag\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.parameter) + "," + r.formula_id + "," +
               number(r.log_value) + "," + number(r.value) + "," + to_string(r.flag) + "\n";
    return out;
}

json bound_scan_to_json(const std::vector<BoundReport>& rows) {
    json list = json::array();
    for (const auto& r : rows) list.push_back(bound_to_json(r));
    return json{{"format", "bound-scan/1"}, {"version", library_version}, {"rows", list}};
}

std::string instance_to_dot(const LvmInstance& inst) {
    std::ostringstream os;
    os << "graph G" << inst.n() << " {\n";
    for (Vertex v = 0; v < inst.graph().order(); ++v) {
        const bool a = side_of(v) == Side::A;
        os << "  " << v << " [label=\"" << (a ? 'a' : 'b') << index_of(v) << "\", style=filled, fillcolor=\""
           << (a ? "lightblue" : "lightsalmon") << "\"];\n";
    }
    for (auto [u, v] : inst.graph().edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidArgument("cannot parse " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    out << text;
    if (!out) throw InvalidArgument("failed writing " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace lvm
