#include "lvm/cli.hpp"

#include "lvm/bounds.hpp"
#include "lvm/construction.hpp"
#include "lvm/error.hpp"
#include "lvm/io.hpp"
#include "lvm/kempe.hpp"
#include "lvm/minor.hpp"
#include "lvm/montecarlo.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace lvm::cli {

namespace {

/// Flag-level mistakes detected after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string in;
    std::optional<std::size_t> n;
    std::optional<std::uint64_t> seed;

    void add_to(CLI::App* app) {
        app->add_option("--in", in, "graph/1 or lvm-graph/1 input file");
        app->add_option("--n", n, "generate G_n with this n instead of reading --in");
        app->add_option("--seed", seed, "seed for --n");
    }

    GraphInput load() const {
        if (!in.empty()) {
            if (n) throw UsageError("--in and --n are mutually exclusive");
            return graph_input_from_json(read_json_file(in));
        }
        if (!n) throw UsageError("either --in or --n/--seed is required");
        if (!seed) throw UsageError("--n requires an explicit --seed");
        return generate(*n, *seed);
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) out << text;
    else write_text_file(path, text);
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

BagFamily parse_bags(const std::string& text) {
    std::vector<std::vector<Vertex>> bags;
    std::stringstream ss(text);
    std::string bag;
    while (std::getline(ss, bag, ';')) {
        std::vector<Vertex> vs;
        for (auto v : parse_list(bag)) vs.push_back(static_cast<Vertex>(v));
        bags.push_back(std::move(vs));
    }
    return BagFamily(std::move(bags));
}

/// "0.2" -> (2, 10); plain decimal only so that ceil(fraction * n) is exact.
std::pair<std::uint64_t, std::uint64_t> parse_decimal(const std::string& text) {
    auto dot = text.find('.');
    std::string whole = text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
    if ((whole + frac).empty() || (whole + frac).find_first_not_of("0123456789") != std::string::npos ||
        frac.size() > 12)
        throw UsageError("expected a plain decimal fraction, got '" + text + "'");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return {std::stoull(whole.empty() ? "0" : whole) * den + (frac.empty() ? 0 : std::stoull(frac)), den};
}

// generate ------------------------------------------------------------------

struct GenerateCommand {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out_path, dot_path, format = "json";

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("generate", "generate a G_n instance");
        sub->add_option("--n", n, "number of index groups")->required();
        sub->add_option("--seed", seed, "64-bit seed")->required();
        sub->add_option("--out", out_path, "output path (stdout when absent)");
        sub->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
        sub->add_option("--dot", dot_path, "additionally write a DOT rendering here");
    }

    int run(std::ostream& out) const {
        const auto inst = generate(n, seed);
        emit(format == "dot" ? instance_to_dot(inst) : dump(instance_to_json(inst)), out_path, out);
        if (!dot_path.empty()) write_text_file(dot_path, instance_to_dot(inst));
        return ok;
    }
};

// witness -------------------------------------------------------------------

struct WitnessCommand {
    InputOptions input;
    std::string out_path;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("witness", "frozen colouring plus a colouring with a different partition");
        input.add_to(sub);
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        auto loaded = input.load();
        auto* inst = std::get_if<LvmInstance>(&loaded);
        if (!inst) throw UsageError("witness needs an lvm-graph/1 instance");
        const auto& g = inst->graph();
        const auto canonical = canonical_colouring(*inst);

        json report{{"format", "kempe-witness/1"}, {"version", library_version}, {"n", inst->n()}};
        report["seed"] = inst->seed() ? json(*inst->seed()) : json(nullptr);
        const bool frozen = is_frozen(g, canonical);
        report["frozen"] = frozen;
        report["frozenClassCheck"] = frozen && frozen_class_check(g, canonical);
        const auto q = find_quadruple(*inst);
        report["quadruple"] = q ? json(*q) : json(nullptr);
        bool differ = false, proper = false;
        if (q) {
            const auto alt = alternative_colouring(*inst, *q);
            proper = is_proper(g, alt);
            differ = partition_of(alt) != partition_of(canonical);
            report["alternativeColouring"] = colouring_to_json(alt);
        } else {
            report["alternativeColouring"] = nullptr;
        }
        report["alternativeProper"] = proper;
        report["partitionsDiffer"] = differ;
        const bool all = frozen && report["frozenClassCheck"].get<bool>() && q && proper && differ;
        report["verdict"] = all ? "witnessed" : (!q && frozen ? "quadrupleAbsent" : "refuted");
        emit(dump(report), out_path, out);
        if (all) return ok;
        return (!q && frozen) ? quadruple_absent : refuted;
    }
};

// check ---------------------------------------------------------------------

struct CheckCommand {
    InputOptions input;
    std::string out_path, bags_text, colouring_text;
    std::optional<std::size_t> palette;
    bool quasi = false, frozen = false, minor_model = false, proper = false;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("check", "run verifiers on an instance or graph");
        input.add_to(sub);
        sub->add_flag("--quasi-minor", quasi, "bags form a quasi-minor model");
        sub->add_flag("--frozen", frozen, "colouring is frozen (and every Kempe change keeps its partition)");
        sub->add_flag("--minor-model", minor_model, "bags form a minor model");
        sub->add_flag("--proper", proper, "colouring is proper");
        sub->add_option("--bags", bags_text, "bags as '0,1;2,3' (default: canonical bags of an instance)");
        sub->add_option("--colouring", colouring_text, "colours as '0,1,0' (default: canonical colouring)");
        sub->add_option("--k", palette, "palette size for --colouring (default: max colour + 1)");
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        const auto loaded = input.load();
        const auto& g = graph_of(loaded);
        const auto* inst = std::get_if<LvmInstance>(&loaded);

        bool q = quasi, f = frozen, m = minor_model, p = proper;
        if (!q && !f && !m && !p) {
            if (!inst) throw UsageError("a graph/1 input needs an explicit check selector");
            q = f = p = true;
        }

        auto bags = [&]() -> BagFamily {
            if (!bags_text.empty()) return parse_bags(bags_text);
            if (!inst) throw UsageError("canonical bags exist only for lvm-graph/1 inputs; pass --bags");
            return canonical_bags(*inst);
        };
        auto colouring = [&]() -> Colouring {
            if (!colouring_text.empty()) {
                std::vector<Colour> cs;
                Colour top = 0;
                for (auto c : parse_list(colouring_text)) {
                    cs.push_back(static_cast<Colour>(c));
                    top = std::max(top, static_cast<Colour>(c));
                }
                return Colouring(std::move(cs), palette.value_or(cs.empty() ? 0 : top + 1));
            }
            if (!inst) throw UsageError("canonical colouring exists only for lvm-graph/1 inputs; pass --colouring");
            return canonical_colouring(*inst);
        };

        json checks = json::array();
        bool all = true;
        auto record = [&](const char* name, bool passed) {
            checks.push_back({{"name", name}, {"passed", passed}});
            all = all && passed;
        };
        if (p) record("proper", is_proper(g, colouring()));
        if (f) {
            const auto c = colouring();
            const bool proper_c = is_proper(g, c);
            const bool fz = proper_c && is_frozen(g, c);
            record("frozen", fz);
            if (fz) record("frozenClassCheck", frozen_class_check(g, c));
        }
        if (q) record("quasiMinor", verify_quasi_minor(g, bags()));
        if (m) record("minorModel", verify_minor_model(g, bags()));

        json report{{"format", "check-report/1"}, {"version", library_version}, {"order", g.order()},
                    {"checks", checks}, {"allPassed", all}};
        emit(dump(report), out_path, out);
        return all ? ok : refuted;
    }
};

// minors --------------------------------------------------------------------

struct MinorsCommand {
    InputOptions input;
    std::string out_path;
    bool clique = false;
    std::optional<std::size_t> double_k, exact_t, triple_t;
    std::uint64_t budget = default_search_budget;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("minors", "clique, double-minor, exact-minor and triple-minor searches");
        input.add_to(sub);
        sub->add_flag("--clique", clique, "maximum clique (simple minor)");
        sub->add_option("--double", double_k, "search a double K_k minor");
        sub->add_option("--exact-minor,--t", exact_t, "exact K_t-minor decision (order <= 12)");
        sub->add_option("--triple", triple_t, "search a triple K_t minor (every bag >= 3 vertices)");
        sub->add_option("--budget", budget, "node budget per search");
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        if (!clique && !double_k && !exact_t && !triple_t)
            throw UsageError("select at least one of --clique, --double, --exact-minor, --triple");
        const auto loaded = input.load();
        const auto& g = graph_of(loaded);
        const auto* inst = std::get_if<LvmInstance>(&loaded);
        json results = json::array();
        int code = ok;

        auto guarded = [&](json entry, auto&& body) {
            try {
                body(entry);
            } catch (const ResourceLimit& e) {
                entry["status"] = "budgetExhausted";
                entry["message"] = e.what();
                code = resource_guard;
            }
            results.push_back(std::move(entry));
        };

        if (clique)
            guarded(json{{"search", "clique"}}, [&](json& e) {
                auto c = max_clique(g, budget);
                std::vector<std::vector<Vertex>> bags;
                for (auto v : c) bags.push_back({v});
                MinorWitness w{BagFamily(bags), MinorKind::simple};
                e["status"] = "found";
                e["size"] = c.size();
                e["witness"] = witness_to_json(w, verify_minor_model(g, w.bags) && matches_size_class(w));
            });
        if (double_k)
            guarded(json{{"search", "double"}, {"k", *double_k}}, [&](json& e) {
                auto w = find_double_minor(g, *double_k, {}, budget);
                e["status"] = w ? "found" : "exhausted";
                e["witness"] = w ? witness_to_json(*w, verify_minor_model(g, w->bags) && matches_size_class(*w))
                                 : json(nullptr);
            });
        if (exact_t)
            guarded(json{{"search", "exactMinor"}, {"t", *exact_t}}, [&](json& e) {
                auto r = has_kt_minor_exact(g, *exact_t, budget);
                e["status"] = r.found ? "found" : "exhausted";
                e["states"] = r.states;
                e["witness"] = r.witness ? witness_to_json(*r.witness, verify_minor_model(g, r.witness->bags))
                                         : json(nullptr);
            });
        if (triple_t)
            guarded(json{{"search", "triple"}, {"t", *triple_t}}, [&](json& e) {
                const std::size_t cap = inst ? triple_minor_cap(inst->n()) : g.order() / 3;
                e["cap"] = cap;
                // Above the cap the answer is known by counting; the search
                // still runs when the order allows it.
                const bool searchable = g.order() <= exact_minor_order_limit;
                if (*triple_t > cap && !searchable) {
                    e["status"] = "impossible";
                    e["searched"] = false;
                    e["witness"] = nullptr;
                    return;
                }
                auto w = find_minor_with_bag_sizes(g, *triple_t, 3, std::max<std::size_t>(3, g.order()), budget);
                e["searched"] = true;
                if (w) {
                    e["status"] = "found";
                    e["witness"] = witness_to_json(*w, verify_minor_model(g, w->bags) && matches_size_class(*w));
                } else {
                    e["status"] = *triple_t > cap ? "impossible" : "exhausted";
                    e["witness"] = nullptr;
                }
            });

        json report{{"format", "minors-report/1"}, {"version", library_version}, {"order", g.order()},
                    {"results", results}};
        emit(dump(report), out_path, out);
        return code;
    }
};

// bounds --------------------------------------------------------------------

struct BoundsCommand {
    std::string formula = "simple", fraction = "0.2", format = "csv", out_path;
    std::optional<std::size_t> n, k, m, n_min, n_max;
    std::size_t n_step = 1;
    bool combined = false;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("bounds", "evaluate or scan the union bounds");
        sub->add_option("--formula", formula, "simple or double")->check(CLI::IsMember({"simple", "double"}));
        sub->add_option("--n", n, "single n");
        sub->add_option("--k", k, "clique size for the simple bound");
        sub->add_option("--m", m, "number of pairs for the double bound");
        sub->add_option("--n-min", n_min, "scan start");
        sub->add_option("--n-max", n_max, "scan end (inclusive)");
        sub->add_option("--n-step", n_step, "scan step")->check(CLI::PositiveNumber);
        sub->add_option("--fraction", fraction, "scan parameter = ceil(fraction * n)");
        sub->add_flag("--combined", combined, "union of simple and double bounds plus the triple cap (--n --k --m)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        if (combined) {
            if (!n || !k || !m) throw UsageError("--combined needs --n, --k and --m");
            emit(dump(combined_bound_to_json(combined_minor_bound(*n, *k, *m))), out_path, out);
            return ok;
        }
        auto eval = [&](std::size_t nn, std::size_t param) {
            return formula == "simple" ? simple_minor_bound(nn, param) : double_minor_bound(nn, param);
        };
        std::vector<BoundReport> rows;
        if (n) {
            auto param = formula == "simple" ? k : m;
            if (!param) throw UsageError(formula == "simple" ? "--n needs --k" : "--n needs --m");
            rows.push_back(eval(*n, *param));
        } else {
            if (!n_min || !n_max || *n_min == 0 || *n_min > *n_max)
                throw UsageError("a scan needs 1 <= --n-min <= --n-max");
            auto [num, den] = parse_decimal(fraction);
            for (std::size_t nn = *n_min; nn <= *n_max; nn += n_step) rows.push_back(eval(nn, ceil_fraction(nn, num, den)));
        }
        emit(format == "csv" ? bound_scan_csv(rows) : dump(bound_scan_to_json(rows)), out_path, out);
        return ok;
    }
};

// mc ------------------------------------------------------------------------

struct McCommand {
    std::string event, out_path;
    std::size_t n = 0;
    std::uint64_t trials = 0, seed_base = 0;
    std::optional<std::size_t> k, m;
    int threads = 0;
    bool interval = false;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("mc", "Monte Carlo estimate over seeded instances");
        sub->add_option("--event", event, "event id, e.g. quadrupleExists or kCliqueCount(3)")->required();
        sub->add_option("--n", n, "number of index groups")->required();
        sub->add_option("--trials", trials, "number of trials")->required();
        sub->add_option("--seed-base", seed_base, "base seed for per-trial seeds")->required();
        sub->add_option("--k", k, "clique size for cliqueAtLeast / kCliqueCount");
        sub->add_option("--m", m, "pair count for doubleMinorAtLeast");
        sub->add_option("--threads", threads, "OpenMP threads (0 = default); never changes the result");
        sub->add_flag("--interval", interval, "require a 99% interval (needs --trials >= 100)");
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        std::string id = event;
        if (id.find('(') == std::string::npos) {
            if (k && m) throw UsageError("pass only one of --k and --m");
            if (k) id += "(" + std::to_string(*k) + ")";
            if (m) id += "(" + std::to_string(*m) + ")";
        }
        Event ev;
        try {
            ev = Event::parse(id);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        if (interval && trials < min_trials_for_interval)
            throw UsageError("intervals need --trials >= " + std::to_string(min_trials_for_interval));
        try {
            validate_experiment(ev, n, trials);
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
        emit(dump(estimate_to_json(mc_estimate(ev, n, trials, seed_base, threads))), out_path, out);
        return ok;
    }
};

// kempe ---------------------------------------------------------------------

struct KempeCommand {
    InputOptions input;
    std::size_t k = 0;
    std::size_t cap = default_colouring_cap;
    std::string out_path;

    void add_to(CLI::App& app) {
        auto* sub = app.add_subcommand("kempe", "Kempe equivalence classes of all proper k-colourings");
        input.add_to(sub);
        sub->add_option("--k", k, "palette size")->required()->check(CLI::PositiveNumber);
        sub->add_option("--cap", cap, "maximum number of colourings to enumerate");
        sub->add_option("--out", out_path, "output path (stdout when absent)");
    }

    int run(std::ostream& out) const {
        const auto loaded = input.load();
        emit(dump(kempe_report_to_json(kempe_classes(graph_of(loaded), k, cap), k)), out_path, out);
        return ok;
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frozen Kempe colourings and minors of the random graph G_n"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file mirroring the flags; flags win");
    app.allow_config_extras(CLI::config_extras_mode::error);

    GenerateCommand generate_cmd;
    WitnessCommand witness_cmd;
    CheckCommand check_cmd;
    MinorsCommand minors_cmd;
    BoundsCommand bounds_cmd;
    McCommand mc_cmd;
    KempeCommand kempe_cmd;
    generate_cmd.add_to(app);
    witness_cmd.add_to(app);
    check_cmd.add_to(app);
    minors_cmd.add_to(app);
    bounds_cmd.add_to(app);
    mc_cmd.add_to(app);
    kempe_cmd.add_to(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        const auto& name = sub->get_name();
        if (name == "generate") return generate_cmd.run(out);
        if (name == "witness") return witness_cmd.run(out);
        if (name == "check") return check_cmd.run(out);
        if (name == "minors") return minors_cmd.run(out);
        if (name == "bounds") return bounds_cmd.run(out);
        if (name == "mc") return mc_cmd.run(out);
        if (name == "kempe") return kempe_cmd.run(out);
        err << "error: unknown command " << name << "\n";
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return resource_guard;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

} // namespace lvm::cli
