#include "elnet/cli.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "elnet/edge_list.hpp"
#include "elnet/error.hpp"
#include "elnet/exact_solver.hpp"
#include "elnet/monte_carlo.hpp"
#include "elnet/proof_replayer.hpp"
#include "elnet/serialize.hpp"

namespace elnet::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const std::string& text, std::ostream& err) {
    if (text == "random") {
        std::random_device device;
        const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) | device();
        err << "seed: " << seed << "\n";
        return seed;
    }
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw UsageError("--seed expects a nonnegative integer or 'random', got '" + text + "'");
    }
    return seed;
}

Network load(const CliConfig& config, std::istream& in) {
    if (config.input == "-") {
        return read_network(in);
    }
    std::ifstream file(config.input);
    if (!file) {
        throw UsageError("cannot open input file '" + config.input + "'");
    }
    return read_network(file);
}

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void write(std::ostream& out) const {
        write_row(out, header_);
        for (const auto& r : rows_) {
            write_row(out, r);
        }
    }

private:
    static void write_row(std::ostream& out, const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << "\n";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

void emit(const Json& doc, std::ostream& out) {
    out << doc.dump(2) << "\n";
}

SimulationOptions simulation_options(const CliConfig& config) {
    return {config.trials, config.seed, config.step_cap};
}

void emit_estimate(const CliConfig& config, Json doc, const Estimate& e, std::ostream& out) {
    const Json fields = to_json(e);
    for (const auto& [key, value] : fields.items()) {
        doc[key] = value;
    }
    doc["step_cap"] = config.step_cap;
    if (config.format == OutputFormat::Json) {
        emit(doc, out);
        return;
    }
    std::vector<std::string> header;
    std::vector<std::string> row;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_structured()) {
            continue;
        }
        header.push_back(key);
        if (value.is_number_float()) {
            row.push_back(format_double(value.get<double>()));
        } else if (value.is_string()) {
            row.push_back(value.get<std::string>());
        } else {
            row.push_back(value.dump());
        }
    }
    CsvTable table(std::move(header));
    table.add(std::move(row));
    table.write(out);
}

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Random walks on electric networks: resistance, hitting, commute and return times"};
    app.name("elnet");
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string seed_text = "0";
    app.add_option("-i,--input", config.input, "Edge-list file, or - for standard input")
        ->capture_default_str();
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}}))
        ->capture_default_str();
    app.add_option("--seed", seed_text, "Simulation seed (integer, or 'random')")->capture_default_str();
    app.add_option("--trials", config.trials, "Monte Carlo trials")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    app.add_option("--tolerance", config.tolerance, "Relative tolerance for identity checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--step-cap", config.step_cap, "Maximum steps per simulated walk")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();

    std::string x, y, z;
    double pendant_conductance = 1.0;
    std::optional<std::string> verify_vertex;
    bool verify_simulate = false;

    auto* resistance = app.add_subcommand("resistance", "Effective resistance between two vertices");
    resistance->add_option("x", x)->required();
    resistance->add_option("y", y)->required();

    auto* hitting = app.add_subcommand("hitting", "Expected hitting time from x to y");
    hitting->add_option("x", x)->required();
    hitting->add_option("y", y)->required();

    auto* ret = app.add_subcommand("return-time", "Expected return time, by formula and by first-step analysis");
    ret->add_option("z", z)->required();

    auto* stationary = app.add_subcommand("stationary", "Stationary distribution");

    auto* commute = app.add_subcommand("commute", "Commute time and its electrical counterpart");
    commute->add_option("x", x)->required();
    commute->add_option("y", y)->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates");
    simulate->require_subcommand(1);
    auto* sim_return = simulate->add_subcommand("return", "Return time to z");
    sim_return->add_option("z", z)->required();
    auto* sim_hitting = simulate->add_subcommand("hitting", "Hitting time from x to y");
    sim_hitting->add_option("x", x)->required();
    sim_hitting->add_option("y", y)->required();
    auto* sim_excursions =
        simulate->add_subcommand("excursions", "Excursions from z before reaching a pendant vertex");
    sim_excursions->add_option("z", z)->required();
    sim_excursions->add_option("--pendant-conductance", pendant_conductance, "Conductance of the pendant edge")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check the return-time identities and replay the pendant argument");
    verify->add_option("--vertex", verify_vertex, "Replay only at this vertex");
    verify->add_flag("--simulate", verify_simulate, "Add Monte Carlo checks to the replay");

    std::vector<std::string> owned{"elnet"};
    owned.insert(owned.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : owned) {
        argv.push_back(a.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        config.seed = resolve_seed(seed_text, err);
        config.subcommand = app.get_subcommands().front()->get_name();
        const bool json = config.format == OutputFormat::Json;

        if (verify->parsed() && !json) {
            throw UsageError("verify emits nested traces and supports only --format json");
        }

        const Network net = load(config, in);

        if (resistance->parsed()) {
            const double r = effective_resistance(net, x, y);
            if (json) {
                emit(Json{{"x", x}, {"y", y}, {"resistance", r}}, out);
            } else {
                CsvTable t({"x", "y", "resistance"});
                t.add({x, y, format_double(r)});
                t.write(out);
            }
        } else if (hitting->parsed()) {
            net.index_of(x);
            const HittingProfile profile = hitting_time(net, y);
            const double h = profile.at(x);
            if (json) {
                Json doc{{"from", x}, {"target", y}, {"hitting_time", h}};
                doc["profile"] = to_json(profile);
                emit(doc, out);
            } else {
                CsvTable t({"from", "target", "hitting_time"});
                t.add({x, y, format_double(h)});
                t.write(out);
            }
        } else if (ret->parsed()) {
            const double formula = return_time_formula(net, z);
            const double first_step = return_time(net, z);
            if (json) {
                emit(Json{{"vertex", z}, {"formula", formula}, {"first_step", first_step}}, out);
            } else {
                CsvTable t({"vertex", "formula", "first_step"});
                t.add({z, format_double(formula), format_double(first_step)});
                t.write(out);
            }
        } else if (stationary->parsed()) {
            const Distribution pi = stationary_distribution(net);
            if (json) {
                emit(Json{{"stationary", to_json(pi)}}, out);
            } else {
                CsvTable t({"vertex", "probability"});
                for (std::size_t i = 0; i < pi.labels.size(); ++i) {
                    t.add({pi.labels[i], format_double(pi.weights[i])});
                }
                t.write(out);
            }
        } else if (commute->parsed()) {
            const double round_trip = commute_time(net, x, y);
            const double r = effective_resistance(net, x, y);
            const double electrical = net.total_conductance() * r;
            if (json) {
                emit(Json{{"x", x},
                          {"y", y},
                          {"commute_time", round_trip},
                          {"total_conductance", net.total_conductance()},
                          {"resistance", r},
                          {"total_conductance_times_resistance", electrical}},
                     out);
            } else {
                CsvTable t({"x", "y", "commute_time", "total_conductance", "resistance",
                            "total_conductance_times_resistance"});
                t.add({x, y, format_double(round_trip), format_double(net.total_conductance()),
                       format_double(r), format_double(electrical)});
                t.write(out);
            }
        } else if (sim_return->parsed()) {
            const Estimate e = estimate_return_time(net, z, simulation_options(config));
            emit_estimate(config, Json{{"quantity", "return"}, {"vertex", z}, {"exact", return_time_formula(net, z)}},
                          e, out);
        } else if (sim_hitting->parsed()) {
            const Estimate e = estimate_hitting_time(net, x, y, simulation_options(config));
            emit_estimate(config,
                          Json{{"quantity", "hitting"}, {"from", x}, {"target", y}, {"exact", hitting_time(net, x, y)}},
                          e, out);
        } else if (sim_excursions->parsed()) {
            const AugmentedNetwork aug = attach_pendant(net, z, pendant_conductance);
            const ExcursionEstimate exc = estimate_excursions(aug, simulation_options(config));
            Json doc{{"quantity", "excursions"},
                     {"anchor", z},
                     {"pendant_conductance", pendant_conductance},
                     {"exact", net.vertex_conductance(z) / pendant_conductance},
                     {"success_probability", exc.success_probability}};
            if (json) {
                doc["histogram"] = exc.histogram;
                try {
                    const GoodnessOfFit fit = geometric_goodness_of_fit(exc.histogram, exc.success_probability);
                    doc["goodness_of_fit"] = Json{{"statistic", fit.statistic},
                                                  {"degrees_of_freedom", fit.degrees_of_freedom},
                                                  {"p_value", fit.p_value}};
                } catch (const Error&) {
                    doc["goodness_of_fit"] = nullptr;
                }
            }
            emit_estimate(config, std::move(doc), exc.estimate, out);
        } else if (verify->parsed()) {
            std::optional<SimulationOptions> sim;
            if (verify_simulate) {
                sim = simulation_options(config);
            }
            const TheoremReport report = verify_theorems(net, config.tolerance);
            Json traces = Json::array();
            bool verdict = report.pass;
            auto add_trace = [&](const std::string& vertex) {
                const ProofTrace trace = replay(net, vertex, config.tolerance, sim);
                verdict = verdict && trace.verdict;
                traces.push_back(to_json(trace));
            };
            if (verify_vertex) {
                add_trace(*verify_vertex);
            } else {
                for (const auto& label : net.labels()) {
                    add_trace(label);
                }
            }
            Json doc;
            doc["tolerance"] = config.tolerance;
            doc["theorems"] = to_json(report);
            doc["traces"] = std::move(traces);
            doc["verdict"] = verdict;
            emit(doc, out);
            return verdict ? kExitOk : kExitFailure;
        }
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::CapExceeded:
        case ErrorKind::SingularSystem:
            return kExitFailure;
        default:
            return kExitUsage;
        }
    }
}

} // namespace elnet::cli
