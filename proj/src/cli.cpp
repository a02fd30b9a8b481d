#include "chargealg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chargealg/report.hpp"

namespace chargealg {

namespace {

std::map<std::string, double> parse_bindings(const std::vector<std::string> &items) {
    std::map<std::string, double> out;
    for (const auto &item : items) {
        std::stringstream ss(item);
        std::string pair;
        while (std::getline(ss, pair, ',')) {
            if (pair.empty()) {
                continue;
            }
            const auto eq = pair.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw CLI::ValidationError("--bind", "expected name=value, got '" + pair + "'");
            }
            const std::string name = pair.substr(0, eq);
            const std::string value = pair.substr(eq + 1);
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(value, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != value.size()) {
                throw CLI::ValidationError("--bind", "'" + value + "' is not a number");
            }
            out[name] = v;
        }
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Noether charges, structure constants and central extensions of Lagrangian symmetry groups"};
    app.name("chargealg");
    app.require_subcommand(1);

    auto *analyze = app.add_subcommand("analyze", "analyze a system file");
    std::string path;
    std::string format = "text";
    bool numeric = false;
    NumericSettings settings;
    std::vector<std::string> binds;
    analyze->add_option("file", path, "system definition")->required();
    analyze->add_option("--report", format, "report format")->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--numeric", numeric, "run the numeric verification suite");
    analyze->add_option("--dt", settings.config.dt, "integrator step")->check(CLI::PositiveNumber);
    analyze->add_option("--horizon", settings.config.horizon, "trajectory length")->check(CLI::PositiveNumber);
    analyze->add_option("--seed", settings.config.seed, "random seed");
    analyze->add_option("--bind", binds, "parameter values, name=value[,name=value...]");
    analyze->add_option("--tolerance", settings.config.tolerance, "relative tolerance of numeric checks")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--samples", settings.samples, "random points per numeric check")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

    std::vector<std::string> argv_strings = args;
    std::reverse(argv_strings.begin(), argv_strings.end());
    try {
        app.parse(argv_strings);
        settings.config.bindings = parse_bindings(binds);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "chargealg: " << e.what() << "\n";
        return static_cast<int>(ExitStatus::Rejected);
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "chargealg: cannot read '" << path << "'\n";
        return static_cast<int>(ExitStatus::Rejected);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    std::optional<NumericSettings> numeric_settings;
    if (numeric) {
        numeric_settings = settings;
    }
    const Report report =
        build_report(buffer.str(), std::filesystem::path(path).filename().string(), numeric_settings);

    out << (format == "json" ? report_json(report) : report_text(report));
    if (report.error) {
        err << "chargealg: " << path << ": " << report.error->message << "\n";
    }
    return static_cast<int>(report.status);
}

} // namespace chargealg
