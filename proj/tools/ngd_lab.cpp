// ngd-lab: command-line front end for the negative-group-delay toolkit.
//
//   ngd-lab list
//   ngd-lab run <id> [--set key=value ...] [--config FILE] [--out DIR]
//   ngd-lab response <constructor> --grid wmin,wmax,npts [--set key=value ...] [--out FILE]
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ngd/csv.hpp"
#include "ngd/errors.hpp"
#include "ngd/experiments.hpp"
#include "ngd/transfer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::pair<std::string, double> parse_assignment(const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("expected key=value, got '" + item + "'");
    std::size_t used = 0;
    const double value = std::stod(item.substr(eq + 1), &used);
    if (used != item.size() - eq - 1)
        throw std::invalid_argument("bad numeric value in '" + item + "'");
    return {item.substr(0, eq), value};
}

// Flat key=value config file; '#' starts a comment, blank lines ignored.
std::map<std::string, double> read_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot read config file " + path);
    std::map<std::string, double> out;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        out.insert(parse_assignment(line.substr(begin, end - begin + 1)));
    }
    return out;
}

struct ResponseParams {
    double T = 1.0, a = 0.2, b = 0.05, T_L = 1.0;
    int m = 2;
};

ngd::TransferFunction make_constructor(const std::string& name, const ResponseParams& p) {
    if (name == "lowpass") return ngd::lowpass_first_order(p.T);
    if (name == "ngd_ideal") return ngd::ngd_ideal(p.T);
    if (name == "allpass") return ngd::allpass(p.T);
    if (name == "ngd_practical") return ngd::ngd_practical(p.T, p.a, p.b);
    if (name == "bessel") return ngd::bessel(p.m, p.T_L);
    if (name == "cascaded_lowpass") return ngd::cascaded_lowpass(p.m, p.T_L);
    throw std::invalid_argument("unknown constructor '" + name +
                                "' (expected lowpass, ngd_ideal, allpass, ngd_practical, "
                                "bessel, or cascaded_lowpass)");
}

void emit_response(const ngd::TransferFunction& tf, double wmin, double wmax, int npts,
                   std::ostream& os) {
    if (!(wmin < wmax) || npts < 2)
        throw std::invalid_argument("response grid requires wmin < wmax and npts >= 2");
    os << "omega,amplitude,phase,group_delay\n";
    for (int i = 0; i < npts; ++i) {
        const double w = wmin + (wmax - wmin) * i / (npts - 1);
        os << ngd::csv::number(w) << ',' << ngd::csv::number(tf.amplitude(w)) << ','
           << ngd::csv::number(tf.phase(w)) << ',' << ngd::csv::number(tf.group_delay(w))
           << '\n';
    }
}

int run_main(int argc, char** argv) {
    CLI::App app{"negative-group-delay simulation toolkit"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list available experiments");

    std::string run_id, config_file, out_dir;
    std::vector<std::string> set_items;
    auto* run_cmd = app.add_subcommand("run", "run an experiment, write CSV + summary");
    run_cmd->add_option("id", run_id, "experiment id (see 'list')")->required();
    run_cmd->add_option("--set", set_items, "parameter override key=value");
    run_cmd->add_option("--config", config_file, "flat key=value parameter file");
    run_cmd->add_option("--out", out_dir, "output directory (default out/<id>)");

    std::string ctor_name, grid_spec, resp_out;
    std::vector<std::string> resp_set;
    auto* resp_cmd = app.add_subcommand("response", "emit a frequency-response CSV");
    resp_cmd->add_option("constructor", ctor_name, "transfer-function constructor")->required();
    resp_cmd->add_option("--grid", grid_spec, "wmin,wmax,npts")->required();
    resp_cmd->add_option("--set", resp_set, "constructor parameter key=value (T,a,b,m,T_L)");
    resp_cmd->add_option("--out", resp_out, "output file (default stdout)");

    app.parse(argc, argv);

    if (list_cmd->parsed()) {
        for (const auto& info : ngd::list_experiments()) {
            std::cout << info.id << "  (" << info.figure << ")  " << info.description
                      << "\n    parameters:";
            for (const auto& [key, value] : info.defaults)
                std::cout << ' ' << key << '=' << ngd::csv::number(value);
            std::cout << '\n';
        }
        return kExitOk;
    }

    if (run_cmd->parsed()) {
        ngd::ExperimentConfig config;
        config.id = run_id;
        if (!config_file.empty()) config.overrides = read_config_file(config_file);
        for (const auto& item : set_items) {
            const auto [key, value] = parse_assignment(item); // CLI overrides win
            config.overrides[key] = value;
        }
        config.out_dir = out_dir.empty() ? std::filesystem::path("out") / run_id
                                         : std::filesystem::path(out_dir);
        const ngd::ExperimentResult result = ngd::run(config);
        std::cout << result.summary;
        for (const auto& f : result.files) std::cout << "wrote " << f.string() << '\n';
        return kExitOk;
    }

    // response
    ResponseParams params;
    for (const auto& item : resp_set) {
        const auto [key, value] = parse_assignment(item);
        if (key == "T") params.T = value;
        else if (key == "a") params.a = value;
        else if (key == "b") params.b = value;
        else if (key == "T_L") params.T_L = value;
        else if (key == "m") params.m = static_cast<int>(value);
        else throw std::invalid_argument("unknown response parameter '" + key + "'");
    }
    double wmin = 0.0, wmax = 0.0;
    int npts = 0;
    {
        std::istringstream is(grid_spec);
        char c1 = 0, c2 = 0;
        if (!(is >> wmin >> c1 >> wmax >> c2 >> npts) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("--grid expects wmin,wmax,npts");
    }
    const ngd::TransferFunction tf = make_constructor(ctor_name, params);
    if (resp_out.empty()) {
        emit_response(tf, wmin, wmax, npts, std::cout);
    } else {
        std::ofstream os(resp_out, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file " + resp_out);
        emit_response(tf, wmin, wmax, npts, os);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        try {
            return run_main(argc, argv);
        } catch (const CLI::ParseError& e) {
            CLI::App dummy;
            const int code = dummy.exit(e);
            return code == 0 ? kExitOk : kExitValidation;
        }
    } catch (const ngd::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ngd::WraparoundError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ngd::PoleEvaluationError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ngd::UndefinedPhaseError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
