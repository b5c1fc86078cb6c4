// Copyright 2026 The QFIAE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qfiae/depth_report.hpp"
#include "qfiae/qnn.hpp"
#include "qfiae/rng.hpp"
#include "qfiae/targets.hpp"

namespace qfiae::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Raised for problems that make the configuration unusable (exit 2).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

template <typename T>
std::string join(const std::vector<T>& items, bool quoted) {
    std::string text = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) text += ", ";
        std::ostringstream s;
        if (quoted) {
            s << '"' << items[i] << '"';
        } else {
            s << items[i];
        }
        text += s.str();
    }
    return text + "]";
}

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json config_json(const RunConfig& c) {
    json j;
    j["target"] = c.target;
    j["x_lo"] = c.x_lo;
    j["x_hi"] = c.x_hi;
    j["n_fourier"] = c.n_fourier;
    j["n_qubits_iqae"] = c.n_qubits_iqae;
    j["epsilon"] = c.epsilon;
    j["alpha"] = c.alpha;
    j["shots"] = c.shots;
    j["max_rounds"] = c.max_rounds;
    j["method"] = c.method;
    j["learning_rate"] = c.learning_rate;
    j["epochs"] = c.epochs;
    j["num_points"] = c.num_points;
    j["fit_lo"] = c.fit_lo;
    j["fit_hi"] = c.fit_hi;
    j["init_stddev"] = c.init_stddev;
    j["seed"] = c.seed;
    j["loss_ceiling"] = c.loss_ceiling;
    j["exact_amplitudes"] = c.exact_amplitudes;
    j["repeat"] = c.repeat;
    j["mc_samples"] = c.mc_samples;
    j["methods"] = c.methods;
    j["n_fourier_list"] = c.n_fourier_list;
    j["shots_list"] = c.shots_list;
    j["layers"] = c.layers;
    j["k"] = c.k;
    j["output_dir"] = c.output_dir;
    return j;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error("cannot write " + path.string());
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

fs::path prepare_output_dir(const RunConfig& c) {
    fs::path dir(c.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw ConfigError("output directory '" + dir.string() + "' is not usable");
    }
    return dir;
}

json report_document(const RunConfig& c) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = c.command;
    doc["config"] = config_json(c);
    doc["config_text"] = to_config_text(c);
    return doc;
}

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;
};

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    if (xs.empty()) {
        return s;
    }
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

int cmd_fit(const RunConfig& c, std::ostream& out) {
    const fs::path dir = prepare_output_dir(c);
    const Target target = builtin_target(c.target);
    const TrainingConfig tc = c.training();
    const NormalizedTarget norm = normalize_target(target.fn, tc.x_lo, tc.x_hi, tc.num_points);
    const TrainingResult fit = train(norm.fn, tc, c.n_fourier);

    std::string history = "epoch,loss\n";
    for (std::size_t e = 0; e < fit.loss_history.size(); ++e) {
        history += std::to_string(e + 1) + "," + num(fit.loss_history[e]) + "\n";
    }
    write_file(dir / "loss_history.csv", history);

    if (!(fit.final_loss() <= c.loss_ceiling)) {
        throw TrainingFailure("training ended with loss " + num(fit.final_loss()) +
                                  " above the ceiling " + num(c.loss_ceiling),
                              fit.loss_history);
    }

    constexpr int kCurvePoints = 200;
    std::string curve = "x,target,model\n";
    for (int i = 0; i < kCurvePoints; ++i) {
        const double x = tc.x_lo + (tc.x_hi - tc.x_lo) * i / (kCurvePoints - 1);
        curve += num(x) + "," + num(norm.fn(x)) + "," + num(model_forward(fit.model, x)) + "\n";
    }
    write_file(dir / "fit_curve.csv", curve);

    const FourierSeries series = extract_fourier(fit.model);
    json doc = report_document(c);
    doc["target"] = c.target;
    doc["scale_factor"] = norm.scale_factor;
    doc["c0"] = series.c0;
    doc["a"] = series.cos_coeffs;
    doc["b"] = series.sin_coeffs;
    doc["omega"] = series.omega;
    doc["degree"] = series.degree();
    doc["seed"] = c.seed;
    doc["train_seed"] = tc.seed;
    doc["r2"] = json_number(r_squared(fit.model, norm.fn, tc));
    doc["final_loss"] = fit.final_loss();
    write_file(dir / "fourier.json", doc.dump(2) + "\n");

    out << "fit: final loss " << num(fit.final_loss()) << ", R^2 "
        << num(r_squared(fit.model, norm.fn, tc)) << "\n";
    out << "wrote " << (dir / "loss_history.csv").string() << ", "
        << (dir / "fit_curve.csv").string() << ", " << (dir / "fourier.json").string() << "\n";
    return kExitOk;
}

struct CellStats {
    std::vector<IntegralReport> runs;
    std::vector<std::uint64_t> seeds;
    Summary estimate;
    Summary error_bar;
    Summary ratio;
    Summary oracle_calls;
    bool has_ratio = false;
};

CellStats run_cell(const RunConfig& c, Method method, int n_fourier, std::int64_t shots) {
    CellStats cell;
    std::vector<double> est, err, ratio, calls;
    for (int r = 0; r < c.repeat; ++r) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(r);
        IntegralReport rep = run_integral(c.request(method, n_fourier, shots, seed), c.mc_samples);
        est.push_back(rep.i_estimate);
        err.push_back(rep.error_bar);
        calls.push_back(static_cast<double>(rep.total_oracle_calls));
        if (rep.ratio) ratio.push_back(*rep.ratio);
        cell.seeds.push_back(seed);
        cell.runs.push_back(std::move(rep));
    }
    cell.estimate = summarize(est);
    cell.error_bar = summarize(err);
    cell.oracle_calls = summarize(calls);
    cell.has_ratio = ratio.size() == est.size();
    if (cell.has_ratio) cell.ratio = summarize(ratio);
    return cell;
}

int cmd_integrate(const RunConfig& c, std::ostream& out) {
    const Method method = parse_method(c.method);
    if (method == Method::Exact) {
        const IntegralReport rep = run_exact(c.request(method, c.n_fourier, c.shots, c.seed));
        out << num(rep.i_estimate) << "\n";
        return kExitOk;
    }
    const fs::path dir = prepare_output_dir(c);
    const CellStats cell = run_cell(c, method, c.n_fourier, c.shots);

    std::string csv =
        "run,seed,method,n_fourier,shots,i_estimate,error_bar,ratio,oracle_calls,max_k,mean_k,"
        "converged\n";
    for (std::size_t r = 0; r < cell.runs.size(); ++r) {
        const IntegralReport& rep = cell.runs[r];
        csv += std::to_string(r) + "," + std::to_string(cell.seeds[r]) + "," +
               to_string(method) + "," + std::to_string(c.n_fourier) + "," +
               std::to_string(c.shots) + "," + num(rep.i_estimate) + "," + num(rep.error_bar) +
               "," + (rep.ratio ? num(*rep.ratio) : std::string()) + "," +
               std::to_string(rep.total_oracle_calls) + "," + std::to_string(rep.max_k) + "," +
               num(rep.mean_k) + "," + (rep.converged ? "1" : "0") + "\n";
    }
    write_file(dir / "runs.csv", csv);

    json doc = report_document(c);
    doc["method"] = to_string(method);
    doc["repeat"] = c.repeat;
    doc["mean_i_estimate"] = cell.estimate.mean;
    doc["std_i_estimate"] = cell.estimate.stddev;
    doc["mean_error_bar"] = cell.error_bar.mean;
    doc["mean_ratio"] = cell.has_ratio ? json(cell.ratio.mean) : json(nullptr);
    doc["mean_oracle_calls"] = cell.oracle_calls.mean;
    const auto exact = cell.runs.front().i_exact;
    doc["i_exact"] = exact ? json(*exact) : json(nullptr);
    write_file(dir / "summary.json", doc.dump(2) + "\n");

    out << to_string(method) << ": mean I = " << num(cell.estimate.mean) << " +- "
        << num(cell.estimate.stddev);
    if (cell.has_ratio) out << ", mean ratio " << num(cell.ratio.mean);
    out << "\nwrote " << (dir / "runs.csv").string() << ", " << (dir / "summary.json").string()
        << "\n";
    return kExitOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    const fs::path dir = prepare_output_dir(c);
    std::string csv = "method,n_fourier,shots,i_est,err,std,ratio\n";
    for (const std::string& name : c.methods) {
        const Method method = parse_method(name);
        for (int nf : c.n_fourier_list) {
            for (std::int64_t shots : c.shots_list) {
                const CellStats cell = run_cell(c, method, nf, shots);
                csv += to_string(method) + "," + std::to_string(nf) + "," +
                       std::to_string(shots) + "," + num(cell.estimate.mean) + "," +
                       num(cell.error_bar.mean) + "," + num(cell.estimate.stddev) + "," +
                       (cell.has_ratio ? num(cell.ratio.mean) : std::string()) + "\n";
            }
        }
    }
    write_file(dir / "comparison.csv", csv);
    out << csv << "wrote " << (dir / "comparison.csv").string() << "\n";
    return kExitOk;
}

int cmd_depth(const RunConfig& c, std::ostream& out) {
    out << format_depth_table(depth_report(c.layers, c.k, c.n_qubits_iqae));
    return kExitOk;
}

}  // namespace

void RunConfig::validate() const {
    if (repeat < 1) throw std::invalid_argument("repeat must be >= 1");
    if (mc_samples < 1) throw std::invalid_argument("mc_samples must be >= 1");
    if (layers < 1) throw std::invalid_argument("layers must be >= 1");
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (methods.empty() || n_fourier_list.empty() || shots_list.empty()) {
        throw std::invalid_argument("methods, n_fourier_list and shots_list must be non-empty");
    }
    for (const std::string& m : methods) (void)parse_method(m);
    const Method main = parse_method(method);
    if (command == "fit") {
        if (n_fourier < 1) throw std::invalid_argument("n_fourier must be >= 1");
        (void)builtin_target(target);
        training().validate();
    } else if (command == "integrate") {
        request(main, n_fourier, shots, seed).validate();
    } else if (command == "compare") {
        for (const std::string& m : methods) {
            for (int nf : n_fourier_list) {
                for (std::int64_t s : shots_list) {
                    request(parse_method(m), nf, s, seed).validate();
                }
            }
        }
    }
}

TrainingConfig RunConfig::training() const {
    TrainingConfig tc;
    tc.learning_rate = learning_rate;
    tc.epochs = epochs;
    tc.num_points = num_points;
    tc.x_lo = fit_lo;
    tc.x_hi = fit_hi;
    tc.seed = derive_seed(seed, 0);
    tc.init_stddev = init_stddev;
    return tc;
}

IntegralRequest RunConfig::request(Method m, int nf, std::int64_t shot_count,
                                   std::uint64_t master_seed) const {
    IntegralRequest r;
    r.target = target;
    r.x_lo = x_lo;
    r.x_hi = x_hi;
    r.n_fourier = nf;
    r.n_qubits_iqae = n_qubits_iqae;
    r.iqae.epsilon = epsilon;
    r.iqae.alpha = alpha;
    r.iqae.shots_per_round = shot_count;
    r.iqae.max_rounds = max_rounds;
    r.method = m;
    r.train = training();
    r.master_seed = master_seed;
    r.exact_amplitudes = exact_amplitudes;
    r.loss_ceiling = loss_ceiling;
    return r;
}

std::string to_config_text(const RunConfig& c) {
    std::ostringstream s;
    s << "target = \"" << c.target << "\"\n";
    s << "x_lo = " << num(c.x_lo) << "\n";
    s << "x_hi = " << num(c.x_hi) << "\n";
    s << "n_fourier = " << c.n_fourier << "\n";
    s << "n_qubits_iqae = " << c.n_qubits_iqae << "\n";
    s << "epsilon = " << num(c.epsilon) << "\n";
    s << "alpha = " << num(c.alpha) << "\n";
    s << "shots = " << c.shots << "\n";
    s << "max_rounds = " << c.max_rounds << "\n";
    s << "method = \"" << c.method << "\"\n";
    s << "learning_rate = " << num(c.learning_rate) << "\n";
    s << "epochs = " << c.epochs << "\n";
    s << "num_points = " << c.num_points << "\n";
    s << "fit_lo = " << num(c.fit_lo) << "\n";
    s << "fit_hi = " << num(c.fit_hi) << "\n";
    s << "init_stddev = " << num(c.init_stddev) << "\n";
    s << "seed = " << c.seed << "\n";
    s << "loss_ceiling = " << num(c.loss_ceiling) << "\n";
    s << "exact_amplitudes = " << (c.exact_amplitudes ? "true" : "false") << "\n";
    s << "repeat = " << c.repeat << "\n";
    s << "mc_samples = " << c.mc_samples << "\n";
    s << "methods = " << join(c.methods, true) << "\n";
    s << "n_fourier_list = " << join(c.n_fourier_list, false) << "\n";
    s << "shots_list = " << join(c.shots_list, false) << "\n";
    s << "layers = " << c.layers << "\n";
    s << "k = " << c.k << "\n";
    s << "output_dir = \"" << c.output_dir << "\"\n";
    return s.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Fourier-series integration with iterative amplitude estimation", "qfiae"};
    app.add_option("command", c.command, "fit | integrate | compare | depth")
        ->required()
        ->check(CLI::IsMember({"fit", "integrate", "compare", "depth"}));
    app.set_config("--config", "", "flat key = value configuration file");

    app.add_option("--target", c.target, "built-in target id")->capture_default_str();
    app.add_option("--x_lo", c.x_lo, "integration interval start")->capture_default_str();
    app.add_option("--x_hi", c.x_hi, "integration interval end")->capture_default_str();
    app.add_option("--n_fourier", c.n_fourier, "series degree / model layers")
        ->capture_default_str();
    app.add_option("--n_qubits_iqae", c.n_qubits_iqae, "grid register qubits")
        ->capture_default_str();
    app.add_option("--epsilon", c.epsilon, "target half-width on each amplitude")
        ->capture_default_str();
    app.add_option("--alpha", c.alpha, "failure probability")->capture_default_str();
    app.add_option("--shots", c.shots, "shots per round")->capture_default_str();
    app.add_option("--max_rounds", c.max_rounds, "round limit, 0 for default")
        ->capture_default_str();
    app.add_option("--method", c.method, "QFIAE | FQMCI | CLASSICAL_MC | EXACT")
        ->capture_default_str();
    app.add_option("--learning_rate", c.learning_rate)->capture_default_str();
    app.add_option("--epochs", c.epochs)->capture_default_str();
    app.add_option("--num_points", c.num_points, "training points")->capture_default_str();
    app.add_option("--fit_lo", c.fit_lo, "fit domain start")->capture_default_str();
    app.add_option("--fit_hi", c.fit_hi, "fit domain end")->capture_default_str();
    app.add_option("--init_stddev", c.init_stddev, "spread of initial angles")
        ->capture_default_str();
    app.add_option("--seed", c.seed, "master seed")->capture_default_str();
    app.add_option("--loss_ceiling", c.loss_ceiling, "abort above this final loss")
        ->capture_default_str();
    app.add_option("--exact_amplitudes", c.exact_amplitudes, "use exact amplitudes")
        ->capture_default_str();
    app.add_option("--repeat", c.repeat, "runs per cell, seeds seed..seed+repeat-1")
        ->capture_default_str();
    app.add_option("--mc_samples", c.mc_samples, "classical Monte Carlo samples")
        ->capture_default_str();
    app.add_option("--methods", c.methods, "compare: methods")->delimiter(',');
    app.add_option("--n_fourier_list", c.n_fourier_list, "compare: degrees")->delimiter(',');
    app.add_option("--shots_list", c.shots_list, "compare: shots")->delimiter(',');
    app.add_option("--layers", c.layers, "depth: model layers")->capture_default_str();
    app.add_option("--k", c.k, "depth: Grover power")->capture_default_str();
    app.add_option("--output_dir", c.output_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    if (c.output_dir.empty()) {
        const char* env = std::getenv(kOutputDirEnv);
        c.output_dir = (env != nullptr && *env != '\0') ? env : ".";
    }

    try {
        c.validate();
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        if (c.command == "fit") return cmd_fit(c, out);
        if (c.command == "integrate") return cmd_integrate(c, out);
        if (c.command == "compare") return cmd_compare(c, out);
        return cmd_depth(c, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const TrainingFailure& e) {
        err << "run failed: " << e.what() << " (" << e.loss_history().size() << " epochs)\n";
        return kExitRunFailure;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        err << "run failed: " << e.what() << "\n";
        return kExitRunFailure;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("qfiae");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qfiae::cli
