// Copyright 2026 The zxparam Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zxparam/circuit.hpp"
#include "zxparam/reduction.hpp"
#include "zxparam/report.hpp"
#include "zxparam/rewrite.hpp"
#include "zxparam/verifier.hpp"

namespace zxparam::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
    std::vector<std::string> inputs;
    std::uint64_t seed = 0;
    std::size_t samples = 5;
    double tol = kDefaultTolerance;
    std::string report;
    std::string out_dir;
    std::size_t oracle_max_params = 4;
};

/// Error carrying an exit code and a message for stderr.
struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kInputError, path + ": cannot open file"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Failure{kInputError, tmp.string() + ": cannot write file"};
        }
        out << content;
        if (!out.flush()) {
            throw Failure{kInputError, tmp.string() + ": write failed"};
        }
    }
    fs::rename(tmp, path);
}

// Runs `body`, translating library exceptions into exit codes.
template <typename F>
auto guarded(const std::string& context, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const Failure&) {
        throw;
    } catch (const SyntaxError& e) {
        throw Failure{kInputError, context + ": syntax error: " + e.what()};
    } catch (const NonCliffordConstant& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const RepeatedParameterName& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const RepeatedParameter& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const DimensionMismatch& e) {
        throw Failure{kInputError, context + ": dimension mismatch: " + e.what()};
    } catch (const ReportError& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const TooManyParams& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const TooLarge& e) {
        throw Failure{kInputError, context + ": " + e.what()};
    } catch (const std::exception& e) {
        throw Failure{kInternalError, context + ": internal error: " + e.what()};
    }
}

Circuit load_circuit(const std::string& path) {
    const std::string text = read_file(path);
    return guarded(path, [&] { return parse_circuit(text); });
}

void write_report(const RunConfig& cfg, const nlohmann::json& j) {
    if (!cfg.report.empty()) {
        write_atomic(cfg.report, j.dump(2) + "\n");
    }
}

struct OptimizeOutcome {
    std::string summary;
    nlohmann::json report;
};

OptimizeOutcome optimize_one(const RunConfig& cfg, const std::string& input) {
    const Circuit c = load_circuit(input);
    return guarded(input, [&] {
        TeleportResult t = phase_teleport(c);
        std::vector<std::string> problems = terminal_form_violations(t.terminal);
        if (!problems.empty()) {
            throw Failure{kInternalError, input + ": terminal form violated: " + problems.front()};
        }
        CertificateReport cert = optimality_certificate(t.terminal);
        if (!cert.passes) {
            throw Failure{kInternalError, input + ": optimality certificate failed: " + cert.reasons.front()};
        }
        if (t.circuit.num_params() != cert.num_params) {
            throw Failure{kInternalError, input + ": output parameter count disagrees with the terminal diagram"};
        }

        const fs::path in_path(input);
        const fs::path dir = cfg.out_dir.empty() ? in_path.parent_path() : fs::path(cfg.out_dir);
        const std::string stem = in_path.stem().string();
        const fs::path qc_path = dir / (stem + ".opt.qc");
        const fs::path map_path = dir / (stem + ".opt.map.json");
        write_atomic(qc_path, emit_circuit(t.circuit));
        write_atomic(map_path, dump_reduction(t.map));

        std::ostringstream s;
        s << input << ": " << t.params_before << " -> " << t.circuit.num_params() << " parameters\n";
        std::vector<std::string> rows;
        for (std::size_t i = 0; i < t.map.rows(); ++i) {
            rows.push_back(t.map.row_string(i));
            s << "  " << rows.back() << "\n";
        }
        for (const std::string& e : t.map.eliminated) {
            s << "  eliminated " << e << "\n";
        }
        s << "  wrote " << qc_path.string() << ", " << map_path.string() << "\n";

        nlohmann::json j{{"input", input},
                         {"output", qc_path.string()},
                         {"map", map_path.string()},
                         {"params_before", t.params_before},
                         {"params_after", t.circuit.num_params()},
                         {"rows", rows},
                         {"reduction", t.map},
                         {"certificate", cert}};
        return OptimizeOutcome{s.str(), j};
    });
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::future<OptimizeOutcome>> jobs;
    for (const std::string& input : cfg.inputs) {
        jobs.push_back(std::async(std::launch::async, [&cfg, input] { return optimize_one(cfg, input); }));
    }
    std::vector<OptimizeOutcome> results;
    std::optional<Failure> first;
    for (auto& job : jobs) {
        try {
            results.push_back(job.get());
        } catch (const Failure& f) {
            if (!first) {
                first = f;
            }
        } catch (const std::exception& e) {
            if (!first) {
                first = Failure{kInternalError, e.what()};
            }
        }
    }
    nlohmann::json files = nlohmann::json::array();
    for (const OptimizeOutcome& r : results) {
        out << r.summary;
        files.push_back(r.report);
    }
    write_report(cfg, {{"command", "optimize"}, {"files", files}});
    if (first) {
        throw *first;
    }
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 3) {
        throw Failure{kInputError, "verify expects <original> <optimised> <map>"};
    }
    const Circuit original = load_circuit(cfg.inputs[0]);
    const Circuit optimised = load_circuit(cfg.inputs[1]);
    const std::string map_text = read_file(cfg.inputs[2]);
    const ReductionMap map = guarded(cfg.inputs[2], [&] { return parse_reduction(map_text); });

    return guarded(cfg.inputs[1], [&] {
        ProportionalityReport prop = check_reduction(original, optimised, map, cfg.samples, cfg.tol, cfg.seed);
        SimplifyResult simp = simplify(circuit_to_diagram(optimised));
        CertificateReport cert = optimality_certificate(simp.diagram);
        const bool count_ok = cert.num_params == optimised.num_params();
        std::vector<std::string> trivial;
        for (ParamId p : trivial_params(original, cfg.tol)) {
            trivial.push_back(original.param_names[static_cast<std::size_t>(p)]);
        }

        out << "proportionality: " << (prop.holds ? "holds" : "FAILS") << " at " << prop.ratios.size()
            << " samples, max deviation " << prop.max_deviation << "\n";
        for (std::size_t i = 0; i < prop.ratios.size(); ++i) {
            out << "  sample " << i << ": lambda = " << prop.ratios[i].real() << (prop.ratios[i].imag() < 0 ? " - " : " + ")
                << std::abs(prop.ratios[i].imag()) << "i\n";
        }
        if (prop.first_failure) {
            out << "  first failing sample: " << *prop.first_failure << " (";
            const auto& s = prop.samples[*prop.first_failure];
            for (std::size_t j = 0; j < s.size(); ++j) {
                out << (j ? ", " : "") << original.param_names[j] << " = " << s[j];
            }
            out << ")\n";
        }
        out << "certificate: " << (cert.passes && count_ok ? "passes" : "FAILS") << "\n";
        for (const std::string& r : cert.reasons) {
            out << "  " << r << "\n";
        }
        if (!count_ok) {
            out << "  optimised circuit simplifies further: " << optimised.num_params() << " -> " << cert.num_params
                << " parameters\n";
        }
        for (const std::string& t : trivial) {
            out << "warning: parameter " << t << " is trivial\n";
        }
        const bool ok = prop.holds && cert.passes && count_ok;
        write_report(cfg, {{"command", "verify"},
                           {"ok", ok},
                           {"proportionality", prop},
                           {"certificate", cert},
                           {"trivial_params", trivial}});
        return ok ? kOk : kVerificationFailed;
    });
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 1) {
        throw Failure{kInputError, "oracle expects exactly one circuit"};
    }
    const std::string& input = cfg.inputs[0];
    const Circuit c = load_circuit(input);
    return guarded(input, [&] {
        OracleResult r = brute_force_min(c, cfg.tol, cfg.oracle_max_params, cfg.samples, cfg.seed);
        TeleportResult t = phase_teleport(c);
        const std::size_t opt = t.circuit.num_params();
        out << "min = " << r.count << "\n";
        for (std::size_t i = 0; i < r.witness.rows(); ++i) {
            out << "  " << r.witness.row_string(i) << "\n";
        }
        out << "optimizer = " << opt << "\n";
        write_report(cfg, {{"command", "oracle"},
                           {"min", r.count},
                           {"optimizer", opt},
                           {"candidates_tested", r.candidates_tested},
                           {"witness", r.witness}});
        if (r.count < opt) {
            out << "oracle beats the optimizer\n";
            return kOracleBeatsOptimizer;
        }
        return kOk;
    });
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimise free parameters in parametrised Clifford circuits", "zxparam"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv("ZXPARAM_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            err << "ZXPARAM_SEED must be a non-negative integer\n";
            return kInputError;
        }
    }

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", cfg.seed, "Seed for random verification samples");
        sub->add_option("--report", cfg.report, "Write a JSON report to this path");
        sub->add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--samples", cfg.samples, "Random parameter vectors per check")->check(CLI::Range(2, 1000000));
    };

    CLI::App* optimize = app.add_subcommand("optimize", "Optimise circuits and write <stem>.opt.qc and <stem>.opt.map.json");
    optimize->add_option("inputs", cfg.inputs, "Circuit files")->required();
    optimize->add_option("--out-dir", cfg.out_dir, "Directory for outputs (default: next to each input)");
    common(optimize);

    CLI::App* verify = app.add_subcommand("verify", "Check an optimised circuit against the original");
    verify->add_option("files", cfg.inputs, "<original> <optimised> <map>")->required()->expected(3);
    common(verify);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force minimal parameter count");
    oracle->add_option("input", cfg.inputs, "Circuit file")->required()->expected(1);
    oracle->add_option("--oracle-max-params", cfg.oracle_max_params, "Largest parameter count to enumerate");
    common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (optimize->parsed()) {
            return cmd_optimize(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_oracle(cfg, out);
    } catch (const Failure& f) {
        err << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace zxparam::cli
