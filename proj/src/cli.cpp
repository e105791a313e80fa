// Copyright 2026 The Eigenlogic Authors
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

#include "eigenlogic/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "eigenlogic/core_algebra.hpp"
#include "eigenlogic/errors.hpp"
#include "eigenlogic/formula_dsl.hpp"
#include "eigenlogic/fuzzy_measure.hpp"
#include "eigenlogic/logic_synthesis.hpp"
#include "eigenlogic/serialization.hpp"
#include "eigenlogic/verify.hpp"

namespace eigenlogic {

namespace {

constexpr const char *kFormulaHelp = R"(Formula language (loosest binding first):
  IMPL, CIMPL        right-associative
  OR, NOR            left-associative
  XOR, EQUIV         left-associative
  AND, NAND          left-associative
  NOT                prefix, binds tightest
  MIN(x, y), MAX(x, y), (x), and single uppercase variables A..Z
An optional header "vars C,A;" fixes argument order; otherwise variables
bind to arguments in alphabetical order.)";

// Raised for option combinations CLI11 cannot express; exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgumentError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string &text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        throw InvalidArgumentError("invalid " + std::string(what) + " JSON: " + e.what());
    }
}

std::size_t dim_cap_from_env() {
    const char *raw = std::getenv("EIGENLOGIC_DIM_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultDimCap;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (*end != '\0' || v == 0 || raw[0] == '-') {
        throw UsageError(std::string("EIGENLOGIC_DIM_CAP must be a positive integer, got '") + raw + "'");
    }
    return static_cast<std::size_t>(v);
}

std::string diag_text(const DiagObservable &f) {
    std::string s = "diag(";
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (i) s += ",";
        s += format_real(f[i]);
    }
    return s + ")";
}

std::string class_text(const ObservableClass &c) {
    std::string s;
    auto add = [&](bool flag, const char *word) {
        if (!flag) return;
        if (!s.empty()) s += ", ";
        s += word;
    };
    add(c.is_projector, "projector");
    add(c.is_isometry, "isometry");
    add(c.is_identity, "identity");
    add(c.is_zero, "zero");
    return s.empty() ? "general" : s;
}

void print_observable(std::ostream &out, const DiagObservable &f, bool json, double tol) {
    if (json) {
        out << to_json(f).dump() << "\n";
        return;
    }
    out << "arities: ";
    for (std::size_t k = 0; k < f.num_args(); ++k) out << (k ? "," : "") << f.arities()[k];
    out << "\n" << diag_text(f) << "\nclass: " << class_text(classify(f, tol)) << "\n";
}

std::size_t infer_arity(std::size_t outputs, std::size_t m) {
    std::size_t n = 0;
    std::size_t rows = 1;
    while (rows < outputs) {
        rows *= m;
        ++n;
    }
    if (rows != outputs) {
        throw InvalidArgumentError(std::to_string(outputs) + " outputs is not a power of the alphabet size " +
                                   std::to_string(m));
    }
    return n;
}

Json report_json(const SuiteReport &r) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"total", c.total}, {"detail", c.detail}});
    }
    return Json{{"suite", r.suite}, {"seed", r.seed}, {"ok", r.ok()}, {"checks", checks}};
}

void print_report(std::ostream &out, const SuiteReport &r) {
    out << "suite " << r.suite << " (seed " << r.seed << ")\n";
    for (const auto &c : r.checks) {
        out << "  " << (c.ok() ? "PASS" : "FAIL") << "  " << c.name << "  " << c.passed << "/" << c.total << "\n";
        if (!c.ok()) out << "        first failure: " << c.detail << "\n";
    }
    out << r.suite << ": " << (r.ok() ? "PASS" : "FAIL") << " " << r.passed() << "/" << r.total() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Eigenlogic observables: synthesis, truth tables and fuzzy evaluation", "eigenlogic"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    auto *synth = app.add_subcommand("synth", "Synthesize an observable from a truth table");
    std::string alphabet_text;
    std::string outputs_text;
    std::string table_file;
    std::optional<std::size_t> arity;
    double tol = kDefaultTol;
    auto *synth_alphabet = synth->add_option("--alphabet", alphabet_text, "Comma-separated truth values");
    auto *synth_outputs = synth->add_option("--outputs", outputs_text, "Comma-separated outputs in index order");
    auto *synth_file = synth->add_option("--table-file", table_file, "Truth table file");
    synth->add_option("--arity", arity, "Number of arguments (inferred by default)");
    synth->add_option("--tol", tol, "Classification tolerance")->capture_default_str();
    synth_outputs->needs(synth_alphabet);
    synth_file->excludes(synth_outputs)->excludes(synth_alphabet);

    auto *table = app.add_subcommand("table", "Read the truth table of an observable");
    std::string observable_text;
    std::string observable_file;
    auto *table_obs = table->add_option("--observable", observable_text, "Observable JSON");
    auto *table_obs_file = table->add_option("--observable-file", observable_file, "File holding observable JSON");
    table_obs->excludes(table_obs_file);
    table->add_option("--alphabet", alphabet_text, "Comma-separated truth values")->required();
    table->add_option("--tol", tol, "Membership tolerance")->capture_default_str();

    auto *comp = app.add_subcommand("compile", "Compile a formula to an observable");
    comp->footer(kFormulaHelp);
    std::string formula_text;
    std::string compile_alphabet = "0,1";
    comp->add_option("--formula", formula_text, "Formula text")->required();
    comp->add_option("--alphabet", compile_alphabet, "Comma-separated truth values")->capture_default_str();
    comp->add_option("--arity", arity, "Number of arguments (default: number of variables)");

    auto *fuzzy = app.add_subcommand("fuzzy", "Fuzzy membership of a connective or formula on a state");
    fuzzy->footer(kFormulaHelp);
    std::string connective;
    std::optional<double> p;
    std::optional<double> q;
    double phase_p = 0.0;
    double phase_q = 0.0;
    std::string state_text;
    std::string state_file;
    auto *fuzzy_formula = fuzzy->add_option("--formula", formula_text, "Formula over {0,1}");
    auto *fuzzy_conn = fuzzy->add_option("--connective", connective, "Binary connective name, e.g. OR");
    fuzzy_formula->excludes(fuzzy_conn);
    auto *opt_p = fuzzy->add_option("--p", p, "Probability that the first argument is true");
    auto *opt_q = fuzzy->add_option("--q", q, "Probability that the second argument is true");
    auto *opt_pp = fuzzy->add_option("--phase-p", phase_p, "Relative phase of the first qubit");
    auto *opt_pq = fuzzy->add_option("--phase-q", phase_q, "Relative phase of the second qubit");
    auto *opt_state = fuzzy->add_option("--state", state_text, "State JSON {arities, re, im}");
    auto *opt_state_file = fuzzy->add_option("--state-file", state_file, "File holding state JSON");
    opt_p->needs(opt_q);
    opt_q->needs(opt_p);
    opt_pp->needs(opt_p);
    opt_pq->needs(opt_q);
    opt_state->excludes(opt_p)->excludes(opt_q)->excludes(opt_state_file);
    opt_state_file->excludes(opt_p)->excludes(opt_q);

    auto *catalog = app.add_subcommand("catalog", "List the sixteen binary connectives");
    std::string convention_text = "projective";
    catalog->add_option("--convention", convention_text, "projective or isometric")
        ->check(CLI::IsMember({"projective", "isometric"}))
        ->capture_default_str();

    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::uint64_t seed = kDefaultVerifySeed;
    std::vector<std::string> suites(suite_names().begin(), suite_names().end());
    suites.emplace_back("all");
    verify->add_option("suite", suite, "table1, minmax, fuzzy, bound, oracle or all")
        ->required()
        ->check(CLI::IsMember(suites));
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const std::size_t dim_cap = dim_cap_from_env();

        if (synth->parsed()) {
            std::optional<TruthTable> t;
            if (!table_file.empty()) {
                t = parse_truth_table(read_file(table_file));
            } else if (!outputs_text.empty()) {
                ValueAlphabet alphabet(parse_real_list(alphabet_text));
                auto outputs = parse_real_list(outputs_text);
                const std::size_t n = arity ? *arity : infer_arity(outputs.size(), alphabet.size());
                t = TruthTable(std::move(alphabet), n, std::move(outputs));
            } else {
                throw UsageError("synth needs --outputs or --table-file");
            }
            print_observable(out, synthesize(*t, dim_cap), json, tol);
        } else if (table->parsed()) {
            std::string text = observable_file.empty() ? observable_text : read_file(observable_file);
            if (text.empty()) throw UsageError("table needs --observable or --observable-file");
            const auto f = diag_observable_from_json(parse_json(text, "observable"));
            const auto t = read_table(f, ValueAlphabet(parse_real_list(alphabet_text)), tol);
            if (json) {
                out << to_json(t).dump() << "\n";
            } else {
                out << format_truth_table(t);
            }
        } else if (comp->parsed()) {
            const Formula formula = parse(formula_text);
            const std::size_t n = arity ? *arity : formula.variables.size();
            const auto compiled = compile(formula, ValueAlphabet(parse_real_list(compile_alphabet)), n, dim_cap);
            print_observable(out, compiled.observable, json, kDefaultTol);
        } else if (fuzzy->parsed()) {
            std::optional<StateVector> state;
            if (p) {
                const std::array parts = {qubit_state(QubitAngles::from_probability(*p, phase_p)),
                                          qubit_state(QubitAngles::from_probability(*q, phase_q))};
                state = product_state(parts, dim_cap);
            } else if (!state_text.empty() || !state_file.empty()) {
                const std::string text = state_file.empty() ? state_text : read_file(state_file);
                state = state_vector_from_json(parse_json(text, "state"));
            } else {
                throw UsageError("fuzzy needs --p/--q, --state or --state-file");
            }

            double mean = 0.0;
            if (!connective.empty()) {
                mean = membership(*state, connective);
            } else if (!formula_text.empty()) {
                const auto compiled =
                    compile(parse(formula_text), ValueAlphabet::projective(), state->arities().size(), dim_cap);
                mean = born_mean(*state, compiled.observable);
            } else {
                throw UsageError("fuzzy needs --formula or --connective");
            }
            if (json) {
                out << Json{{"mean", mean}}.dump() << "\n";
            } else {
                out << format_real(mean) << "\n";
            }
        } else if (catalog->parsed()) {
            const auto c = table1_catalog(parse_convention(convention_text));
            if (json) {
                Json entries = Json::array();
                for (const auto &e : c.entries()) entries.push_back({{"name", e.name}, {"observable", to_json(e.observable)}});
                out << Json{{"convention", convention_text}, {"connectives", entries}}.dump() << "\n";
            } else {
                for (const auto &e : c.entries()) out << e.name << " " << diag_text(e.observable) << "\n";
            }
        } else if (verify->parsed()) {
            bool ok = true;
            Json suites = Json::array();
            for (std::string_view name : suite_names()) {
                if (suite != "all" && suite != name) continue;
                const auto report = run_suite(name, seed);
                if (json) {
                    suites.push_back(report_json(report));
                } else {
                    print_report(out, report);
                }
                ok = ok && report.ok();
            }
            if (json) out << Json{{"ok", ok}, {"suites", suites}}.dump() << "\n";
            return ok ? 0 : 1;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace eigenlogic
