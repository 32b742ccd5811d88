#include "tracediv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tracediv/config.hpp"
#include "tracediv/parallel.hpp"
#include "tracediv/report.hpp"
#include "tracediv/suites.hpp"

namespace tracediv {
namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kCsvVersion = "# tracediv csv v1";

nlohmann::json base_report(const RunConfig& config, const char* command) {
  nlohmann::json j;
  j["tool"] = "tracediv";
  j["version"] = tool_version();
  j["command"] = command;
  j["seed"] = config.seed;
  j["workers"] = resolve_workers(config.workers);
  return j;
}

void validate_limits(const RunConfig& config) {
  if (config.enumeration_limit == 0 || config.tuple_limit == 0 || config.table_limit == 0)
    fail(ErrorCode::ConfigError, "limits must be positive");
}

void emit(const RunConfig& config, const nlohmann::json& report, const std::string& human,
          const std::string& csv) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!config.out_path.empty()) {
    file.open(config.out_path);
    if (!file) fail(ErrorCode::ConfigError, "cannot write " + config.out_path);
    out = &file;
  }
  if (config.format == "json") {
    *out << report.dump(2) << "\n";
  } else if (config.format == "csv") {
    *out << csv;
  } else {
    *out << human;
  }
}

std::string render_suite(const SuiteReport& report) {
  std::string s = "suite " + report.name + ": " + (report.pass ? "PASS" : "FAIL") + "\n";
  for (const SuiteLine& line : report.lines) {
    s += std::string("  [") + (line.pass ? "PASS" : "FAIL") + "] " + line.label;
    if (!line.detail.empty()) s += " (" + line.detail + ")";
    s += "\n";
  }
  return s;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json echo_matrix(const LoadedMatrix& loaded) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < loaded.matrix.k; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < loaded.matrix.n; ++j)
      row.push_back(element_str(*loaded.tower, loaded.matrix.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

int run_valuation(const RunConfig& config) {
  const auto start = Clock::now();
  const ConfigDoc doc = parse_config_file(config.input_path);
  const LoadedMatrix loaded = matrix_from_config(doc, config.table_limit);

  CriterionOptions opt;
  opt.tuple_limit = config.tuple_limit;
  opt.workers = resolve_workers(config.workers);
  const CriterionResult crit = criterion_valuation(loaded.matrix, opt);

  nlohmann::json report = base_report(config, "valuation");
  report["field"] = to_json(*loaded.tower);
  report["inputs"] = {{"path", config.input_path},
                      {"k", loaded.matrix.k},
                      {"n", loaded.matrix.n},
                      {"matrix", echo_matrix(loaded)}};
  report["notes"] = {"minimization enforces |r| > 0",
                     "inner valuations at the cap are treated as +infinity"};
  report["result"] = to_json(crit);

  std::string human = "valuation: " + crit.valuation.str() + "\n";
  std::ostringstream csv;
  bool pass = true;
  std::string oracle_str = "";
  std::string match_str = "";
  if (config.oracle) {
    const BruteforceResult oracle = bruteforce_valuation(loaded.matrix, config.enumeration_limit,
                                                         resolve_workers(config.workers));
    pass = crit.valuation == oracle.valuation;
    report["crosscheck"] = {{"oracle", to_json(oracle)}, {"match", pass}};
    human += "oracle:    " + oracle.valuation.str() + "\n";
    human += std::string("crosscheck: ") + (pass ? "PASS" : "FAIL") + "\n";
    oracle_str = oracle.valuation.str();
    match_str = pass ? "1" : "0";
  }
  csv << kCsvVersion << " valuation\n"
      << "valuation,degenerate,argmin,digit_term,inner_valuation,minus_e,tuples_examined,"
         "tuples_pruned,oracle,match\n";
  std::string argmin;
  for (uint32_t r : crit.argmin.entries) argmin += (argmin.empty() ? "" : " ") + std::to_string(r);
  csv << crit.valuation.str() << "," << (crit.degenerate ? 1 : 0) << "," << csv_quote(argmin) << ","
      << crit.digit_term.str() << "," << crit.inner_valuation.str() << "," << crit.minus_e << ","
      << crit.tuples_examined << "," << crit.tuples_pruned << "," << oracle_str << "," << match_str
      << "\n";

  if (config.weights) {
    const WeightDistribution dist = weight_distribution(loaded.matrix, config.enumeration_limit);
    report["weights"] = to_json(dist);
    human += "weights (distinct codewords, multiplicity " + std::to_string(dist.multiplicity) +
             "):\n";
    csv << kCsvVersion << " weights\nweight,codewords,multiplicity\n";
    for (const auto& [w, c] : dist.counts) {
      human += "  " + std::to_string(w) + ": " + std::to_string(c) + "\n";
      csv << w << "," << c << "," << dist.multiplicity << "\n";
    }
  }
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  emit(config, report, human, csv.str());
  return pass ? 0 : 1;
}

int run_abelian(const RunConfig& config) {
  const auto start = Clock::now();
  const ConfigDoc doc = parse_config_file(config.input_path);
  const AbelianCodeSpec spec = abelian_from_config(doc);

  nlohmann::json report = base_report(config, "abelian");
  report["inputs"] = {{"path", config.input_path},
                      {"p", spec.p},
                      {"e", spec.e},
                      {"group", spec.group},
                      {"nonzeros", spec.nonzeros},
                      {"expand_cosets", config.expand_cosets}};
  report["notes"] = {"the program enforces |r| > 0 on top of the printed constraints"};

  std::string human;
  std::ostringstream csv;
  csv << kCsvVersion << " abelian\nvaluation,degenerate,oracle,match,mceliece_ell,"
         "mceliece_exponent\n";
  bool pass = true;
  if (spec.nonzeros.empty()) {
    report["result"] = {{"degenerate", true}, {"valuation", to_json(Valuation::infinite())}};
    human = "valuation: inf (the code is {0})\n";
    csv << "inf,1,,,,\n";
  } else {
    const AbelianContext ctx = build_abelian_context(spec, config.expand_cosets, config.table_limit);
    report["field"] = to_json(ctx.tower);
    std::vector<uint32_t> gammas;
    for (FieldElement g : ctx.gammas) gammas.push_back(g.is_zero() ? 0 : g.log());
    report["gamma_logs"] = gammas;
    report["m"] = ctx.m;
    if (config.expand_cosets) report["expanded_nonzeros"] = ctx.spec.nonzeros;

    const CriterionResult program = delsarte_mceliece_valuation(ctx, config.tuple_limit);
    report["result"] = to_json(program);
    human = "valuation: " + program.valuation.str() + "\n";

    std::string oracle_str, match_str, ell_str, exp_str;
    if (config.oracle) {
      const GeneratorMatrix g = build_trace_representation(ctx);
      const BruteforceResult oracle = bruteforce_valuation(g, config.enumeration_limit,
                                                           resolve_workers(config.workers));
      const bool match = program.valuation == oracle.valuation;
      pass = pass && match;
      report["crosscheck"] = {{"oracle", to_json(oracle)}, {"match", match}};
      human += "oracle:    " + oracle.valuation.str() + "\n";
      human += std::string("crosscheck: ") + (match ? "PASS" : "FAIL") + "\n";
      oracle_str = oracle.valuation.str();
      match_str = match ? "1" : "0";
    }
    if (config.mceliece) {
      const McElieceResult mc = mceliece_ell(spec);
      // The multiset statistic is a divisibility floor for the valuation.
      const bool sound = Valuation::finite(static_cast<long long>(mc.exponent)) <= program.valuation;
      pass = pass && sound;
      report["mceliece"] = to_json(mc);
      report["mceliece_sound"] = sound;
      human += "mceliece:  ell=" + std::to_string(mc.ell) + ", exponent " +
               std::to_string(mc.exponent) + (sound ? "" : " (UNSOUND)") + "\n";
      ell_str = std::to_string(mc.ell);
      exp_str = std::to_string(mc.exponent);
    }
    csv << program.valuation.str() << "," << (program.degenerate ? 1 : 0) << "," << oracle_str
        << "," << match_str << "," << ell_str << "," << exp_str << "\n";
  }
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  emit(config, report, human, csv.str());
  return pass ? 0 : 1;
}

int run_artin_schreier(const RunConfig& config) {
  const auto start = Clock::now();
  const ConfigDoc doc = parse_config_file(config.input_path);

  nlohmann::json report = base_report(config, "artin-schreier");
  report["inputs"] = {{"path", config.input_path}};
  std::string human;
  std::ostringstream csv;
  bool pass = true;

  if (config.search_extremal) {
    const std::shared_ptr<FieldTower> tower = tower_from_config(doc, config.table_limit);
    report["field"] = to_json(*tower);
    const auto [d, k] = *config.search_extremal;
    const ExtremalSearchResult r =
        search_extremal(d, k, *tower, config.search_budget, config.seed);
    report["search"] = {{"d", d},
                        {"k", k},
                        {"target", to_json(r.target)},
                        {"found", r.found},
                        {"tried", r.tried},
                        {"seed", r.seed},
                        {"measured", to_json(r.measured)}};
    if (r.found) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [t, c] : r.witness->terms())
        terms.push_back({{"coeff", element_str(*tower, c)}, {"exps", t}});
      report["search"]["witness"] = terms;
      report["search"]["solutions"] = r.solutions;
    }
    human += std::string("search: ") + (r.found ? "witness found" : "no witness (inconclusive)") +
             ", target " + r.target.str() + ", tried " + std::to_string(r.tried) + "\n";
    csv << kCsvVersion << " extremal\nd,k,target,found,measured,tried,seed\n"
        << d << "," << k << "," << r.target.str() << "," << (r.found ? 1 : 0) << ","
        << r.measured.str() << "," << r.tried << "," << r.seed << "\n";
  } else {
    const LoadedPolynomial loaded = polynomial_from_config(doc, config.table_limit);
    report["field"] = to_json(*loaded.tower);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : loaded.poly.terms())
      terms.push_back({{"coeff", element_str(*loaded.tower, c)}, {"exps", t}});
    report["inputs"]["terms"] = terms;
    report["inputs"]["k"] = loaded.poly.k();

    const BoundReport b =
        bound_report(loaded.poly, config.bounds, config.count, config.enumeration_limit);
    report["result"] = to_json(b);
    human += "degree " + std::to_string(b.d) + (b.homogeneous ? " (homogeneous)" : "") + "\n";
    if (b.measured) {
      human += "solutions: " + std::to_string(*b.solutions) + ", valuation " + b.measured->str() +
               "\n";
    }
    if (config.bounds) {
      human += "lower bounds: degree " + b.degree_lower.str() + ", knapsack-q " +
               b.knapsack_q_lower.str() + ", knapsack-p " + b.knapsack_p_lower.str();
      if (b.homogeneous_lower) human += ", homogeneous " + b.homogeneous_lower->str();
      if (b.program_bound) human += ", program " + b.program_bound->str();
      human += "\n";
      if (b.measured) {
        pass = b.sound;
        human += std::string("soundness: ") + (b.sound ? "PASS" : "FAIL") + "\n";
      }
    }
    csv << kCsvVersion << " bounds\n"
        << "d,k,homogeneous,program_bound,homogeneous_lower,cover_upper,degree_lower,knapsack_q_lower,knapsack_p_lower,wq,wp,measured,solutions,"
           "sound\n";
    csv << b.d << "," << b.k << "," << (b.homogeneous ? 1 : 0) << ","
        << (b.program_bound ? b.program_bound->str() : "") << "," << (b.homogeneous_lower ? b.homogeneous_lower->str() : "") << ","
        << (config.bounds ? b.cover_upper.str() : "") << ","
        << (config.bounds ? b.degree_lower.str() : "") << "," << (config.bounds ? b.knapsack_q_lower.str() : "")
        << "," << (config.bounds ? b.knapsack_p_lower.str() : "") << "," << b.wq << "," << b.wp << ","
        << (b.measured ? b.measured->str() : "") << ","
        << (b.solutions ? std::to_string(*b.solutions) : "") << "," << (b.sound ? 1 : 0) << "\n";
  }
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  emit(config, report, human, csv.str());
  return pass ? 0 : 1;
}

int run_verify(const RunConfig& config) {
  const auto start = Clock::now();
  nlohmann::json report = base_report(config, "verify");
  std::string human;
  std::ostringstream csv;
  csv << kCsvVersion << " verify\nsuite,label,pass,detail\n";
  bool pass = true;

  nlohmann::json suites = nlohmann::json::array();
  for (const std::string& name : config.suites) {
    SuiteReport r;
    if (name == "stickelberger") {
      r = config.q_filter ? suite_stickelberger({*config.q_filter}) : suite_stickelberger();
    } else if (name == "fourier") {
      r = config.q_filter ? suite_fourier({*config.q_filter}) : suite_fourier();
    } else if (name == "lemma23") {
      r = suite_transform_invariance(config.seed ? config.seed : 23);
    } else if (name == "oracle-equivalence") {
      r = suite_oracle_equivalence(config.seed ? config.seed : 42, 500,
                                   resolve_workers(config.workers));
    } else if (name == "abelian-threeway") {
      r = suite_abelian_threeway();
    } else if (name == "bounds-chain") {
      r = suite_bounds_chain();
    } else {
      fail(ErrorCode::ConfigError, "unknown verify suite '" + name + "'");
    }
    pass = pass && r.pass;
    human += render_suite(r);
    for (const SuiteLine& line : r.lines)
      csv << r.name << "," << csv_quote(line.label) << "," << (line.pass ? 1 : 0) << ","
          << csv_quote(line.detail) << "\n";
    suites.push_back({{"name", r.name}, {"pass", r.pass}, {"rows", r.data}});
  }
  report["suites"] = suites;
  report["pass"] = pass;
  report["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  emit(config, report, human, csv.str());
  return pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config) {
  try {
    validate_limits(config);
    switch (config.command) {
      case RunConfig::Command::Valuation:
        return run_valuation(config);
      case RunConfig::Command::Abelian:
        return run_abelian(config);
      case RunConfig::Command::ArtinSchreier:
        return run_artin_schreier(config);
      case RunConfig::Command::Verify:
        return run_verify(config);
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tracediv
