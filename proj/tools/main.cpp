#include <CLI11.hpp>

#include "tracediv/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"tracediv: exact p-adic valuations of trace codes, with abelian-code "
               "and Artin-Schreier point-count applications"};
  app.require_subcommand(1);

  tracediv::RunConfig config;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "seed for randomized components");
    cmd->add_option("--workers", config.workers, "worker threads (default: TRACEDIV_WORKERS or 1)");
    cmd->add_option("--enum-limit", config.enumeration_limit, "codeword enumeration ceiling");
    cmd->add_option("--tuple-limit", config.tuple_limit, "exponent tuple ceiling");
    cmd->add_option("--table-limit", config.table_limit, "field table ceiling");
    cmd->add_option("--format", config.format, "output format: human, json, or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    cmd->add_option("--out", config.out_path, "write the report to a file");
  };

  CLI::App* valuation = app.add_subcommand("valuation", "trace-code valuation from a matrix config");
  valuation->add_option("--matrix", config.input_path, "matrix config file")->required();
  valuation->add_flag("--oracle", config.oracle, "run the brute-force oracle and compare");
  valuation->add_flag("--weights", config.weights, "include the weight distribution");
  add_common(valuation);

  CLI::App* abelian = app.add_subcommand("abelian", "abelian/cyclic code valuation from a spec");
  abelian->add_option("--spec", config.input_path, "abelian code spec file")->required();
  abelian->add_flag("--oracle", config.oracle, "run the brute-force oracle and compare");
  abelian->add_flag("--mceliece", config.mceliece, "report the multiset statistic (cyclic, e = 1)");
  abelian->add_flag("--expand-cosets", config.expand_cosets, "add the full q-orbit of each tuple");
  add_common(abelian);

  CLI::App* artin = app.add_subcommand("artin-schreier", "point-count bounds for f = y^q - y");
  artin->add_option("--poly", config.input_path, "polynomial (or field) config file")->required();
  artin->add_flag("--bounds", config.bounds, "evaluate the lower-bound family");
  artin->add_flag("--count", config.count, "count solutions exactly");
  std::vector<uint64_t> extremal;
  artin->add_option("--search-extremal", extremal, "search homogeneous witnesses: d k")
      ->expected(2);
  artin->add_option("--budget", config.search_budget, "candidate budget for the search");
  add_common(artin);

  CLI::App* verify = app.add_subcommand("verify", "self-verification suites");
  bool s_stick = false, s_fourier = false, s_transforms = false, s_oracle = false, s_abelian = false,
       s_bounds = false;
  verify->add_flag("--stickelberger", s_stick, "Gauss-sum valuations");
  verify->add_flag("--fourier", s_fourier, "additive-character expansion");
  verify->add_flag("--lemma23", s_transforms, "valuation-preserving transforms");
  verify->add_flag("--oracle-equivalence", s_oracle, "criterion vs brute force");
  verify->add_flag("--abelian-threeway", s_abelian, "cyclic three-way agreement");
  verify->add_flag("--bounds-chain", s_bounds, "counting-bound soundness");
  int q_filter = 0;
  verify->add_option("--q", q_filter, "restrict stickelberger/fourier to one q");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  if (valuation->parsed()) config.command = tracediv::RunConfig::Command::Valuation;
  if (abelian->parsed()) config.command = tracediv::RunConfig::Command::Abelian;
  if (artin->parsed()) {
    config.command = tracediv::RunConfig::Command::ArtinSchreier;
    if (!extremal.empty())
      config.search_extremal = {extremal[0], static_cast<int>(extremal[1])};
  }
  if (verify->parsed()) {
    config.command = tracediv::RunConfig::Command::Verify;
    if (s_stick) config.suites.push_back("stickelberger");
    if (s_fourier) config.suites.push_back("fourier");
    if (s_transforms) config.suites.push_back("lemma23");
    if (s_oracle) config.suites.push_back("oracle-equivalence");
    if (s_abelian) config.suites.push_back("abelian-threeway");
    if (s_bounds) config.suites.push_back("bounds-chain");
    if (config.suites.empty()) {
      std::cerr << "error: pick at least one verify suite\n";
      return 2;
    }
    if (q_filter > 0) config.q_filter = q_filter;
  }

  return tracediv::run(config);
}
