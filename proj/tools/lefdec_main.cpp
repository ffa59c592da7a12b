#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>

#include "lefdec/errors.hpp"
#include "lefdec/parallel.hpp"
#include "lefdec/report.hpp"

namespace {

using lefdec::Config;

struct CommonOpts {
  std::string preset = "siegel";
  std::string config_path;
  int g = 1;
  long d = 1;
  std::string min_poly;  // comma-separated c0,c1,..,cd
  std::optional<unsigned long long> seed;
  std::optional<std::int64_t> max_operator_dim;
  bool allow_large = false;
  int threads = 0;
  bool pretty = false;
  bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset,
                  "built-in datum: siegel | cm | product")
      ->check(CLI::IsMember({"siegel", "cm", "product"}));
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--g", o.g, "genus for the siegel preset")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--d", o.d, "squarefree positive d for the cm preset")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--minpoly", o.min_poly,
                  "coefficient field as comma-separated monic min-poly "
                  "coefficients c0,c1,..,cd (e.g. 1,0,1 for Q[x]/(x^2+1))");
  cmd->add_option("--seed", o.seed, "seed for idempotent extraction");
  cmd->add_option("--max-operator-dim", o.max_operator_dim,
                  "operator-space size budget");
  cmd->add_flag("--allow-large", o.allow_large,
                "raise the size budget for slow sweeps");
  cmd->add_option("--threads", o.threads,
                  "worker threads (default: all cores, or LEFDEC_THREADS)");
  cmd->add_flag("--pretty", o.pretty, "indent the JSON report");
  cmd->add_flag("--timings", o.timings,
                "include wall-clock timings (breaks byte-stability)");
}

Config build_config(const CommonOpts& o) {
  if (o.threads > 0) lefdec::set_thread_count(o.threads);
  Config cfg = [&] {
    if (!o.config_path.empty()) return lefdec::config_from_file(o.config_path);
    lefdec::PresetParams params;
    params.g = o.g;
    params.d = o.d;
    if (!o.min_poly.empty()) {
      std::vector<lefdec::Rational> coeffs;
      std::stringstream ss(o.min_poly);
      std::string tok;
      while (std::getline(ss, tok, ','))
        coeffs.push_back(lefdec::rational_from_string(tok));
      params.min_poly = std::move(coeffs);
    }
    return lefdec::preset(o.preset, params);
  }();
  if (o.seed) {
    cfg.seed = *o.seed;
    cfg.echo["seed"] = *o.seed;
  }
  if (o.max_operator_dim) cfg.budgets.max_operator_dim = *o.max_operator_dim;
  if (o.allow_large)
    cfg.budgets.max_operator_dim =
        std::max<std::int64_t>(cfg.budgets.max_operator_dim, 10'000'000);
  if (o.max_operator_dim || o.allow_large)
    cfg.echo["budgets"]["max_operator_dim"] = cfg.budgets.max_operator_dim;
  return cfg;
}

int emit(const lefdec::CommandResult& result, bool pretty) {
  std::cout << lefdec::render_report(result.report, pretty);
  return result.exit_code;
}

int emit_error(const std::string& command, const std::string& type,
               const std::string& message, bool pretty, int code) {
  nlohmann::json j;
  j["command"] = command;
  j["error"] = {{"type", type}, {"message", message}};
  std::cout << lefdec::render_report(j, pretty);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact isotypic decompositions and correspondence algebras for "
      "polarized abelian data"};
  app.require_subcommand(1);

  CommonOpts o;
  int n = 1, wi = 1, wr = 1;
  bool fine = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "three-way span agreement on a tensor power");
  verify->add_option("--n", n, "tensor power")->required()->check(
      CLI::PositiveNumber);
  add_common(verify, o);

  CLI::App* verify_bir = app.add_subcommand(
      "verify-bir", "compressed span agreement on a wedge power");
  verify_bir->add_option("--i", wi, "wedge power")->required()->check(
      CLI::PositiveNumber);
  verify_bir->add_option("--r", wr, "product multiplicity")
      ->required()
      ->check(CLI::PositiveNumber);
  add_common(verify_bir, o);

  CLI::App* decomp = app.add_subcommand(
      "decompose", "canonical isotypic decomposition of a wedge power");
  decomp->add_option("--i", wi, "wedge power")->required()->check(
      CLI::PositiveNumber);
  decomp->add_option("--r", wr, "product multiplicity")
      ->required()
      ->check(CLI::PositiveNumber);
  decomp->add_flag("--fine", fine,
                   "also emit a (non-canonical) splitting into irreducible "
                   "copies");
  add_common(decomp, o);

  CLI::App* oracle = app.add_subcommand(
      "oracle-diagram", "decorated-matching span vs centralizer");
  oracle->add_option("--n", n, "tensor power")->required()->check(
      CLI::PositiveNumber);
  add_common(oracle, o);

  CLI::App* report = app.add_subcommand("report", "run the default suite");
  add_common(report, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    Config cfg = build_config(o);
    if (verify->parsed()) return emit(run_verify(cfg, n, o.timings), o.pretty);
    if (verify_bir->parsed())
      return emit(run_verify_bir(cfg, wi, wr, o.timings), o.pretty);
    if (decomp->parsed())
      return emit(run_decompose(cfg, wi, wr, fine, o.timings), o.pretty);
    if (oracle->parsed())
      return emit(run_oracle_diagram(cfg, n, o.timings), o.pretty);
    if (report->parsed())
      return emit(run_report_suite(cfg, o.timings), o.pretty);
    return 2;
  } catch (const lefdec::SplittingFieldRequired& e) {
    return emit_error(command, "splitting_field_required", e.what(), o.pretty,
                      3);
  } catch (const lefdec::SizeBudgetExceeded& e) {
    return emit_error(command, "size_budget_exceeded", e.what(), o.pretty, 3);
  } catch (const lefdec::CenterNotSeparated& e) {
    return emit_error(command, "center_not_separated", e.what(), o.pretty, 3);
  } catch (const lefdec::ValidationError& e) {
    return emit_error(command, "validation:" + e.invariant(), e.what(),
                      o.pretty, 2);
  } catch (const lefdec::InvalidParams& e) {
    return emit_error(command, "invalid_params", e.what(), o.pretty, 2);
  } catch (const lefdec::Error& e) {
    return emit_error(command, "error", e.what(), o.pretty, 2);
  } catch (const std::exception& e) {
    return emit_error(command, "internal", e.what(), o.pretty, 4);
  }
}
