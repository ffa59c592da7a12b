#include "lefdec/report.hpp"

#include <chrono>

#include "lefdec/diagrams.hpp"
#include "lefdec/errors.hpp"

namespace lefdec {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

json envelope(const Config& config, const std::string& command) {
  json e;
  e["command"] = command;
  e["config_echo"] = config.echo;
  e["dims"] = json::object();
  e["verdicts"] = json::object();
  e["components"] = json::array();
  e["witnesses"] = json::array();
  e["timings_ms"] = json::object();
  e["seed"] = config.seed;
  e["warnings"] = json::array();
  if (config.data.field()->irreducibility_trusted())
    e["warnings"].push_back("min_poly_irreducibility_trusted");
  return e;
}

}  // namespace

json scalar_json(const Scalar& s) {
  if (s.is_null_zero()) return "0";
  if (s.field()->degree() == 1) return to_string(s.rational_part());
  json coords = json::array();
  for (const Rational& c : s.coords()) coords.push_back(to_string(c));
  return coords;
}

json mat_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.get(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json word_json(const Word& w) {
  json atoms = json::array();
  for (const GeneratorAtom& a : w) {
    switch (a.kind) {
      case GeneratorAtom::Kind::Perm: {
        json cycles = json::array();
        for (const auto& cyc : a.perm.cycles()) {
          json c = json::array();
          for (int s : cyc) c.push_back(s + 1);  // 1-based slots
          cycles.push_back(c);
        }
        atoms.push_back(json::array({"perm", cycles}));
        break;
      }
      case GeneratorAtom::Kind::Endo:
        atoms.push_back(json::array({"endo", a.endo_index}));
        break;
      case GeneratorAtom::Kind::Proj:
        atoms.push_back(json::array({"proj"}));
        break;
    }
  }
  return atoms;
}

json witness_json(const WitnessCombo& w) {
  json terms = json::array();
  for (const auto& [word, coef] : w)
    terms.push_back(json::array({scalar_json(coef), word_json(word)}));
  return terms;
}

PairingLaws run_pairing_laws(const PolarizedData& data) {
  PairingLaws laws;
  Mat pi = pairing_pi(data.phi());
  Mat iota = copairing_iota(data.phi());
  Mat composed = pi * iota;  // 1x1
  laws.pairing_value = composed.get(0, 0).to_string();
  laws.pairing_identity =
      composed.get(0, 0) == data.field()->from_int(data.m());
  Mat p = projector_P(data.phi());
  laws.projector_idempotent = (p * p == p);
  laws.projector_rank_one = (rank_of(p) == 1);
  return laws;
}

CommandResult run_verify(const Config& config, int n, bool with_timings) {
  auto start = Clock::now();
  json rep = envelope(config, "verify");
  ThmCleReport t = verify_thm_cle(config.data, n, config.budgets);
  rep["dims"] = {{"closure", t.dim_closure},
                 {"centralizer", t.dim_centralizer},
                 {"diagram", t.dim_diagram},
                 {"n", n}};
  rep["verdicts"] = {{"closure_eq_centralizer", t.closure_eq_centralizer},
                     {"centralizer_eq_diagram", t.centralizer_eq_diagram},
                     {"diagram_eq_closure", t.diagram_eq_closure},
                     {"pass", t.pass()}};
  if (t.missing_components_suspected)
    rep["warnings"].push_back("missing_components_suspected");
  if (with_timings) rep["timings_ms"]["total"] = ms_since(start);
  return CommandResult{std::move(rep), t.pass() ? 0 : 1};
}

CommandResult run_verify_bir(const Config& config, int i, int r,
                             bool with_timings) {
  auto start = Clock::now();
  json rep = envelope(config, "verify-bir");
  CorPrincReport t = verify_cor_princ(config.data, i, r, config.budgets);
  rep["dims"] = {{"bir", t.dim_bir},
                 {"compressed_centralizer", t.dim_compressed_centralizer},
                 {"i", i},
                 {"r", r}};
  rep["verdicts"] = {{"spans_equal", t.spans_equal}, {"pass", t.pass()}};
  if (with_timings) rep["timings_ms"]["total"] = ms_since(start);
  return CommandResult{std::move(rep), t.pass() ? 0 : 1};
}

CommandResult run_decompose(const Config& config, int i, int r, bool fine,
                            bool with_timings) {
  auto start = Clock::now();
  json rep = envelope(config, "decompose");
  DecompositionReport d =
      decompose(config.data, i, r, config.seed, config.budgets, fine);
  rep["dims"] = {{"wedge", d.wedge_dim},
                 {"components", static_cast<int>(d.components.size())},
                 {"bir", d.cor_princ.dim_bir},
                 {"i", i},
                 {"r", r}};
  const auto& c = d.certificates;
  rep["verdicts"] = {{"spans_equal", d.cor_princ.spans_equal},
                     {"idempotent", c.idempotent},
                     {"orthogonal", c.orthogonal},
                     {"complete", c.complete},
                     {"equivariant", c.equivariant},
                     {"witnesses_exact", c.witnesses_exact},
                     {"rank_sum_matches", c.rank_sum_matches},
                     {"pass", c.all() && d.cor_princ.pass()}};
  for (const DecompositionComponent& comp : d.components) {
    json cj;
    cj["rank"] = comp.rank;
    cj["idempotent"] = mat_json(comp.idempotent);
    cj["twist"] = comp.twist ? json(*comp.twist) : json(nullptr);
    rep["components"].push_back(cj);
    rep["witnesses"].push_back(witness_json(comp.witness));
  }
  if (fine) {
    json fines = json::array();
    for (const auto& pieces : d.fine_components) {
      json list = json::array();
      for (const Mat& piece : pieces) list.push_back(mat_json(piece));
      fines.push_back(list);
    }
    rep["fine_components"] = fines;
  }
  if (with_timings) rep["timings_ms"]["total"] = ms_since(start);
  bool pass = d.certificates.all() && d.cor_princ.pass();
  return CommandResult{std::move(rep), pass ? 0 : 1};
}

CommandResult run_oracle_diagram(const Config& config, int n,
                                 bool with_timings) {
  auto start = Clock::now();
  json rep = envelope(config, "oracle-diagram");
  OperatorSpan diagrams =
      diagram_span(config.data, n, config.budgets.max_operator_dim);
  OperatorSpan cent =
      centralizer_basis(config.data, n, config.budgets.max_operator_dim);
  const std::int64_t matchings =
      static_cast<std::int64_t>(enumerate_matchings(n).size());
  std::int64_t decorated = matchings;
  for (int k = 0; k < n; ++k)
    decorated *= static_cast<std::int64_t>(config.data.e_basis().size());
  bool agree = diagrams.equals(cent);
  rep["dims"] = {{"diagram", diagrams.dim()},
                 {"centralizer", cent.dim()},
                 {"matchings", matchings},
                 {"decorated_operators", decorated},
                 {"n", n}};
  rep["verdicts"] = {{"diagram_eq_centralizer", agree}, {"pass", agree}};
  if (!agree && cent.contains_span(diagrams))
    rep["warnings"].push_back("missing_components_suspected");
  if (with_timings) rep["timings_ms"]["total"] = ms_since(start);
  return CommandResult{std::move(rep), agree ? 0 : 1};
}

CommandResult run_report_suite(const Config& config, bool with_timings) {
  auto start = Clock::now();
  json rep = envelope(config, "report");
  bool all_pass = true;

  PairingLaws laws = run_pairing_laws(config.data);
  rep["verdicts"]["pairing_identity"] = laws.pairing_identity;
  rep["verdicts"]["projector_idempotent"] = laws.projector_idempotent;
  rep["verdicts"]["projector_rank_one"] = laws.projector_rank_one;
  rep["dims"]["pairing_value"] = laws.pairing_value;
  all_pass &= laws.pass();

  for (int n = 1; n <= 2; ++n) {
    ThmCleReport t = verify_thm_cle(config.data, n, config.budgets);
    std::string key = "tensor_n" + std::to_string(n);
    rep["dims"][key] = {{"closure", t.dim_closure},
                        {"centralizer", t.dim_centralizer},
                        {"diagram", t.dim_diagram}};
    rep["verdicts"][key] = t.pass();
    if (t.missing_components_suspected)
      rep["warnings"].push_back("missing_components_suspected:" + key);
    all_pass &= t.pass();
  }

  for (auto [i, r] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    CorPrincReport t = verify_cor_princ(config.data, i, r, config.budgets);
    std::string key =
        "wedge_i" + std::to_string(i) + "_r" + std::to_string(r);
    rep["dims"][key] = {{"bir", t.dim_bir},
                        {"compressed_centralizer",
                         t.dim_compressed_centralizer}};
    rep["verdicts"][key] = t.pass();
    all_pass &= t.pass();
  }

  try {
    DecompositionReport d =
        decompose(config.data, 2, 2, config.seed, config.budgets);
    json ranks = json::array();
    for (const auto& comp : d.components) ranks.push_back(comp.rank);
    rep["dims"]["decompose_i2_r2_ranks"] = ranks;
    rep["verdicts"]["decompose_i2_r2"] =
        d.certificates.all() && d.cor_princ.pass();
    all_pass &= d.certificates.all() && d.cor_princ.pass();
  } catch (const SplittingFieldRequired& e) {
    // decomposition needs a larger field; reported, not failed
    rep["warnings"].push_back(std::string("splitting_field_required: ") +
                              e.must_split());
  }

  if (with_timings) rep["timings_ms"]["total"] = ms_since(start);
  rep["verdicts"]["pass"] = all_pass;
  return CommandResult{std::move(rep), all_pass ? 0 : 1};
}

std::string render_report(const nlohmann::json& report, bool pretty) {
  return (pretty ? report.dump(2) : report.dump()) + "\n";
}

}  // namespace lefdec
