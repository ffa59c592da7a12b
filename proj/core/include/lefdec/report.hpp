#ifndef LEFDEC_REPORT_HPP
#define LEFDEC_REPORT_HPP

#include <json.hpp>
#include <string>

#include "lefdec/config.hpp"
#include "lefdec/isotypic.hpp"

namespace lefdec {

nlohmann::json scalar_json(const Scalar& s);
nlohmann::json mat_json(const Mat& m);
nlohmann::json word_json(const Word& w);
nlohmann::json witness_json(const WitnessCombo& w);

/// The pairing-law checks on a datum: pi o iota = 2g, P idempotent of
/// rank 1.
struct PairingLaws {
  std::string pairing_value;
  bool pairing_identity = false;
  bool projector_idempotent = false;
  bool projector_rank_one = false;
  bool pass() const {
    return pairing_identity && projector_idempotent && projector_rank_one;
  }
};
PairingLaws run_pairing_laws(const PolarizedData& data);

/// A finished command: the canonical JSON envelope plus the process exit
/// code. Envelope keys are fixed: command, components, config_echo, dims,
/// seed, timings_ms, verdicts, warnings, witnesses — emitted sorted, with
/// rationals as strings, so identical inputs yield identical bytes.
/// timings_ms stays empty unless requested, keeping default output stable.
struct CommandResult {
  nlohmann::json report;
  int exit_code = 0;
};

CommandResult run_verify(const Config& config, int n, bool with_timings = false);
CommandResult run_verify_bir(const Config& config, int i, int r,
                             bool with_timings = false);
CommandResult run_decompose(const Config& config, int i, int r,
                            bool fine = false, bool with_timings = false);
CommandResult run_oracle_diagram(const Config& config, int n,
                                 bool with_timings = false);
/// The default suite: pairing laws, tensor-square/cube span agreement,
/// the wedge-level grid, and the canonical decomposition at (2, 2).
CommandResult run_report_suite(const Config& config, bool with_timings = false);

std::string render_report(const nlohmann::json& report, bool pretty);

}  // namespace lefdec

#endif
