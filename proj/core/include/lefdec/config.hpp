#ifndef LEFDEC_CONFIG_HPP
#define LEFDEC_CONFIG_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "lefdec/budgets.hpp"
#include "lefdec/polarized.hpp"

namespace lefdec {

/// A fully validated run configuration: the polarized datum plus budgets and
/// the decomposition seed. `echo` is the canonical JSON form embedded in
/// every report (rationals as strings, keys sorted).
struct Config {
  PolarizedData data;
  Budgets budgets;
  unsigned long long seed = 0;
  nlohmann::json echo;
};

struct PresetParams {
  int g = 1;              // siegel
  long d = 1;             // cm: multiplication by sqrt(-d)
  /// Optional field override: min_poly coefficients c0..cd, monic.
  std::optional<std::vector<Rational>> min_poly;
  Budgets budgets;
  unsigned long long seed = 0;
};

/// Built-in data: "siegel" (trivial endomorphisms, any g), "cm" (imaginary
/// quadratic multiplication at g = 1), "product" (two independent g = 1
/// factors).
Config preset(const std::string& name, const PresetParams& params = {});

/// Loads and validates a JSON config. Validation failures name the violated
/// invariant.
Config config_from_json(const nlohmann::json& j);
Config config_from_file(const std::string& path);

}  // namespace lefdec

#endif
