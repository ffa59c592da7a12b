#include "lefdec/config.hpp"

#include <fstream>

#include "lefdec/errors.hpp"

namespace lefdec {

namespace {

using nlohmann::json;

json rational_str(const Rational& q) { return to_string(q); }

json mat_echo(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      Scalar v = m.get(i, j);
      row.push_back(v.is_null_zero() ? "0"
                                     : rational_str(v.rational_part()));
    }
    rows.push_back(row);
  }
  return rows;
}

json budgets_echo(const Budgets& b) {
  return json{{"max_operator_dim", b.max_operator_dim},
              {"max_closure_waves", b.max_closure_waves},
              {"idempotent_retries", b.idempotent_retries}};
}

json field_echo(const Field& f) {
  json coeffs = json::array();
  for (const Rational& c : f.min_poly()) coeffs.push_back(rational_str(c));
  return json{{"min_poly", coeffs}};
}

json make_echo(const std::string& source, const PolarizedData& data,
               const Budgets& budgets, unsigned long long seed) {
  json e;
  e["source"] = source;
  e["field"] = field_echo(*data.field());
  e["g"] = data.g();
  e["phi"] = mat_echo(data.phi());
  json eb = json::array();
  for (const Mat& m : data.e_basis()) eb.push_back(mat_echo(m));
  e["E_basis"] = eb;
  json xg = json::array();
  for (const Mat& m : data.extra_generators()) xg.push_back(mat_echo(m));
  e["extra_generators"] = xg;
  e["budgets"] = budgets_echo(budgets);
  e["seed"] = seed;
  return e;
}

Mat standard_symplectic(const Field* f, int g) {
  Mat phi(f, 2 * g, 2 * g);
  for (int b = 0; b < g; ++b) {
    phi.set(2 * b, 2 * b + 1, f->one());
    phi.set(2 * b + 1, 2 * b, -f->one());
  }
  return phi;
}

FieldPtr make_field(const std::optional<std::vector<Rational>>& min_poly) {
  return min_poly ? intern_field(*min_poly) : intern_rationals();
}

}  // namespace

Config preset(const std::string& name, const PresetParams& params) {
  FieldPtr field = make_field(params.min_poly);
  const Field* f = field.get();
  if (name == "siegel") {
    if (params.g < 1) throw InvalidParams("siegel preset: g must be >= 1");
    Mat phi = standard_symplectic(f, params.g);
    std::vector<Mat> e{Mat::identity(f, 2 * params.g)};
    PolarizedData data(field, params.g, std::move(phi), std::move(e), {});
    json echo = make_echo("preset:siegel", data, params.budgets, params.seed);
    echo["params"] = json{{"g", params.g}};
    return Config{std::move(data), params.budgets, params.seed,
                  std::move(echo)};
  }
  if (name == "cm") {
    if (params.d < 1)
      throw InvalidParams("cm preset: d must be a positive integer");
    for (long p = 2; p * p <= params.d; ++p)
      if (params.d % (p * p) == 0)
        throw InvalidParams("cm preset: d must be squarefree");
    Mat phi = standard_symplectic(f, 1);
    // regular representation of sqrt(-d) in the basis {1, sqrt(-d)}
    Mat j(f, 2, 2);
    j.set(0, 1, f->from_rational(Rational(-params.d)));
    j.set(1, 0, f->one());
    std::vector<Mat> e{Mat::identity(f, 2), std::move(j)};
    PolarizedData data(field, 1, std::move(phi), std::move(e), {});
    json echo = make_echo("preset:cm", data, params.budgets, params.seed);
    echo["params"] = json{{"d", params.d}};
    return Config{std::move(data), params.budgets, params.seed,
                  std::move(echo)};
  }
  if (name == "product") {
    Mat phi = standard_symplectic(f, 2);
    Mat e1(f, 4, 4), e2(f, 4, 4);
    for (int k = 0; k < 2; ++k) {
      e1.set(k, k, f->one());
      e2.set(k + 2, k + 2, f->one());
    }
    std::vector<Mat> e{std::move(e1), std::move(e2)};
    PolarizedData data(field, 2, std::move(phi), std::move(e), {});
    json echo = make_echo("preset:product", data, params.budgets, params.seed);
    echo["params"] = json::object();
    return Config{std::move(data), params.budgets, params.seed,
                  std::move(echo)};
  }
  throw InvalidParams("unknown preset: " + name);
}

namespace {

using nlohmann::json;

Rational parse_rational(const json& j, const char* what) {
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw ValidationError("config_rational",
                        std::string(what) + ": expected integer or \"p/q\" string");
}

Mat parse_matrix(const Field* f, const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw ValidationError("config_matrix",
                          std::string(what) + ": expected a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const json& row : j) {
    if (!row.is_array())
      throw ValidationError("config_matrix",
                            std::string(what) + ": rows must be arrays");
    std::vector<Rational> r;
    for (const json& cell : row) r.push_back(parse_rational(cell, what));
    rows.push_back(std::move(r));
  }
  return Mat::from_rows(f, rows);
}

}  // namespace

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw ValidationError("config_shape", "top level must be an object");
  std::optional<std::vector<Rational>> min_poly;
  if (j.contains("field")) {
    const json& fj = j.at("field");
    if (!fj.is_object() || !fj.contains("min_poly"))
      throw ValidationError("config_field",
                            "field must be {\"min_poly\": [c0, .., cd]}");
    std::vector<Rational> coeffs;
    for (const json& c : fj.at("min_poly"))
      coeffs.push_back(parse_rational(c, "field.min_poly"));
    min_poly = std::move(coeffs);
  }
  FieldPtr field = make_field(min_poly);
  const Field* f = field.get();
  if (!j.contains("g") || !j.at("g").is_number_integer())
    throw ValidationError("config_g", "g must be a positive integer");
  int g = j.at("g").get<int>();
  if (!j.contains("phi"))
    throw ValidationError("config_phi", "phi matrix is required");
  Mat phi = parse_matrix(f, j.at("phi"), "phi");
  if (!j.contains("E_basis") || !j.at("E_basis").is_array() ||
      j.at("E_basis").empty())
    throw ValidationError("config_E_basis",
                          "E_basis must be a nonempty array of matrices");
  std::vector<Mat> e_basis;
  for (const json& m : j.at("E_basis"))
    e_basis.push_back(parse_matrix(f, m, "E_basis"));
  std::vector<Mat> extra;
  if (j.contains("extra_generators"))
    for (const json& m : j.at("extra_generators"))
      extra.push_back(parse_matrix(f, m, "extra_generators"));
  Budgets budgets;
  if (j.contains("budgets")) {
    const json& b = j.at("budgets");
    if (b.contains("max_operator_dim"))
      budgets.max_operator_dim = b.at("max_operator_dim").get<std::int64_t>();
    if (b.contains("max_closure_waves"))
      budgets.max_closure_waves = b.at("max_closure_waves").get<int>();
    if (b.contains("idempotent_retries"))
      budgets.idempotent_retries = b.at("idempotent_retries").get<int>();
  }
  unsigned long long seed = 0;
  if (j.contains("seed")) seed = j.at("seed").get<unsigned long long>();
  PolarizedData data(field, g, std::move(phi), std::move(e_basis),
                     std::move(extra));
  json echo = make_echo("config", data, budgets, seed);
  return Config{std::move(data), budgets, seed, std::move(echo)};
}

Config config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError("config_json", e.what());
  }
  return config_from_json(j);
}

}  // namespace lefdec
