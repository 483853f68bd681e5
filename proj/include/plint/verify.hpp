#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "plint/numerics.hpp"
#include "plint/quadrature.hpp"

namespace plint {

enum class Suite { Oracle, DualRoute, TwoFormula, Identities, Euler, All };
enum class Grid { Small, Full };

Suite suite_from_name(std::string_view name);
Grid grid_from_name(std::string_view name);

struct VerifyOptions {
  Suite suite = Suite::All;
  Grid grid = Grid::Full;
  double tol = 1e-9;
  int jobs = 1;
  Precision prec{};
};

/// One checked instance. `family` is an integral family name or the name of
/// the checked relation (e.g. "H2Binomial", "S", "J0-recurrence").
struct VerificationRecord {
  std::string family;
  std::vector<int> params;
  std::string x = "1";
  std::string symbolic;
  std::string value;
  std::string oracle;
  Real abs_err = 0;
  Real rel_err = 0;
  bool pass = false;

  std::string sort_key() const;
};

/// The oracle grid: every family over its parameter box at x in
/// {1/4, 1/2, 3/4, 1} (x = 1 skipped where the integral diverges).
std::vector<IntegralSpec> oracle_grid(Grid grid);

std::vector<VerificationRecord> run_verification(const VerifyOptions& opts);

nlohmann::ordered_json to_json(const VerificationRecord& r);
nlohmann::ordered_json report_json(const std::vector<VerificationRecord>& records);

/// "3e-13" style rendering of an error magnitude.
std::string format_error(const Real& e);

}  // namespace plint
