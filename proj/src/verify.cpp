#include "plint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <thread>

#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/evaluators.hpp"
#include "plint/recurrence.hpp"

namespace plint {

namespace {

constexpr int kReportDigits = 20;

using Task = std::function<VerificationRecord()>;

VerificationRecord numeric_record(std::string family, std::vector<int> params, std::string x,
                                  std::string symbolic, const Real& value, const Real& oracle, double tol) {
  VerificationRecord r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.x = std::move(x);
  r.symbolic = std::move(symbolic);
  r.value = to_decimal(value, kReportDigits);
  r.oracle = to_decimal(oracle, kReportDigits);
  r.abs_err = abs(value - oracle);
  r.rel_err = r.abs_err / std::max(Real(1), abs(oracle));
  r.pass = r.rel_err <= Real(tol);
  return r;
}

VerificationRecord failed_record(std::string family, std::vector<int> params, std::string x, const Error& e) {
  VerificationRecord r;
  r.family = std::move(family);
  r.params = std::move(params);
  r.x = std::move(x);
  r.symbolic = std::string("error: ") + e.what();
  r.pass = false;
  return r;
}

std::vector<Rational> grid_points(Grid g) {
  if (g == Grid::Small) return {Rational(1, 2), Rational(1)};
  return {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
}

struct Limits {
  int abc_m, j01_m, j01_p, j_weight, k_weight, lm_max;
  std::vector<int> j_m;
};

Limits limits(Grid g) {
  if (g == Grid::Small) return {3, 2, 2, 4, 5, 2, {-2, 0}};
  return {5, 4, 4, 6, 8, 4, {-2, 0, 1, 2}};
}

std::vector<IntegralSpec> j_grid(Grid g) {
  std::vector<IntegralSpec> out;
  const Limits lim = limits(g);
  for (int m : lim.j_m)
    for (int p = 1; p < lim.j_weight; ++p)
      for (int q = 1; p + q <= lim.j_weight; ++q) out.push_back({Family::J, {m, p, q}, Rational(1)});
  return out;
}

std::vector<IntegralSpec> k_grid(Grid g) {
  std::vector<IntegralSpec> out;
  const int w = limits(g).k_weight;
  for (int m = 1; m < w; ++m)
    for (int p = 0; m + p <= w; ++p)
      for (int q = 0; m + p + q <= w; ++q)
        if (p + q >= 1) out.push_back({Family::K, {m, p, q}, Rational(1)});
  return out;
}

void oracle_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  for (const IntegralSpec& spec : oracle_grid(o.grid)) {
    tasks.push_back([spec, o] {
      const std::string fam(family_name(spec.family));
      try {
        const ClosedForm f = evaluate(spec);
        const Real v = numeric_eval(f, EvalPoint(spec.x), o.prec);
        const Real q = integrate(spec, o.prec);
        return numeric_record(fam, spec.params, spec.x.to_string(), f.to_text(), v, q, o.tol);
      } catch (const Error& e) {
        return failed_record(fam, spec.params, spec.x.to_string(), e);
      }
    });
  }
}

void dual_route_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const int max_m = o.grid == Grid::Small ? 2 : 4;
  const int max_q = o.grid == Grid::Small ? 3 : 5;
  for (int m = 0; m <= max_m; ++m)
    for (int q = 1; q <= max_q; ++q)
      tasks.push_back([m, q, o] {
        const ClosedForm direct = J0_eval(m, q, EvalPoint::one());
        const ClosedForm rec = freitas_J0(m, q);
        VerificationRecord r = numeric_record("J0-recurrence", {m, q}, "1", rec.to_text(),
                                              numeric_eval(direct, EvalPoint::one(), o.prec),
                                              numeric_eval(rec, EvalPoint::one(), o.prec), o.tol);
        r.pass = r.pass && direct == rec;
        return r;
      });
  std::vector<IntegralSpec> specs = j_grid(o.grid);
  const std::vector<IntegralSpec> ks = k_grid(o.grid);
  specs.insert(specs.end(), ks.begin(), ks.end());
  for (const IntegralSpec& spec : specs)
    tasks.push_back([spec, o] {
      const std::string fam = std::string(family_name(spec.family)) + "-recurrence";
      try {
        const ClosedForm direct = evaluate(spec);
        const ClosedForm rec = freitas_recurrence_eval(spec.family, spec.params);
        return numeric_record(fam, spec.params, "1", rec.to_text(),
                              numeric_eval(direct, EvalPoint::one(), o.prec),
                              numeric_eval(rec, EvalPoint::one(), o.prec), o.tol);
      } catch (const Error& e) {
        return failed_record(fam, spec.params, "1", e);
      }
    });
}

void two_formula_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  for (int m = 0; m <= 5; ++m) {
    for (int p = 1; p <= 6; ++p)
      tasks.push_back([m, p, o] {
        const ClosedForm v1 = J_at_one_v1(m, p);
        const ClosedForm v2 = J_at_one_v2(m, p);
        return numeric_record("J-two-formula", {m, p}, "1", v2.to_text(),
                              numeric_eval(v1, EvalPoint::one(), o.prec),
                              numeric_eval(v2, EvalPoint::one(), o.prec), o.tol);
      });
    tasks.push_back([m] {
      const Rational devoto = devoto_form(m);
      const auto v1 = expand_harmonics(J_at_one_v1(m, 1)).as_rational();
      const auto v2 = expand_harmonics(J_at_one_v2(m, 1)).as_rational();
      VerificationRecord r;
      r.family = "J-devoto";
      r.params = {m, 1};
      r.symbolic = devoto.to_string();
      r.value = v1 ? v1->to_string() : "non-rational";
      r.oracle = devoto.to_string();
      r.pass = v1 && v2 && *v1 == devoto && *v2 == devoto;
      return r;
    });
  }
}

VerificationRecord exact_record(std::string family, int m, const std::pair<Rational, Rational>& sides) {
  VerificationRecord r;
  r.family = std::move(family);
  r.params = {m};
  r.symbolic = sides.first.to_string();
  r.value = sides.first.to_fraction_string();
  r.oracle = sides.second.to_fraction_string();
  r.pass = sides.first == sides.second;
  if (!r.pass) r.abs_err = abs(to_real(sides.first - sides.second));
  r.rel_err = r.abs_err;
  return r;
}

void identity_tasks(std::vector<Task>& tasks) {
  for (int m = 0; m <= 20; ++m) {
    tasks.push_back([m] { return exact_record("H2Binomial", m, check_prop2(m)); });
    tasks.push_back([m] { return exact_record("HarmonicBinomial", m, harmonic_binomial_identity(m)); });
  }
}

void euler_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  for (int w = 3; w <= 9; ++w)
    for (int p = 1; p <= w - 2; ++p) {
      const int q = w - p;
      if (!is_reducible_S(p, q)) continue;
      tasks.push_back([p, q, o] {
        const ClosedForm f = reduce_S(p, q);
        VerificationRecord r = numeric_record("S", {p, q}, "1", f.to_text(),
                                              numeric_eval(f, EvalPoint::one(), o.prec),
                                              euler_sum_value(p, q, o.prec), o.tol);
        r.pass = r.pass && f.only_kinds({AtomKind::Zeta});
        return r;
      });
    }
}

}  // namespace

Suite suite_from_name(std::string_view name) {
  if (name == "oracle") return Suite::Oracle;
  if (name == "dual-route") return Suite::DualRoute;
  if (name == "two-formula") return Suite::TwoFormula;
  if (name == "identities") return Suite::Identities;
  if (name == "euler") return Suite::Euler;
  if (name == "all") return Suite::All;
  fail(ErrorCode::ParameterError, "unknown suite '" + std::string(name) + "'");
}

Grid grid_from_name(std::string_view name) {
  if (name == "small") return Grid::Small;
  if (name == "full") return Grid::Full;
  fail(ErrorCode::ParameterError, "unknown grid '" + std::string(name) + "'");
}

std::string VerificationRecord::sort_key() const {
  char buf[16];
  std::string k = family + "|";
  for (int p : params) {
    std::snprintf(buf, sizeof buf, "%05d,", p + 10000);
    k += buf;
  }
  // Exact x values sort numerically through their decimal expansion.
  return k + "|" + to_decimal(to_real(Rational::parse(x)), 30);
}

std::vector<IntegralSpec> oracle_grid(Grid grid) {
  const Limits lim = limits(grid);
  std::vector<IntegralSpec> out;
  for (const Rational& x : grid_points(grid)) {
    for (int m = 1; m <= lim.abc_m; ++m)
      for (int n = 1; n <= m; ++n)
        for (Family f : {Family::A, Family::B, Family::C}) out.push_back({f, {m, n}, x});
    for (int m = 0; m <= lim.j01_m; ++m)
      for (int p = 1; p <= lim.j01_p; ++p) out.push_back({Family::J0, {m, p}, x});
    for (int m = 0; m <= lim.j01_m; ++m)
      for (int p = 0; p <= lim.j01_p; ++p) {
        if (m == 0 && p == 0 && x.is_one()) continue;  // diverges
        out.push_back({Family::J1, {m, p}, x});
      }
    for (int n = 0; n <= lim.lm_max; ++n)
      for (int m = 0; m <= lim.lm_max; ++m)
        for (Family f : {Family::L, Family::M, Family::HeadLog1m}) out.push_back({f, {n, m}, x});
  }
  const auto js = j_grid(grid);
  const auto ks = k_grid(grid);
  out.insert(out.end(), js.begin(), js.end());
  out.insert(out.end(), ks.begin(), ks.end());
  return out;
}

std::vector<VerificationRecord> run_verification(const VerifyOptions& opts) {
  std::vector<Task> tasks;
  const bool all = opts.suite == Suite::All;
  if (all || opts.suite == Suite::Oracle) oracle_tasks(opts, tasks);
  if (all || opts.suite == Suite::DualRoute) dual_route_tasks(opts, tasks);
  if (all || opts.suite == Suite::TwoFormula) two_formula_tasks(opts, tasks);
  if (all || opts.suite == Suite::Identities) identity_tasks(tasks);
  if (all || opts.suite == Suite::Euler) euler_tasks(opts, tasks);

  std::vector<VerificationRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = tasks[i]();
  };
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(records.begin(), records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     return a.sort_key() < b.sort_key();
                   });
  return records;
}

std::string format_error(const Real& e) {
  if (e == 0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.0e", static_cast<double>(e));
  return buf;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json spec;
  spec["family"] = r.family;
  spec["params"] = r.params;
  spec["x"] = r.x;
  nlohmann::ordered_json j;
  j["spec"] = spec;
  j["symbolic"] = r.symbolic;
  j["value"] = r.value;
  j["oracle"] = r.oracle;
  j["abs_err"] = format_error(r.abs_err);
  j["rel_err"] = format_error(r.rel_err);
  j["pass"] = r.pass;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<VerificationRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr;
}

}  // namespace plint
