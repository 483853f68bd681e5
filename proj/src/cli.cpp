#include "plint/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/evaluators.hpp"
#include "plint/json_io.hpp"
#include "plint/verify.hpp"

namespace plint::cli {

namespace {

using json = nlohmann::ordered_json;

struct Params {
  std::optional<int> m, n, p, q, r;
  int max_m = 3, max_n = 3, max_p = 3, max_q = 3, max_weight = 7;
};

int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  require(v.has_value(), ErrorCode::ParameterError,
          "family " + family + " needs --" + std::string(flag));
  return *v;
}

Precision resolve_digits(const std::optional<int>& flag) {
  if (flag) return Precision(*flag);
  if (const char* env = std::getenv("PLINT_DIGITS"); env && *env) {
    char* end = nullptr;
    const long d = std::strtol(env, &end, 10);
    require(end && *end == '\0', ErrorCode::ParameterError,
            "PLINT_DIGITS must be an integer, got '" + std::string(env) + "'");
    return Precision(static_cast<int>(d));
  }
  return Precision();
}

// A row of output: what was evaluated and its closed form.
struct Item {
  std::string family;
  std::vector<int> params;
  Rational x{1};
  ClosedForm form;
  bool divergent = false;
};

Item evaluate_item(const std::string& family, const std::vector<int>& params, const Rational& x) {
  Item it{family, params, x, {}, false};
  if (family == "S") {
    it.form = reduce_S(params[0], params[1]);
  } else if (family == "Kbase") {
    it.form = K_base(params[0], params[1]);
  } else {
    IntegralSpec spec{family_from_name(family), params, x};
    it.form = evaluate(spec);
  }
  return it;
}

std::vector<int> params_for(const std::string& family, const Params& a) {
  if (family == "A" || family == "B" || family == "C")
    return {need(a.m, "m", family), need(a.n, "n", family)};
  if (family == "J0" || family == "J1") return {need(a.m, "m", family), need(a.p, "p", family)};
  if (family == "J") return {need(a.m, "m", family), need(a.p, "p", family), need(a.q, "q", family)};
  if (family == "K") {
    const auto r = a.r ? a.r : a.m;
    return {need(r, "r", family), need(a.p, "p", family), need(a.q, "q", family)};
  }
  if (family == "L" || family == "M" || family == "HeadLog1m")
    return {need(a.n, "n", family), need(a.m, "m", family)};
  if (family == "S") return {need(a.p, "p", family), need(a.q, "q", family)};
  if (family == "Kbase") return {need(a.m, "m", family), need(a.q, "q", family)};
  fail(ErrorCode::ParameterError, "unknown family '" + family + "'");
}

bool uses_x(const std::string& family) {
  return !(family == "J" || family == "K" || family == "S" || family == "Kbase");
}

Rational parse_point(const std::string& family, const std::string& text) {
  const Rational x = Rational::parse(text);
  const bool lower_limit = family == "M";
  require(x <= Rational(1) && (lower_limit ? x.sign() >= 0 : x.sign() > 0), ErrorCode::ParameterError,
          std::string("--x must lie in ") + (lower_limit ? "[0, 1]" : "(0, 1]") + ", got " + text);
  require(uses_x(family) || x.is_one(), ErrorCode::ParameterError,
          "family " + family + " has no evaluation point");
  return x;
}

std::string key_of(const Item& it) {
  std::string s = it.family + "(";
  for (std::size_t i = 0; i < it.params.size(); ++i) s += (i ? "," : "") + std::to_string(it.params[i]);
  s += ")";
  if (uses_x(it.family)) s += " x=" + it.x.to_string();
  return s;
}

json spec_json(const Item& it) {
  json s;
  s["family"] = it.family;
  s["params"] = it.params;
  s["x"] = it.x.to_string();
  return s;
}

std::string value_text(const Item& it, const Precision& prec) {
  if (it.divergent) return "divergent";
  return to_decimal(numeric_eval(it.form, EvalPoint(it.x), prec), prec.digits());
}

json item_json(const Item& it, const Precision& prec) {
  json j;
  j["spec"] = spec_json(it);
  if (it.divergent) {
    j["closed_form"] = nullptr;
    j["symbolic"] = "divergent";
    j["value"] = nullptr;
  } else {
    j["closed_form"] = to_json(it.form);
    j["symbolic"] = it.form.to_text();
    j["value"] = value_text(it, prec);
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<Item> table_items(const std::string& family, const Params& a, const Rational& x) {
  for (int v : {a.max_m, a.max_n, a.max_p, a.max_q, a.max_weight})
    require(v >= 0 && v <= 40, ErrorCode::ParameterError, "table bounds must lie in [0, 40]");
  std::vector<std::vector<int>> rows;
  if (family == "A" || family == "B" || family == "C") {
    for (int m = 1; m <= a.max_m; ++m)
      for (int n = 1; n <= std::min(m, a.max_n); ++n) rows.push_back({m, n});
  } else if (family == "J0") {
    for (int m = 0; m <= a.max_m; ++m)
      for (int p = 1; p <= a.max_p; ++p) rows.push_back({m, p});
  } else if (family == "J1") {
    for (int m = 0; m <= a.max_m; ++m)
      for (int p = 0; p <= a.max_p; ++p) rows.push_back({m, p});
  } else if (family == "J") {
    for (int m = 0; m <= a.max_m; ++m)
      for (int p = 1; p <= a.max_p; ++p)
        for (int q = 1; q <= std::min(p, a.max_q); ++q) rows.push_back({m, p, q});
  } else if (family == "K") {
    for (int m = 1; m <= a.max_m; ++m)
      for (int p = 0; p <= a.max_p; ++p)
        for (int q = 0; q <= std::min(p, a.max_q); ++q)
          if (p + q >= 1) rows.push_back({m, p, q});
  } else if (family == "L" || family == "M" || family == "HeadLog1m") {
    for (int n = 0; n <= a.max_n; ++n)
      for (int m = 0; m <= a.max_m; ++m) rows.push_back({n, m});
  } else if (family == "S") {
    for (int w = 3; w <= a.max_weight; w += 2)
      for (int p = 1; p <= w - 2; ++p) rows.push_back({p, w - p});
  } else if (family == "Kbase") {
    for (int m = 1; m <= a.max_m; ++m)
      for (int q = 1; q <= a.max_q; ++q) rows.push_back({m, q});
  } else {
    fail(ErrorCode::ParameterError, "unknown family '" + family + "'");
  }
  std::vector<Item> items;
  for (const auto& params : rows) {
    try {
      items.push_back(evaluate_item(family, params, x));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DivergentAtOne) throw;
      items.push_back({family, params, x, {}, true});
    }
  }
  return items;
}

int report(const Error& e, std::ostream& err) {
  err << "plint: " << e.what() << "\n";
  switch (e.code()) {
    case ErrorCode::DivergentAtOne:
    case ErrorCode::DivergentValue: return kDivergent;
    default: return kBadParameters;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form evaluation of polylogarithm integrals", "plint"};
  app.require_subcommand(1);

  Params a;
  std::string family, x_text = "1", format = "json", table_format = "text", suite = "all", grid = "full";
  std::optional<int> digits;
  double tol = 1e-9;
  int jobs = 1;

  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--m", a.m, "m parameter");
    sub->add_option("--n", a.n, "n parameter");
    sub->add_option("--p", a.p, "p parameter");
    sub->add_option("--q", a.q, "q parameter");
    sub->add_option("--r", a.r, "r parameter (K family)");
  };
  CLI::App* eval = app.add_subcommand("eval", "evaluate one integral in closed form");
  eval->add_option("--family", family, "A, B, C, J0, J1, J, K, L, M, HeadLog1m, S or Kbase")->required();
  add_params(eval);
  eval->add_option("--x", x_text, "evaluation point, an exact decimal or fraction");
  eval->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  eval->add_option("--digits", digits, "significant digits of the numeric value");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite)->check(
      CLI::IsMember({"oracle", "dual-route", "two-formula", "identities", "euler", "all"}));
  verify->add_option("--tol", tol, "relative tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--grid", grid)->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--digits", digits);

  CLI::App* table = app.add_subcommand("table", "tabulate a family over a parameter box");
  table->add_option("--family", family)->required();
  table->add_option("--max-m", a.max_m);
  table->add_option("--max-n", a.max_n);
  table->add_option("--max-p", a.max_p);
  table->add_option("--max-q", a.max_q);
  table->add_option("--max-weight", a.max_weight);
  table->add_option("--x", x_text);
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv", "json"}));
  table->add_option("--digits", digits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "plint: " << e.what() << "\n";
    return kBadParameters;
  }

  try {
    const Precision prec = resolve_digits(digits);

    if (eval->parsed()) {
      const std::vector<int> params = params_for(family, a);
      const Rational x = parse_point(family, x_text);
      const Item it = evaluate_item(family, params, x);
      const std::string value = value_text(it, prec);
      if (format == "json") {
        out << item_json(it, prec).dump() << "\n";
      } else {
        out << key_of(it) << "\n" << it.form.to_text() << "\n" << value << "\n";
      }
      return kOk;
    }

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.suite = suite_from_name(suite);
      opts.grid = grid_from_name(grid);
      opts.tol = tol;
      opts.jobs = jobs;
      opts.prec = prec;
      const auto records = run_verification(opts);
      const auto passed = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; });
      out << report_json(records).dump(2) << "\n";
      err << "verify " << suite << ": " << passed << "/" << records.size() << " passed\n";
      return passed == static_cast<long>(records.size()) ? kOk : kVerifyFailed;
    }

    const Rational x = parse_point(family, x_text);
    const std::vector<Item> items = table_items(family, a, x);
    if (table_format == "json") {
      json arr = json::array();
      for (const Item& it : items) arr.push_back(item_json(it, prec));
      out << arr.dump(2) << "\n";
    } else if (table_format == "csv") {
      out << "family,params,x,symbolic,value\n";
      for (const Item& it : items) {
        std::string ps;
        for (std::size_t i = 0; i < it.params.size(); ++i) ps += (i ? ";" : "") + std::to_string(it.params[i]);
        out << it.family << "," << ps << "," << it.x.to_string() << ","
            << csv_field(it.divergent ? "divergent" : it.form.to_text()) << "," << value_text(it, prec) << "\n";
      }
    } else {
      std::size_t wk = 0, ws = 0;
      for (const Item& it : items) {
        wk = std::max(wk, key_of(it).size());
        ws = std::max(ws, (it.divergent ? std::string("divergent") : it.form.to_text()).size());
      }
      for (const Item& it : items) {
        out << std::left << std::setw(static_cast<int>(wk)) << key_of(it) << "  "
            << std::setw(static_cast<int>(ws)) << (it.divergent ? "divergent" : it.form.to_text()) << "  "
            << value_text(it, prec) << "\n";
      }
    }
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

}  // namespace plint::cli
