// altsum: exact regularized values for divergent alternating series,
// with cross-checking verification commands.

#include "altsum/boson.hpp"
#include "altsum/classical.hpp"
#include "altsum/combinatorics.hpp"
#include "altsum/fockcheck.hpp"
#include "altsum/npoly.hpp"
#include "altsum/resum.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using altsum::Basis;
using altsum::NPoly;
using altsum::Rational;
using altsum::TermStream;
using altsum::VerificationReport;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

NPoly parse_poly(const std::string& spec) {
  std::vector<Rational> coeffs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw std::invalid_argument("empty polynomial coefficient");
    coeffs.push_back(Rational::from_string(item.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty polynomial");
  return NPoly(std::move(coeffs), Basis::Monomial);
}

// ---------------------------------------------------------------- table ---

struct TableRow {
  long p = 0;
  std::string wigner, abel, euler, eta;
  bool agree = false;
  std::string float_value;
};

std::vector<TableRow> build_table(long max_p) {
  std::vector<TableRow> rows;
  rows.reserve(max_p + 1);
  for (long p = 0; p <= max_p; ++p) {
    const NPoly mono = NPoly::power(p);
    const Rational wigner = altsum::alt_power_sum(p).value;
    const Rational abel = altsum::abel_limit_exact(mono).value;
    const Rational euler = altsum::euler_exact_poly(mono).value;
    const Rational eta = altsum::eta_oracle(p).value;
    TableRow row;
    row.p = p;
    row.wigner = wigner.to_string();
    row.abel = abel.to_string();
    row.euler = euler.to_string();
    row.eta = eta.to_string();
    row.agree = (wigner == abel && abel == euler && euler == eta);
    row.float_value = wigner.to_decimal(15);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::string out = "p,wigner,abel,euler,eta,agree,float\n";
  for (const auto& r : rows) {
    out += std::to_string(r.p) + "," + r.wigner + "," + r.abel + "," +
           r.euler + "," + r.eta + "," + (r.agree ? "true" : "false") + "," +
           r.float_value + "\n";
  }
  return out;
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["p"] = r.p;
    obj["wigner"] = r.wigner;
    obj["abel"] = r.abel;
    obj["euler"] = r.euler;
    obj["eta"] = r.eta;
    obj["agree"] = r.agree;
    obj["float"] = r.float_value;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_text(const std::vector<TableRow>& rows) {
  const std::vector<std::string> header = {"p",     "wigner", "abel", "euler",
                                           "eta",   "agree",  "float"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& r : rows)
    cells.push_back({std::to_string(r.p), r.wigner, r.abel, r.euler, r.eta,
                     r.agree ? "true" : "false", r.float_value});
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitUsage;
  }
  f << payload;
  if (!f.good()) {
    std::cerr << "error: write to '" << out_path << "' failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify ---

struct SeriesEntry {
  TermStream stream;
  double target;  // regularized value of the series
  int degree;     // polynomial growth order of |a_n|
};

std::optional<SeriesEntry> lookup_series(const std::string& name) {
  if (name == "alternating-ones")
    return SeriesEntry{altsum::alternating_ones_stream(), 0.5, 0};
  if (name == "alternating-n")
    return SeriesEntry{altsum::alternating_n_stream(), -0.25, 1};
  if (name == "alternating-natural")
    return SeriesEntry{altsum::alternating_natural_stream(), 0.25, 1};
  if (name == "geometric-half")
    return SeriesEntry{altsum::geometric_stream(0.5), 2.0, 0};
  return std::nullopt;
}

// Smallest cutoff making the geometric tail envelope negligible at the
// requested tolerance.
long auto_abel_terms(const TermStream& ts, double x, double tol, int degree) {
  const long floor_n = static_cast<long>(2.0 * degree / (1.0 - x)) + 1;
  const long cap = 50000000;
  for (long n = floor_n; n < cap; ++n) {
    const double envelope =
        std::abs(ts.term(n)) * std::pow(x, double(n)) * 2.0 / (1.0 - x);
    if (envelope < tol / 10.0) return n;
  }
  return cap;
}

int print_reports(const std::vector<VerificationReport>& reports) {
  bool all = true;
  for (const auto& r : reports) {
    std::cout << r.to_line() << "\n";
    all = all && r.passed;
  }
  return all ? kExitOk : kExitCheckFailed;
}

std::vector<VerificationReport> run_ordering_checks(long max_s) {
  std::vector<VerificationReport> reports;
  for (long s = 1; s <= max_s; ++s) {
    const auto lhs = diagonal_part(altsum::normal_order_power(2 * s));
    auto rhs = altsum::weyl_to_normal(s);
    rhs *= Rational(altsum::binomial(2 * s, s));
    reports.push_back(VerificationReport::make(
        "ordering-diagonal", {{"s", std::to_string(s)}}, 0.0,
        lhs == rhs ? 0.0 : 1.0, 0.0));
  }
  for (long m = 1; m <= 2 * max_s + 1; m += 2) {
    const NPoly diag = altsum::expectation_poly(altsum::normal_order_power(m));
    reports.push_back(VerificationReport::make(
        "ordering-odd-zero", {{"m", std::to_string(m)}}, 0.0,
        diag.is_zero() ? 0.0 : 1.0, 0.0));
  }
  return reports;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact regularized values for divergent alternating series"};
  app.require_subcommand(1);

  // --- eval ---
  auto* eval = app.add_subcommand(
      "eval", "Evaluate the regularized sum of (-1)^n P(n) exactly");
  long eval_power = 0;
  std::string eval_poly;
  long cap = 1000;
  auto* opt_power =
      eval->add_option("--power", eval_power, "Summand n^p (p >= 0)");
  auto* opt_poly = eval->add_option(
      "--poly", eval_poly,
      "Summand polynomial coefficients, lowest degree first (e.g. 0,1/2,3)");
  eval->add_option("--cap", cap, "Largest accepted power")->capture_default_str();
  opt_power->excludes(opt_poly);
  opt_poly->excludes(opt_power);

  // --- table ---
  auto* table = app.add_subcommand(
      "table", "Tabulate sum (-1)^n n^p across all methods for p = 0..P");
  long max_p = 0;
  std::string format = "text";
  std::string out_path;
  table->add_option("--max-p", max_p, "Largest power P")->required();
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", out_path, "Write the table to a file");
  table->add_option("--cap", cap, "Largest accepted power")->capture_default_str();

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->require_subcommand(1);

  auto* fock = verify->add_subcommand(
      "fock", "Numeric witness on a truncated Fock space");
  long fock_s = 0, fock_k = 0, fock_trunc = 400, fock_cut = -1;
  std::string fock_q = "0";
  double fock_x = 0.999, fock_tol = 0.1;
  auto* opt_s =
      fock->add_option("--s", fock_s, "Check the vanishing sum of order 2s");
  auto* opt_k =
      fock->add_option("--k", fock_k, "Check the k-th displaced moment");
  fock->add_option("--q", fock_q, "Displacement (exact rational, e.g. 3/2)")
      ->capture_default_str();
  fock->add_option("--x", fock_x, "Abel regulator in (0,1)")->capture_default_str();
  fock->add_option("--trunc", fock_trunc, "Fock truncation N")->capture_default_str();
  fock->add_option("--tol", fock_tol, "Pass tolerance")->capture_default_str();
  fock->add_option("--cut", fock_cut, "Summation cutoff (default: margin)");

  auto* classical = verify->add_subcommand(
      "classical", "Abel / Cesaro numeric summation of a named series");
  std::string series_name, method;
  int order = 1;
  long terms = 0;
  double cl_x = 0.999, cl_tol = 1e-3;
  classical->add_option("--series", series_name,
                        "One of: alternating-ones, alternating-n, "
                        "alternating-natural, geometric-half")
      ->required();
  classical->add_option("--method", method, "abel or cesaro")
      ->check(CLI::IsMember({"abel", "cesaro"}))
      ->required();
  classical->add_option("--order", order, "Cesaro averaging order")
      ->capture_default_str();
  classical->add_option("--terms", terms, "Number of terms (0 = automatic)")
      ->capture_default_str();
  classical->add_option("--x", cl_x, "Abel evaluation point in (0,1)")
      ->capture_default_str();
  classical->add_option("--tol", cl_tol, "Pass tolerance")->capture_default_str();

  auto* ordering = verify->add_subcommand(
      "ordering", "Symmetric-ordering identities of the operator algebra");
  long max_s = 6;
  ordering->add_option("--max-s", max_s, "Check orders 1..S")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(eval)) {
      altsum::RegularizedValue v;
      if (opt_power->count()) {
        if (eval_power < 0 || eval_power > cap) {
          std::cerr << "error: --power must lie in [0, " << cap << "]\n";
          return kExitUsage;
        }
        v = altsum::alt_power_sum(eval_power);
      } else if (opt_poly->count()) {
        const NPoly p = parse_poly(eval_poly);
        if (p.degree() > cap) {
          std::cerr << "error: polynomial degree exceeds cap " << cap << "\n";
          return kExitUsage;
        }
        v = altsum::alt_poly_sum(p);
      } else {
        std::cerr << "error: eval requires exactly one of --power/--poly\n";
        return kExitUsage;
      }
      std::cout << v.value.to_string() << " (" << v.value.to_decimal(15)
                << ")\n";
      return kExitOk;
    }

    if (app.got_subcommand(table)) {
      if (max_p < 0 || max_p > cap) {
        std::cerr << "error: --max-p must lie in [0, " << cap << "]\n";
        return kExitUsage;
      }
      const auto rows = build_table(max_p);
      std::string payload;
      if (format == "csv")
        payload = render_csv(rows);
      else if (format == "json")
        payload = render_json(rows);
      else
        payload = render_text(rows);
      const int rc = emit(payload, out_path);
      if (rc != kExitOk) return rc;
      for (const auto& r : rows)
        if (!r.agree) return kExitCheckFailed;
      return kExitOk;
    }

    // verify subcommands
    if (verify->got_subcommand(fock)) {
      if (!opt_s->count() && !opt_k->count()) {
        std::cerr << "error: verify fock requires --s and/or --k\n";
        return kExitUsage;
      }
      std::vector<VerificationReport> reports;
      if (opt_s->count())
        reports.push_back(altsum::regulated_vanishing_sum(
            fock_s, fock_trunc, fock_x, fock_tol, fock_cut));
      if (opt_k->count()) {
        altsum::MomentQuery mq;
        mq.k = fock_k;
        mq.q = Rational::from_string(fock_q);
        mq.x = fock_x;
        mq.truncation = fock_trunc;
        mq.tolerance = fock_tol;
        mq.cutoff = fock_cut;
        reports.push_back(altsum::regulated_moment_sum(mq));
      }
      return print_reports(reports);
    }

    if (verify->got_subcommand(classical)) {
      const auto entry = lookup_series(series_name);
      if (!entry) {
        std::cerr << "error: unknown series '" << series_name << "'\n";
        return kExitUsage;
      }
      double computed = 0.0;
      std::vector<std::pair<std::string, std::string>> params = {
          {"series", series_name}};
      if (method == "abel") {
        if (!(cl_x > 0.0 && cl_x < 1.0)) {
          std::cerr << "error: --x must lie in (0, 1)\n";
          return kExitUsage;
        }
        long n_max = terms > 0 ? terms
                               : auto_abel_terms(entry->stream, cl_x, cl_tol,
                                                 entry->degree);
        computed = altsum::abel_numeric(entry->stream, cl_x, n_max);
        char xb[32];
        std::snprintf(xb, sizeof(xb), "%.15g", cl_x);
        params.push_back({"x", xb});
        params.push_back({"terms", std::to_string(n_max)});
      } else {
        if (order < 1) {
          std::cerr << "error: --order must be >= 1\n";
          return kExitUsage;
        }
        const long n_max = terms > 0 ? terms : 100000;
        computed = altsum::cesaro_numeric(entry->stream, order, n_max);
        params.push_back({"order", std::to_string(order)});
        params.push_back({"terms", std::to_string(n_max)});
      }
      const auto report = VerificationReport::make(
          "classical-" + method, std::move(params), entry->target, computed,
          cl_tol);
      return print_reports({report});
    }

    if (verify->got_subcommand(ordering)) {
      if (max_s < 1) {
        std::cerr << "error: --max-s must be >= 1\n";
        return kExitUsage;
      }
      return print_reports(run_ordering_checks(max_s));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::cerr << "error: no command selected\n";
  return kExitUsage;
}
