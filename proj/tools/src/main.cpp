// Command-line front end: exact leading-order coefficients of joint
// moments of characteristic-polynomial derivatives over the compact
// classical ensembles, identity verification, and Haar Monte Carlo.
//
// Exit codes: 0 ok, 1 invalid query, 2 backend mismatch, 3 identity
// failure, 4 unsupported oracle request.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "cpmoments/coefficients.hpp"
#include "cpmoments/identity_checks.hpp"
#include "cpmoments/mc.hpp"
#include "cpmoments/quadrature.hpp"
#include "cpmoments/render.hpp"

using json = nlohmann::ordered_json;
using namespace cpmom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidQuery = 1;
constexpr int kExitBackendMismatch = 2;
constexpr int kExitIdentityFailure = 3;
constexpr int kExitUnsupportedOracle = 4;

Ensemble parse_ensemble(const std::string& s) {
  if (s == "sp") return Ensemble::Sp;
  if (s == "so") return Ensemble::SO;
  if (s == "ominus") return Ensemble::OMinus;
  throw InvalidQuery("invalid query: unknown ensemble '" + s + "'");
}

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;  // inclusive; lo > hi means empty
  bool empty() const { return lo > hi; }
};

// "a:b" inclusive, or a single "a".
Range parse_range(const std::string& s) {
  Range r;
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = static_cast<unsigned>(std::stoul(s));
    } else {
      r.lo = static_cast<unsigned>(std::stoul(s.substr(0, colon)));
      r.hi = static_cast<unsigned>(std::stoul(s.substr(colon + 1)));
    }
  } catch (const std::exception&) {
    throw InvalidQuery("invalid query: bad range '" + s + "'");
  }
  return r;
}

std::string value_string(const Rational& v, bool factored) {
  return factored ? factored_string(v) : to_string(v);
}

struct CoeffRow {
  CoeffQuery query;
  CoeffResult primary;                 // comb unless det requested
  std::optional<CoeffResult> secondary;  // det when both were computed
  bool match = true;
};

CoeffRow compute_row(const CoeffQuery& q, const std::string& backend) {
  CoeffRow row;
  row.query = q;
  if (backend == "det") {
    row.primary = leading_coeff(q, Backend::Det);
  } else if (backend == "comb") {
    row.primary = leading_coeff(q, Backend::Comb);
  } else {  // both
    row.primary = leading_coeff(q, Backend::Comb);
    row.secondary = leading_coeff(q, Backend::Det);
    row.match = row.primary.value == row.secondary->value;
  }
  return row;
}

std::string backend_name(FormulaTag t) {
  switch (t) {
    case FormulaTag::Det: return "det";
    case FormulaTag::Comb: return "comb";
    case FormulaTag::OMinusReduction: return "ominus_reduction";
    case FormulaTag::ClosedForm: return "closed_form";
  }
  return "?";
}

int cmd_coeff(const std::string& ensemble, unsigned k1, unsigned k2, unsigned n1,
              unsigned n2, const std::string& backend, const std::string& format,
              bool factored, bool decimal) {
  const CoeffQuery q{parse_ensemble(ensemble), k1, k2, n1, n2};
  validate(q);
  const CoeffRow row = compute_row(q, backend);

  if (format == "json") {
    json out;
    out["ensemble"] = ensemble;
    out["k1"] = k1;
    out["k2"] = k2;
    out["n1"] = n1;
    out["n2"] = n2;
    out["value"] = value_string(row.primary.value, factored);
    out["exponent"] = row.primary.exponent;
    out["backend"] = backend == "both" ? "both" : backend_name(row.primary.formula);
    if (row.secondary) {
      out["value_det"] = value_string(row.secondary->value, factored);
      out["match"] = row.match;
    }
    if (decimal) out["decimal"] = row.primary.value.get_d();
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "ensemble,k1,k2,n1,n2,value,exponent,backend\n";
    std::cout << ensemble << "," << k1 << "," << k2 << "," << n1 << "," << n2 << ","
              << value_string(row.primary.value, factored) << "," << row.primary.exponent
              << "," << (backend == "both" ? "both" : backend_name(row.primary.formula))
              << "\n";
  } else {
    std::cout << value_string(row.primary.value, factored) << " \xC2\xB7 (2N)^"
              << row.primary.exponent;
    if (decimal) std::cout << "  (" << row.primary.value.get_d() << ")";
    std::cout << "\n";
  }

  if (!row.match) {
    std::cerr << "backend mismatch: comb=" << to_string(row.primary.value)
              << " det=" << to_string(row.secondary->value) << "\n";
    return kExitBackendMismatch;
  }
  return kExitOk;
}

int cmd_table(const std::string& ensemble, const std::string& k1r, const std::string& k2r,
              const std::string& n1r, const std::string& n2r, const std::string& format,
              const std::string& out_path, bool factored) {
  const Ensemble e = parse_ensemble(ensemble);
  const Range K1 = parse_range(k1r), K2 = parse_range(k2r);
  const Range N1 = parse_range(n1r), N2 = parse_range(n2r);

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open --out file " + out_path);
    os = &file;
  }

  bool all_match = true;
  std::vector<CoeffRow> rows;
  for (unsigned k1 = K1.lo; k1 <= K1.hi && !K1.empty(); ++k1)
    for (unsigned k2 = K2.lo; k2 <= K2.hi && !K2.empty(); ++k2)
      for (unsigned n1 = N1.lo; n1 <= N1.hi && !N1.empty(); ++n1)
        for (unsigned n2 = N2.lo; n2 <= N2.hi && !N2.empty(); ++n2) {
          const CoeffQuery q{e, k1, k2, n1, n2};
          try {
            validate(q);
          } catch (const InvalidQuery&) {
            continue;  // grid corners outside the domain are skipped
          }
          rows.push_back(compute_row(q, "both"));
          all_match = all_match && rows.back().match;
        }

  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json row;
      row["ensemble"] = ensemble;
      row["k1"] = r.query.k1;
      row["k2"] = r.query.k2;
      row["n1"] = r.query.n1;
      row["n2"] = r.query.n2;
      row["exponent"] = r.primary.exponent;
      row["value_comb"] = value_string(r.primary.value, factored);
      row["value_det"] = value_string(r.secondary->value, factored);
      row["match"] = r.match ? "ok" : "MISMATCH";
      arr.push_back(std::move(row));
    }
    *os << arr.dump(2) << "\n";
  } else {
    *os << "ensemble,k1,k2,n1,n2,exponent,value_comb,value_det,match\n";
    for (const auto& r : rows)
      *os << ensemble << "," << r.query.k1 << "," << r.query.k2 << "," << r.query.n1 << ","
          << r.query.n2 << "," << r.primary.exponent << ","
          << value_string(r.primary.value, factored) << ","
          << value_string(r.secondary->value, factored) << ","
          << (r.match ? "ok" : "MISMATCH") << "\n";
  }
  return all_match ? kExitOk : kExitBackendMismatch;
}

int cmd_verify(const std::string& suite, unsigned max_k, unsigned max_n, unsigned trials,
               std::uint64_t seed) {
  std::vector<CheckResult> results;

  if (suite == "props") {
    auto det = run_contour_det_suite(std::min(max_k, 3u), 3);
    results.insert(results.end(), det.begin(), det.end());
    auto gam = run_contour_gamma_suite(std::min(max_k, 3u), 4);
    results.insert(results.end(), gam.begin(), gam.end());
  } else if (suite == "lemmas") {
    results = run_shift_derivative_suite(std::min(max_n, 6u), std::min(max_k, 3u), trials, seed);
  } else if (suite == "gamma") {
    results = run_gamma_det_suite(std::min(max_k, 5u), 6);
  } else if (suite == "closed") {
    for (unsigned n = 1; n <= max_n; ++n) {
      for (Ensemble e : {Ensemble::Sp, Ensemble::SO}) {
        CheckResult r;
        r.identity = "closed_form";
        r.params = ensemble_name(e) + " n=" + std::to_string(n);
        const Rational comb = leading_coeff_comb({e, 0, 1, 0, n}).value;
        const Rational closed = first_moment_closed_form(e, n);
        r.pass = comb == closed;
        if (!r.pass)
          r.witness = "comb=" + to_string(comb) + " closed=" + to_string(closed);
        results.push_back(std::move(r));
      }
    }
  } else if (suite == "cross") {
    for (Ensemble e : {Ensemble::Sp, Ensemble::SO})
      for (unsigned k1 = 0; k1 <= max_k; ++k1)
        for (unsigned k2 = 0; k1 + k2 <= max_k; ++k2) {
          if (k1 + k2 == 0) continue;
          for (unsigned n1 = 0; n1 <= max_n; ++n1)
            for (unsigned n2 = n1; n2 <= max_n; ++n2) {
              CheckResult r;
              r.identity = "cross_formula";
              r.params = ensemble_name(e) + " k=(" + std::to_string(k1) + "," +
                         std::to_string(k2) + ") n=(" + std::to_string(n1) + "," +
                         std::to_string(n2) + ")";
              const CoeffQuery q{e, k1, k2, n1, n2};
              const Rational det = leading_coeff_det(q).value;
              const Rational comb = leading_coeff_comb(q).value;
              r.pass = det == comb;
              if (!r.pass)
                r.witness = "det=" + to_string(det) + " comb=" + to_string(comb);
              results.push_back(std::move(r));
            }
        }
  } else {
    throw InvalidQuery("invalid query: unknown suite '" + suite + "'");
  }

  std::size_t failures = 0;
  json arr = json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    json row;
    row["identity"] = r.identity;
    row["params"] = r.params;
    row["pass"] = r.pass;
    if (!r.pass) row["witness"] = r.witness;
    arr.push_back(std::move(row));
  }
  json out;
  out["suite"] = suite;
  out["total"] = results.size();
  out["failures"] = failures;
  out["results"] = std::move(arr);
  std::cout << out.dump(2) << "\n";
  return failures == 0 ? kExitOk : kExitIdentityFailure;
}

int cmd_mc(const std::string& ensemble, unsigned N, unsigned k1, unsigned k2, unsigned n1,
           unsigned n2, std::uint64_t samples, std::uint64_t seed, bool oracle,
           unsigned threads) {
  const CoeffQuery q{parse_ensemble(ensemble), k1, k2, n1, n2};
  validate(q);
  if (oracle && N > 2) {
    std::cerr << "--oracle needs N <= 2 (exact quadrature is only available there)\n";
    return kExitUnsupportedOracle;
  }

  McOptions opts;
  opts.threads = threads;
  const AsymptoticReport rep = asymptotic_report(q, N, samples, seed, opts);

  json out;
  out["ensemble"] = ensemble;
  out["N"] = N;
  out["k1"] = k1;
  out["k2"] = k2;
  out["n1"] = n1;
  out["n2"] = n2;
  out["count"] = rep.estimate.sample_count;
  out["discarded"] = rep.estimate.discarded;
  out["seed"] = seed;
  out["mean"] = rep.estimate.mean;
  out["stderr"] = rep.estimate.std_error;
  out["coeff"] = to_string(rep.coeff);
  out["exponent"] = rep.exponent;
  out["sign"] = rep.sign;
  out["predicted"] = rep.predicted;
  out["ratio"] = rep.ratio;
  out["ratio_stderr"] = rep.ratio_std_error;
  out["z"] = rep.z;
  if (oracle) {
    const double quad = weyl_quadrature_moment(q.ensemble, N, k1, k2, n1, n2);
    out["quadrature"] = quad;
    out["z_quadrature"] = rep.estimate.std_error > 0
                              ? (rep.estimate.mean - quad) / rep.estimate.std_error
                              : 0.0;
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joint moments of characteristic-polynomial derivatives over Sp(2N), "
               "SO(2N) and O^-(2N): exact coefficients, verification, Monte Carlo"};
  app.require_subcommand(1);
  app.set_config("--config");

  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "worker threads for Monte Carlo runs");

  std::string ensemble, backend = "comb", format = "text", table_format = "csv",
      out_path, suite;
  unsigned k1 = 0, k2 = 0, n1 = 0, n2 = 0, N = 1;
  std::string k1r = "0:0", k2r = "0:0", n1r = "0:0", n2r = "0:0";
  bool factored = false, decimal = false, oracle = false;
  unsigned max_k = 4, max_n = 5, trials = 50;
  std::uint64_t samples = 100000, seed = 1;

  auto* coeff = app.add_subcommand("coeff", "one coefficient and its scaling exponent");
  coeff->add_option("--ensemble", ensemble)->required()->check(CLI::IsMember({"sp", "so", "ominus"}));
  coeff->add_option("--k1", k1)->required();
  coeff->add_option("--k2", k2)->required();
  coeff->add_option("--n1", n1)->required();
  coeff->add_option("--n2", n2)->required();
  coeff->add_option("--backend", backend)->check(CLI::IsMember({"det", "comb", "both"}));
  coeff->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
  coeff->add_flag("--factored", factored, "prime-factorized rendering");
  coeff->add_flag("--decimal", decimal, "append a decimal rendering");

  auto* table = app.add_subcommand("table", "coefficient grid, both backends");
  table->add_option("--ensemble", ensemble)->required()->check(CLI::IsMember({"sp", "so", "ominus"}));
  table->add_option("--k1-range", k1r);
  table->add_option("--k2-range", k2r);
  table->add_option("--n1-range", n1r);
  table->add_option("--n2-range", n2r);
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path);
  table->add_flag("--factored", factored);

  auto* verify = app.add_subcommand("verify", "identity and cross-check suites");
  verify->add_option("--suite", suite)->required()
      ->check(CLI::IsMember({"props", "lemmas", "gamma", "closed", "cross"}));
  verify->add_option("--max-k", max_k);
  verify->add_option("--max-n", max_n);
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);

  auto* mc = app.add_subcommand("mc", "Haar Monte Carlo against the asymptotic law");
  mc->add_option("--ensemble", ensemble)->required()->check(CLI::IsMember({"sp", "so", "ominus"}));
  mc->add_option("--N", N)->required();
  mc->add_option("--k1", k1)->required();
  mc->add_option("--k2", k2)->required();
  mc->add_option("--n1", n1)->required();
  mc->add_option("--n2", n2)->required();
  mc->add_option("--samples", samples);
  mc->add_option("--seed", seed);
  mc->add_flag("--oracle", oracle, "compare against exact quadrature (N <= 2)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (coeff->parsed())
      return cmd_coeff(ensemble, k1, k2, n1, n2, backend, format, factored, decimal);
    if (table->parsed())
      return cmd_table(ensemble, k1r, k2r, n1r, n2r, table_format, out_path, factored);
    if (verify->parsed()) return cmd_verify(suite, max_k, max_n, trials, seed);
    if (mc->parsed())
      return cmd_mc(ensemble, N, k1, k2, n1, n2, samples, seed, oracle, threads);
  } catch (const InvalidQuery& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidQuery;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidQuery;
  }
  return kExitOk;
}
