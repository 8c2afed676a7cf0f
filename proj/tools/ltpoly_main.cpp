// Batch front end: orthonormality sweeps, analytic-identity suites, expansion
// experiments, single integrals, and convergence tables with deterministic
// CSV/JSON output.
//
// Exit status: 0 all executed checks pass, 1 a check failed its stated
// tolerance, 2 usage error.  No environment variables are consulted; every
// run is reproducible from its flags alone.
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltpoly/analytic_checks.hpp"
#include "ltpoly/expansions.hpp"
#include "ltpoly/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr double kUlpTolerance = 8.0;

struct AlphaRange {
  int lo = 0;
  int hi = 0;
};

// "A:B" or a single "A"; LTP validity caps alpha at 2.
AlphaRange parse_alpha_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    size_t used = 0;
    if (colon == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--alpha", "expected INT or LO:HI, got '" + text + "'");
  }
}

ltpoly::BigRational parse_decimal(const std::string& flag, const std::string& text) {
  try {
    return ltpoly::rational_from_decimal(text);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "'" + text + "' is not a decimal number");
  }
}

// Short fixed-notation rendering for log lines (full precision lives in the
// CSV/JSON paths, which use sci_string).
std::string brief(const ltpoly::Real& v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << v.to_double();
  return os.str();
}

// Deterministic rational draw r = k/64 in (0, cap]; plain modulo keeps the
// stream identical across standard libraries.
ltpoly::BigRational draw_radius(std::mt19937_64& eng, long cap) {
  const std::uint64_t k = eng() % static_cast<std::uint64_t>(64 * cap) + 1;
  ltpoly::BigRational r(static_cast<long>(k), 64);
  r.canonicalize();
  return r;
}

int run_ortho(const AlphaRange& alpha, int lmax, int nmax, long precision) {
  const ltpoly::PrecisionContext ctx(precision);
  (void)ctx;
  long checked = 0, bad = 0;
  for (int a = alpha.lo; a <= alpha.hi; ++a)
    for (int l = 0; l <= lmax; ++l) {
      long block_bad = 0;
      for (int n = l + 1; n <= l + nmax; ++n)
        for (int np = l + 1; np <= l + nmax; ++np) {
          const auto r = ltpoly::weighted_inner(a, l, n, np);
          ++checked;
          const bool ok = r.value.is_rational() &&
                          r.value.rational_value() == ltpoly::BigRational(r.expected);
          if (!ok) {
            ++bad;
            ++block_bad;
            std::cout << "MISMATCH alpha=" << a << " l=" << l << " n=" << n << " n'=" << np
                      << " expected " << r.expected << "\n";
          }
        }
      std::cout << "alpha=" << a << " l=" << l << ": " << nmax << "x" << nmax
                << " inner-product matrix "
                << (block_bad == 0 ? "= identity (exact)" : "HAS MISMATCHES") << "\n";
    }
  std::cout << "ortho: " << (bad == 0 ? "PASS" : "FAIL") << " (" << checked
            << " exact inner products, " << bad << " mismatches)\n";
  return bad == 0 ? kExitPass : kExitCheckFailure;
}

int run_checks(const AlphaRange& alpha, int lmax, int nmax, int qmax, int points,
               std::uint64_t seed, long precision) {
  const ltpoly::PrecisionContext ctx(precision);
  int failures = 0;

  long convention = 0;
  for (int a = alpha.lo; a <= alpha.hi; ++a)
    for (int l = 0; l <= lmax; ++l)
      for (int n = l + 1; n <= l + nmax; ++n) {
        const ltpoly::LtpIndices idx{a, n, l};
        if (!(ltpoly::ltp_standard_convention(idx) == ltpoly::ltp_poly(idx))) {
          std::cout << "convention mismatch at alpha=" << a << " n=" << n << " l=" << l << "\n";
          ++failures;
        }
        ++convention;
      }
  std::cout << "convention bridge: " << convention << " exact polynomial equalities\n";

  long odes = 0;
  for (int a = alpha.lo; a <= alpha.hi; ++a)
    for (int l = 0; l <= lmax; ++l)
      for (int n = l + 1; n <= l + nmax; ++n) {
        if (!ltpoly::ode_residual_ltp_poly(ltpoly::LtpIndices{a, n, l}).is_zero()) {
          std::cout << "LTP ODE residual nonzero at alpha=" << a << " n=" << n << " l=" << l
                    << "\n";
          ++failures;
        }
        ++odes;
      }
  for (int q = 0; q <= qmax; ++q)
    for (int p = 0; p <= q; ++p) {
      if (!ltpoly::ode_residual_glp_poly(ltpoly::GlpIndices{q, p}).is_zero()) {
        std::cout << "GLP ODE residual nonzero at mu=" << q << " nu=" << p << "\n";
        ++failures;
      }
      ++odes;
    }
  std::cout << "ODE residuals: " << odes << " exact zero polynomials\n";

  long shifts = 0;
  for (int q = 1; q <= qmax; ++q)
    for (int p = 0; p < q; ++p)
      for (int k = 1; p + k <= q; ++k) {
        if (!ltpoly::derivative_shift_check(ltpoly::GlpIndices{q, p}, k).is_zero()) {
          std::cout << "derivative shift broken at mu=" << q << " nu=" << p << " k=" << k << "\n";
          ++failures;
        }
        ++shifts;
      }
  std::cout << "derivative shifts: " << shifts << " exact zero polynomials\n";

  std::mt19937_64 eng(seed);
  const ltpoly::RadialScale scale{ltpoly::BigRational(1)};
  long potential_checks = 0;
  double worst_ulp = 0;
  for (int a = alpha.lo; a <= alpha.hi; ++a)
    for (int l = 0; l <= lmax; ++l)
      for (int n = l + 1; n <= l + nmax; ++n)
        for (int i = 0; i < points; ++i) {
          for (int attempt = 0;; ++attempt) {
            const ltpoly::BigRational r = draw_radius(eng, 4 * n);
            try {
              const auto routes = ltpoly::frictional_both_routes(
                  ltpoly::LtpIndices{a, n, l}, scale,
                  ltpoly::Real::from_rational(r, ctx.bits()), ctx);
              const double ulp = ltpoly::ulp_distance(routes.first, routes.second);
              worst_ulp = std::max(worst_ulp, ulp);
              ++potential_checks;
              if (ulp > kUlpTolerance) {
                std::cout << "frictional route disagreement alpha=" << a << " n=" << n
                          << " l=" << l << " r=" << r << " ulp=" << ulp << "\n";
                ++failures;
              }
              if ((a == 1 || n == l + 1) && !routes.first.is_zero()) {
                std::cout << "frictional term not exactly zero at alpha=" << a << " n=" << n
                          << " l=" << l << "\n";
                ++failures;
              }
              break;
            } catch (const std::domain_error&) {
              if (attempt > 100) throw;  // node hit: redraw
            }
          }
        }
  std::cout << "potential decomposition: " << potential_checks
            << " dual-route points, worst disagreement " << worst_ulp << " ulp\n";

  std::cout << "checks: " << (failures == 0 ? "PASS" : "FAIL") << " (" << failures
            << " failures)\n";
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

int run_expand(const AlphaRange& alpha, int nu, const ltpoly::BigRational& eta_star,
               const ltpoly::BigRational& xi, int N, const std::vector<std::string>& r_texts,
               long precision) {
  const ltpoly::PrecisionContext ctx(precision);
  std::vector<ltpoly::BigRational> r_points;
  for (const std::string& t : r_texts) r_points.push_back(parse_decimal("--r", t));

  const ltpoly::BigRational mu_star = eta_star + 1;  // series approximates r^{η*}e^{−ξr}
  const ltpoly::PowerFunctionSpec spec{mu_star, 0, eta_star, xi};

  int failures = 0;
  std::cout << "basis alpha nu      r           arranged      rearranged    ulp   rel_err_vs_target\n";
  for (int a = alpha.lo; a <= alpha.hi; ++a)
    for (const ltpoly::BigRational& r : r_points) {
      const ltpoly::Real arr = ltpoly::arranged_sum_ltp(a, nu, eta_star, xi, N, r, ctx);
      const ltpoly::Real rear = ltpoly::rearranged_sum_ltp(a, nu, eta_star, xi, N, r, ctx);
      const double ulp = ltpoly::ulp_distance(arr, rear);
      const ltpoly::Real target = ltpoly::target_function(spec, r, ctx);
      const ltpoly::Real rel = target.is_zero() ? abs(arr) : abs(arr - target) / abs(target);
      if (ulp > kUlpTolerance) ++failures;
      std::cout << "ltp   " << std::setw(5) << a << " " << std::setw(2) << nu << " "
                << std::setw(10) << r.get_d() << "  " << brief(arr) << "  " << brief(rear) << "  "
                << std::setw(4) << ulp << "  " << brief(rel) << "\n";
    }
  for (const ltpoly::BigRational& r : r_points) {
    const ltpoly::Real arr = ltpoly::arranged_sum_glp(nu, eta_star, xi, N, r, ctx);
    const ltpoly::Real rear = ltpoly::rearranged_sum_glp(nu, eta_star, xi, N, r, ctx);
    const double ulp = ltpoly::ulp_distance(arr, rear);
    const ltpoly::Real target = ltpoly::target_function(spec, r, ctx);
    const ltpoly::Real rel = target.is_zero() ? abs(arr) : abs(arr - target) / abs(target);
    if (ulp > kUlpTolerance) ++failures;
    std::cout << "glp       " << " " << std::setw(2) << nu << " " << std::setw(10) << r.get_d()
              << "  " << brief(arr) << "  " << brief(rear) << "  " << std::setw(4) << ulp << "  "
              << brief(rel) << "\n";
  }
  std::cout << "expand: " << (failures == 0 ? "PASS" : "FAIL")
            << " (rearrangement identity at " << kUlpTolerance
            << " ulp; reconstruction errors are informational)\n";
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

ltpoly::SeriesMethod method_from_name(const std::string& name, std::optional<int> alpha) {
  using ltpoly::SeriesBasis;
  using ltpoly::SeriesForm;
  if (name == "ltp-arranged") return {SeriesBasis::ltp, SeriesForm::arranged, alpha};
  if (name == "ltp-rearranged") return {SeriesBasis::ltp, SeriesForm::rearranged, alpha};
  if (name == "glp-arranged") return {SeriesBasis::glp, SeriesForm::arranged, std::nullopt};
  if (name == "glp-rearranged") return {SeriesBasis::glp, SeriesForm::rearranged, std::nullopt};
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

int run_integral(const ltpoly::IntegralSpec& spec, const std::string& method,
                 std::optional<int> alpha, int nu, int N, long precision) {
  const ltpoly::PrecisionContext ctx(precision);
  ltpoly::Real value;
  if (method == "analytic") {
    value = ltpoly::analytic_I(spec, ctx);
  } else {
    const ltpoly::SeriesMethod m = method_from_name(method, alpha);
    if (m.basis == ltpoly::SeriesBasis::ltp && !alpha.has_value())
      throw CLI::ValidationError("--alpha", "LTP series methods require --alpha");
    value = ltpoly::series_I(spec, m, nu, N, ctx);
  }
  std::cout << value.sci_string() << "\n";
  return kExitPass;
}

int run_converge(const ltpoly::IntegralSpec& spec, const AlphaRange& alpha, int nu, int N_max,
                 const std::vector<std::string>& method_names, const std::string& out_path,
                 const std::string& format, const std::string& tol_text, long precision) {
  const ltpoly::PrecisionContext ctx(precision);
  std::vector<ltpoly::SeriesMethod> methods;
  for (const std::string& name : method_names) {
    if (name == "glp-arranged" || name == "glp-rearranged") {
      methods.push_back(method_from_name(name, std::nullopt));
    } else {
      for (int a = alpha.lo; a <= alpha.hi; ++a) methods.push_back(method_from_name(name, a));
    }
  }

  const auto rows = ltpoly::convergence_table(spec, methods, nu, N_max, ctx);
  const std::string body = format == "json" ? ltpoly::json_string(rows) : ltpoly::csv_string(rows);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
    out << body;
  }

  int failures = 0;
  // Paired-form identity: arranged vs rearranged of the same basis/α/N.
  for (const auto& row : rows) {
    if (row.method != "ltp-arranged" && row.method != "glp-arranged") continue;
    const std::string partner_name =
        row.method == "ltp-arranged" ? "ltp-rearranged" : "glp-rearranged";
    for (const auto& other : rows) {
      if (other.method != partner_name || other.alpha != row.alpha || other.N != row.N) continue;
      const double ulp = ltpoly::ulp_distance(row.value, other.value);
      if (ulp > kUlpTolerance) {
        if (failures == 0)
          std::cerr << "first failing row: " << row.method << ",alpha="
                    << (row.alpha ? std::to_string(*row.alpha) : std::string("-"))
                    << ",N=" << row.N << " differs from " << partner_name << " by " << ulp
                    << " ulp\n";
        ++failures;
      }
    }
  }
  if (!tol_text.empty()) {
    const ltpoly::BigRational tol = parse_decimal("--tol", tol_text);
    const ltpoly::Real tol_r = ltpoly::Real::from_rational(tol, ctx.bits());
    for (const auto& row : rows) {
      if (row.N != N_max) continue;
      if (tol_r < row.rel_err) {
        if (failures == 0)
          std::cerr << "first failing row: " << row.method << ",alpha="
                    << (row.alpha ? std::to_string(*row.alpha) : std::string("-")) << ",N=" << row.N
                    << " rel_err=" << brief(row.rel_err) << " exceeds --tol\n";
        ++failures;
      }
    }
  }
  return failures == 0 ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laguerre-type polynomial toolkit: exact orthonormal bases, analytic checks, "
               "power-function expansions, and STO radial-integral convergence tables"};
  app.require_subcommand(1);

  std::string alpha_text = "-2:2";
  int lmax = 3, nmax = 10, qmax = 14, nu = 0, N = 40, points = 20;
  long precision = 256;
  std::uint64_t seed = 20240915;
  std::string etastar_text = "0.5", xi_text = "0", zeta_text = "3.56", zetap_text = "4.65";
  std::string nstar_text = "2.3", npstar_text = "4.6", mustar_text = "1.1";
  std::string method = "analytic", out_path, format = "csv", tol_text;
  std::vector<std::string> r_texts = {"0.1", "0.5", "1", "2", "5"};
  std::vector<std::string> method_names = {"ltp-arranged", "ltp-rearranged"};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "mantissa bits (>= 64)")->capture_default_str();
  };

  CLI::App* ortho = app.add_subcommand("ortho", "exact weighted orthonormality sweep");
  ortho->add_option("--alpha", alpha_text, "alpha or LO:HI range")->capture_default_str();
  ortho->add_option("--lmax", lmax, "largest orbital index l")->capture_default_str();
  ortho->add_option("--nmax", nmax, "states per l: n = l+1 .. l+nmax")->capture_default_str();
  add_common(ortho);

  CLI::App* checks = app.add_subcommand("checks", "polynomial identities, ODEs, potentials");
  checks->add_option("--alpha", alpha_text, "alpha or LO:HI range")->capture_default_str();
  checks->add_option("--lmax", lmax, "largest orbital index l")->capture_default_str();
  checks->add_option("--nmax", nmax, "states per l: n = l+1 .. l+nmax")->capture_default_str();
  checks->add_option("--qmax", qmax, "largest GLP degree mu")->capture_default_str();
  checks->add_option("--points", points, "random radial points per index set")
      ->capture_default_str();
  checks->add_option("--seed", seed, "RNG seed for radial points")->capture_default_str();
  add_common(checks);

  CLI::App* expand = app.add_subcommand("expand", "series expansion of r^{eta*}e^{-xi r}");
  expand->add_option("--alpha", alpha_text, "alpha or LO:HI range")->capture_default_str();
  expand->add_option("--nu", nu, "expansion angular index")->capture_default_str();
  expand->add_option("--etastar", etastar_text, "fractional power eta* in [0,1)")
      ->capture_default_str();
  expand->add_option("--xi", xi_text, "screening parameter xi >= 0")->capture_default_str();
  expand->add_option("--Nmax,--N", N, "truncation order")->capture_default_str();
  expand->add_option("--r", r_texts, "evaluation points")->capture_default_str();
  add_common(expand);

  CLI::App* integral = app.add_subcommand("integral", "one STO radial integral");
  integral->add_option("--nstar", nstar_text, "bra principal quantum number n*")
      ->capture_default_str();
  integral->add_option("--npstar", npstar_text, "ket principal quantum number n'*")
      ->capture_default_str();
  integral->add_option("--zeta", zeta_text, "bra orbital exponent")->capture_default_str();
  integral->add_option("--zetap", zetap_text, "ket orbital exponent")->capture_default_str();
  integral->add_option("--mustar", mustar_text, "potential power mu* >= 1")->capture_default_str();
  integral->add_option("--xi", xi_text, "screening parameter xi >= 0")->capture_default_str();
  integral->add_option("--method", method,
                       "analytic | ltp-arranged | ltp-rearranged | glp-arranged | glp-rearranged")
      ->capture_default_str();
  std::optional<int> alpha_single;
  integral->add_option("--alpha", alpha_single, "alpha for LTP series methods");
  integral->add_option("--nu", nu, "expansion angular index")->capture_default_str();
  integral->add_option("--N,--Nmax", N, "series truncation order")->capture_default_str();
  add_common(integral);

  CLI::App* converge = app.add_subcommand("converge", "convergence table for all series routes");
  converge->add_option("--nstar", nstar_text, "bra principal quantum number n*")
      ->capture_default_str();
  converge->add_option("--npstar", npstar_text, "ket principal quantum number n'*")
      ->capture_default_str();
  converge->add_option("--zeta", zeta_text, "bra orbital exponent")->capture_default_str();
  converge->add_option("--zetap", zetap_text, "ket orbital exponent")->capture_default_str();
  converge->add_option("--mustar", mustar_text, "potential power mu* >= 1")->capture_default_str();
  converge->add_option("--xi", xi_text, "screening parameter xi >= 0")->capture_default_str();
  converge->add_option("--alpha", alpha_text, "alpha or LO:HI range for LTP methods")
      ->capture_default_str();
  converge->add_option("--nu", nu, "expansion angular index")->capture_default_str();
  converge->add_option("--Nmax", N, "largest truncation order")->capture_default_str();
  converge->add_option("--methods", method_names,
                       "series routes (ltp-arranged ltp-rearranged glp-arranged glp-rearranged)")
      ->capture_default_str();
  converge->add_option("--out", out_path, "write report to this path instead of stdout");
  converge->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  converge->add_flag_callback("--json", [&format]() { format = "json"; },
                              "shorthand for --format json");
  converge->add_option("--tol", tol_text, "also require rel_err <= TOL at Nmax");
  add_common(converge);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (precision < 64) throw CLI::ValidationError("--precision", "needs at least 64 bits");
    const AlphaRange alpha = parse_alpha_range(alpha_text);

    if (app.got_subcommand(ortho)) return run_ortho(alpha, lmax, nmax, precision);
    if (app.got_subcommand(checks))
      return run_checks(alpha, lmax, nmax, qmax, points, seed, precision);
    if (app.got_subcommand(expand))
      return run_expand(alpha, nu, parse_decimal("--etastar", etastar_text),
                        parse_decimal("--xi", xi_text), N, r_texts, precision);

    const ltpoly::IntegralSpec spec{
        {parse_decimal("--nstar", nstar_text), parse_decimal("--zeta", zeta_text)},
        {parse_decimal("--npstar", npstar_text), parse_decimal("--zetap", zetap_text)},
        parse_decimal("--mustar", mustar_text),
        parse_decimal("--xi", xi_text)};
    if (app.got_subcommand(integral))
      return run_integral(spec, method, alpha_single, nu, N, precision);
    return run_converge(spec, alpha, nu, N, method_names, out_path, format, tol_text, precision);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
