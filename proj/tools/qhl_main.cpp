// Command-line surface: residue symbols, primary normalization, Gauss-sum
// checks, L-values, Euler products, moment experiments and X-grid sweeps.
// Exit codes: 0 success, 2 validation failure, 3 numerical-budget violation.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qhl/euler_products.hpp"
#include "qhl/gauss.hpp"
#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/lfunction.hpp"
#include "qhl/moments.hpp"
#include "qhl/primary.hpp"
#include "qhl/report.hpp"
#include "qhl/symbols.hpp"

using namespace qhl;

namespace {

cplx parse_complex(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) return {std::stod(text), 0.0};
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

std::vector<QuadInt> odd_box(FieldId f, int64 maxnorm) {
  std::vector<QuadInt> out;
  const int64 box = isqrt64(4 * maxnorm) + 1;
  for (int64 a = -box; a <= box; ++a) {
    for (int64 b = -box; b <= box; ++b) {
      const QuadInt x(a, b, f);
      if (!x.is_zero() && norm(x) <= maxnorm && is_odd(x)) out.push_back(x);
    }
  }
  return out;
}

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << payload << "\n";
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig{};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

int run(int argc, char** argv) {
  CLI::App app{"quadratic Hecke L-function toolkit for the nine class-number-one "
               "imaginary quadratic fields"};
  app.require_subcommand(1);

  // ---- symbol ----
  std::string sym_a, sym_n;
  bool sym_fast = false;
  auto* sym = app.add_subcommand("symbol", "evaluate the quadratic residue symbol (a/n)");
  sym->add_option("a", sym_a, "numerator, canonical form a+b*w@d")->required();
  sym->add_option("n", sym_n, "odd denominator, canonical form a+b*w@d")->required();
  sym->add_flag("--fast", sym_fast, "use the reciprocity loop (Euclidean fields)");

  // ---- primary ----
  std::string prim_elem;
  auto* prim = app.add_subcommand("primary", "primary normalization");
  auto* prim_norm = prim->add_subcommand("normalize", "print u and u*n with u*n primary");
  prim_norm->add_option("elem", prim_elem, "odd element a+b*w@d")->required();

  // ---- gauss ----
  int gauss_d = -1;
  int64 gauss_maxnorm = 200;
  std::string gauss_out;
  auto* gauss = app.add_subcommand("gauss", "Gauss-sum closed form vs brute force");
  auto* gauss_check = gauss->add_subcommand("check", "CSV of (n, closed, brute, absdiff)");
  gauss_check->add_option("--field", gauss_d, "field d")->required();
  gauss_check->add_option("--maxnorm", gauss_maxnorm, "largest N(n)");
  gauss_check->add_option("--out", gauss_out, "output path (default stdout)");

  // ---- lvalue ----
  int lv_d = -1;
  std::string lv_c = "1+0*w@-1", lv_s = "0.5";
  double lv_eps = 1e-9;
  bool lv_csv = false;
  auto* lv = app.add_subcommand("lvalue", "evaluate L(s, chi^(c_K c))");
  lv->add_option("--field", lv_d, "field d")->required();
  lv->add_option("--c", lv_c, "twist c, canonical form (odd square-free primary)")->required();
  lv->add_option("--s", lv_s, "point re[,im]")->required();
  lv->add_option("--eps", lv_eps, "error budget");
  lv->add_flag("--csv", lv_csv, "emit a CSV row instead of text");

  // ---- products ----
  int pr_d = -1;
  std::string pr_w = "0.75", pr_z;
  int64 pr_bound = 20000;
  auto* pr = app.add_subcommand("products", "Euler products P(w) and P(w,z)");
  pr->add_option("--field", pr_d, "field d")->required();
  pr->add_option("--w", pr_w, "w as re[,im]")->required();
  pr->add_option("--z", pr_z, "z as re[,im]; omit for P(w)");
  pr->add_option("--bound", pr_bound, "head prime-norm bound");

  // ---- moment ----
  std::string mom_config, mom_out, mom_mode, mom_weight;
  int mom_d = 0, mom_workers = 0;
  double mom_alpha = 0.0, mom_beta = 0.0, mom_r = 0.0, mom_X = 0.0;
  auto* mom = app.add_subcommand("moment", "one family-sum experiment vs its main terms");
  mom->add_option("--config", mom_config, "key=value config file");
  mom->add_option("--field", mom_d, "field d (overrides config)");
  mom->add_option("--mode", mom_mode, "first|ratios|logderiv");
  mom->add_option("--alpha", mom_alpha, "shift alpha");
  mom->add_option("--beta", mom_beta, "shift beta (ratios)");
  mom->add_option("--r", mom_r, "shift r (logderiv)");
  mom->add_option("--X", mom_X, "scale X");
  mom->add_option("--weight", mom_weight, "bump|gamma");
  mom->add_option("--workers", mom_workers, "worker threads");
  mom->add_option("--out", mom_out, "output path for the JSON report");

  // ---- sweep ----
  std::string sw_config, sw_out, sw_mode, sw_grid;
  int sw_d = 0, sw_workers = 0;
  double sw_alpha = 0.0, sw_beta = 0.0, sw_r = 0.0;
  auto* sw = app.add_subcommand("sweep", "X-grid sweep emitting CSV rows");
  sw->add_option("--config", sw_config, "key=value config file");
  sw->add_option("--field", sw_d, "field d (overrides config)");
  sw->add_option("--mode", sw_mode, "first|ratios|logderiv");
  sw->add_option("--alpha", sw_alpha, "shift alpha");
  sw->add_option("--beta", sw_beta, "shift beta (ratios)");
  sw->add_option("--r", sw_r, "shift r (logderiv)");
  sw->add_option("--X-grid", sw_grid, "comma list, e.g. 250,500,1000,2000,4000");
  sw->add_option("--workers", sw_workers, "worker threads");
  sw->add_option("--out", sw_out, "output path for the CSV");

  // ---- selftest ----
  int st_d = -1;
  int64 st_maxnorm = 300;
  auto* st = app.add_subcommand("selftest", "exhaustive symbol/reciprocity self-tests");
  st->add_option("--field", st_d, "field d");
  st->add_option("--maxnorm", st_maxnorm, "norm bound for the exhaustive checks");

  app.parse(argc, argv);

  if (sym->parsed()) {
    const QuadInt a = parse_quadint(sym_a);
    const QuadInt n = parse_quadint(sym_n);
    const int v = sym_fast ? symbol_fast(a, n) : symbol(a, n);
    std::printf("%+d\n", v);
    return 0;
  }

  if (prim->parsed()) {
    if (!prim_norm->parsed()) throw std::invalid_argument("usage: primary normalize <elem>");
    const QuadInt n = parse_quadint(prim_elem);
    const auto [u, np] = primary_normalize(n);
    std::printf("u  = %s\nn' = %s\n", to_string(u).c_str(), to_string(np).c_str());
    return 0;
  }

  if (gauss->parsed() && gauss_check->parsed()) {
    std::ostringstream csv;
    csv << "n,closed_re,closed_im,brute_re,brute_im,absdiff\n";
    const FieldId f(gauss_d);
    for (const QuadInt& n : odd_box(f, gauss_maxnorm)) {
      if (!is_primary(n) || is_unit(n) || !is_squarefree(n)) continue;
      const cplx closed = gauss_sum_closed(n);
      const cplx brute = gauss_sum_bruteforce(QuadInt(1, 0, f), CharacterSpec::lower(n), n);
      char row[256];
      std::snprintf(row, sizeof(row), "%s,%.17g,%.17g,%.17g,%.17g,%.3e\n",
                    to_string(n).c_str(), closed.real(), closed.imag(), brute.real(),
                    brute.imag(), std::abs(closed - brute));
      csv << row;
    }
    write_or_print(gauss_out, csv.str());
    return 0;
  }

  if (lv->parsed()) {
    const QuadInt c = parse_quadint(lv_c);
    if (c.field.d() != lv_d) throw std::invalid_argument("--field and --c disagree");
    HeckeL L(c);
    const cplx s = parse_complex(lv_s);
    const LValue v = L.value(s, lv_eps);
    if (lv_csv) {
      std::printf("field,c,s_re,s_im,L_re,L_im,abs_err,terms\n");
      std::printf("%d,%s,%.17g,%.17g,%.17g,%.17g,%.3e,%lld\n", lv_d, to_string(c).c_str(),
                  s.real(), s.imag(), v.value.real(), v.value.imag(), v.abs_error_estimate,
                  static_cast<long long>(v.terms_used));
    } else {
      std::printf("L(%.6g%+.6gi, chi^(c_K c)) = %.15g %+.15gi  (err<=%.2e, %lld theta terms)\n",
                  s.real(), s.imag(), v.value.real(), v.value.imag(), v.abs_error_estimate,
                  static_cast<long long>(v.terms_used));
    }
    return 0;
  }

  if (pr->parsed()) {
    const FieldId f(pr_d);
    const cplx w = parse_complex(pr_w);
    if (pr_z.empty()) {
      const cplx p1a = euler_P1(w, f, 1e-10, pr_bound);
      const cplx p1b = euler_P1(w, f, 1e-10, 2 * pr_bound);
      std::printf("P(w) = %.15g %+.15gi   (bound %lld; doubling drift %.2e)\n", p1a.real(),
                  p1a.imag(), static_cast<long long>(pr_bound), std::abs(p1a - p1b));
    } else {
      const cplx z = parse_complex(pr_z);
      const cplx p2a = euler_P2(w, z, f, 1e-10, pr_bound);
      const cplx p2b = euler_P2(w, z, f, 1e-10, 2 * pr_bound);
      std::printf("P(w,z) = %.15g %+.15gi   (bound %lld; doubling drift %.2e)\n", p2a.real(),
                  p2a.imag(), static_cast<long long>(pr_bound), std::abs(p2a - p2b));
    }
    return 0;
  }

  if (mom->parsed()) {
    RunConfig cfg = load_config(mom_config);
    if (mom_d != 0) cfg.fields = {mom_d};
    if (!mom_mode.empty()) cfg.mode = mom_mode;
    if (mom_alpha != 0.0) cfg.alpha = mom_alpha;
    if (mom_beta != 0.0) cfg.beta = mom_beta;
    if (mom_r != 0.0) cfg.r = mom_r;
    if (mom_X != 0.0) cfg.x_grid = {mom_X};
    if (!mom_weight.empty()) cfg.weight = mom_weight;
    if (mom_workers != 0) cfg.workers = mom_workers;
    if (!mom_out.empty()) cfg.out_path = mom_out;
    // re-validate combined settings through the config checker
    std::ostringstream echo;
    echo << "alpha=" << cfg.alpha << "\nbeta=" << cfg.beta << "\nr=" << cfg.r << "\n";
    parse_config(echo.str());

    std::ostringstream payload;
    bool first_rep = true;
    for (int d : cfg.fields) {
      for (double X : cfg.x_grid) {
        const MomentReport rep = run_moment(request_from_config(cfg, d, X));
        if (!first_rep) payload << "\n";
        payload << emit_report_json(rep);
        first_rep = false;
      }
    }
    write_or_print(cfg.out_path, payload.str());
    return 0;
  }

  if (sw->parsed()) {
    RunConfig cfg = load_config(sw_config);
    if (sw_d != 0) cfg.fields = {sw_d};
    if (!sw_mode.empty()) cfg.mode = sw_mode;
    if (sw_alpha != 0.0) cfg.alpha = sw_alpha;
    if (sw_beta != 0.0) cfg.beta = sw_beta;
    if (sw_r != 0.0) cfg.r = sw_r;
    if (sw_workers != 0) cfg.workers = sw_workers;
    if (!sw_out.empty()) cfg.out_path = sw_out;
    if (!sw_grid.empty()) {
      cfg.x_grid.clear();
      std::stringstream ss(sw_grid);
      std::string tok;
      while (std::getline(ss, tok, ',')) cfg.x_grid.push_back(std::stod(tok));
    }

    std::ostringstream csv;
    csv << report_csv_header() << ",fitted_exponent_so_far\n";
    for (int d : cfg.fields) {
      std::vector<std::pair<double, double>> residuals;
      for (double X : cfg.x_grid) {
        const MomentReport rep = run_moment(request_from_config(cfg, d, X));
        residuals.emplace_back(X, std::abs(rep.residual));
        csv << report_csv_row(rep) << ',';
        if (residuals.size() >= 3) {
          char buf[32];
          std::snprintf(buf, sizeof(buf), "%.17g", fit_exponent(residuals));
          csv << buf;
        }
        csv << "\n";
      }
    }
    write_or_print(cfg.out_path, csv.str());
    return 0;
  }

  if (st->parsed()) {
    const FieldId f(st_d);
    int64 pairs = 0;
    const auto elems = odd_box(f, st_maxnorm);
    std::vector<QuadInt> prims;
    for (const auto& x : elems) {
      if (is_primary(x) && !is_unit(x)) prims.push_back(x);
    }
    for (std::size_t i = 0; i < prims.size(); ++i) {
      for (std::size_t j = i + 1; j < prims.size(); ++j) {
        const QuadInt&n = prims[i], &m = prims[j];
        if (!ideal_gcd(ideal_of(n), ideal_of(m)).is_unit_ideal()) continue;
        const int lhs = symbol(n, m) * symbol(m, n);
        const int rhs =
            (((norm(n) - 1) / 2) % 2 == 1 && ((norm(m) - 1) / 2) % 2 == 1) ? -1 : 1;
        if (lhs != rhs) throw std::runtime_error("reciprocity violation at " + to_string(n) +
                                                 ", " + to_string(m));
        ++pairs;
      }
    }
    int64 fast_checks = 0;
    if (field_is_euclidean(f)) {
      for (std::size_t i = 0; i < elems.size(); i += 3) {
        for (std::size_t j = 1; j < elems.size(); j += 5) {
          if (symbol_fast(elems[i], elems[j]) != symbol(elems[i], elems[j])) {
            throw std::runtime_error("symbol_fast mismatch");
          }
          ++fast_checks;
        }
      }
    }
    std::printf("selftest ok: %lld reciprocity pairs, %lld fast-path agreements (field %d, "
                "maxnorm %lld)\n",
                static_cast<long long>(pairs), static_cast<long long>(fast_checks), st_d,
                static_cast<long long>(st_maxnorm));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return CLI::App{}.exit(e) == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical budget violation: %s\n", e.what());
    return 3;
  }
}
