#include "qhl/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qhl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw std::invalid_argument("bad numeric value for key '" + key + "': " + v);
  }
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

MomentMode mode_from_string(const std::string& m) {
  if (m == "first") return MomentMode::first_moment;
  if (m == "ratios") return MomentMode::ratios;
  if (m == "logderiv") return MomentMode::logderiv;
  throw std::invalid_argument("mode must be first, ratios or logderiv, got '" + m + "'");
}

std::string mode_to_string(MomentMode m) {
  switch (m) {
    case MomentMode::first_moment:
      return "first";
    case MomentMode::ratios:
      return "ratios";
    default:
      return "logderiv";
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "field") {
      cfg.fields.clear();
      for (const auto& f : split(val, ',')) {
        cfg.fields.push_back(static_cast<int>(parse_double(trim(f), key)));
        FieldId check(cfg.fields.back());
      }
    } else if (key == "mode") {
      mode_from_string(val);
      cfg.mode = val;
    } else if (key == "alpha") {
      cfg.alpha = parse_double(val, key);
      if (!(std::abs(cfg.alpha) > 0.0 && std::abs(cfg.alpha) < 0.5)) {
        throw std::invalid_argument(
            "alpha=" + val + " violates the theorem range 0 < |Re(alpha)| < 1/2");
      }
    } else if (key == "beta") {
      cfg.beta = parse_double(val, key);
      if (!(cfg.beta > 0.0)) {
        throw std::invalid_argument("beta=" + val + " violates the theorem range Re(beta) > 0");
      }
    } else if (key == "r") {
      cfg.r = parse_double(val, key);
      if (!(cfg.r > 0.0 && cfg.r < 0.5)) {
        throw std::invalid_argument("r=" + val + " violates the theorem range 0 < Re(r) < 1/2");
      }
    } else if (key == "X") {
      cfg.x_grid.clear();
      for (const auto& x : split(val, ',')) {
        const double xv = parse_double(trim(x), key);
        if (!(xv > 0.0)) throw std::invalid_argument("X must be positive");
        cfg.x_grid.push_back(xv);
      }
    } else if (key == "weight") {
      if (val != "bump" && val != "gamma") {
        throw std::invalid_argument("weight must be bump or gamma, got '" + val + "'");
      }
      cfg.weight = val;
    } else if (key == "eps") {
      cfg.eps_l = parse_double(val, key);
      if (!(cfg.eps_l > 0.0 && cfg.eps_l < 1e-3)) {
        throw std::invalid_argument("eps must lie in (0, 1e-3)");
      }
    } else if (key == "workers") {
      cfg.workers = static_cast<int>(parse_double(val, key));
      if (cfg.workers < 1 || cfg.workers > 256) {
        throw std::invalid_argument("workers must lie in [1, 256]");
      }
    } else if (key == "out") {
      cfg.out_path = val;
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

MomentRequest request_from_config(const RunConfig& cfg, int field_d, double X) {
  MomentRequest req;
  req.field = FieldId(field_d);
  req.X = X;
  req.mode = mode_from_string(cfg.mode);
  req.alpha = {cfg.alpha, 0.0};
  req.beta = {cfg.beta, 0.0};
  req.r = {cfg.r, 0.0};
  req.weight = cfg.weight == "bump" ? WeightSpec::bump() : WeightSpec::gamma_weight();
  req.eps_l = cfg.eps_l;
  req.workers = cfg.workers;
  return req;
}

std::string emit_report_json(const MomentReport& rep) {
  nlohmann::ordered_json j;
  j["field"] = rep.request.field.d();
  j["mode"] = mode_to_string(rep.request.mode);
  j["X"] = rep.request.X;
  j["alpha_re"] = rep.request.alpha.real();
  j["alpha_im"] = rep.request.alpha.imag();
  j["beta_re"] = rep.request.beta.real();
  j["beta_im"] = rep.request.beta.imag();
  j["r_re"] = rep.request.r.real();
  j["r_im"] = rep.request.r.imag();
  j["weight"] = rep.request.weight.compact_support() ? "bump" : "gamma";
  j["eps_l"] = rep.request.eps_l;
  j["workers"] = rep.request.workers;
  j["lhs_re"] = rep.lhs.real();
  j["lhs_im"] = rep.lhs.imag();
  j["main1_re"] = rep.main1.real();
  j["main1_im"] = rep.main1.imag();
  j["main2_re"] = rep.main2.real();
  j["main2_im"] = rep.main2.imag();
  j["residual_re"] = rep.residual.real();
  j["residual_im"] = rep.residual.imag();
  j["predicted_exponent"] = rep.predicted_exponent;
  j["num_c"] = rep.num_c;
  j["skipped_c"] = rep.skipped_c;
  j["fitted_constant"] = rep.fitted_constant;
  return j.dump(2);
}

MomentReport parse_report_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  MomentRequest req;
  req.field = FieldId(j.at("field").get<int>());
  req.X = j.at("X").get<double>();
  req.mode = mode_from_string(j.at("mode").get<std::string>());
  req.alpha = {j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()};
  req.beta = {j.at("beta_re").get<double>(), j.at("beta_im").get<double>()};
  req.r = {j.at("r_re").get<double>(), j.at("r_im").get<double>()};
  req.weight = j.at("weight").get<std::string>() == "bump" ? WeightSpec::bump()
                                                           : WeightSpec::gamma_weight();
  req.eps_l = j.at("eps_l").get<double>();
  req.workers = j.at("workers").get<int>();
  MomentReport rep{req,
                   {j.at("lhs_re").get<double>(), j.at("lhs_im").get<double>()},
                   {j.at("main1_re").get<double>(), j.at("main1_im").get<double>()},
                   {j.at("main2_re").get<double>(), j.at("main2_im").get<double>()},
                   {j.at("residual_re").get<double>(), j.at("residual_im").get<double>()},
                   j.at("predicted_exponent").get<double>(),
                   j.at("num_c").get<int64>(),
                   j.at("skipped_c").get<int64>(),
                   j.at("fitted_constant").get<double>()};
  return rep;
}

std::string report_csv_header() {
  return "field,mode,X,alpha,beta,r,weight,lhs_re,lhs_im,main1_re,main1_im,"
         "main2_re,main2_im,residual_re,residual_im,predicted_exponent,"
         "num_c,skipped_c,fitted_constant";
}

std::string report_csv_row(const MomentReport& rep) {
  std::ostringstream out;
  out << rep.request.field.d() << ',' << mode_to_string(rep.request.mode) << ','
      << fmt17(rep.request.X) << ',' << fmt17(rep.request.alpha.real()) << ','
      << fmt17(rep.request.beta.real()) << ',' << fmt17(rep.request.r.real()) << ','
      << (rep.request.weight.compact_support() ? "bump" : "gamma") << ','
      << fmt17(rep.lhs.real()) << ',' << fmt17(rep.lhs.imag()) << ','
      << fmt17(rep.main1.real()) << ',' << fmt17(rep.main1.imag()) << ','
      << fmt17(rep.main2.real()) << ',' << fmt17(rep.main2.imag()) << ','
      << fmt17(rep.residual.real()) << ',' << fmt17(rep.residual.imag()) << ','
      << fmt17(rep.predicted_exponent) << ',' << rep.num_c << ',' << rep.skipped_c << ','
      << fmt17(rep.fitted_constant);
  return out.str();
}

}  // namespace qhl
