#include "paramod/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "paramod/parafermion.hpp"

namespace paramod {

namespace {

using ordered_json = nlohmann::ordered_json;

// Doubles are emitted rounded to 15 significant digits so that serialized
// payloads survive print -> parse -> print byte-identically.
double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

ordered_json complex_json(std::complex<double> z) {
  return ordered_json{{"re", round15(z.real())}, {"im", round15(z.imag())}};
}

std::vector<long long> parse_int_list(const std::string& s) {
  std::vector<long long> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoll(cur));
  if (out.empty()) throw std::invalid_argument("empty coordinate list");
  return out;
}

unsigned long long weyl_cap_from_env() {
  const char* v = std::getenv("PARAMOD_WEYL_CAP");
  if (!v) return kDefaultWeylCap;
  return std::strtoull(v, nullptr, 10);
}

struct Output {
  std::string format = "json";
  std::string path;  // empty = stdout
  std::vector<std::string> argv;

  void emit(const ordered_json& payload, const std::string& csv, const std::string& text) const {
    std::string body;
    if (format == "json")
      body = payload.dump(2) + "\n";
    else if (format == "csv")
      body = csv;
    else
      body = text;
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << body;
    ordered_json meta{{"tool", "paramod"}, {"format", format}, {"args", argv}};
    std::ofstream mf(path + ".meta.json", std::ios::binary);
    mf << meta.dump(2) << "\n";
  }
};

std::string weight_str(const WeightVec& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += w[i].str();
  }
  return s;
}

ordered_json weight_json(const WeightVec& w) {
  ordered_json a = ordered_json::array();
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_integer())
      a.push_back(w[i].num());
    else
      a.push_back(w[i].str());
  }
  return a;
}

int cmd_modular_data(const std::string& algebra, long long level, int fp_depth,
                     const Output& out) {
  ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
  ParafermionData data = sys.parafermion_S(fp_depth);
  const size_t n = data.labels.size();

  ordered_json j;
  j["algebra"] = sys.algebra().name();
  j["level"] = level;
  j["central_charge"] = data.central_charge.str();
  long long raw = (long long)sys.raw_count();
  j["counts"] = ordered_json{{"dominant", sys.dominants().size()},
                             {"q_mod_kql", sys.q_mod_kql().order},
                             {"p_mod_q", sys.center_order()},
                             {"raw", raw},
                             {"classes", n},
                             {"identity", (long long)n * sys.center_order() == raw}};
  ordered_json labels = ordered_json::array();
  for (size_t c = 0; c < n; ++c) {
    const auto& lb = data.labels[c];
    labels.push_back(
        ordered_json{{"Lambda", weight_json(sys.dominants()[lb.lambda_index])},
                     {"beta", weight_json(sys.q_mod_kql().reps[lb.beta_index])},
                     {"h", data.weights[c].str()},
                     {"t_phase", data.t_phases[c].str()},
                     {"class_size", data.canon.classes[c].size()}});
  }
  j["labels"] = std::move(labels);
  ordered_json s = ordered_json::array();
  for (size_t a = 0; a < n; ++a) {
    ordered_json row = ordered_json::array();
    for (size_t b = 0; b < n; ++b) row.push_back(complex_json(data.s[a][b]));
    s.push_back(std::move(row));
  }
  j["S"] = std::move(s);

  std::string csv = "index,Lambda,beta,h,t_phase,class_size\n";
  std::string text = sys.algebra().name() + " level " + std::to_string(level) +
                     ": c = " + data.central_charge.str() + ", " + std::to_string(n) +
                     " sectors\n";
  for (size_t c = 0; c < n; ++c) {
    const auto& lb = data.labels[c];
    std::string lam = weight_str(sys.dominants()[lb.lambda_index]);
    std::string beta = weight_str(sys.q_mod_kql().reps[lb.beta_index]);
    csv += std::to_string(c) + ",\"" + lam + "\",\"" + beta + "\"," + data.weights[c].str() +
           "," + data.t_phases[c].str() + "," + std::to_string(data.canon.classes[c].size()) +
           "\n";
    text += "  [" + std::to_string(c) + "] Lambda=(" + lam + ") beta=(" + beta +
            ") h=" + data.weights[c].str() + " T=" + data.t_phases[c].str() + "\n";
  }
  out.emit(j, csv, text);
  return 0;
}

int cmd_branching(const std::string& algebra, long long level,
                  const std::vector<long long>& hw, const std::vector<long long>& wt,
                  int depth, const Output& out) {
  ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
  WeightVec lambda_hw = WeightVec::from_integers(hw);
  WeightVec lambda = WeightVec::from_integers(wt);
  QSeries b = sys.branching_function(lambda_hw, lambda, depth);

  ordered_json j;
  j["algebra"] = sys.algebra().name();
  j["level"] = level;
  j["highest_weight"] = weight_json(lambda_hw);
  j["weight"] = weight_json(lambda);
  j["depth"] = depth;
  if (b.is_zero()) {
    j["zero"] = true;
    j["note"] = "weight is not congruent to the highest weight modulo the root lattice, "
                "or the string vanishes to this depth";
  } else {
    j["offset"] = b.offset.str();
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : b.coeffs) coeffs.push_back(c.num());
    j["coeffs"] = std::move(coeffs);
  }

  std::string csv = "n,coeff\n";
  std::string text = "branching " + sys.algebra().name() + " level " + std::to_string(level) +
                     " Lambda=(" + weight_str(lambda_hw) + ") lambda=(" + weight_str(lambda) +
                     ")\n";
  if (b.is_zero()) {
    text += "  zero\n";
  } else {
    text += "  q^(" + b.offset.str() + ") * [";
    for (int i = 0; i <= b.depth(); ++i) {
      csv += std::to_string(i) + "," + b.coeffs[(size_t)i].str() + "\n";
      if (i) text += ", ";
      text += b.coeffs[(size_t)i].str();
    }
    text += "]\n";
  }
  out.emit(j, csv, text);
  return 0;
}

int cmd_verify(const std::string& check, const std::string& algebra, long long level,
               std::complex<double> tau, int depth, double tol, const Output& out) {
  ordered_json j;
  j["check"] = check;
  if (!algebra.empty()) j["algebra"] = algebra;
  if (level > 0) j["level"] = level;
  j["tau"] = complex_json(tau);
  j["depth"] = depth;
  j["tolerance"] = tol;

  double max_residual = 0.0;
  bool pass = true;
  std::string detail;

  if (check == "eta") {
    QSeries eta = eta_series(depth);
    std::complex<double> stau = -1.0 / tau;
    std::complex<double> lhs = evaluate(eta, stau).value;
    std::complex<double> pref = std::sqrt(std::complex<double>(tau.imag(), -tau.real()));
    max_residual = std::abs(lhs - pref * evaluate(eta, tau).value);
    pass = max_residual < tol;
  } else if (check == "theta") {
    AlgebraDescriptor alg = build_algebra(algebra);
    StandardLattices lat = standard_lattices(alg);
    Lattice scaled = scale_form(lat.long_root, Rational(level));
    max_residual =
        theta_transform_residual(scaled, WeightVec(alg.rank), tau, Rational(depth, 4));
    pass = max_residual < tol;
  } else if (check == "sdual") {
    ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
    TransformReport rep = sys.verify_S_transform(tau, depth);
    max_residual = rep.max_residual;
    pass = max_residual < tol;
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) {
      ParafermionLabel lb = sys.raw_label(r.raw_index);
      QSeries b = sys.branching_by_index(r.raw_index, depth);
      bool t_ok = (b.offset - sys.t_phase(sys.dominants()[lb.lambda_index],
                                          sys.q_mod_kql().reps[lb.beta_index]))
                      .mod1()
                      .is_zero();
      pass = pass && t_ok;
      rows.push_back(ordered_json{{"Lambda", weight_json(sys.dominants()[lb.lambda_index])},
                                  {"beta", weight_json(sys.q_mod_kql().reps[lb.beta_index])},
                                  {"residual", round15(r.residual)},
                                  {"tail_bound", round15(r.tail_bound)},
                                  {"t_phase_exact", t_ok}});
    }
    j["sectors"] = std::move(rows);
  } else if (check == "orbifold") {
    ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < sys.raw_count(); ++r) {
      ParafermionLabel lb = sys.raw_label(r);
      double resid = sys.verify_orbifold_identity(
          sys.dominants()[lb.lambda_index], sys.q_mod_kql().reps[lb.beta_index], tau, depth);
      max_residual = std::max(max_residual, resid);
      rows.push_back(ordered_json{{"Lambda", weight_json(sys.dominants()[lb.lambda_index])},
                                  {"beta", weight_json(sys.q_mod_kql().reps[lb.beta_index])},
                                  {"residual", round15(resid)}});
    }
    pass = max_residual < tol;
    j["sectors"] = std::move(rows);
  } else if (check == "verlinde") {
    ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
    ParafermionData data = sys.parafermion_S();
    try {
      auto fus = verlinde_fusion(data, tol);
      ordered_json tensor = ordered_json::array();
      for (const auto& plane : fus) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : plane) rows.push_back(row);
        tensor.push_back(std::move(rows));
      }
      j["fusion"] = std::move(tensor);
    } catch (const std::runtime_error& e) {
      pass = false;
      detail = e.what();
    }
  } else if (check == "counts") {
    ParafermionSystem sys(build_algebra(algebra), level, weyl_cap_from_env());
    try {
      const CanonicalLabels& canon = sys.canonical_labels();
      j["classes"] = canon.classes.size();
      pass = duality_pairing_check(sys.algebra(), level);
      if (!pass) detail = "duality pairing is degenerate";
    } catch (const std::logic_error& e) {
      pass = false;
      detail = e.what();
    }
  } else {
    throw std::invalid_argument("unknown check '" + check +
                                "' (expected sdual|eta|theta|orbifold|verlinde|counts)");
  }

  j["max_residual"] = round15(max_residual);
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;

  std::string status = pass ? "PASS" : "FAIL";
  std::string csv = "check,max_residual,pass\n" + check + "," + std::to_string(max_residual) +
                    "," + (pass ? "1" : "0") + "\n";
  std::string text = "verify " + check + ": " + status +
                     " (max residual " + std::to_string(max_residual) + ", tolerance " +
                     std::to_string(tol) + ")\n" + (detail.empty() ? "" : detail + "\n");
  out.emit(j, csv, text);
  return pass ? 0 : 1;
}

}  // namespace

std::complex<double> parse_tau(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace((unsigned char)c)) s += c;
  if (s.empty()) throw std::invalid_argument("parse_tau: empty");
  auto parse_num = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    size_t used = 0;
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument("parse_tau: trailing junk in '" + t + "'");
    return v;
  };
  if (s.back() == 'i' || s.back() == 'I') {
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last +/- that is not a leading sign or an exponent sign.
    size_t split = std::string::npos;
    for (size_t p = body.size(); p-- > 1;) {
      if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
        split = p;
        break;
      }
    }
    if (split == std::string::npos) return {0.0, parse_num(body)};
    return {parse_num(body.substr(0, split)), parse_num(body.substr(split))};
  }
  return {parse_num(s), 0.0};
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"modular data of parafermion vertex algebras"};
  app.require_subcommand(1);

  std::string series, check;
  int rank = 0;
  long long level = 0;
  int depth = 20;
  int fp_depth = 20;
  double tol = 1e-6;
  std::string tau_str = "0.1+1.05i";
  Output out;
  out.argv = args;

  auto add_algebra = [&](CLI::App* c, bool required) {
    auto* s = c->add_option("series", series, "series letter A..G");
    auto* r = c->add_option("rank", rank, "rank");
    if (required) {
      s->required();
      r->required();
    }
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", out.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--out", out.path, "write payload to file (with .meta.json sidecar)");
  };

  CLI::App* md = app.add_subcommand("modular-data", "S/T matrices and canonical sectors");
  add_algebra(md, true);
  md->add_option("--level", level, "positive level k")->required();
  md->add_option("--fingerprint-depth", fp_depth, "identification fingerprint depth");
  add_output(md);

  CLI::App* br = app.add_subcommand("branching", "branching function of one sector");
  add_algebra(br, true);
  br->add_option("--level", level)->required();
  std::string hw_str, wt_str;
  br->add_option("--highest-weight", hw_str, "comma-separated coordinates")->required();
  br->add_option("--weight", wt_str, "comma-separated coordinates")->required();
  br->add_option("--depth", depth, "expansion depth");
  add_output(br);

  CLI::App* vf = app.add_subcommand("verify", "numerical verification of modular identities");
  vf->add_option("check", check, "sdual|eta|theta|orbifold|verlinde|counts")->required();
  add_algebra(vf, false);
  vf->add_option("--level", level);
  vf->add_option("--tau", tau_str, "upper half plane point, e.g. 0.1+1.05i");
  vf->add_option("--depth", depth);
  vf->add_option("--tol,--tolerance", tol);
  add_output(vf);

  std::vector<const char*> argv;
  argv.push_back("paramod");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (md->parsed()) return cmd_modular_data(series + std::to_string(rank), level, fp_depth, out);
    if (br->parsed())
      return cmd_branching(series + std::to_string(rank), level, parse_int_list(hw_str),
                           parse_int_list(wt_str), depth, out);
    if (vf->parsed()) {
      std::string alg = series.empty() ? "" : series + std::to_string(rank);
      bool needs_algebra = check != "eta";
      if (needs_algebra && alg.empty())
        throw std::invalid_argument("verify " + check + " needs an algebra and --level");
      if (needs_algebra && level <= 0)
        throw std::invalid_argument("verify " + check + " needs --level");
      return cmd_verify(check, alg, level, parse_tau(tau_str), depth, tol, out);
    }
    return 2;
  } catch (const weyl_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace paramod
