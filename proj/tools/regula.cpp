// regula.cpp - Command-line front end: classify, certify, check, gallery,
// sweep and oracle runs with machine-readable output.
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/bootstrap.hpp"
#include "regula/gallery.hpp"
#include "regula/records.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

using namespace regula;

constexpr int kExitUsage = 2;
constexpr int kExitInvalidCert = 1;
constexpr int kExitIo = 3;

struct ParamFlags {
  std::string kind = "l1";
  int n = 3;
  std::string r = "0", s = "0", p, q, gamma = "1", sigma = "1", theta = "inf";
};

void add_param_options(CLI::App* cmd, ParamFlags& f, bool require_pq = true) {
  cmd->add_option("--kind", f.kind, "solution class: h01, l1 or l1delta");
  cmd->add_option("--n", f.n, "space dimension")->required();
  cmd->add_option("--r", f.r, "u-power in the first equation");
  cmd->add_option("--s", f.s, "v-power in the second equation");
  auto* po = cmd->add_option("--p", f.p, "v-power in the first equation");
  auto* qo = cmd->add_option("--q", f.q, "u-power in the second equation");
  if (require_pq) {
    po->required();
    qo->required();
  }
  cmd->add_option("--gamma", f.gamma, "pure u-power bound in the first equation");
  cmd->add_option("--sigma", f.sigma, "pure v-power bound in the second equation");
  cmd->add_option("--theta", f.theta, "integrability index of the source term h");
}

ExtRational parse_rational_arg(const std::string& text, const std::string& flag) {
  try {
    return ExtRational::from_string(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(flag, "malformed rational '" + text + "'");
  }
}

SystemParams params_from_flags(const ParamFlags& f) {
  auto kind = kind_from_string(f.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown solution class '" + f.kind + "'");
  try {
    return SystemParams::make(
        f.n, *kind, parse_rational_arg(f.r, "--r"), parse_rational_arg(f.s, "--s"),
        parse_rational_arg(f.p, "--p"), parse_rational_arg(f.q, "--q"),
        parse_rational_arg(f.gamma, "--gamma"), parse_rational_arg(f.sigma, "--sigma"),
        parse_rational_arg(f.theta, "--theta"));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("parameters", e.what());
  }
}

QuadratureConfig quadrature_config_from_env() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("REGULA_QUAD_TOL")) {
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end && *end == '\0' && tol > 0) cfg.rel_tol = tol;
  }
  return cfg;
}

OutputRecord run_classify(const SystemParams& params) {
  OutputRecord rec;
  rec.params = params;
  auto t0 = std::chrono::steady_clock::now();
  auto [verdict, report] = classify(params);
  auto t1 = std::chrono::steady_clock::now();
  rec.verdict = std::move(verdict);
  rec.report = std::move(report);
  rec.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
  return rec;
}

int cmd_classify(const ParamFlags& flags) {
  OutputRecord rec = run_classify(params_from_flags(flags));
  std::cout << render_record(rec);
  return verdict_code(rec.verdict.kind);
}

int cmd_certify(const ParamFlags& flags, const std::string& out_path) {
  SystemParams params = params_from_flags(flags);
  OutputRecord rec = run_classify(params);
  if (!rec.verdict.certified()) {
    std::cout << render_record(rec);
    std::cerr << "not certified; no certificate written\n";
    return verdict_code(rec.verdict.kind);
  }
  Certificate cert = plan(params);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  out << serialize(cert);
  if (!out.good()) {
    std::cerr << "write failed for '" << out_path << "'\n";
    return kExitIo;
  }
  std::cout << "certificate: case " << case_name(cert.selected.case_tag) << ", "
            << cert.steps.size() << " steps, written to " << out_path << "\n";
  return 0;
}

int cmd_check(const std::string& cert_path) {
  std::ifstream in(cert_path);
  if (!in) {
    std::cerr << "cannot open '" << cert_path << "'\n";
    return kExitIo;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  Certificate cert;
  try {
    cert = parse_certificate(buf.str());
  } catch (const CertificateParseError& e) {
    std::cout << "invalid certificate: " << e.what() << "\n";
    return kExitInvalidCert;
  }
  ValidationReport rep = validate(cert);
  if (!rep.ok) {
    std::cout << "invalid certificate: step " << rep.first_violation->step << ": "
              << rep.first_violation->what << "\n";
    return kExitInvalidCert;
  }
  std::cout << "certificate ok: case " << case_name(cert.selected.case_tag) << ", "
            << cert.steps.size() << " steps, terminal\n";
  return 0;
}

void print_membership(std::ostream& os, const MembershipReport& rep) {
  os << "t_u " << rep.t_u.str() << "\n";
  os << "t_v " << rep.t_v.str() << "\n";
  for (const MembershipEntry& e : rep.entries) {
    os << "member " << func_name(e.func) << ' ' << space_name(e.space);
    if (e.space == Space::Lk || e.space == Space::LkDelta) os << ' ' << e.k.str();
    os << (e.analytic ? " yes" : " no") << " quadrature ";
    if (e.quadrature_divergent)
      os << "divergent";
    else
      os << e.quadrature_value;
    os << (e.agree ? " agree" : " disagree") << "\n";
  }
}

int cmd_gallery_pair(const ParamFlags& flags, const std::string& k_list,
                     const std::string& out_path) {
  SystemParams params = params_from_flags(flags);
  QuadratureConfig cfg = quadrature_config_from_env();
  SingularPair pair;
  try {
    pair = build_pair(params);
  } catch (const std::domain_error& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return 1;
  }
  std::vector<double> radii;
  for (int i = 0; i <= 100; ++i) radii.push_back(1e-3 + (1.0 - 2e-3) * i / 100.0);

  std::vector<MembershipQuery> queries{{Space::H10, ExtRational(2)},
                                       {Space::Linf, ExtRational::infinity()}};
  std::istringstream ks(k_list);
  std::string tok;
  while (std::getline(ks, tok, ',')) {
    if (tok.empty()) continue;
    ExtRational k = parse_rational_arg(tok, "--k-list");
    queries.push_back({Space::Lk, k});
    queries.push_back({Space::LkDelta, k});
  }
  MembershipReport mem = membership(pair, queries, cfg);
  PairRegime rg = pair_regime(pair);

  std::ostringstream os;
  os << "regula-gallery-pair v1\n";
  os << "n " << params.n << "\n";
  os << "alpha " << pair.alpha.str() << "\n";
  os << "beta " << pair.beta.str() << "\n";
  os << "c1 " << pair.c1 << "\n";
  os << "c2 " << pair.c2 << "\n";
  os << "A " << pair.A << "\n";
  os << "B " << pair.B << "\n";
  os << "residual_max " << residual(pair, radii) << "\n";
  os << "h01_solution " << (rg.h01_solution ? "yes" : "no") << "\n";
  os << "l1_solution " << (rg.l1_solution ? "yes" : "no") << "\n";
  print_membership(os, mem);

  std::cout << os.str();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open '" << out_path << "' for writing\n";
      return kExitIo;
    }
    out << os.str();
  }
  return 0;
}

int cmd_gallery_sharp(int n, const std::string& m_s, const std::string& k_s) {
  QuadratureConfig cfg = quadrature_config_from_env();
  ExtRational m = parse_rational_arg(m_s, "--m");
  ExtRational k = parse_rational_arg(k_s, "--k");
  ScalarSharpExample ex;
  try {
    ex = scalar_sharp_example(n, m, k, cfg);
  } catch (const std::domain_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  }
  std::cout << "regula-gallery-sharp v1\n";
  std::cout << "power " << ex.power.str() << "\n";
  std::cout << "phi_coefficient " << ex.phi.c << "\n";
  std::cout << "phi_norm_m " << ex.phi_norm_m << "\n";
  std::cout << "u_in_Lk " << (ex.U_divergent_k ? "no" : "yes") << "\n";
  std::cout << "residual_max " << ex.residual_max << "\n";
  return 0;
}

struct AxisSpec {
  std::string name;
  ExtRational start, stop;
  int count = 0;
};

AxisSpec parse_axis(const std::string& text, const std::string& flag) {
  // name=start:stop:count
  auto eq = text.find('=');
  auto c1 = text.find(':', eq == std::string::npos ? 0 : eq);
  auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos)
    throw CLI::ValidationError(flag, "expected name=start:stop:count, got '" + text + "'");
  AxisSpec ax;
  ax.name = text.substr(0, eq);
  if (ax.name != "p" && ax.name != "q" && ax.name != "r" && ax.name != "s")
    throw CLI::ValidationError(flag, "axis must be one of p,q,r,s");
  ax.start = parse_rational_arg(text.substr(eq + 1, c1 - eq - 1), flag);
  ax.stop = parse_rational_arg(text.substr(c1 + 1, c2 - c1 - 1), flag);
  try {
    ax.count = std::stoi(text.substr(c2 + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "bad axis count");
  }
  if (ax.count < 2) throw CLI::ValidationError(flag, "axis count must be >= 2");
  return ax;
}

std::vector<ExtRational> axis_points(const AxisSpec& ax) {
  std::vector<ExtRational> pts;
  ExtRational span = ax.stop - ax.start;
  for (int i = 0; i < ax.count; ++i)
    pts.push_back(ax.start + span * ExtRational(i, ax.count - 1));
  return pts;
}

int cmd_sweep(const ParamFlags& flags, const std::string& axis1_s,
              const std::string& axis2_s, const std::string& out_path,
              const CLI::App* cmd) {
  AxisSpec ax1 = parse_axis(axis1_s, "--axis1");
  AxisSpec ax2 = parse_axis(axis2_s, "--axis2");
  if (ax1.name == ax2.name)
    throw CLI::ValidationError("--axis2", "the two axes must differ");
  for (const AxisSpec& ax : {ax1, ax2})
    if (cmd->count("--" + ax.name) > 0)
      throw CLI::ValidationError("--" + ax.name,
                                 "parameter is also a sweep axis; drop one of the two");

  auto kind = kind_from_string(flags.kind);
  if (!kind) throw CLI::ValidationError("--kind", "unknown solution class");
  ExtRational base_r = parse_rational_arg(flags.r, "--r");
  ExtRational base_s = parse_rational_arg(flags.s, "--s");
  ExtRational base_p = flags.p.empty() ? ExtRational(1) : parse_rational_arg(flags.p, "--p");
  ExtRational base_q = flags.q.empty() ? ExtRational(1) : parse_rational_arg(flags.q, "--q");
  if (flags.p.empty() && ax1.name != "p" && ax2.name != "p")
    throw CLI::ValidationError("--p", "p must be fixed or an axis");
  if (flags.q.empty() && ax1.name != "q" && ax2.name != "q")
    throw CLI::ValidationError("--q", "q must be fixed or an axis");
  ExtRational gamma = parse_rational_arg(flags.gamma, "--gamma");
  ExtRational sigma = parse_rational_arg(flags.sigma, "--sigma");
  ExtRational theta = parse_rational_arg(flags.theta, "--theta");

  auto cell_params = [&](const ExtRational& a, const ExtRational& b) {
    ExtRational r = base_r, s = base_s, p = base_p, q = base_q;
    auto assign = [&](const std::string& name, const ExtRational& val) {
      if (name == "p") p = val;
      else if (name == "q") q = val;
      else if (name == "r") r = val;
      else if (name == "s") s = val;
    };
    assign(ax1.name, a);
    assign(ax2.name, b);
    return SystemParams::make(flags.n, *kind, r, s, p, q, gamma, sigma, theta);
  };

  std::vector<ExtRational> pts1 = axis_points(ax1);
  std::vector<ExtRational> pts2 = axis_points(ax2);

  // rows are independent; evaluate them concurrently, assemble in order
  std::vector<std::future<std::string>> rows;
  for (const ExtRational& a : pts1) {
    rows.push_back(std::async(std::launch::async, [&, a]() {
      std::ostringstream row;
      for (const ExtRational& b : pts2) {
        auto [verdict, report] = classify(cell_params(a, b));
        (void)report;
        row << a.str() << ',' << b.str() << ',' << verdict_code(verdict.kind) << '\n';
      }
      return row.str();
    }));
  }
  std::ostringstream csv;
  csv << "# regula-sweep v1\n";
  csv << ax1.name << ',' << ax2.name << ",verdict\n";
  for (auto& fut : rows) csv << fut.get();

  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open '" << out_path << "' for writing\n";
      return kExitIo;
    }
    out << csv.str();
  }
  return 0;
}

int cmd_oracle_poisson(int n, bool const_source, const std::string& theta_s,
                       const std::string& coeff_s, const std::string& power_s) {
  QuadratureConfig cfg = quadrature_config_from_env();
  std::vector<double> grid;
  for (int i = 0; i <= 99; ++i) grid.push_back(0.01 + (1.0 - 0.01) * i / 99.0);

  RadialFunction phi;
  std::function<double(double)> exact;
  if (const_source) {
    phi = RadialFunction{[](double) { return 1.0; }, 0.0};
    exact = [n](double rho) { return (1.0 - rho * rho) / (2.0 * n); };
  } else if (!theta_s.empty()) {
    double t = to_double(parse_rational_arg(theta_s, "--theta"));
    PowerFamilyMember fam = sharp_power_family(n, t);
    phi = fam.phi;
    exact = fam.u.eval;
  } else if (!coeff_s.empty() && !power_s.empty()) {
    double c = to_double(parse_rational_arg(coeff_s, "--coeff"));
    double t = to_double(parse_rational_arg(power_s, "--power"));
    phi = RadialFunction{[c, t](double rho) { return c * std::pow(rho, -t); }, t};
  } else {
    throw CLI::ValidationError("oracle poisson",
                               "need --const, --theta T, or --coeff C --power T");
  }

  std::vector<double> u;
  try {
    u = poisson_solve_on_grid(n, phi, grid, cfg);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  std::cout << "regula-oracle-poisson v1\n";
  double sup = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    std::cout << grid[i] << ' ' << u[i];
    if (exact) {
      double dev = std::fabs(u[i] - exact(grid[i]));
      sup = std::max(sup, dev);
      std::cout << ' ' << exact(grid[i]);
    }
    std::cout << '\n';
  }
  if (exact) std::cout << "sup_deviation " << sup << '\n';
  return 0;
}

int cmd_oracle_norm(int n, const std::string& coeff_s, const std::string& power_s,
                    const std::string& offset_s, const std::string& k_s, bool delta) {
  QuadratureConfig cfg = quadrature_config_from_env();
  RadialPower f{to_double(parse_rational_arg(coeff_s, "--coeff")),
                to_double(parse_rational_arg(power_s, "--power")),
                to_double(parse_rational_arg(offset_s, "--offset"))};
  ExtRational k = parse_rational_arg(k_s, "--k");
  NormResult nr = weighted_norm(f.as_function(), k,
                                delta ? Weight::BoundaryDistance : Weight::None, n, cfg);
  std::cout << "regula-oracle-norm v1\n";
  if (nr.divergent)
    std::cout << "norm divergent\n";
  else
    std::cout << "norm " << nr.value << "\n";
  return 0;
}

int cmd_oracle_sharpness(int n, const std::string& m_s, const std::string& k_s) {
  QuadratureConfig cfg = quadrature_config_from_env();
  ExtRational m = parse_rational_arg(m_s, "--m");
  ExtRational k = parse_rational_arg(k_s, "--k");
  SharpnessReport rep = verify_smoothing_sharpness(n, m, k, cfg);
  std::cout << "regula-oracle-sharpness v1\n";
  std::cout << "admissible " << (rep.admissible ? "yes" : "no") << "\n";
  if (rep.boundary) {
    std::cout << "boundary yes\n";
    return 0;
  }
  std::cout << "power " << rep.power.str() << "\n";
  std::cout << "phi_norm " << rep.phi_norm << "\n";
  if (rep.admissible) {
    std::cout << "u_norm " << rep.u_norm << "\n";
    std::cout << "ratio " << rep.ratio << "\n";
  } else {
    std::cout << "u_norm " << (rep.u_divergent ? "divergent" : "finite") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic classifier and certificate engine for "
               "two-component semilinear elliptic Dirichlet systems"};
  app.require_subcommand(1);

  ParamFlags cls_flags;
  auto* cls = app.add_subcommand("classify", "classify a parameter tuple");
  add_param_options(cls, cls_flags);

  ParamFlags cert_flags;
  std::string cert_out;
  auto* cert = app.add_subcommand("certify", "plan and write a bootstrap certificate");
  add_param_options(cert, cert_flags);
  cert->add_option("--out", cert_out, "certificate output path")->required();

  std::string check_path;
  auto* chk = app.add_subcommand("check", "validate a certificate file");
  chk->add_option("--cert,cert", check_path, "certificate path")->required();

  auto* gal = app.add_subcommand("gallery", "singular constructions");
  gal->require_subcommand(1);
  ParamFlags gal_flags;
  std::string gal_klist = "2", gal_out;
  auto* gal_pair = gal->add_subcommand("pair", "explicit unbounded radial pair");
  add_param_options(gal_pair, gal_flags);
  gal_pair->add_option("--k-list", gal_klist, "comma-separated L^k membership queries");
  gal_pair->add_option("--out", gal_out, "also write the record to a file");
  int sharp_n = 3;
  std::string sharp_m = "1", sharp_k = "inf";
  auto* gal_sharp = gal->add_subcommand("sharp", "scalar sharpness example");
  gal_sharp->add_option("--n", sharp_n, "space dimension")->required();
  gal_sharp->add_option("--m", sharp_m, "source integrability");
  gal_sharp->add_option("--k", sharp_k, "target integrability");

  ParamFlags sweep_flags;
  std::string axis1, axis2, sweep_out;
  auto* swp = app.add_subcommand("sweep", "verdict grid over two parameter axes");
  add_param_options(swp, sweep_flags, /*require_pq=*/false);
  swp->add_option("--axis1", axis1, "first axis, name=start:stop:count")->required();
  swp->add_option("--axis2", axis2, "second axis, name=start:stop:count")->required();
  swp->add_option("--out", sweep_out, "CSV output path");

  auto* orc = app.add_subcommand("oracle", "numerical ground truth runs");
  orc->require_subcommand(1);
  int opo_n = 3;
  bool opo_const = false;
  std::string opo_theta, opo_coeff, opo_power;
  auto* opo = orc->add_subcommand("poisson", "radial Dirichlet solve on the unit ball");
  opo->add_option("--n", opo_n, "space dimension")->required();
  opo->add_flag("--const", opo_const, "constant source 1");
  opo->add_option("--theta", opo_theta, "power-family source t(n-2-t) r^(-t-2)");
  opo->add_option("--coeff", opo_coeff, "raw source coefficient");
  opo->add_option("--power", opo_power, "raw source power");
  int onm_n = 3;
  std::string onm_coeff = "1", onm_power, onm_offset = "0", onm_k = "1";
  bool onm_delta = false;
  auto* onm = orc->add_subcommand("norm", "weighted norm of c r^(-t) - offset");
  onm->add_option("--n", onm_n, "space dimension")->required();
  onm->add_option("--coeff", onm_coeff, "coefficient c");
  onm->add_option("--power", onm_power, "power t")->required();
  onm->add_option("--offset", onm_offset, "offset");
  onm->add_option("--k", onm_k, "norm exponent");
  onm->add_flag("--delta", onm_delta, "weight by the boundary distance (1-rho)");
  int osh_n = 3;
  std::string osh_m = "1", osh_k = "inf";
  auto* osh = orc->add_subcommand("sharpness", "smoothing-bound sharpness check");
  osh->add_option("--n", osh_n, "space dimension")->required();
  osh->add_option("--m", osh_m, "source integrability");
  osh->add_option("--k", osh_k, "target integrability");

  try {
    app.parse(argc, argv);
    if (*cls) return cmd_classify(cls_flags);
    if (*cert) return cmd_certify(cert_flags, cert_out);
    if (*chk) return cmd_check(check_path);
    if (*gal) {
      if (*gal_pair) return cmd_gallery_pair(gal_flags, gal_klist, gal_out);
      if (*gal_sharp) return cmd_gallery_sharp(sharp_n, sharp_m, sharp_k);
    }
    if (*swp) return cmd_sweep(sweep_flags, axis1, axis2, sweep_out, swp);
    if (*orc) {
      if (*opo) return cmd_oracle_poisson(opo_n, opo_const, opo_theta, opo_coeff, opo_power);
      if (*onm) return cmd_oracle_norm(onm_n, onm_coeff, onm_power, onm_offset, onm_k, onm_delta);
      if (*osh) return cmd_oracle_sharpness(osh_n, osh_m, osh_k);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
