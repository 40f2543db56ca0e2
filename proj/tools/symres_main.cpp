// Command-line front end: space inspection, point/grid evaluation of the
// continued resolvent, and the field verification battery.

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symres/continuation.hpp"
#include "symres/errors.hpp"
#include "symres/oracles.hpp"
#include "symres/radial.hpp"
#include "symres/spaceio.hpp"

namespace {

using namespace symres;
using nlohmann::json;

struct RunConfig {
  std::string space_name;
  std::string space_file;
  std::string profile_text;  // path or inline JSON; empty = unit Gaussian
  double tolerance = 1e-9;
  std::string format = "csv";
  std::string out_path;
  std::string mode = "general";
  bool skip_invalid = false;
};

SymmetricSpaceSpec resolve_space(const RunConfig& cfg,
                                 const std::string& positional) {
  if (!cfg.space_file.empty()) return load_space_file(cfg.space_file);
  std::string name = !positional.empty() ? positional : cfg.space_name;
  if (name.empty()) {
    raise(ErrorCode::InvalidSpec, "no space given (use --space/--space-file)");
  }
  for (const std::string& known : catalog_names()) {
    if (known == name) return catalog_get(name);
  }
  if (std::filesystem::exists(name)) return load_space_file(name);
  return catalog_get(name);  // raises UnknownSpace with the right message
}

RadialProfile build_radial(const RunConfig& cfg,
                           const SymmetricSpaceSpec& space) {
  SpectralProfile profile = load_or_parse_profile(cfg.profile_text, space.rank);
  if (profile.symmetrized) {
    profile = symmetrize(profile, weyl_generate(space));
  }
  return make_radial_profile(space, profile);
}

EvalMode parse_mode(const RunConfig& cfg) {
  if (cfg.mode == "rank1") return EvalMode::Rank1Meromorphic;
  if (cfg.mode == "general") return EvalMode::General;
  raise(ErrorCode::InvalidSpec, "mode must be 'general' or 'rank1'");
}

void check_tolerance(double tol) {
  if (!(tol >= 1e-12 && tol <= 1e-4)) {
    raise(ErrorCode::InvalidSpec, "tolerance must lie in [1e-12, 1e-4]");
  }
}

// "a" -> {a};  "a:b:n" -> n points from a to b inclusive.
std::vector<double> parse_range(const std::string& text) {
  double a = 0.0;
  double b = 0.0;
  int n = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d", &a, &b, &n) == 3) {
    if (n < 1) raise(ErrorCode::InvalidSpec, "range count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      out.push_back(n == 1 ? a : a + (b - a) * k / (n - 1));
    }
    return out;
  }
  if (std::sscanf(text.c_str(), "%lf", &a) == 1 &&
      text.find(':') == std::string::npos) {
    return {a};
  }
  raise(ErrorCode::InvalidSpec, "grid flag must be 'a' or 'a:b:n'");
}

struct Record {
  CScalar w;
  CScalar z;
  CScalar g{std::nan(""), std::nan("")};
  double err = std::nan("");
  std::string status = "ok";
};

class Emitter {
 public:
  Emitter(std::ostream& os, const std::string& format)
      : os_(os), json_(format == "json") {
    if (!json_) os_ << "w_re,w_im,z_re,z_im,G_re,G_im,err,status\n";
  }

  void row(const Record& r) {
    if (json_) {
      json obj;
      obj["w_re"] = r.w.real();
      obj["w_im"] = r.w.imag();
      obj["z_re"] = r.z.real();
      obj["z_im"] = r.z.imag();
      obj["G_re"] = std::isnan(r.g.real()) ? json() : json(r.g.real());
      obj["G_im"] = std::isnan(r.g.imag()) ? json() : json(r.g.imag());
      obj["err"] = std::isnan(r.err) ? json() : json(r.err);
      obj["status"] = r.status;
      rows_.push_back(std::move(obj));
      return;
    }
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                  r.w.real(), r.w.imag(), r.z.real(), r.z.imag(), r.g.real(),
                  r.g.imag(), r.err, r.status.c_str());
    os_ << buf;
  }

  void finish() {
    if (json_) os_ << rows_.dump(2) << "\n";
    os_.flush();
  }

 private:
  std::ostream& os_;
  bool json_;
  json rows_ = json::array();
};

int run_points(const RunConfig& cfg, const std::string& positional,
               const std::vector<double>& res, const std::vector<double>& ims,
               std::ostream& os) {
  const SymmetricSpaceSpec space = resolve_space(cfg, positional);
  const RadialProfile rp = build_radial(cfg, space);
  const EvalMode mode = parse_mode(cfg);
  Emitter emit(os, cfg.format);
  // Row-major: imaginary part is the outer loop.
  for (double im : ims) {
    for (double re : res) {
      const SurfacePoint pt = surface_point(rp, CScalar(re, im));
      Record rec;
      rec.w = pt.w;
      rec.z = surface_to_z(rp, pt);
      try {
        const Evaluation ev = resolvent_eval(rp, pt, mode, cfg.tolerance);
        rec.g = ev.value;
        rec.err = ev.error_estimate;
      } catch (const EngineError& e) {
        if (!cfg.skip_invalid) {
          emit.finish();
          std::cerr << "error: " << e.what() << "\n";
          return exit_code_for(e.code());
        }
        rec.status = error_code_name(e.code());
      }
      emit.row(rec);
    }
  }
  emit.finish();
  return 0;
}

int cmd_info(const RunConfig& cfg, const std::string& positional,
             std::ostream& os) {
  const SymmetricSpaceSpec space = resolve_space(cfg, positional);
  const SpaceInvariants inv = invariants(space);
  const WeylGroup weyl = weyl_generate(space);
  os << "name: " << space.name << "\n";
  os << "rank: " << space.rank << "\n";
  os << "roots:\n";
  for (const RestrictedRoot& root : space.roots) {
    os << "  alpha = (";
    for (std::size_t i = 0; i < root.vector.size(); ++i) {
      os << (i ? ", " : "") << root.vector[i];
    }
    os << ")  m=" << root.m << "  m2=" << root.m2 << "\n";
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g", inv.rho_norm_sq);
  os << "|rho|^2: " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", inv.branch_radius);
  os << "branch radius r: " << buf << "\n";
  os << "parity: " << (inv.parity == Parity::Odd ? "odd" : "even") << "\n";
  os << "entire: " << (inv.entire_density ? "yes" : "no") << "\n";
  os << "surface: ";
  if (inv.entire_density) {
    os << "fully entire (no cuts, no excluded lines)\n";
  } else if (inv.parity == Parity::Odd) {
    os << "odd-kind plane minus the cut i[r, inf)\n";
  } else {
    os << "even-kind plane minus the half-lines i*pi*(n+1/2) + [log r, inf), "
          "n != -1\n";
  }
  os << "weyl order: " << weyl.elements.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify battery

struct CheckRow {
  std::string space;
  std::string check;
  bool pass;
  double measure;
};

void battery(const SymmetricSpaceSpec& space, std::vector<CheckRow>& rows) {
  const std::string& nm = space.name;
  const RadialProfile rp =
      make_radial_profile(space, gaussian_profile(space.rank));
  const CFunContext& ctx = rp.ctx;
  const int rank = space.rank;

  // Normalization c(-i rho) = 1.
  {
    ComplexVec lam(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) lam[i] = CScalar(0.0, -ctx.inv.rho[i]);
    const double err = std::abs(c_inverse(ctx, lam) - CScalar(1.0));
    rows.push_back({nm, "normalization", err <= 1e-10, err});
  }
  // Density identity p = |c^{-1}|^2 on real points.
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      ComplexVec lam(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) {
        lam[i] = CScalar(0.31 + 0.37 * k + 0.11 * i, 0.0);
      }
      const CScalar ci = c_inverse(ctx, lam);
      const CScalar p = plancherel_density(ctx, lam);
      const double want = std::norm(ci);
      worst = std::max(worst,
                       std::abs(p - CScalar(want)) / std::max(1.0, want));
    }
    rows.push_back({nm, "density-identity", worst <= 1e-9, worst});
  }
  // Radial parity F(-xi) = (-1)^{rank-1} F(xi).
  {
    const double sign = (rank % 2 == 1) ? 1.0 : -1.0;
    double worst = 0.0;
    const CScalar pts[4] = {{0.8, 0.1}, {1.7, -0.2}, {0.3, 0.25}, {2.4, 0.05}};
    for (const CScalar& xi : pts) {
      const CScalar f = radial_F(rp, xi);
      const CScalar g = radial_F(rp, -xi);
      worst = std::max(worst,
                       std::abs(g - sign * f) / (1.0 + std::abs(f)));
    }
    rows.push_back({nm, "parity", worst <= 1e-10, worst});
  }
  // Physical-sheet consistency against the direct half-line quadrature.
  {
    double worst = 0.0;
    const CScalar ws[2] = {{0.7, -0.8}, {-0.4, -1.2}};
    for (const CScalar& w : ws) {
      const SurfacePoint pt = surface_point(rp, w);
      const Evaluation a = resolvent_eval(rp, pt, EvalMode::General, 1e-10);
      const Evaluation b =
          resolvent_physical(rp, surface_to_z(rp, pt) - ctx.inv.rho_norm_sq,
                             1e-10);
      worst = std::max(worst, std::abs(a.value - b.value) /
                                  std::max(1.0, std::abs(b.value)));
    }
    rows.push_back({nm, "physical-consistency", worst <= 1e-8, worst});
  }
  // Kind-specific checks.
  if (nm == "H3") {
    const OracleReport rep = faddeeva_convention_gate(1e-9);
    rows.push_back({nm, "faddeeva-gate", rep.passed, rep.max_rel_err});
  }
  if (ctx.inv.parity == Parity::Even) {
    double worst = 0.0;
    const CScalar ws[2] = {{0.4, -1.3}, {-0.6, -2.0}};
    for (const CScalar& w : ws) {
      const Evaluation g0 =
          resolvent_eval(rp, surface_point(rp, w), EvalMode::General, 1e-10);
      const Evaluation g1 = resolvent_eval(
          rp, surface_point(rp, w + CScalar(0.0, M_PI)), EvalMode::General,
          1e-10);
      const CScalar want =
          M_PI * CScalar(0.0, 1.0) * radial_F(rp, std::exp(w)) * std::exp(-w);
      worst = std::max(worst, std::abs(g1.value - g0.value - want));
    }
    rows.push_back({nm, "jump-relation", worst <= 1e-8, worst});
  }
  if (rank == 1 && !ctx.inv.entire_density) {
    const auto poles = plancherel_poles(ctx, ctx.inv.branch_radius + 2.5);
    const bool ok =
        !poles.empty() &&
        std::abs(poles.front().location -
                 CScalar(0.0, ctx.inv.branch_radius)) <= 1e-9;
    rows.push_back({nm, "pole-sanity", ok,
                    poles.empty() ? 1.0
                                  : std::abs(poles.front().location -
                                             CScalar(0.0,
                                                     ctx.inv.branch_radius))});
  }
  // Path independence for the three reference spaces.
  if (nm == "H3") {
    const CScalar w(0.5, 0.5);
    ContourPath a{{CScalar(-8.0, 0.0), CScalar(8.0, 0.0)}, 0.0};
    ContourPath b{{CScalar(-8.0, 0.0), CScalar(-2.0, 0.2), CScalar(2.0, 0.2),
                   CScalar(8.0, 0.0)},
                  0.0};
    const OracleReport rep = cross_contour_check(rp, w, a, b);
    rows.push_back({nm, "path-independence", rep.passed, rep.max_rel_err});
  } else if (nm == "SL3R" || nm == "SL3C") {
    const CScalar w(0.2, -1.5);
    ContourPath a{{CScalar(-12.0, 0.0), CScalar(4.0, 0.0)}, 0.0};
    ContourPath b{{CScalar(-12.0, 0.0), CScalar(-4.0, -0.3), CScalar(1.0, -0.3),
                   CScalar(4.0, 0.0)},
                  0.0};
    const OracleReport rep = cross_contour_check(rp, w, a, b);
    rows.push_back({nm, "path-independence", rep.passed, rep.max_rel_err});
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& positional,
               std::ostream& os) {
  std::vector<SymmetricSpaceSpec> spaces;
  if (!positional.empty() || !cfg.space_name.empty() ||
      !cfg.space_file.empty()) {
    spaces.push_back(resolve_space(cfg, positional));
  } else {
    for (const std::string& name : catalog_names()) {
      spaces.push_back(catalog_get(name));
    }
  }
  std::vector<CheckRow> rows;
  for (const SymmetricSpaceSpec& space : spaces) {
    battery(space, rows);
  }
  bool all_pass = true;
  os << "space   check                  result   measure\n";
  for (const CheckRow& row : rows) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-7s %-22s %-8s %.3e\n",
                  row.space.c_str(), row.check.c_str(),
                  row.pass ? "PASS" : "FAIL", row.measure);
    os << buf;
    all_pass = all_pass && row.pass;
  }
  os << (all_pass ? "all checks passed\n" : "FAILURES present\n");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral continuation engine for radial Plancherel data"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string positional;
  std::string re_text;
  std::string im_text;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--space", cfg.space_name, "catalog space name");
    cmd->add_option("--space-file", cfg.space_file, "custom space JSON file");
    cmd->add_option("--profile", cfg.profile_text,
                    "profile JSON (inline or file path); default unit "
                    "Gaussian");
    cmd->add_option("--tol", cfg.tolerance, "tolerance in [1e-12, 1e-4]");
    cmd->add_option("--format", cfg.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
    cmd->add_option("--mode", cfg.mode, "general|rank1")
        ->check(CLI::IsMember({"general", "rank1"}));
    cmd->add_flag("--skip-invalid", cfg.skip_invalid,
                  "emit error rows instead of aborting");
  };

  CLI::App* info = app.add_subcommand("info", "describe a space");
  info->add_option("name", positional, "space name or file");
  add_common(info);

  CLI::App* eval = app.add_subcommand("eval", "evaluate at one point");
  eval->add_option("name", positional, "space name or file");
  add_common(eval);
  eval->add_option("--re", re_text, "Re w")->required();
  eval->add_option("--im", im_text, "Im w")->required();

  CLI::App* scan = app.add_subcommand("scan", "evaluate on a grid");
  scan->add_option("name", positional, "space name or file");
  add_common(scan);
  scan->add_option("--re", re_text, "Re w range a:b:n")->required();
  scan->add_option("--im", im_text, "Im w range a:b:n")->required();

  CLI::App* verify = app.add_subcommand("verify", "run the check battery");
  verify->add_option("name", positional, "space name or file (default: all)");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    check_tolerance(cfg.tolerance);
    std::ofstream file_out;
    std::ostream* os = &std::cout;
    if (!cfg.out_path.empty()) {
      file_out.open(cfg.out_path);
      if (!file_out) {
        raise(ErrorCode::InvalidSpec, "cannot open output: " + cfg.out_path);
      }
      os = &file_out;
    }
    if (info->parsed()) return cmd_info(cfg, positional, *os);
    if (verify->parsed()) return cmd_verify(cfg, positional, *os);
    const std::vector<double> res = parse_range(re_text);
    const std::vector<double> ims = parse_range(im_text);
    if (eval->parsed() && (res.size() != 1 || ims.size() != 1)) {
      raise(ErrorCode::InvalidSpec, "eval takes single --re/--im values");
    }
    return run_points(cfg, positional, res, ims, *os);
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
