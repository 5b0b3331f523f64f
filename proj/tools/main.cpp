#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "isoperim/phase_plane.hpp"
#include "isoperim/profile.hpp"
#include "isoperim/profile_io.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/schwarzschild.hpp"
#include "isoperim/variation.hpp"
#include "isoperim/volume_comparison.hpp"

namespace {

using json = nlohmann::json;
using namespace isoperim;
constexpr double pi = std::numbers::pi;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string num6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

struct output {
  bool as_json = false;
  json j;
  std::string plain;

  void config(const json& cfg) {
    if (as_json) {
      j["config"] = cfg;
    } else {
      std::string line = "# config";
      for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        line += " " + it.key() + "=";
        line += it.value().is_string() ? it.value().get<std::string>()
                                       : it.value().dump();
      }
      plain += line + "\n";
    }
  }
  void field(const std::string& key, const json& value, const std::string& shown) {
    if (as_json)
      j[key] = value;
    else
      plain += key + "=" + shown + "\n";
  }
  void line(const std::string& s) {
    if (!as_json) plain += s + "\n";
  }
  void flush() {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << plain;
  }
};

void write_zw_csv(const std::string& path, const std::vector<double>& z,
                  const std::vector<double>& w) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << "z,w\n";
  for (std::size_t i = 0; i < z.size(); ++i) os << num(z[i]) << ',' << num(w[i]) << '\n';
}

void print_monotone(output& out, const std::string& name, const monotonicity_report& rep) {
  out.field(name + "_monotone", rep.monotone, rep.monotone ? "yes" : "no");
  out.field(name + "_min", rep.min_value, num(rep.min_value));
  out.field(name + "_max", rep.max_value, num(rep.max_value));
  if (!rep.monotone) {
    std::string idx;
    json jidx = json::array();
    for (std::size_t k = 0; k < rep.violations.size(); ++k) {
      jidx.push_back(rep.violations[k]);
      if (k < 8) {
        if (!idx.empty()) idx += ",";
        idx += std::to_string(rep.violations[k]);
      }
    }
    if (rep.violations.size() > 8)
      idx += ",... (" + std::to_string(rep.violations.size()) + " total)";
    out.field(name + "_violations", jidx, idx);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isoperimetric-profile toolkit"};
  app.require_subcommand(1);
  std::string format = "plain";
  app.add_option("--format", format, "output format: plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  // alpha
  auto* cmd_alpha = app.add_subcommand("alpha", "volume-comparison factor alpha(eps)");
  double a_eps = 1.0;
  int a_grid = 512;
  std::string a_out;
  cmd_alpha->add_option("--epsilon", a_eps, "Ricci pinching fraction in (0,1]")
      ->required()
      ->check(CLI::Range(1e-12, 1.0));
  cmd_alpha->add_option("--grid", a_grid, "scan/export grid size")->check(CLI::Range(8, 100000));
  cmd_alpha->add_option("--out", a_out, "write the (z, w) grid as CSV");

  // epsilon0
  auto* cmd_eps0 = app.add_subcommand("epsilon0", "sharp pinching threshold");
  double e_tol = 1e-6;
  cmd_eps0->add_option("--tol", e_tol, "bisection tolerance (>= 1e-8)")
      ->check(CLI::Range(1e-8, 1e-1));

  // weps
  auto* cmd_weps = app.add_subcommand("weps", "normalized volume functional w_eps(z)");
  double w_epsv = 0.1, w_z = 0.0;
  int w_samples = 0;
  std::string w_out;
  cmd_weps->add_option("--epsilon", w_epsv, "eps in (0,1]")->required()->check(CLI::Range(1e-12, 1.0));
  auto* w_zopt = cmd_weps->add_option("--z", w_z, "single z in [0, 4pi]");
  auto* w_sopt = cmd_weps->add_option("--z-samples", w_samples, "sample count over [0, 4pi]");
  cmd_weps->add_option("--out", w_out, "CSV path for sampled output");
  w_zopt->excludes(w_sopt);

  // schwarzschild
  auto* cmd_schw = app.add_subcommand("schwarzschild", "symmetric-sphere table of the slice");
  double s_mass = 1.0, s_rmin = -1.0, s_rmax = 10.0;
  int s_samples = 200;
  std::string s_out, s_profile_out;
  cmd_schw->add_option("--mass", s_mass, "mass parameter (>= 0)")->required();
  cmd_schw->add_option("--r-min", s_rmin, "first coordinate radius (default horizon)");
  cmd_schw->add_option("--r-max", s_rmax, "last coordinate radius");
  cmd_schw->add_option("--samples", s_samples, "row count")->check(CLI::Range(2, 1000000));
  cmd_schw->add_option("--out", s_out, "CSV path (r,area,volume,H,hawking)");
  cmd_schw->add_option("--profile-out", s_profile_out, "profile CSV path (V,A)");

  // profile-check
  auto* cmd_check = app.add_subcommand("profile-check", "diagnostics of a profile file");
  std::string c_in, c_out;
  cmd_check->add_option("--in", c_in, "profile CSV")->required();
  cmd_check->add_option("--out", c_out, "write the mass series (V,m,m_ric,m_r)");
  double c_eps = 1.0;
  cmd_check->add_option("--epsilon", c_eps, "eps for the curvature masses")
      ->check(CLI::Range(1e-12, 1.0));

  // bishop
  auto* cmd_bishop = app.add_subcommand("bishop", "round-sphere volume bound");
  int b_dim = 3;
  double b_ric0 = 2.0;
  cmd_bishop->add_option("--dim", b_dim, "dimension (>= 2)")->check(CLI::Range(2, 64));
  cmd_bishop->add_option("--ric0", b_ric0, "Ricci constant (> 0)");

  // football
  auto* cmd_fb = app.add_subcommand("football", "equality-manifold profile");
  double f_eps = 0.1;
  std::string f_out;
  cmd_fb->add_option("--epsilon", f_eps, "eps in (0,1]")->required()->check(CLI::Range(1e-12, 1.0));
  cmd_fb->add_option("--out", f_out, "profile CSV path");

  // imcf
  auto* cmd_imcf = app.add_subcommand("imcf", "inverse mean curvature flow on a profile");
  std::string i_in;
  double i_tmax = 1.0, i_vstart = -1.0;
  int i_steps = 400;
  cmd_imcf->add_option("--in", i_in, "profile CSV")->required();
  cmd_imcf->add_option("--t-max", i_tmax, "flow time")->required();
  cmd_imcf->add_option("--steps", i_steps, "integrator steps")->check(CLI::Range(1, 10000000));
  cmd_imcf->add_option("--v-start", i_vstart, "starting volume (default: horizon)");

  // counterexample
  auto* cmd_ce = app.add_subcommand("counterexample",
                                    "non-outermost minimal sphere violating the bound");
  double ce_area = 0.0, ce_mass = 1.0;
  std::string ce_out;
  cmd_ce->add_option("--area", ce_area, "inner minimal sphere area")->required();
  cmd_ce->add_option("--mass", ce_mass, "total mass");
  cmd_ce->add_option("--out", ce_out, "profile CSV path")->required();

  // variation
  auto* cmd_var = app.add_subcommand("variation", "finite-difference variation checks");
  double v_mass = 1.0, v_r = 2.0;
  cmd_var->add_option("--mass", v_mass, "Schwarzschild mass")->required();
  cmd_var->add_option("--r", v_r, "coordinate radius")->required();

  for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  output out;
  out.as_json = (format == "json");

  try {
    if (*cmd_alpha) {
      out.config({{"subcommand", "alpha"},
                  {"epsilon", a_eps},
                  {"grid", a_grid},
                  {"out", a_out.empty() ? "-" : a_out},
                  {"format", format}});
      auto res = alpha(a_eps, 512, 4000, a_out.empty() ? 0 : a_grid);
      out.field("alpha", res.alpha, num6(res.alpha));
      out.field("argmax_z", res.argmax_z, num6(res.argmax_z));
      if (!a_out.empty()) write_zw_csv(a_out, res.z_grid, res.w_grid);
    } else if (*cmd_eps0) {
      out.config({{"subcommand", "epsilon0"}, {"tol", e_tol}, {"format", format}});
      auto res = epsilon0(e_tol);
      out.field("epsilon0", res.value, num(res.value));
      out.field("bracket_low", res.lower, num(res.lower));
      out.field("bracket_high", res.upper, num(res.upper));
      out.field("reference", 0.134727, "0.134727");
    } else if (*cmd_weps) {
      out.config({{"subcommand", "weps"},
                  {"epsilon", w_epsv},
                  {"z", w_zopt->count() ? num(w_z) : "-"},
                  {"z_samples", w_samples},
                  {"out", w_out.empty() ? "-" : w_out},
                  {"format", format}});
      if (w_zopt->count()) {
        out.field("w", w_eps(w_epsv, w_z), num(w_eps(w_epsv, w_z)));
      } else {
        if (w_samples < 2) throw std::invalid_argument("weps: need --z or --z-samples >= 2");
        if (w_out.empty()) throw std::invalid_argument("weps: --z-samples needs --out");
        std::vector<double> zs(w_samples), ws(w_samples);
        for (int i = 0; i < w_samples; ++i) {
          zs[i] = 4.0 * pi * i / (w_samples - 1.0);
          ws[i] = w_eps(w_epsv, zs[i]);
        }
        write_zw_csv(w_out, zs, ws);
        out.field("rows", w_samples, std::to_string(w_samples));
      }
    } else if (*cmd_schw) {
      auto g = schwarzschild_metric::with_mass(s_mass);
      if (s_rmin < 0.0) s_rmin = s_mass > 0.0 ? g.horizon_radius() : s_rmax / s_samples;
      out.config({{"subcommand", "schwarzschild"},
                  {"mass", s_mass},
                  {"r_min", s_rmin},
                  {"r_max", s_rmax},
                  {"samples", s_samples},
                  {"out", s_out.empty() ? "-" : s_out},
                  {"format", format}});
      if (!(s_rmin >= g.horizon_radius()))
        throw std::invalid_argument("schwarzschild: r-min inside the horizon");
      if (!(s_rmax > s_rmin)) throw std::invalid_argument("schwarzschild: r-max <= r-min");
      std::ostringstream table;
      table << "r,area,volume,H,hawking\n";
      for (int i = 0; i < s_samples; ++i) {
        const double r = s_rmin + (s_rmax - s_rmin) * i / (s_samples - 1.0);
        table << num(r) << ',' << num(sphere_area(g, r)) << ','
              << num(enclosed_volume_closed_form(g, r)) << ',' << num(mean_curvature(g, r))
              << ',' << num(hawking_mass_sphere(g, r)) << '\n';
      }
      if (s_out.empty() && s_profile_out.empty()) {
        out.line(table.str());
      } else if (!s_out.empty()) {
        std::ofstream os(s_out);
        if (!os) throw std::runtime_error("cannot open for writing: " + s_out);
        os << table.str();
        out.field("rows", s_samples, std::to_string(s_samples));
      }
      if (!s_profile_out.empty())
        write_profile_csv(s_profile_out, schwarzschild_profile(g, s_rmax, s_samples));
    } else if (*cmd_check) {
      out.config({{"subcommand", "profile-check"},
                  {"in", c_in},
                  {"epsilon", c_eps},
                  {"out", c_out.empty() ? "-" : c_out},
                  {"format", format}});
      auto p = read_profile_csv(c_in);
      const std::size_t n = p.volumes().size();
      out.field("samples", n, std::to_string(n));
      out.field("horizon_area", p.horizon_area(), num(p.horizon_area()));
      // Interior window: reconstructed derivatives are unreliable within
      // 1% of each end (conical tips are genuinely non-smooth).
      const std::size_t skip = std::max<std::size_t>(1, n / 100);
      double min_r = std::numeric_limits<double>::infinity();
      for (std::size_t i = skip; i + skip < n; ++i)
        min_r = std::min(min_r, scalar_curvature(p, p.volumes()[i]));
      out.field("min_scalar_curvature", min_r, num(min_r));
      auto full = compute_mass_series(p, comparison_config::defaults(c_eps));
      mass_series series;
      series.cfg = full.cfg;
      series.restriction_volume = full.restriction_volume;
      series.v.assign(full.v.begin() + skip, full.v.end() - skip);
      series.m.assign(full.m.begin() + skip, full.m.end() - skip);
      series.m_ric.assign(full.m_ric.begin() + skip, full.m_ric.end() - skip);
      series.m_r.assign(full.m_r.begin() + skip, full.m_r.end() - skip);
      // Sample-backed profiles carry interpolation noise; scale the
      // violation tolerance to the series instead of the 1e-8 default.
      auto tol_for = [](const std::vector<double>& col) {
        double scale = 0.0;
        for (double x : col) scale = std::max(scale, std::abs(x));
        return std::max(1e-8, 5e-4 * scale);
      };
      print_monotone(out, "hawking",
                     check_monotone(series, mass_kind::hawking, tol_for(series.m)));
      if (p.is_compact()) {
        out.field("total_volume", p.total_volume(), num(p.total_volume()));
        print_monotone(out, "m_ric",
                       check_monotone(series, mass_kind::ricci, tol_for(series.m_ric)));
        print_monotone(out, "m_r",
                       check_monotone(series, mass_kind::scalar, tol_for(series.m_r)));
      }
      if (p.end().k == end_descriptor::kind::schwarzschild) {
        auto verdict = penrose_check(p);
        out.field("mass", verdict.total_mass, num6(verdict.total_mass));
        out.field("penrose_bound", verdict.bound, num(verdict.bound));
        const bool equality = std::abs(verdict.total_mass - verdict.bound) < 1e-6;
        out.field("penrose", equality ? "equality" : (verdict.satisfied ? "satisfied" : "violated"),
                  equality ? "equality" : (verdict.satisfied ? "satisfied" : "violated"));
      }
      if (!c_out.empty()) {
        std::ofstream os(c_out);
        if (!os) throw std::runtime_error("cannot open for writing: " + c_out);
        os << "V,m,m_ric,m_r\n";
        for (std::size_t i = 0; i < series.v.size(); ++i)
          os << num(series.v[i]) << ',' << num(series.m[i]) << ',' << num(series.m_ric[i])
             << ',' << num(series.m_r[i]) << '\n';
      }
    } else if (*cmd_bishop) {
      out.config({{"subcommand", "bishop"},
                  {"dim", b_dim},
                  {"ric0", b_ric0},
                  {"format", format}});
      const double vol = 2.0 * bishop_halfvolume(b_dim, b_ric0);
      out.field("volume", vol, num6(vol));
    } else if (*cmd_fb) {
      out.config({{"subcommand", "football"},
                  {"epsilon", f_eps},
                  {"out", f_out.empty() ? "-" : f_out},
                  {"format", format}});
      auto fb = football_profile(comparison_config::defaults(f_eps));
      out.field("volume", 2.0 * fb.half_volume, num(2.0 * fb.half_volume));
      out.field("x_bar", fb.x_bar, num(fb.x_bar));
      out.field("boundary_maximizer", fb.boundary_maximizer,
                fb.boundary_maximizer ? "yes" : "no");
      if (!f_out.empty()) write_profile_csv(f_out, fb.profile);
    } else if (*cmd_imcf) {
      out.config({{"subcommand", "imcf"},
                  {"in", i_in},
                  {"t_max", i_tmax},
                  {"steps", i_steps},
                  {"v_start", i_vstart},
                  {"format", format}});
      auto p = read_profile_csv(i_in);
      std::optional<double> v0;
      if (i_vstart >= 0.0) v0 = i_vstart;
      auto rec = imcf_evolve(p, i_tmax, i_steps, v0);
      const double ratio = rec.area.back() / rec.area.front();
      out.field("start_volume", rec.start_volume, num(rec.start_volume));
      out.field("area_ratio", ratio, num(ratio));
      out.field("expected_ratio", std::exp(i_tmax), num(std::exp(i_tmax)));
      out.field("mass_initial", rec.mass.front(), num(rec.mass.front()));
      out.field("mass_final", rec.mass.back(), num(rec.mass.back()));
      out.field("max_mass_drop", rec.max_mass_drop, num(rec.max_mass_drop));
      out.field("geroch_flag", rec.geroch_flagged, rec.geroch_flagged ? "yes" : "no");
    } else if (*cmd_ce) {
      out.config({{"subcommand", "counterexample"},
                  {"area", ce_area},
                  {"mass", ce_mass},
                  {"out", ce_out},
                  {"format", format}});
      auto p = counterexample_profile(ce_area, ce_mass);
      write_profile_csv(ce_out, p);
      out.field("inner_sphere_area", ce_area, num(ce_area));
      out.field("inner_bound", std::sqrt(ce_area / (16.0 * pi)),
                num(std::sqrt(ce_area / (16.0 * pi))));
      out.field("total_mass", ce_mass, num(ce_mass));
    } else if (*cmd_var) {
      out.config({{"subcommand", "variation"},
                  {"mass", v_mass},
                  {"r", v_r},
                  {"format", format}});
      flow_probe probe;
      probe.kind = flow_probe::space::schwarzschild_slice;
      probe.mass = v_mass;
      probe.base = v_r;
      auto r1 = first_variation_check(probe);
      auto r2 = second_variation_check(probe);
      out.field("darea_measured", r1.measured, num(r1.measured));
      out.field("darea_predicted", r1.predicted, num(r1.predicted));
      out.field("darea_order", r1.order, num(r1.order));
      out.field("dcurv_measured", r2.measured, num(r2.measured));
      out.field("dcurv_predicted", r2.predicted, num(r2.predicted));
      out.field("dcurv_order", r2.order, num(r2.order));
    }
  } catch (const csv_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  }

  out.flush();
  return 0;
}
