#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "isoperim/comparison.hpp"
#include "isoperim/interpolation.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/schwarzschild.hpp"

namespace isoperim {

enum class derivative_source { analytic, spline, finite_difference };

struct end_descriptor {
  enum class kind { schwarzschild, compact, none };
  kind k = kind::none;
  double mass = 0.0;

  static end_descriptor schwarzschild_end(double m) { return {kind::schwarzschild, m}; }
  static end_descriptor compact_end() { return {kind::compact, 0.0}; }
  static end_descriptor open_end() { return {kind::none, 0.0}; }
};

/// A spherically symmetric 3-manifold encoded as its isoperimetric
/// profile: area A(V) of the symmetric sphere enclosing volume V, with
/// first and second derivative access.  Immutable after construction.
class iso_profile {
public:
  struct analytic_fns {
    std::function<double(double)> area;
    std::function<double(double)> darea;
    std::function<double(double)> d2area;
  };

  iso_profile() = default;

  /// Spline-backed profile from (V, A) samples (V strictly increasing,
  /// A > 0 for V > 0).  Inputs with slope corners are rejected: the data
  /// model is C^1.
  static iso_profile from_samples(std::vector<double> v, std::vector<double> a,
                                  end_descriptor end = {});

  /// Profile backed by closed-form A, A', A'' on [v.front(), v.back()].
  static iso_profile from_analytic(std::vector<double> v_samples, analytic_fns fns,
                                   end_descriptor end = {});

  double area(double v) const;
  double darea(double v) const;
  double d2area(double v) const;

  const std::vector<double>& volumes() const { return v_; }
  const std::vector<double>& areas() const { return a_; }
  derivative_source source() const { return source_; }
  const end_descriptor& end() const { return end_; }
  double horizon_area() const { return horizon_area_; }
  double v_min() const { return v_.front(); }
  double v_max() const { return v_.back(); }
  bool is_compact() const { return end_.k == end_descriptor::kind::compact; }
  /// Total volume of a compact manifold (v_max).
  double total_volume() const;

private:
  std::vector<double> v_, a_;
  derivative_source source_ = derivative_source::spline;
  analytic_fns fns_;
  cubic_hermite spline_;
  end_descriptor end_;
  double horizon_area_ = 0.0;
  double check_domain(double v) const;
};

// ---- curvature and mass functions ----

/// Scalar curvature R(V) = 8 pi / A - 2 A A'' - (3/2) A'^2.
double scalar_curvature(const iso_profile& p, double v);
/// Radial Ricci eigenvalue Ric(nu, nu) = -A A'' - A'^2 / 2.
double ricci_normal(const iso_profile& p, double v);
/// Tangential Ricci eigenvalue 4 pi / A - A A''/2 - A'^2/2.
double ricci_tangential(const iso_profile& p, double v);
/// Hawking mass (A/16pi)^{1/2} (1 - A A'^2 / 16 pi).
double hawking_mass(const iso_profile& p, double v);
/// The same mass through F = A^{3/2}: F^{1/3} (36 pi - F'^2) / 144 pi^{3/2}.
double hawking_mass_f_form(const iso_profile& p, double v);

struct mass_series {
  std::vector<double> v, m, m_ric, m_r;
  comparison_config cfg;
  // V up to which the m_ric / m_r monotonicity claims apply
  // (half the total volume for compact manifolds, +inf otherwise).
  double restriction_volume = 0.0;
};

/// Samples (V, m, m_Ric, m_R) at every profile node.
/// m_Ric = (36pi - F'^2) - (9 eps ric0 / 2) F^{2/3},
/// m_R   = F^{1/3} (36pi - F'^2) - (3 r0 / 2) F.
mass_series compute_mass_series(const iso_profile& p, const comparison_config& cfg);

enum class mass_kind { hawking, ricci, scalar };

struct monotonicity_report {
  std::vector<std::size_t> violations;  // indices i where value drops from i to i+1
  double min_value = 0.0;
  double max_value = 0.0;
  bool monotone = true;
};

monotonicity_report check_monotone(const mass_series& s, mass_kind which,
                                   double tol = 1e-8);

struct penrose_verdict {
  double total_mass = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

/// total mass (from the Schwarzschild end) vs sqrt(horizon area / 16 pi).
penrose_verdict penrose_check(const iso_profile& p, double tol = 1e-9);

/// (sum_i (A_i/16pi)^{3/2})^{1/3}; reduces to sqrt(A/16pi) for one area.
double generalized_penrose_bound(const std::vector<double>& horizon_areas);

// ---- inverse mean curvature flow ----

class flow_breakdown : public numerical_error {
public:
  explicit flow_breakdown(double v)
      : numerical_error("inverse mean curvature flow breakdown: H <= 0"), volume_(v) {}
  double volume() const noexcept { return volume_; }

private:
  double volume_;
};

struct imcf_record {
  std::vector<double> t, v, area, mass;
  bool geroch_flagged = false;  // Hawking mass dropped although R >= 0
  double max_mass_drop = 0.0;
  double start_volume = 0.0;
};

/// Flow the symmetric spheres outward at speed 1/H: dV/dt = A/H with
/// H = A'(V).  Starts at v_start, or just outside the horizon when absent.
/// Throws flow_breakdown (with the offending V) when H <= 0 is reached.
imcf_record imcf_evolve(const iso_profile& p, double t_max, int steps,
                        std::optional<double> v_start = std::nullopt);

// ---- constructors ----

/// Exact Schwarzschild profile of mass m, V measured from the horizon,
/// sampled out to coordinate radius r_max.  Analytic derivatives.
iso_profile schwarzschild_profile(const schwarzschild_metric& g, double r_max,
                                  int samples = 600);

/// Flat R^3: A = (36 pi)^{1/3} V^{2/3} on (0, v_max].
iso_profile flat_profile(double v_max, int samples = 400);

/// Round 3-sphere of the given radius (compact; R = 6/rho^2).
iso_profile round_sphere_profile(double radius, int samples = 400);

/// Complete profile with a non-outermost minimal sphere of area
/// >= target_area: round cap through its equator, glued (area and mean
/// curvature matched) into the far branch of Schwarzschild(total_mass),
/// through the neck, out the standard exterior.  R >= 0 throughout;
/// the Hawking mass at infinity is total_mass, which violates the
/// Penrose bound of the inner sphere whenever target_area > 16 pi m^2.
iso_profile counterexample_profile(double target_area, double total_mass = 1.0,
                                   int samples = 1400);

/// Random profile with R >= 0, A' > 0 and an exact Schwarzschild end:
/// a nondecreasing C^2 Hawking-mass ramp integrated from horizon data.
iso_profile random_nonneg_curvature_profile(std::uint64_t seed);

// ---- metric round trip ----

/// Radial metric in the volume gauge ds^2 = g_vv dV^2 + (area/4pi) dsigma^2.
struct radial_metric {
  std::vector<double> v, g_vv, area;
};

radial_metric build_metric(const iso_profile& p);
iso_profile from_metric(const radial_metric& m, end_descriptor end = {});
/// Cone-gauge input ds^2 = u^{-2} dr^2 + u r^2 dsigma^2 (flat volume
/// element): A = 4 pi u r^2, V = (4/3) pi r^3.
iso_profile from_metric(const std::vector<double>& r, const std::vector<double>& u,
                        end_descriptor end = {});

}  // namespace isoperim
