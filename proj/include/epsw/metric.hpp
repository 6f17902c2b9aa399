#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "epsw/hyp3.hpp"
#include "epsw/util.hpp"

namespace epsw::metric {

using hyp3::CircleBdry;

struct EvaluationOutsideDomain : Error { using Error::Error; };

// Conformal factor phi of a metric e^{2 phi} |dz|^2, stored as log-density
// against the flat metric. Evaluators must be valid on the closed domain.
struct MetricOracle {
    virtual ~MetricOracle() = default;
    virtual double phi(Complex z) const = 0;
    virtual Eigen::Vector2d grad(Complex z) const = 0;
    virtual Eigen::Matrix2d hess(Complex z) const = 0;
    virtual std::string name() const { return "oracle"; }
};

using OraclePtr = std::shared_ptr<const MetricOracle>;

// --- built-in families ---

OraclePtr flat_metric(double c = 0.0);
OraclePtr round_sphere_metric();            // phi = log(2/(1+|z|^2))
OraclePtr hyperbolic_disk_metric();         // phi = log(2/(1-|z|^2)), |z|<1
// phi = c0 + sum Re(a_n z^n); harmonic test family
OraclePtr fourier_bump_metric(double c0, const std::vector<Complex>& coeffs);
// phi = amp * exp(-|z - z0|^2 / s2); localized smooth test family
OraclePtr gauss_bump_metric(double amp, Complex z0, double s2);
// phi = a.phi + t * b.phi (conformal paths e^{2 t phi} g)
OraclePtr lincomb_metric(OraclePtr a, double t, OraclePtr b);
// pullback along a Moebius map w: phi_new = phi(w(z)) + log|w'(z)|
OraclePtr moebius_pullback_metric(OraclePtr inner, const hyp3::Isometry& w);

// Planar domain bounded by disjoint round circles. circles[0] is the outer
// boundary (domain inside), the rest are holes (domain outside).
struct CircleDomain {
    std::vector<CircleBdry> circles;

    static CircleDomain disk();                       // the unit disk
    static CircleDomain make(std::vector<CircleBdry> circles);  // validates

    const CircleBdry& outer() const { return circles[0]; }
    bool contains(Complex z) const;
    int genus_of_complement() const { return static_cast<int>(circles.size()) - 1; }
};

// validation: pairwise inversive distance > 1 + margin, holes inside outer
void validate_domain(const CircleDomain& dom, double margin = 1e-9);

// Boundary jet of (domain, oracle) along one circle, in the arc-length
// parametrization with the domain on the left. All quantities are exact
// chain-rule values from the oracle.
struct BoundaryJet {
    CircleBdry circle;
    const MetricOracle* oracle = nullptr;

    double k() const { return circle.signed_curvature(); }
    double circumference() const { return 2.0 * kPi * circle.radius; }
    Complex gamma(double s) const;
    Complex gamma_p(double s) const;       // unit tangent
    Complex normal_in(double s) const;     // i * gamma' (into the domain)
    double phi(double s) const;
    double phi_p(double s) const;          // d phi / ds
    double phi_pp(double s) const;
    double dn_phi(double s) const;         // derivative along normal_in
    double dn_phi_p(double s) const;       // d/ds of dn_phi
};

struct SelfCheckReport {
    double max_grad_resid = 0, max_hess_resid = 0;
    double grad_order = 0, hess_order = 0;
    bool pass = false;
};

SelfCheckReport oracle_selfcheck(const MetricOracle& oracle, const CircleDomain& dom,
                                 int n_samples, unsigned seed = 12345);

// Scal(e^{2 phi} g) with g flat (psi = nullptr) or g = e^{2 psi}|dz|^2.
double scal_curvature(const MetricOracle& oracle, Complex p,
                      const MetricOracle* background = nullptr);

// Geodesic curvature of a boundary circle in the metric of `oracle`:
// k_g = e^{-phi} (k_e + d_nu phi), nu the exterior normal. The sign of nu is
// calibrated by geodesic_curvature(round_sphere, unit circle) = 0.
double geodesic_curvature(const CircleDomain& dom, const MetricOracle& oracle,
                          const CircleBdry& circle, double s);

}  // namespace epsw::metric
