#pragma once

#include <Eigen/Dense>

#include "epsw/hyp3.hpp"
#include "epsw/metric.hpp"

namespace epsw::epstein {

using hyp3::GeodesicPlane;
using hyp3::PointUHS;
using metric::BoundaryJet;
using metric::MetricOracle;

struct SingularFirstForm : Error { using Error::Error; };
struct NoLanding : Error { using Error::Error; };

// Shape data of an immersed surface point in H^3.
struct EpsteinSample {
    PointUHS position;
    Eigen::Vector3d normal;       // hyperbolic-unit
    Eigen::Matrix2d I, II;        // fundamental forms in the given coordinates
    double H = 0;                 // mean curvature (w.r.t. `normal`)
    double k1 = 0, k2 = 0;        // principal curvatures
    double area_density = 0;      // |sqrt(det I)|
    int orientation_sign = 1;     // sign of <du x dv, normal>
    double H_times_density = 0;   // pole-free product, finite even when H blows up
    bool singular = false;        // det I below tolerance
    bool denominator_vanishes = false;
};

// Envelope map of the 1-jet of phi over a planar domain (horizontal coordinates
// carry the full euclidean gradient of phi).
PointUHS domain_epstein(const MetricOracle& oracle, Complex p);

// Hyperbolic-unit outer normal of the tangent horosphere at domain_epstein(p).
Eigen::Vector3d domain_epstein_gauss(const MetricOracle& oracle, Complex p);

// Fundamental forms of the domain map by Richardson differences of the
// immersion and Gauss map, in (x, y) coordinates.
EpsteinSample domain_epstein_shape(const MetricOracle& oracle, Complex p, double step = 0.0);

// Curve (caterpillar) map over a boundary jet; t is the leaf coordinate that
// plays the role of the normal derivative of phi.
PointUHS caterpillar(const BoundaryJet& jet, double s, double t);
Eigen::Vector3d caterpillar_normal(const BoundaryJet& jet, double s, double t);
// coordinate tangents dEps/dt and dEps/ds (closed forms)
Eigen::Vector3d caterpillar_T(const BoundaryJet& jet, double s, double t);
Eigen::Vector3d caterpillar_S(const BoundaryJet& jet, double s, double t);

// Closed-form shape data in (t, s) coordinate order (I(0,0) = I_TT etc).
EpsteinSample caterpillar_shape(const BoundaryJet& jet, double s, double t);

// Leaf coordinate at which the caterpillar is tangent to the domain map.
double t_start(const BoundaryJet& jet, double s);

// Leaf coordinate at which the caterpillar lands on the geodesic plane,
// found by a bracketed root solve on the signed plane distance. For circle
// boundaries this equals the signed euclidean curvature.
double t_land(const BoundaryJet& jet, double s, const GeodesicPlane& plane);

}  // namespace epsw::epstein
