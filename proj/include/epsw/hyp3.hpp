#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "epsw/util.hpp"

namespace epsw::hyp3 {

// Upper half-space model: (x, y, z), z > 0, metric (dx^2+dy^2+dz^2)/z^2.
struct PointUHS {
    double x = 0, y = 0, z = 1;
    Complex horiz() const { return {x, y}; }
    Eigen::Vector3d vec() const { return {x, y, z}; }
    static PointUHS of(Complex w, double z) { return {w.real(), w.imag(), z}; }
};

// Klein (projective) ball model: geodesic planes are flat Euclidean disks.
struct PointKlein {
    double u = 0, v = 0, w = 0;
    Eigen::Vector3d vec() const { return {u, v, w}; }
};

// Boundary circle. orientation: +1 if the adjacent domain lies outside the
// circle, -1 if inside. The induced (domain-on-left) curvature is then
// -orientation / radius.
struct CircleBdry {
    Complex center;
    double radius = 1.0;
    int orientation = -1;

    double signed_curvature() const { return -orientation / radius; }
    bool domain_inside() const { return orientation < 0; }
};

struct GeodesicPlane {
    CircleBdry boundary;  // the plane is the hemisphere over this circle
};

struct OverlappingPlanes : Error { using Error::Error; };
struct DegenerateTriple : Error { using Error::Error; };
struct NonIntersecting : Error { using Error::Error; };

// PSL(2,C) element acting on the boundary as a Moebius map and on the upper
// half-space by the Poincare extension. Stored determinant-normalized.
struct Isometry {
    Eigen::Matrix2cd m;

    static Isometry identity();
    static Isometry from_coeffs(Complex a, Complex b, Complex c, Complex d);

    Complex apply_boundary(Complex w) const;
    PointUHS apply(const PointUHS& p) const;
    // tangent vector push-forward at p (numeric differential would do; this is exact
    // to first order via finite differencing the extension)
    Eigen::Vector3d apply_tangent(const PointUHS& p, const Eigen::Vector3d& v) const;
    CircleBdry apply_circle(const CircleBdry& c) const;
    Isometry inverse() const;
};

// Minkowski R^{3,1} machinery (signature -+++). Geodesic planes are represented
// by unit spacelike normals; <V1,V2> encodes distance/angle between planes.
using Vec4 = Eigen::Vector4d;

double minkowski(const Vec4& a, const Vec4& b);
Vec4 plane_normal(const CircleBdry& c);      // unit spacelike
CircleBdry circle_of_normal(Vec4 v);         // inverse of plane_normal (up to sign)
Vec4 lift(const PointKlein& k);              // hyperboloid point, X0 > 0
PointKlein unlift(const Vec4& x);

PointKlein to_klein(const PointUHS& p);
PointUHS from_klein(const PointKlein& k);
Complex boundary_to_sphere_dir(Complex w, double* out_w3 = nullptr);  // see .cpp

double dist(const PointUHS& a, const PointUHS& b);
double dist_klein(const PointKlein& a, const PointKlein& b);

// Hyperbolic distance between disjoint geodesic planes (inversive distance).
// Throws OverlappingPlanes when the circles intersect or are tangent.
double plane_distance(const GeodesicPlane& p1, const GeodesicPlane& p2);

struct PerpSegment {
    PointUHS foot1, foot2;
    double length = 0;
};
PerpSegment common_perpendicular(const GeodesicPlane& p1, const GeodesicPlane& p2);

GeodesicPlane mutual_orthogonal_plane(const GeodesicPlane& p1, const GeodesicPlane& p2,
                                      const GeodesicPlane& p3);

// Exterior-measured angle between two intersecting planes, in (0, pi).
double dihedral_angle(const GeodesicPlane& pa, const GeodesicPlane& pb);

// Signed hyperbolic distance from a point to a geodesic plane
// (positive outside the hemisphere, negative inside).
double signed_plane_distance(const PointUHS& p, const GeodesicPlane& plane);

// Hyperbolic-unit plane normal at a point of the hemisphere, pointing away
// from the hemisphere's center at infinity.
Eigen::Vector3d plane_unit_normal(const PointUHS& p, const GeodesicPlane& plane);

}  // namespace epsw::hyp3
