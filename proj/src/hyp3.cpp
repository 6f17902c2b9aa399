#include "epsw/hyp3.hpp"

namespace epsw::hyp3 {

Isometry Isometry::identity() {
    Isometry w;
    w.m = Eigen::Matrix2cd::Identity();
    return w;
}

Isometry Isometry::from_coeffs(Complex a, Complex b, Complex c, Complex d) {
    Isometry w;
    w.m << a, b, c, d;
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-300) throw Error("isometry: singular matrix");
    w.m /= std::sqrt(det);
    return w;
}

Complex Isometry::apply_boundary(Complex w) const {
    return (m(0, 0) * w + m(0, 1)) / (m(1, 0) * w + m(1, 1));
}

PointUHS Isometry::apply(const PointUHS& p) const {
    // Poincare extension for det = 1:
    //   w' = ((a w + b) conj(c w + d) + a conj(c) z^2) / den,  z' = z / den,
    //   den = |c w + d|^2 + |c|^2 z^2
    Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    Complex w = p.horiz();
    double den = std::norm(c * w + d) + std::norm(c) * p.z * p.z;
    Complex wp = ((a * w + b) * std::conj(c * w + d) + a * std::conj(c) * p.z * p.z) / den;
    return PointUHS::of(wp, p.z / den);
}

Eigen::Vector3d Isometry::apply_tangent(const PointUHS& p, const Eigen::Vector3d& v) const {
    const double h = 1e-6 * std::max(1.0, p.vec().norm());
    Eigen::Vector3d out = Eigen::Vector3d::Zero();
    auto at = [&](double t) {
        PointUHS q{p.x + t * v[0], p.y + t * v[1], p.z + t * v[2]};
        return apply(q).vec();
    };
    out = (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12.0 * h);
    return out;
}

Isometry Isometry::inverse() const {
    Isometry w;
    w.m << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return w;
}

CircleBdry Isometry::apply_circle(const CircleBdry& c) const {
    Complex A = m(0, 0), B = m(0, 1), C = m(1, 0), D = m(1, 1);
    CircleBdry out;
    bool pole_inside = false;
    if (std::abs(C) < 1e-14) {
        Complex s = A / D;
        out.center = s * c.center + B / D;
        out.radius = std::abs(s) * c.radius;
    } else {
        Complex pole = -D / C;
        double dp = std::abs(pole - c.center);
        if (std::abs(dp - c.radius) < 1e-12 * std::max(1.0, c.radius))
            throw Error("apply_circle: pole on circle (image is a line)");
        pole_inside = dp < c.radius;
        // Moebius maps preserve inverse-point pairs; the image of the pole's
        // inverse point w.r.t. the circle is the image circle's center.
        Complex s = c.center + c.radius * c.radius / std::conj(pole - c.center);
        Complex ctr = apply_boundary(s);
        Complex on = apply_boundary(c.center + c.radius);
        out.center = ctr;
        out.radius = std::abs(on - ctr);
    }
    // crossing the pole swaps the circle's two sides
    out.orientation = pole_inside ? -c.orientation : c.orientation;
    return out;
}

double minkowski(const Vec4& a, const Vec4& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Vec4 plane_normal(const CircleBdry& c) {
    const double w2 = std::norm(c.center), r = c.radius;
    Vec4 v;
    v << -(1.0 + w2 - r * r), -2.0 * c.center.real(), -2.0 * c.center.imag(),
        1.0 - w2 + r * r;
    return v / (2.0 * r);
}

CircleBdry circle_of_normal(Vec4 v) {
    // r = 1/(v3 - v0), center = -r (v1, v2); flip sign so radius is positive
    double d = v[3] - v[0];
    if (std::abs(d) < 1e-13) throw DegenerateTriple("plane through infinity (line boundary)");
    if (d < 0) { v = -v; d = -d; }
    CircleBdry c;
    c.radius = 1.0 / d;
    c.center = Complex(-v[1] * c.radius, -v[2] * c.radius);
    return c;
}

Vec4 lift(const PointKlein& k) {
    double q = k.u * k.u + k.v * k.v + k.w * k.w;
    if (q >= 1.0) throw Error("lift: point outside Klein ball");
    double t = 1.0 / std::sqrt(1.0 - q);
    Vec4 x;
    x << t, t * k.u, t * k.v, t * k.w;
    return x;
}

PointKlein unlift(const Vec4& x) { return {x[1] / x[0], x[2] / x[0], x[3] / x[0]}; }

PointKlein to_klein(const PointUHS& p) {
    double q = p.x * p.x + p.y * p.y + p.z * p.z;
    double d = q + 1.0;
    return {2.0 * p.x / d, 2.0 * p.y / d, (q - 1.0) / d};
}

PointUHS from_klein(const PointKlein& k) {
    Vec4 x = lift(k);
    double z = 1.0 / (x[0] - x[3]);
    return {x[1] * z, x[2] * z, z};
}

double dist(const PointUHS& a, const PointUHS& b) {
    double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    double arg = 1.0 + (dx * dx + dy * dy + dz * dz) / (2.0 * a.z * b.z);
    return std::acosh(std::max(1.0, arg));
}

double dist_klein(const PointKlein& a, const PointKlein& b) {
    double c = -minkowski(lift(a), lift(b));
    return std::acosh(std::max(1.0, c));
}

double plane_distance(const GeodesicPlane& p1, const GeodesicPlane& p2) {
    double e = minkowski(plane_normal(p1.boundary), plane_normal(p2.boundary));
    // |e| = inversive distance; <= 1 means intersecting or tangent circles
    if (std::abs(e) <= 1.0 + 1e-9)
        throw OverlappingPlanes("plane_distance: circles intersect or are tangent");
    return std::acosh(std::abs(e));
}

PerpSegment common_perpendicular(const GeodesicPlane& p1, const GeodesicPlane& p2) {
    Vec4 v1 = plane_normal(p1.boundary), v2 = plane_normal(p2.boundary);
    double e = minkowski(v1, v2);
    if (std::abs(e) <= 1.0 + 1e-9)
        throw OverlappingPlanes("common_perpendicular: circles intersect or are tangent");
    double s = std::sqrt(e * e - 1.0);
    Vec4 f1 = (v2 - e * v1) / s;  // on plane 1
    Vec4 f2 = (v1 - e * v2) / s;  // on plane 2
    if (f1[0] < 0) f1 = -f1;
    if (f2[0] < 0) f2 = -f2;
    PerpSegment seg;
    seg.foot1 = from_klein(unlift(f1));
    seg.foot2 = from_klein(unlift(f2));
    seg.length = std::acosh(std::abs(e));
    return seg;
}

GeodesicPlane mutual_orthogonal_plane(const GeodesicPlane& p1, const GeodesicPlane& p2,
                                      const GeodesicPlane& p3) {
    Vec4 v1 = plane_normal(p1.boundary), v2 = plane_normal(p2.boundary),
         v3 = plane_normal(p3.boundary);
    // Euclidean-orthogonal complement of the three rows, then flip the time
    // component to make it Minkowski-orthogonal.
    Eigen::Matrix<double, 3, 4> M;
    M.row(0) = v1; M.row(1) = v2; M.row(2) = v3;
    Vec4 w;
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix3d sub;
        int cc = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            sub.col(cc++) = M.col(j);
        }
        w[i] = ((i % 2) ? -1.0 : 1.0) * sub.determinant();
    }
    w[0] = -w[0];
    double n2 = minkowski(w, w);
    if (n2 <= 1e-12) throw DegenerateTriple("mutual_orthogonal_plane: no spacelike solution");
    w /= std::sqrt(n2);
    GeodesicPlane out;
    out.boundary = circle_of_normal(w);
    return out;
}

double dihedral_angle(const GeodesicPlane& pa, const GeodesicPlane& pb) {
    double e = minkowski(plane_normal(pa.boundary), plane_normal(pb.boundary));
    if (std::abs(e) >= 1.0 - 1e-12)
        throw NonIntersecting("dihedral_angle: boundary circles do not cross");
    // equals the inversive intersection angle of the boundary circles:
    // cos(theta) = (r1^2 + r2^2 - |c1-c2|^2) / (2 r1 r2)
    return std::acos(std::clamp(e, -1.0, 1.0));
}

double signed_plane_distance(const PointUHS& p, const GeodesicPlane& plane) {
    const auto& c = plane.boundary;
    double q = std::norm(p.horiz() - c.center) + p.z * p.z;
    return std::asinh((q - c.radius * c.radius) / (2.0 * c.radius * p.z));
}

Eigen::Vector3d plane_unit_normal(const PointUHS& p, const GeodesicPlane& plane) {
    const auto& c = plane.boundary;
    Eigen::Vector3d radial{p.x - c.center.real(), p.y - c.center.imag(), p.z};
    return radial * (p.z / c.radius);
}

}  // namespace epsw::hyp3
