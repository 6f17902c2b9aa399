#pragma once

#include <functional>
#include <vector>

#include "epsw/metric.hpp"
#include "epsw/util.hpp"

namespace epsw::quad {

struct PatchingFailure : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };

// All counts are powers of two so halving studies stay aligned.
struct QuadratureSpec {
    int boundary_n = 512;   // samples per boundary circle (trapezoid)
    int radial_n = 128;     // Gauss-Legendre nodes per radial direction
    int angular_n = 256;    // angular samples of domain patches
    int strip_n = 32;       // Gauss-Legendre nodes across caterpillar strips / caps

    QuadratureSpec halved() const {
        return {boundary_n / 2, radial_n / 2, angular_n / 2, strip_n / 2};
    }
    QuadratureSpec doubled() const {
        return {boundary_n * 2, radial_n * 2, angular_n * 2, strip_n * 2};
    }
};

// Gauss-Legendre nodes/weights on [a, b].
void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w);

// Quadrature mesh covering a circle-bounded domain exactly: a polar patch over
// the outer disk plus partition-of-unity collars around each hole. Nodes whose
// partition weight vanishes are dropped, so integrands are only ever evaluated
// inside the domain.
struct DomainMesh {
    std::vector<Complex> nodes;
    std::vector<double> weights;

    double integrate(const std::function<double(Complex)>& f) const {
        std::vector<double> vals(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) vals[i] = weights[i] * f(nodes[i]);
        return pairwise_sum(vals);
    }
};

DomainMesh domain_mesh(const metric::CircleDomain& dom, const QuadratureSpec& spec);

double integrate_domain(const std::function<double(Complex)>& f,
                        const metric::CircleDomain& dom, const QuadratureSpec& spec);

// Trapezoid rule in arc length over one circle (spectral for smooth periodic f).
double integrate_boundary(const std::function<double(double)>& f,
                          const hyp3::CircleBdry& circle, const QuadratureSpec& spec);

struct DiffResult {
    double value = 0;
    double error_estimate = 0;
    double observed_order = 0;
};

// Central difference with Richardson extrapolation; order = 1 or 2 derivative.
DiffResult differentiate(const std::function<double(double)>& f, double x, int order,
                         double step);

}  // namespace epsw::quad
