#include "epsw/quad.hpp"

#include <cmath>

namespace epsw::quad {

void gauss_legendre(int n, double a, double b, std::vector<double>& x,
                    std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    // Newton on Legendre polynomials, nodes on (-1,1)
    for (int i = 0; i < n; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = 0.5 * (b - a) * t + 0.5 * (a + b);
        w[i] = (b - a) / ((1.0 - t * t) * dp * dp);
    }
}

DomainMesh domain_mesh(const metric::CircleDomain& dom, const QuadratureSpec& spec) {
    DomainMesh mesh;
    const auto& outer = dom.circles[0];
    const std::size_t nholes = dom.circles.size() - 1;

    // collar widths: a third of the closest approach to any other boundary
    std::vector<double> delta(nholes);
    for (std::size_t i = 0; i < nholes; ++i) {
        const auto& h = dom.circles[i + 1];
        double d = outer.radius - std::abs(h.center - outer.center) - h.radius;
        for (std::size_t j = 0; j < nholes; ++j) {
            if (j == i) continue;
            const auto& h2 = dom.circles[j + 1];
            d = std::min(d, std::abs(h.center - h2.center) - h.radius - h2.radius);
        }
        if (d <= 0) throw PatchingFailure("domain_mesh: boundary circles too close");
        delta[i] = d / 3.0;
    }

    auto chi = [&](std::size_t i, double rho) {
        return cutoff_step((rho - dom.circles[i + 1].radius) / delta[i]);
    };
    auto chi_total = [&](Complex z) {
        double t = 0;
        for (std::size_t i = 0; i < nholes; ++i)
            t += chi(i, std::abs(z - dom.circles[i + 1].center));
        return t;
    };

    const int nth = spec.angular_n;
    std::vector<double> rx, rw;

    // outer polar patch over the full disk
    gauss_legendre(spec.radial_n, 0.0, outer.radius, rx, rw);
    for (int ir = 0; ir < spec.radial_n; ++ir) {
        for (int it = 0; it < nth; ++it) {
            double th = 2.0 * kPi * it / nth;
            Complex z = outer.center + rx[ir] * std::polar(1.0, th);
            double wgt = (1.0 - chi_total(z)) * rw[ir] * rx[ir] * (2.0 * kPi / nth);
            if (std::abs(wgt) < 1e-300) continue;
            mesh.nodes.push_back(z);
            mesh.weights.push_back(wgt);
        }
    }
    // hole collars
    for (std::size_t i = 0; i < nholes; ++i) {
        const auto& h = dom.circles[i + 1];
        gauss_legendre(std::max(8, spec.radial_n / 2), h.radius, h.radius + delta[i], rx, rw);
        for (std::size_t ir = 0; ir < rx.size(); ++ir) {
            double c = chi(i, rx[ir]);
            if (c < 1e-300) continue;
            for (int it = 0; it < nth; ++it) {
                double th = 2.0 * kPi * it / nth;
                Complex z = h.center + rx[ir] * std::polar(1.0, th);
                mesh.nodes.push_back(z);
                mesh.weights.push_back(c * rw[ir] * rx[ir] * (2.0 * kPi / nth));
            }
        }
    }
    return mesh;
}

double integrate_domain(const std::function<double(Complex)>& f,
                        const metric::CircleDomain& dom, const QuadratureSpec& spec) {
    return domain_mesh(dom, spec).integrate(f);
}

double integrate_boundary(const std::function<double(double)>& f,
                          const hyp3::CircleBdry& circle, const QuadratureSpec& spec) {
    const int n = spec.boundary_n;
    const double len = 2.0 * kPi * circle.radius;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = f(len * i / n);
    return pairwise_sum(vals) * len / n;
}

DiffResult differentiate(const std::function<double(double)>& f, double x, int order,
                         double step) {
    if (step < 1e-12 * std::max(1.0, std::abs(x)))
        throw StepUnderflow("differentiate: step too small");
    auto cd = [&](double h) {
        if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
        return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    };
    double d1 = cd(step), d2 = cd(step / 2.0);
    DiffResult r;
    r.value = (4.0 * d2 - d1) / 3.0;  // Richardson, O(h^4)
    r.error_estimate = std::abs(d2 - d1) / 3.0;
    double d4 = cd(step / 4.0);
    double num = std::abs(d1 - d2), den = std::abs(d2 - d4);
    r.observed_order = (den > 1e-300) ? std::log2(num / den) : 4.0;
    return r;
}

}  // namespace epsw::quad
