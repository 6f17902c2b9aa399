#include "epsw/metric.hpp"

#include <random>

namespace epsw::metric {

namespace {

struct Flat final : MetricOracle {
    double c;
    explicit Flat(double c_) : c(c_) {}
    double phi(Complex) const override { return c; }
    Eigen::Vector2d grad(Complex) const override { return Eigen::Vector2d::Zero(); }
    Eigen::Matrix2d hess(Complex) const override { return Eigen::Matrix2d::Zero(); }
    std::string name() const override { return "flat"; }
};

struct RoundSphere final : MetricOracle {
    double phi(Complex z) const override { return std::log(2.0) - std::log1p(std::norm(z)); }
    Eigen::Vector2d grad(Complex z) const override {
        double q = 1.0 + std::norm(z);
        return {-2.0 * z.real() / q, -2.0 * z.imag() / q};
    }
    Eigen::Matrix2d hess(Complex z) const override {
        double x = z.real(), y = z.imag(), q = 1.0 + std::norm(z);
        Eigen::Matrix2d h;
        h << -2.0 / q + 4.0 * x * x / (q * q), 4.0 * x * y / (q * q),
             4.0 * x * y / (q * q), -2.0 / q + 4.0 * y * y / (q * q);
        return h;
    }
    std::string name() const override { return "round_sphere"; }
};

struct HypDisk final : MetricOracle {
    double phi(Complex z) const override {
        double q = 1.0 - std::norm(z);
        if (q <= 0.0) throw EvaluationOutsideDomain("hyperbolic_disk: |z| >= 1");
        return std::log(2.0) - std::log(q);
    }
    Eigen::Vector2d grad(Complex z) const override {
        double q = 1.0 - std::norm(z);
        if (q <= 0.0) throw EvaluationOutsideDomain("hyperbolic_disk: |z| >= 1");
        return {2.0 * z.real() / q, 2.0 * z.imag() / q};
    }
    Eigen::Matrix2d hess(Complex z) const override {
        double x = z.real(), y = z.imag(), q = 1.0 - std::norm(z);
        if (q <= 0.0) throw EvaluationOutsideDomain("hyperbolic_disk: |z| >= 1");
        Eigen::Matrix2d h;
        h << 2.0 / q + 4.0 * x * x / (q * q), 4.0 * x * y / (q * q),
             4.0 * x * y / (q * q), 2.0 / q + 4.0 * y * y / (q * q);
        return h;
    }
    std::string name() const override { return "hyperbolic_disk"; }
};

struct FourierBump final : MetricOracle {
    double c0;
    std::vector<Complex> a;
    FourierBump(double c0_, std::vector<Complex> a_) : c0(c0_), a(std::move(a_)) {}
    double phi(Complex z) const override {
        Complex w = 0;
        Complex zn = 1;
        for (const auto& an : a) { zn *= z; w += an * zn; }
        return c0 + w.real();
    }
    Eigen::Vector2d grad(Complex z) const override {
        Complex d = 0, zn = 1;
        for (std::size_t n = 1; n <= a.size(); ++n) {
            d += double(n) * a[n - 1] * zn;
            zn *= z;
        }
        // for f holomorphic, grad Re f = (Re f', -Im f')
        return {d.real(), -d.imag()};
    }
    Eigen::Matrix2d hess(Complex z) const override {
        Complex d2 = 0, zp = 1;  // zp = z^{n-2}
        for (std::size_t n = 2; n <= a.size(); ++n) {
            d2 += double(n) * double(n - 1) * a[n - 1] * zp;
            zp *= z;
        }
        Eigen::Matrix2d h;
        h << d2.real(), -d2.imag(), -d2.imag(), -d2.real();
        return h;
    }
    std::string name() const override { return "fourier_bump"; }
};

struct GaussBump final : MetricOracle {
    double amp, s2;
    Complex z0;
    GaussBump(double amp_, Complex z0_, double s2_) : amp(amp_), s2(s2_), z0(z0_) {}
    double phi(Complex z) const override { return amp * std::exp(-std::norm(z - z0) / s2); }
    Eigen::Vector2d grad(Complex z) const override {
        double f = phi(z);
        double x = (z - z0).real(), y = (z - z0).imag();
        return {-2.0 * x / s2 * f, -2.0 * y / s2 * f};
    }
    Eigen::Matrix2d hess(Complex z) const override {
        double f = phi(z);
        double x = (z - z0).real(), y = (z - z0).imag();
        Eigen::Matrix2d h;
        h << (-2.0 / s2 + 4.0 * x * x / (s2 * s2)) * f, 4.0 * x * y / (s2 * s2) * f,
             4.0 * x * y / (s2 * s2) * f, (-2.0 / s2 + 4.0 * y * y / (s2 * s2)) * f;
        return h;
    }
    std::string name() const override { return "gauss_bump"; }
};

struct LinComb final : MetricOracle {
    OraclePtr a, b;
    double t;
    LinComb(OraclePtr a_, double t_, OraclePtr b_) : a(std::move(a_)), b(std::move(b_)), t(t_) {}
    double phi(Complex z) const override { return a->phi(z) + t * b->phi(z); }
    Eigen::Vector2d grad(Complex z) const override { return a->grad(z) + t * b->grad(z); }
    Eigen::Matrix2d hess(Complex z) const override { return a->hess(z) + t * b->hess(z); }
    std::string name() const override { return a->name() + "+" + std::to_string(t) + "*" + b->name(); }
};

struct MoebiusPullback final : MetricOracle {
    OraclePtr inner;
    Complex a, b, c, d;  // w(z) = (az+b)/(cz+d), det normalized
    MoebiusPullback(OraclePtr o, const hyp3::Isometry& w) : inner(std::move(o)) {
        a = w.m(0, 0); b = w.m(0, 1); c = w.m(1, 0); d = w.m(1, 1);
    }
    Complex w(Complex z) const { return (a * z + b) / (c * z + d); }
    Complex wp(Complex z) const {
        Complex den = c * z + d;
        return (a * d - b * c) / (den * den);
    }
    Complex wpp_over_wp(Complex z) const { return -2.0 * c / (c * z + d); }
    double phi(Complex z) const override {
        return inner->phi(w(z)) + std::log(std::abs(wp(z)));
    }
    Eigen::Vector2d grad(Complex z) const override {
        Complex W = w(z), Wp = wp(z);
        Eigen::Vector2d g = inner->grad(W);
        // chain rule via Wirtinger calculus: for real u and holomorphic w,
        // (u o w)_z = u_z(W) * w'(z), and (u_x, u_y) = (2 Re u_z, -2 Im u_z)
        Complex fz_inner = 0.5 * Complex(g[0], -g[1]);   // u_z at W
        Complex fz = fz_inner * Wp + 0.5 * wpp_over_wp(z);
        return {2.0 * fz.real(), -2.0 * fz.imag()};
    }
    Eigen::Matrix2d hess(Complex z) const override {
        Complex W = w(z), Wp = wp(z);
        Eigen::Vector2d g = inner->grad(W);
        Eigen::Matrix2d H = inner->hess(W);
        // second-order Wirtinger data of inner at W
        Complex u_z = 0.5 * Complex(g[0], -g[1]);
        Complex u_zz = 0.25 * Complex(H(0, 0) - H(1, 1), -2.0 * H(0, 1));
        double u_zzb = 0.25 * (H(0, 0) + H(1, 1));
        // f = u o w + log|w'|: f_zz = u_ww Wp^2 + u_w Wpp + d/dz [ (1/2) wpp/wp ]
        Complex Wpp = wpp_over_wp(z) * Wp;
        Complex log_term_zz = 0.5 * (c * c * 2.0 / ((c * z + d) * (c * z + d)));
        Complex f_zz = u_zz * Wp * Wp + u_z * Wpp + log_term_zz;
        double f_zzb = u_zzb * std::norm(Wp);
        Eigen::Matrix2d out;
        out << 2.0 * f_zz.real() + 2.0 * f_zzb, -2.0 * f_zz.imag(),
               -2.0 * f_zz.imag(), -2.0 * f_zz.real() + 2.0 * f_zzb;
        return out;
    }
    std::string name() const override { return inner->name() + "@moebius"; }
};

}  // namespace

OraclePtr flat_metric(double c) { return std::make_shared<Flat>(c); }
OraclePtr round_sphere_metric() { return std::make_shared<RoundSphere>(); }
OraclePtr hyperbolic_disk_metric() { return std::make_shared<HypDisk>(); }
OraclePtr fourier_bump_metric(double c0, const std::vector<Complex>& coeffs) {
    return std::make_shared<FourierBump>(c0, coeffs);
}
OraclePtr gauss_bump_metric(double amp, Complex z0, double s2) {
    return std::make_shared<GaussBump>(amp, z0, s2);
}
OraclePtr lincomb_metric(OraclePtr a, double t, OraclePtr b) {
    return std::make_shared<LinComb>(std::move(a), t, std::move(b));
}
OraclePtr moebius_pullback_metric(OraclePtr inner, const hyp3::Isometry& w) {
    return std::make_shared<MoebiusPullback>(std::move(inner), w);
}

CircleDomain CircleDomain::disk() {
    CircleDomain d;
    d.circles.push_back({Complex(0, 0), 1.0, -1});
    return d;
}

CircleDomain CircleDomain::make(std::vector<CircleBdry> circles) {
    CircleDomain d;
    d.circles = std::move(circles);
    validate_domain(d);
    return d;
}

bool CircleDomain::contains(Complex z) const {
    if (std::abs(z - circles[0].center) >= circles[0].radius) return false;
    for (std::size_t i = 1; i < circles.size(); ++i)
        if (std::abs(z - circles[i].center) <= circles[i].radius) return false;
    return true;
}

void validate_domain(const CircleDomain& dom, double margin) {
    const auto& cs = dom.circles;
    if (cs.empty()) throw Error("domain: no boundary circles");
    if (cs[0].orientation != -1) throw Error("domain: outer circle must have the domain inside");
    for (std::size_t i = 1; i < cs.size(); ++i) {
        if (cs[i].orientation != 1) throw Error("domain: holes must have the domain outside");
        // hole strictly inside outer
        double gap = cs[0].radius - (std::abs(cs[i].center - cs[0].center) + cs[i].radius);
        if (gap <= margin * cs[0].radius) throw Error("domain: hole not strictly inside outer circle");
    }
    for (std::size_t i = 1; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            double inv = (std::norm(cs[i].center - cs[j].center) -
                          cs[i].radius * cs[i].radius - cs[j].radius * cs[j].radius) /
                         (2.0 * cs[i].radius * cs[j].radius);
            if (inv <= 1.0 + margin) throw Error("domain: holes too close (inversive distance <= 1)");
        }
}

Complex BoundaryJet::gamma(double s) const {
    double th = s / circle.radius;
    if (!circle.domain_inside()) th = -th;
    return circle.center + circle.radius * std::polar(1.0, th);
}

Complex BoundaryJet::gamma_p(double s) const {
    double th = s / circle.radius;
    if (!circle.domain_inside()) th = -th;
    Complex dir = std::polar(1.0, th);
    return (circle.domain_inside() ? Complex(0, 1) : Complex(0, -1)) * dir;
}

Complex BoundaryJet::normal_in(double s) const { return Complex(0, 1) * gamma_p(s); }

double BoundaryJet::phi(double s) const { return oracle->phi(gamma(s)); }

double BoundaryJet::phi_p(double s) const {
    Eigen::Vector2d g = oracle->grad(gamma(s));
    Complex t = gamma_p(s);
    return g[0] * t.real() + g[1] * t.imag();
}

double BoundaryJet::phi_pp(double s) const {
    // phi'' = t^T H t + k * (grad . n_in), using gamma'' = k * i gamma'
    Complex z = gamma(s), t = gamma_p(s), n = normal_in(s);
    Eigen::Vector2d tv(t.real(), t.imag()), nv(n.real(), n.imag());
    Eigen::Vector2d g = oracle->grad(z);
    return tv.dot(oracle->hess(z) * tv) + k() * g.dot(nv);
}

double BoundaryJet::dn_phi(double s) const {
    Complex n = normal_in(s);
    Eigen::Vector2d g = oracle->grad(gamma(s));
    return g[0] * n.real() + g[1] * n.imag();
}

double BoundaryJet::dn_phi_p(double s) const {
    // d/ds [grad phi . n_in] = t^T H n_in - k * (grad . t)
    Complex z = gamma(s), t = gamma_p(s), n = normal_in(s);
    Eigen::Vector2d tv(t.real(), t.imag()), nv(n.real(), n.imag());
    Eigen::Vector2d g = oracle->grad(z);
    return tv.dot(oracle->hess(z) * nv) - k() * g.dot(tv);
}

SelfCheckReport oracle_selfcheck(const MetricOracle& oracle, const CircleDomain& dom,
                                 int n_samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);
    const auto& outer = dom.circles[0];
    SelfCheckReport rep;
    double worst_g1 = 0, worst_g2 = 0, worst_h1 = 0, worst_h2 = 0;
    int got = 0;
    while (got < n_samples) {
        Complex z = outer.center +
                    0.9 * outer.radius * Complex(ur(rng), ur(rng));
        if (!dom.contains(z)) continue;
        bool interior_margin = true;
        for (std::size_t i = 1; i < dom.circles.size(); ++i)
            if (std::abs(z - dom.circles[i].center) < dom.circles[i].radius + 0.05) interior_margin = false;
        if (!interior_margin) continue;
        ++got;
        auto fd_grad = [&](double h) {
            Eigen::Vector2d g;
            g[0] = richardson_diff([&](double x) { return oracle.phi({x, z.imag()}); }, z.real(), h);
            g[1] = richardson_diff([&](double y) { return oracle.phi({z.real(), y}); }, z.imag(), h);
            return g;
        };
        auto fd_hess = [&](double h) {
            Eigen::Matrix2d m;
            m(0, 0) = richardson_diff([&](double x) { return oracle.grad({x, z.imag()})[0]; }, z.real(), h);
            m(1, 1) = richardson_diff([&](double y) { return oracle.grad({z.real(), y})[1]; }, z.imag(), h);
            double hxy = richardson_diff([&](double y) { return oracle.grad({z.real(), y})[0]; }, z.imag(), h);
            double hyx = richardson_diff([&](double x) { return oracle.grad({x, z.imag()})[1]; }, z.real(), h);
            m(0, 1) = m(1, 0) = 0.5 * (hxy + hyx);
            return m;
        };
        const double h1 = 1e-3, h2 = 5e-4;
        double g1 = (fd_grad(h1) - oracle.grad(z)).norm();
        double g2 = (fd_grad(h2) - oracle.grad(z)).norm();
        double m1 = (fd_hess(h1) - oracle.hess(z)).norm();
        double m2 = (fd_hess(h2) - oracle.hess(z)).norm();
        worst_g1 = std::max(worst_g1, g1);
        worst_g2 = std::max(worst_g2, g2);
        worst_h1 = std::max(worst_h1, m1);
        worst_h2 = std::max(worst_h2, m2);
    }
    rep.max_grad_resid = worst_g2;
    rep.max_hess_resid = worst_h2;
    const double floor = 1e-11;
    rep.grad_order = (worst_g2 < floor) ? 4.0 : std::log2(worst_g1 / worst_g2);
    rep.hess_order = (worst_h2 < floor) ? 4.0 : std::log2(worst_h1 / worst_h2);
    rep.pass = rep.grad_order >= 1.9 && rep.hess_order >= 1.9;
    return rep;
}

double scal_curvature(const MetricOracle& oracle, Complex p, const MetricOracle* background) {
    double lap = oracle.hess(p).trace();
    double ph = oracle.phi(p);
    if (background) {
        lap += background->hess(p).trace();
        ph += background->phi(p);
    }
    return -2.0 * std::exp(-2.0 * ph) * lap;
}

double geodesic_curvature(const CircleDomain& dom, const MetricOracle& oracle,
                          const CircleBdry& circle, double s) {
    (void)dom;
    BoundaryJet jet{circle, &oracle};
    // exterior normal = -normal_in
    return std::exp(-jet.phi(s)) * (jet.k() - jet.dn_phi(s));
}

}  // namespace epsw::metric
