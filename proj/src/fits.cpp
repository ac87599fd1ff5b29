#include "hhc/fits.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hhc {

namespace {

// Levenberg-Marquardt for two parameters with analytic Jacobian, multi-start.
struct Lm2Result {
    std::array<double, 2> theta{};
    std::array<std::array<double, 2>, 2> cov{};
    double chi2 = std::numeric_limits<double>::infinity();
    int iterations = 0;
    bool converged = false;
};

using Model2 = std::function<void(double x, const std::array<double, 2>& th, double& f,
                                  double& df0, double& df1)>;

Lm2Result lm2_fit(const std::vector<FitPoint>& pts, const Model2& model,
                  const std::array<double, 2>& start,
                  const std::array<std::array<double, 2>, 2>& bounds) {
    Lm2Result res;
    std::array<double, 2> th = start;
    auto clamp = [&](std::array<double, 2>& t) {
        for (int i = 0; i < 2; i++) {
            if (t[i] < bounds[i][0]) t[i] = bounds[i][0];
            if (t[i] > bounds[i][1]) t[i] = bounds[i][1];
        }
    };
    clamp(th);
    auto chi2_of = [&](const std::array<double, 2>& t) {
        double c = 0.0;
        for (const auto& p : pts) {
            double f, d0, d1;
            model(p.x, t, f, d0, d1);
            double w = p.sigma > 0 ? 1.0 / (p.sigma * p.sigma) : 1.0;
            c += w * (p.y - f) * (p.y - f);
        }
        return c;
    };

    double lambda = 1e-3;
    double chi2 = chi2_of(th);
    int it = 0;
    for (; it < 200; it++) {
        double a00 = 0, a01 = 0, a11 = 0, g0 = 0, g1 = 0;
        for (const auto& p : pts) {
            double f, d0, d1;
            model(p.x, th, f, d0, d1);
            double w = p.sigma > 0 ? 1.0 / (p.sigma * p.sigma) : 1.0;
            double r = p.y - f;
            a00 += w * d0 * d0;
            a01 += w * d0 * d1;
            a11 += w * d1 * d1;
            g0 += w * d0 * r;
            g1 += w * d1 * r;
        }
        bool improved = false;
        for (int tries = 0; tries < 32; tries++) {
            double b00 = a00 * (1 + lambda), b11 = a11 * (1 + lambda);
            double det = b00 * b11 - a01 * a01;
            if (det == 0.0) {
                lambda *= 10;
                continue;
            }
            std::array<double, 2> nt = {th[0] + (b11 * g0 - a01 * g1) / det,
                                        th[1] + (b00 * g1 - a01 * g0) / det};
            clamp(nt);
            double nc = chi2_of(nt);
            if (nc < chi2) {
                double delta = chi2 - nc;
                th = nt;
                chi2 = nc;
                lambda = std::max(lambda * 0.3, 1e-12);
                improved = true;
                if (delta < 1e-14 * (1.0 + chi2)) it = 199;  // converged
                break;
            }
            lambda *= 10;
            if (lambda > 1e12) break;
        }
        if (!improved) break;
    }

    // covariance from the unscaled normal matrix at the optimum
    double a00 = 0, a01 = 0, a11 = 0;
    for (const auto& p : pts) {
        double f, d0, d1;
        model(p.x, th, f, d0, d1);
        double w = p.sigma > 0 ? 1.0 / (p.sigma * p.sigma) : 1.0;
        a00 += w * d0 * d0;
        a01 += w * d0 * d1;
        a11 += w * d1 * d1;
    }
    double det = a00 * a11 - a01 * a01;
    res.theta = th;
    res.chi2 = chi2;
    res.iterations = it;
    res.converged = true;
    if (det > 0) {
        res.cov = {{{a11 / det, -a01 / det}, {-a01 / det, a00 / det}}};
    } else {
        res.cov = {{{std::numeric_limits<double>::infinity(), 0},
                    {0, std::numeric_limits<double>::infinity()}}};
    }
    return res;
}

Lm2Result multi_start(const std::vector<FitPoint>& pts, const Model2& model,
                      const std::vector<std::array<double, 2>>& starts,
                      const std::array<std::array<double, 2>, 2>& bounds) {
    Lm2Result best;
    for (const auto& s : starts) {
        Lm2Result r = lm2_fit(pts, model, s, bounds);
        if (r.chi2 < best.chi2) best = r;
    }
    if (!best.converged) throw std::runtime_error("fit did not converge");
    return best;
}

}  // namespace

FitResult fit_error_per_round(const std::vector<FitPoint>& points) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
    for (size_t i = 0; i < points.size(); i++)
        for (size_t j = i + 1; j < points.size(); j++)
            if (points[i].x == points[j].x) throw std::invalid_argument("duplicate round values");

    // theta = (A, eps); P = (1 - A q^r)/2 with q = 1-2 eps
    Model2 model = [](double r, const std::array<double, 2>& th, double& f, double& dA,
                      double& dE) {
        double q = 1.0 - 2.0 * th[1];
        double qr = std::pow(q, r);
        f = 0.5 * (1.0 - th[0] * qr);
        dA = -0.5 * qr;
        dE = (q > 0 && r > 0) ? th[0] * r * std::pow(q, r - 1.0) : (r > 0 ? 0.0 : 0.0);
    };
    std::vector<std::array<double, 2>> starts = {
        {1.0, 0.02}, {0.95, 0.05}, {0.9, 0.15}, {0.99, 0.005}, {0.8, 0.3}};
    auto r = multi_start(points, model, starts, {{{0.0, 1.5}, {0.0, 0.49999}}});

    FitResult out;
    out.A = r.theta[0];
    out.epsilon = r.theta[1];
    out.tau = out.epsilon > 0 ? -1.0 / std::log(1.0 - 2.0 * out.epsilon)
                              : std::numeric_limits<double>::infinity();
    out.covariance = r.cov;
    out.chi2 = r.chi2;
    out.iterations = r.iterations;
    return out;
}

LeakageFit fit_leakage(const std::vector<FitPoint>& points) {
    if (points.size() < 3) throw std::invalid_argument("need at least 3 points");
    // theta = (GL, GS); p = GL/(GL+GS) (1 - exp(-(GL+GS) m))
    Model2 model = [](double m, const std::array<double, 2>& th, double& f, double& dL,
                      double& dS) {
        double s = th[0] + th[1];
        if (s <= 0) {
            f = 0.0;
            dL = m;  // lim GL,GS->0: p ~ GL*m
            dS = 0.0;
            return;
        }
        double em = std::exp(-s * m);
        double frac = th[0] / s;
        f = frac * (1.0 - em);
        double dfrac_dL = th[1] / (s * s);
        double dfrac_dS = -th[0] / (s * s);
        double dtail = m * em;  // d(1-em)/ds
        dL = dfrac_dL * (1.0 - em) + frac * dtail;
        dS = dfrac_dS * (1.0 - em) + frac * dtail;
    };
    std::vector<std::array<double, 2>> starts = {
        {1e-3, 1e-2}, {5e-3, 5e-2}, {1e-2, 1e-1}, {1e-4, 1e-3}, {5e-2, 5e-1}};
    auto r = multi_start(points, model, starts, {{{0.0, 1.0}, {0.0, 1.0}}});

    LeakageFit out;
    out.gamma_l = r.theta[0];
    out.gamma_s = r.theta[1];
    out.covariance = r.cov;
    out.chi2 = r.chi2;
    return out;
}

}  // namespace hhc
