#pragma once

#include <array>
#include <vector>

namespace hhc {

struct FitPoint {
    double x = 0.0;      // round index r, or measurement index m
    double y = 0.0;
    double sigma = 1.0;  // standard error; <= 0 means unweighted
};

// P_fail(r) = (1 - A (1-2e)^r) / 2, tau = -1/ln(1-2e).
struct FitResult {
    double A = 0.0;
    double epsilon = 0.0;
    double tau = 0.0;
    std::array<std::array<double, 2>, 2> covariance{};
    double chi2 = 0.0;
    int iterations = 0;
};

FitResult fit_error_per_round(const std::vector<FitPoint>& points);

// p_leak(m) = GL/(GL+GS) (1 - exp(-(GL+GS) m)).
struct LeakageFit {
    double gamma_l = 0.0;
    double gamma_s = 0.0;
    std::array<std::array<double, 2>, 2> covariance{};
    double chi2 = 0.0;
};

LeakageFit fit_leakage(const std::vector<FitPoint>& points);

}  // namespace hhc
