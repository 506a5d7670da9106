#pragma once

// Real gamma function with explicit pole detection, plus the reciprocal-gamma
// combinations needed by the Temme series for K_nu at small argument.

#include <cmath>
#include <string>

#include "epsbound/constants.hpp"
#include "epsbound/errors.hpp"

namespace epsbound {

/// Gamma(x) for real x.  Poles at non-positive integers are reported as
/// PoleError instead of returning inf/nan.
inline double gamma_fn(double x) {
    if (!std::isfinite(x))
        throw DomainError("gamma_fn: non-finite argument");
    if (x <= 0.0 && x == std::floor(x))
        throw PoleError("gamma_fn: pole at non-positive integer x = " + std::to_string(x));
    return std::tgamma(x);
}

namespace detail {

// Reciprocal-gamma combinations
//   gam1 = [1/Gamma(1-mu) - 1/Gamma(1+mu)] / (2 mu)
//   gam2 = [1/Gamma(1-mu) + 1/Gamma(1+mu)] / 2
// for |mu| <= 1/2.  The difference form cancels near mu = 0, so below
// |mu| = 3e-4 the limiting expansion gam1 = -(g + a3 mu^2) is used, with
// a3 = g^3/6 - g pi^2/12 + zeta(3)/3 from the Taylor series of 1/Gamma(1+x).
struct TemmeGamma {
    double gam1;
    double gam2;
    double one_over_gamma_1p; // 1/Gamma(1+mu)
    double one_over_gamma_1m; // 1/Gamma(1-mu)
};

inline TemmeGamma temme_gamma(double mu) {
    constexpr double zeta3 = 1.20205690315959429;
    const double gp = 1.0 / std::tgamma(1.0 + mu);
    const double gm = 1.0 / std::tgamma(1.0 - mu);
    TemmeGamma t;
    t.one_over_gamma_1p = gp;
    t.one_over_gamma_1m = gm;
    t.gam2 = 0.5 * (gm + gp);
    if (std::fabs(mu) > 3e-4) {
        t.gam1 = (gm - gp) / (2.0 * mu);
    } else {
        const double g = euler_gamma;
        const double a3 = g * g * g / 6.0 - g * pi * pi / 12.0 + zeta3 / 3.0;
        t.gam1 = -(g + a3 * mu * mu);
    }
    return t;
}

} // namespace detail
} // namespace epsbound
