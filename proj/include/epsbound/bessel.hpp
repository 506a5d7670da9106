#pragma once

// Modified Bessel functions I_nu, K_nu of real order, with derivatives and
// exponentially scaled variants.
//
// Evaluation strategy: Temme's series for K at small argument (x < 2),
// Steed's continued fraction CF2 beyond; the I ratio comes from CF1 and is
// normalized through the Wronskian I_nu K'_nu - I'_nu K_nu = -1/x.  The
// order is reduced to |mu| <= 1/2 and recurred back up (stable direction
// for K, seeded downward for I).

#include <cmath>
#include <limits>
#include <string>

#include "epsbound/constants.hpp"
#include "epsbound/errors.hpp"
#include "epsbound/gamma.hpp"

namespace epsbound {

struct BesselIK {
    double i;  // I_nu(x)
    double k;  // K_nu(x)
    double ip; // I_nu'(x)
    double kp; // K_nu'(x)
};

namespace detail {

// Scaled values: i,ip carry e^{-x} I, e^{-x} I'; k,kp carry e^{x} K, e^{x} K'.
// The Wronskian normalization is invariant under this common rescaling.
inline BesselIK bessel_ik_scaled_core(double nu, double x) {
    constexpr int max_iter = 40000;
    const double eps = std::numeric_limits<double>::epsilon();
    const double fpmin = std::numeric_limits<double>::min() / eps;
    constexpr double x_series_max = 2.0;

    if (!(x > 0.0) || nu < 0.0)
        throw DomainError("bessel_ik: require x > 0 and nu >= 0");

    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl; // in [-1/2, 1/2]
    const double mu2 = mu * mu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    // CF1 for I'_nu / I_nu (modified Lentz).
    double h = nu * xi;
    if (h < fpmin) h = fpmin;
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int it = 0;
    for (; it < max_iter; ++it) {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        const double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) <= eps) break;
    }
    if (it >= max_iter)
        throw Error("bessel_ik: CF1 failed to converge");

    // Unnormalized I recurred down from nu to mu.
    double ril = fpmin;
    double ripl = h * ril;
    const double ril1 = ril;
    const double rip1 = ripl;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    const double f = ripl / ril; // I'_mu / I_mu

    double rkmu, rk1; // e^{x} K_mu, e^{x} K_{mu+1}
    if (x < x_series_max) {
        // Temme series.
        const double x2 = 0.5 * x;
        const double pimu = pi * mu;
        const double fct = (std::fabs(pimu) < 1e-15) ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = mu * dd;
        const double fct2 = (std::fabs(e) < 1e-15) ? 1.0 : std::sinh(e) / e;
        const TemmeGamma tg = temme_gamma(mu);
        double ff = fct * (tg.gam1 * std::cosh(e) + tg.gam2 * fct2 * dd);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / tg.one_over_gamma_1p;
        double q = 0.5 / (e * tg.one_over_gamma_1m);
        double cc = 1.0;
        dd = x2 * x2;
        double sum1 = p;
        int i = 1;
        for (; i <= max_iter; ++i) {
            ff = (i * ff + p + q) / (i * i - mu2);
            cc *= dd / i;
            p /= (i - mu);
            q /= (i + mu);
            const double del = cc * ff;
            sum += del;
            sum1 += cc * (p - i * ff);
            if (std::fabs(del) < std::fabs(sum) * eps) break;
        }
        if (i > max_iter)
            throw Error("bessel_ik: Temme series failed to converge");
        const double ex = std::exp(x); // x < 2, no overflow
        rkmu = sum * ex;
        rk1 = sum1 * xi2 * ex;
    } else {
        // Steed's CF2.
        double bb = 2.0 * (1.0 + x);
        double dd = 1.0 / bb;
        double delh = dd;
        h = dd;
        double q1 = 0.0, q2 = 1.0;
        const double a1 = 0.25 - mu2;
        double q = a1;
        c = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        int i = 1;
        for (; i < max_iter; ++i) {
            a -= 2 * i;
            c = -a * c / (i + 1.0);
            const double qnew = (q1 - bb * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            bb += 2.0;
            dd = 1.0 / (bb + a * dd);
            delh = (bb * dd - 1.0) * delh;
            h += delh;
            const double dels = q * delh;
            s += dels;
            if (std::fabs(dels / s) <= eps) break;
        }
        if (i >= max_iter)
            throw Error("bessel_ik: CF2 failed to converge");
        h = a1 * h;
        rkmu = std::sqrt(pi / (2.0 * x)) / s;
        rk1 = rkmu * (mu + x + 0.5 - h) * xi;
    }

    const double rkmup = mu * xi * rkmu - rk1;       // e^{x} K'_mu
    const double rimu = xi / (f * rkmu - rkmup);     // e^{-x} I_mu via Wronskian
    BesselIK out;
    out.i = rimu * ril1 / ril;
    out.ip = rimu * rip1 / ril;
    for (int i = 1; i <= nl; ++i) {
        const double rktemp = (mu + i) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    out.k = rkmu;
    out.kp = nu * xi * rkmu - rk1;
    return out;
}

} // namespace detail

/// Exponentially scaled pair: {e^{-x} I_nu, e^{x} K_nu} and their scaled
/// derivatives.  Safe for x up to ~1e8 (no overflow in either direction).
inline BesselIK bessel_ik_scaled(double nu, double x) {
    if (!(nu >= 0.0) || nu >= 3.5)
        throw DomainError("bessel_ik_scaled: order must lie in [0, 3.5)");
    return detail::bessel_ik_scaled_core(nu, x);
}

/// Unscaled I_nu, K_nu and derivatives, order in [0, 3.5).
inline BesselIK bessel_ik(double nu, double x) {
    BesselIK r = bessel_ik_scaled(nu, x);
    if (x > 690.0) {
        // e^{+-x} saturates; refuse rather than return inf/0.
        if (std::log(std::fabs(r.i)) + x > 708.0)
            throw OverflowError("bessel_ik: I_nu overflows at x = " + std::to_string(x));
        if (std::log(r.k) - x < -707.0)
            throw UnderflowError("bessel_ik: K_nu underflows at x = " + std::to_string(x));
    }
    const double ep = std::exp(x), em = std::exp(-x);
    r.i *= ep;
    r.ip *= ep;
    r.k *= em;
    r.kp *= em;
    return r;
}

/// I_nu(z) for order nu in (0, 3), z >= 0.
inline double bessel_i(double nu, double z) {
    if (!(nu > 0.0 && nu < 3.0))
        throw DomainError("bessel_i: order must lie in (0, 3)");
    if (z < 0.0)
        throw DomainError("bessel_i: argument must be >= 0");
    if (z == 0.0) return 0.0;
    if (z > 705.0)
        throw OverflowError("bessel_i: overflow for z > 705");
    return bessel_ik(nu, z).i;
}

/// K_nu(z) for order nu in (0, 3), z in [1e-12, 700].
inline double bessel_k(double nu, double z) {
    if (!(nu > 0.0 && nu < 3.0))
        throw DomainError("bessel_k: order must lie in (0, 3)");
    if (!(z > 0.0))
        throw DomainError("bessel_k: argument must be > 0");
    if (z < 1e-12)
        throw DomainError("bessel_k: argument below supported range 1e-12");
    if (z > 700.0)
        throw UnderflowError("bessel_k: underflow for z > 700");
    return bessel_ik(nu, z).k;
}

} // namespace epsbound
