#pragma once

#include <optional>

#include "nradius/types.hpp"

namespace nradius {

/// Free parameters of the bound catalog. No defaults: a bound that needs a
/// parameter fails with ParamOutOfDomainError when it is absent.
struct BoundParams {
    std::optional<Complex> alpha;      // nonzero complex
    std::optional<double> beta;        // >= 0
    std::optional<double> mu;          // in [0, 1]
    std::optional<double> lambda_exp;  // in [0, 1]; exponent of f(t) = t^lambda
    std::optional<double> r;           // >= 1
    std::optional<double> s;           // >= 1
    std::optional<int> n;              // integer >= 1 (power or block count)
    std::optional<double> p;           // > 1, conjugate with q
    std::optional<double> q;           // > 1, 1/p + 1/q = 1

    BoundParams& with_alpha(Complex v) { alpha = v; return *this; }
    BoundParams& with_beta(double v) { beta = v; return *this; }
    BoundParams& with_mu(double v) { mu = v; return *this; }
    BoundParams& with_lambda(double v) { lambda_exp = v; return *this; }
    BoundParams& with_r(double v) { r = v; return *this; }
    BoundParams& with_s(double v) { s = v; return *this; }
    BoundParams& with_n(int v) { n = v; return *this; }
    BoundParams& with_pq(double pv, double qv) { p = pv; q = qv; return *this; }
};

/// Constants derived from (alpha, beta). With m1 = max{1, |alpha-1|^2},
/// mh = max{1, |alpha-1|}, a2 = |alpha|^2, b1 = beta + 1:
///   delta1 = (2 b1 m1 + 2 beta) / (a2 b1)     delta2 = 2 / (a2 b1)
///   gamma1 = (2 beta + 1) / b1                gamma2 = (2 beta + 3) / b1
///   chi1   = (beta + b1 m1) / (a2 b1)         chi2   = (1 + 2 b1 mh) / (a2 b1)
///   chi3   = (2 beta + 2 b1 m1) / (a2 b1)     chi4   = 2 / (a2 b1)
///   lambda1 = chi1                            lambda2 = chi2
struct DerivedConstants {
    double delta1, delta2;
    double gamma1, gamma2;
    double chi1, chi2, chi3, chi4;
    double lambda1, lambda2;
};

/// Requires alpha != 0 (ZeroAlphaError) and beta >= 0 (ParamOutOfDomainError).
DerivedConstants derived_constants(const BoundParams& params);

}  // namespace nradius
