#include "nradius/params.hpp"

#include <cmath>

namespace nradius {

DerivedConstants derived_constants(const BoundParams& params) {
    if (!params.alpha) throw ParamOutOfDomainError("derived_constants: alpha is required");
    if (!params.beta) throw ParamOutOfDomainError("derived_constants: beta is required");
    const Complex alpha = *params.alpha;
    const double beta = *params.beta;
    if (alpha == Complex(0.0, 0.0)) throw ZeroAlphaError("derived_constants: alpha must be nonzero");
    if (!(beta >= 0.0)) throw ParamOutOfDomainError("derived_constants: beta must be >= 0");

    const double mh = std::max(1.0, std::abs(alpha - 1.0));
    const double m1 = mh * mh;
    const double a2 = std::norm(alpha);
    const double b1 = beta + 1.0;

    DerivedConstants c{};
    c.delta1 = (2.0 * b1 * m1 + 2.0 * beta) / (a2 * b1);
    c.delta2 = 2.0 / (a2 * b1);
    c.gamma1 = (2.0 * beta + 1.0) / b1;
    c.gamma2 = (2.0 * beta + 3.0) / b1;
    c.chi1 = (beta + b1 * m1) / (a2 * b1);
    c.chi2 = (1.0 + 2.0 * b1 * mh) / (a2 * b1);
    c.chi3 = (2.0 * beta + 2.0 * b1 * m1) / (a2 * b1);
    c.chi4 = 2.0 / (a2 * b1);
    c.lambda1 = c.chi1;
    c.lambda2 = c.chi2;
    return c;
}

}  // namespace nradius
