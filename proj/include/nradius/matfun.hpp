#pragma once

#include <functional>

#include "nradius/types.hpp"

namespace nradius {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvector columns unitary, A = V diag(w) V*.
struct HermitianEigen {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Decompose a (numerically) Hermitian matrix. Inputs with relative
/// asymmetry up to 1e-10 are symmetrized as (A+A*)/2; larger asymmetry
/// raises NonHermitianError.
HermitianEigen hermitian_eigs(const ComplexMatrix& a);

/// |A| = (A*A)^{1/2}. Accepts rectangular input; result is cols x cols PSD.
ComplexMatrix matrix_abs(const ComplexMatrix& a);

/// Spectral function f applied to a PSD Hermitian matrix: V diag(f(w)) V*.
/// Eigenvalues below the PSD tolerance raise NotPsdError; tiny negatives
/// are clamped to zero first.
ComplexMatrix matrix_func(const ComplexMatrix& a, const std::function<double(double)>& f);

/// Spectral power of a PSD matrix. 0^0 is defined as 0, so exponent 0
/// yields the support projection.
ComplexMatrix matrix_power_psd(const ComplexMatrix& a, double exponent);

/// Operator norm: largest singular value, sqrt(lambda_max(A*A)).
double op_norm(const ComplexMatrix& a);

/// Spectral radius: max |eigenvalue| of a square matrix.
double spectral_radius(const ComplexMatrix& a);

/// |A|^p = (A*A)^{p/2}.
ComplexMatrix abs_power(const ComplexMatrix& a, double p);

/// |A*|^p = (AA*)^{p/2}.
ComplexMatrix abs_star_power(const ComplexMatrix& a, double p);

}  // namespace nradius
