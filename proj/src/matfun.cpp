#include "nradius/matfun.hpp"

#include <cmath>

namespace nradius {

namespace {

void require_finite(const ComplexMatrix& a, const char* what) {
    if (!a.allFinite()) throw Error(std::string(what) + ": non-finite entries");
}

}  // namespace

HermitianEigen hermitian_eigs(const ComplexMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw NonSquareError("hermitian_eigs: matrix must be square and non-empty");
    require_finite(a, "hermitian_eigs");
    const double scale = a.norm();
    const double asym = (a - a.adjoint()).norm();
    if (asym > 1e-10 * scale && asym > 0.0)
        throw NonHermitianError("hermitian_eigs: asymmetry " + std::to_string(asym) +
                                " exceeds 1e-10 * ||A||");
    ComplexMatrix h = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success) throw EigenFailureError("hermitian_eigs: solver failed");
    return HermitianEigen{es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix matrix_abs(const ComplexMatrix& a) {
    require_finite(a, "matrix_abs");
    ComplexMatrix gram = a.adjoint() * a;
    HermitianEigen eg = hermitian_eigs(gram);
    RealVector w = eg.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    return eg.eigenvectors * w.asDiagonal() * eg.eigenvectors.adjoint();
}

ComplexMatrix matrix_func(const ComplexMatrix& a, const std::function<double(double)>& f) {
    HermitianEigen eg = hermitian_eigs(a);
    // PSD tolerance scales with the spectrum; floor at the absolute 1e-12.
    const double wmax = eg.eigenvalues.size() ? eg.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    const double tol = 1e-12 * std::max(1.0, wmax);
    RealVector w = eg.eigenvalues;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (w[i] < -tol)
            throw NotPsdError("matrix_func: eigenvalue " + std::to_string(w[i]) +
                              " below PSD tolerance");
        double fx = f(std::max(w[i], 0.0));
        if (!std::isfinite(fx)) throw Error("matrix_func: f produced a non-finite value");
        w[i] = fx;
    }
    return eg.eigenvectors * w.asDiagonal() * eg.eigenvectors.adjoint();
}

ComplexMatrix matrix_power_psd(const ComplexMatrix& a, double exponent) {
    if (!(exponent >= 0.0))
        throw ParamOutOfDomainError("matrix_power_psd: exponent must be >= 0");
    return matrix_func(a, [exponent](double t) {
        if (t == 0.0) return 0.0;  // 0^0 := 0 in this spectral calculus
        return std::pow(t, exponent);
    });
}

double op_norm(const ComplexMatrix& a) {
    require_finite(a, "op_norm");
    if (a.size() == 0) return 0.0;
    ComplexMatrix gram = a.adjoint() * a;
    gram = (gram + gram.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigenFailureError("op_norm: solver failed");
    return std::sqrt(std::max(es.eigenvalues().maxCoeff(), 0.0));
}

double spectral_radius(const ComplexMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw NonSquareError("spectral_radius: matrix must be square and non-empty");
    require_finite(a, "spectral_radius");
    Eigen::ComplexEigenSolver<ComplexMatrix> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw EigenFailureError("spectral_radius: eigeniteration did not converge");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

ComplexMatrix abs_power(const ComplexMatrix& a, double p) {
    return matrix_power_psd(a.adjoint() * a, p / 2.0);
}

ComplexMatrix abs_star_power(const ComplexMatrix& a, double p) {
    return matrix_power_psd(a * a.adjoint(), p / 2.0);
}

}  // namespace nradius
