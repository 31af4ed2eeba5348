#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace nradius {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error { using Error::Error; };
struct NonHermitianError : Error { using Error::Error; };
struct NotPsdError : Error { using Error::Error; };
struct EigenFailureError : Error { using Error::Error; };
struct NonConvergenceError : Error { using Error::Error; };
struct NegativeEntryError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct ZeroAlphaError : Error { using Error::Error; };
struct UnknownBoundError : Error { using Error::Error; };
struct ParamOutOfDomainError : Error { using Error::Error; };
struct UnknownLemmaError : Error { using Error::Error; };
struct WrongArityError : Error { using Error::Error; };
struct NotInvertibleError : Error { using Error::Error; };
struct NotSelfAdjointError : Error { using Error::Error; };
struct BadDimError : Error { using Error::Error; };
struct EmptyReportError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };

/// Parse failure with source location (1-based line/column, 0 = unknown).
struct ParseError : Error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_ = 0, int column_ = 0)
        : Error(msg), line(line_), column(column_) {}
};

inline bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

}  // namespace nradius
