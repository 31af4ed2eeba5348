#pragma once

#include <cstdint>
#include <vector>

#include "nradius/types.hpp"

namespace nradius {

/// Result of the rotated-Hermitian sweep. The witness is a unit vector
/// with |<A w, w>| >= value - 1e-8, phase-fixed so its first nonzero
/// component is real positive.
struct NumRadResult {
    double value = 0.0;
    double theta_star = 0.0;  // in [0, 2*pi)
    ComplexVector witness;
    int iterations = 0;  // count of lambda_max evaluations
};

/// Numerical radius via max over theta of lambda_max((e^{i t}A + e^{-i t}A*)/2).
/// 64-point uniform grid, then golden-section refinement of the top three
/// brackets until the theta interval is below rtol. Deterministic; ties in
/// theta_star resolve to the smallest theta.
NumRadResult numerical_radius(const ComplexMatrix& a, double rtol = 1e-10);

/// Convenience: just the value.
double omega(const ComplexMatrix& a, double rtol = 1e-10);

/// Independent estimate: best of `samples` uniform unit vectors on the
/// complex sphere, refined by alternating ascent (theta update / top
/// eigenvector of the rotated Hermitian part). Normal inputs
/// (||AA*-A*A|| <= 1e-10 ||A||^2) short-circuit to max |eigenvalue|.
/// A lower bound on omega by construction.
double numerical_radius_oracle(const ComplexMatrix& a, std::int64_t samples, std::uint64_t seed);

/// Closed form for [[a, c], [d, b]] with nonnegative entries:
/// (|a+b| + sqrt((a-b)^2 + (c+d)^2)) / 2.
double nr_2x2_nonneg(double a, double b, double c, double d);

/// Horn bound for an entrywise-nonnegative real matrix:
/// (1/2) r([a_ij + a_ji]).
double horn_bound(const ComplexMatrix& a);

enum class BlockKind { Diag, OffDiag, SymmetricPair, Full2x2, FullNxN, SingleRow };

/// Assemble a dense matrix from blocks.
///   Diag          k square blocks on the diagonal
///   OffDiag       B (d1 x d2), C (d2 x d1) -> [[0, B], [C, 0]]
///   SymmetricPair T, S square, equal size  -> [[T, S], [S, T]]
///   Full2x2       T, X, Y, S               -> [[T, X], [Y, S]]
///   FullNxN       n^2 blocks, row-major
///   SingleRow     S1 (square), S2..Sk      -> first block row, zeros below
ComplexMatrix block_compose(BlockKind kind, const std::vector<ComplexMatrix>& blocks);

}  // namespace nradius
