#include "nradius/numrad.hpp"

#include <algorithm>
#include <cmath>

#include "nradius/matfun.hpp"
#include "nradius/rng.hpp"

namespace nradius {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kGridPoints = 64;
constexpr double kGoldenRatio = 0.61803398874989484820;

ComplexMatrix rotated_hermitian(const ComplexMatrix& a, double theta) {
    ComplexMatrix m = std::polar(1.0, theta) * a;
    return (m + m.adjoint()) / 2.0;
}

double lambda_max(const ComplexMatrix& h, int& evals) {
    ++evals;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NonConvergenceError("numerical_radius: eigensolver failed");
    return es.eigenvalues().maxCoeff();
}

double sweep_objective(const ComplexMatrix& a, double theta, int& evals) {
    return lambda_max(rotated_hermitian(a, theta), evals);
}

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0) t += kTwoPi;
    return t;
}

ComplexVector random_unit_vector(GaussianStream& g, Eigen::Index n) {
    ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double re = g.next();
        const double im = g.next();
        v[i] = Complex(re, im);
    }
    const double nrm = v.norm();
    if (nrm == 0.0) {
        v.setZero();
        v[0] = 1.0;
        return v;
    }
    return v / nrm;
}

void phase_normalize(ComplexVector& v) {
    const double scale = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > 1e-12 * scale) {
            Complex ph = v[i] / std::abs(v[i]);
            v /= ph;
            return;
        }
    }
}

}  // namespace

NumRadResult numerical_radius(const ComplexMatrix& a, double rtol) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw NonSquareError("numerical_radius: matrix must be square and non-empty");
    if (!a.allFinite()) throw Error("numerical_radius: non-finite entries");
    if (!(rtol > 0)) rtol = 1e-10;

    NumRadResult res;
    if (a.rows() == 1) {
        res.value = std::abs(a(0, 0));
        res.theta_star = res.value > 0 ? wrap_angle(-std::arg(a(0, 0))) : 0.0;
        res.witness = ComplexVector::Ones(1);
        res.iterations = 0;
        return res;
    }

    int evals = 0;
    std::array<double, kGridPoints> grid_vals{};
    for (int g = 0; g < kGridPoints; ++g)
        grid_vals[g] = sweep_objective(a, kTwoPi * g / kGridPoints, evals);

    std::array<int, kGridPoints> order{};
    for (int g = 0; g < kGridPoints; ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return grid_vals[i] > grid_vals[j]; });

    double best_val = grid_vals[order[0]];
    double best_theta = kTwoPi * order[0] / kGridPoints;
    std::vector<std::pair<double, double>> candidates;  // (theta, value) per bracket

    const double step = kTwoPi / kGridPoints;
    for (int k = 0; k < 3 && k < kGridPoints; ++k) {
        const int idx = order[k];
        double lo = kTwoPi * idx / kGridPoints - step;
        double hi = lo + 2 * step;
        double c = hi - kGoldenRatio * (hi - lo);
        double d = lo + kGoldenRatio * (hi - lo);
        double fc = sweep_objective(a, c, evals);
        double fd = sweep_objective(a, d, evals);
        double bracket_best_val = std::max(fc, fd);
        double bracket_best_theta = fc >= fd ? c : d;
        while (hi - lo > rtol) {
            if (fc >= fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - kGoldenRatio * (hi - lo);
                fc = sweep_objective(a, c, evals);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + kGoldenRatio * (hi - lo);
                fd = sweep_objective(a, d, evals);
            }
            if (fc > bracket_best_val) { bracket_best_val = fc; bracket_best_theta = c; }
            if (fd > bracket_best_val) { bracket_best_val = fd; bracket_best_theta = d; }
        }
        const double center_val = std::max(bracket_best_val, grid_vals[idx]);
        const double center_theta =
            bracket_best_val >= grid_vals[idx] ? bracket_best_theta : kTwoPi * idx / kGridPoints;
        candidates.emplace_back(wrap_angle(center_theta), center_val);
        if (center_val > best_val) {
            best_val = center_val;
            best_theta = center_theta;
        }
    }

    // Ties within tolerance resolve to the smallest theta.
    const double tie_tol = std::max(rtol, 1e-12) * std::max(1.0, std::abs(best_val));
    double theta_star = wrap_angle(best_theta);
    for (const auto& [th, val] : candidates)
        if (val >= best_val - tie_tol && th < theta_star) theta_star = th;

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rotated_hermitian(a, theta_star));
    if (es.info() != Eigen::Success)
        throw NonConvergenceError("numerical_radius: witness eigensolver failed");
    ComplexVector witness = es.eigenvectors().col(a.rows() - 1);
    phase_normalize(witness);

    res.value = best_val;
    res.theta_star = theta_star;
    res.witness = witness;
    res.iterations = evals;
    return res;
}

double omega(const ComplexMatrix& a, double rtol) { return numerical_radius(a, rtol).value; }

double numerical_radius_oracle(const ComplexMatrix& a, std::int64_t samples, std::uint64_t seed) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw NonSquareError("numerical_radius_oracle: matrix must be square and non-empty");
    if (!a.allFinite()) throw Error("numerical_radius_oracle: non-finite entries");
    const Eigen::Index n = a.rows();
    if (n == 1) return std::abs(a(0, 0));

    // Normal matrices: omega equals the spectral radius.
    const double nrm = a.norm();
    const double commutator = (a * a.adjoint() - a.adjoint() * a).norm();
    if (commutator <= 1e-10 * nrm * nrm) return spectral_radius(a);

    // Sampling keeps the best vector overall plus the best vector in each
    // bin of arg(<Ax, x>); distinct rotation angles index distinct local
    // basins of the objective, so ascending from every bin leader avoids
    // getting trapped in one of them.
    GaussianStream g(seed);
    constexpr int kBins = 16;
    std::vector<ComplexVector> leaders(kBins + 1);
    std::vector<double> leader_vals(kBins + 1, -1.0);
    for (std::int64_t i = 0; i < samples; ++i) {
        ComplexVector x = random_unit_vector(g, n);
        const Complex q = Complex(x.adjoint() * (a * x));
        const double v = std::abs(q);
        double phase = std::arg(q);
        if (phase < 0) phase += 2 * 3.14159265358979323846;
        const int bin = std::min(kBins - 1, static_cast<int>(phase / (2 * 3.14159265358979323846) *
                                                             kBins));
        if (v > leader_vals[bin]) {
            leader_vals[bin] = v;
            leaders[bin] = x;
        }
        if (v > leader_vals[kBins]) {
            leader_vals[kBins] = v;
            leaders[kBins] = x;
        }
    }

    // Alternating ascent from each leader: theta from the current vector,
    // vector from the top eigenvector of the rotated Hermitian part.
    // Monotone in the objective, so the result stays a lower bound on omega.
    double best_val = 0.0;
    for (int lead = 0; lead <= kBins; ++lead) {
        if (leader_vals[lead] < 0) continue;
        ComplexVector x = leaders[lead];
        double val = leader_vals[lead];
        for (int it = 0; it < 200; ++it) {
            const Complex q = Complex(x.adjoint() * (a * x));
            const double theta = q == 0.0 ? 0.0 : -std::arg(q);
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rotated_hermitian(a, theta));
            if (es.info() != Eigen::Success) break;
            ComplexVector y = es.eigenvectors().col(n - 1);
            const double v = std::abs(Complex(y.adjoint() * (a * y)));
            if (v <= val + 1e-13 * std::max(1.0, val)) break;
            val = v;
            x = y;
        }
        best_val = std::max(best_val, val);
    }
    return best_val;
}

double nr_2x2_nonneg(double a, double b, double c, double d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw NegativeEntryError("nr_2x2_nonneg: entries must be nonnegative");
    return (std::abs(a + b) + std::hypot(a - b, c + d)) / 2.0;
}

double horn_bound(const ComplexMatrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0)
        throw NonSquareError("horn_bound: matrix must be square and non-empty");
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j).imag() != 0.0 || a(i, j).real() < 0.0)
                throw NegativeEntryError("horn_bound: entries must be real and nonnegative");
    ComplexMatrix sym = a + a.transpose();
    HermitianEigen eg = hermitian_eigs(sym);
    const double r = std::max(std::abs(eg.eigenvalues.minCoeff()), std::abs(eg.eigenvalues.maxCoeff()));
    return r / 2.0;
}

ComplexMatrix block_compose(BlockKind kind, const std::vector<ComplexMatrix>& blocks) {
    auto fail = [](const std::string& msg) -> ComplexMatrix {
        throw ShapeMismatchError("block_compose: " + msg);
    };
    switch (kind) {
        case BlockKind::Diag: {
            if (blocks.empty()) return fail("diag needs at least one block");
            Eigen::Index total = 0;
            for (const auto& b : blocks) {
                if (b.rows() != b.cols()) return fail("diag blocks must be square");
                total += b.rows();
            }
            ComplexMatrix out = ComplexMatrix::Zero(total, total);
            Eigen::Index off = 0;
            for (const auto& b : blocks) {
                out.block(off, off, b.rows(), b.cols()) = b;
                off += b.rows();
            }
            return out;
        }
        case BlockKind::OffDiag: {
            if (blocks.size() != 2) return fail("offdiag needs exactly two blocks");
            const auto& b = blocks[0];
            const auto& c = blocks[1];
            if (b.rows() != c.cols() || b.cols() != c.rows())
                return fail("offdiag blocks must have transposed shapes");
            const Eigen::Index d1 = b.rows(), d2 = b.cols();
            ComplexMatrix out = ComplexMatrix::Zero(d1 + d2, d1 + d2);
            out.block(0, d1, d1, d2) = b;
            out.block(d1, 0, d2, d1) = c;
            return out;
        }
        case BlockKind::SymmetricPair: {
            if (blocks.size() != 2) return fail("symmetric-pair needs exactly two blocks");
            const auto& t = blocks[0];
            const auto& s = blocks[1];
            if (t.rows() != t.cols() || s.rows() != s.cols() || t.rows() != s.rows())
                return fail("symmetric-pair blocks must be square and equal-sized");
            const Eigen::Index d = t.rows();
            ComplexMatrix out(2 * d, 2 * d);
            out << t, s, s, t;
            return out;
        }
        case BlockKind::Full2x2: {
            if (blocks.size() != 4) return fail("full-2x2 needs exactly four blocks");
            const auto& t = blocks[0];
            const auto& x = blocks[1];
            const auto& y = blocks[2];
            const auto& s = blocks[3];
            if (t.rows() != t.cols() || s.rows() != s.cols()) return fail("diagonal blocks must be square");
            if (x.rows() != t.rows() || x.cols() != s.cols() || y.rows() != s.rows() ||
                y.cols() != t.cols())
                return fail("off-diagonal blocks are not conformable");
            ComplexMatrix out(t.rows() + s.rows(), t.cols() + s.cols());
            out << t, x, y, s;
            return out;
        }
        case BlockKind::FullNxN: {
            const auto count = blocks.size();
            Eigen::Index n = 0;
            while (static_cast<std::size_t>(n) * n < count) ++n;
            if (static_cast<std::size_t>(n) * n != count || n == 0)
                return fail("full-nxn needs a perfect square number of blocks");
            std::vector<Eigen::Index> rh(n), cw(n);
            for (Eigen::Index i = 0; i < n; ++i) rh[i] = blocks[i * n].rows();
            for (Eigen::Index j = 0; j < n; ++j) cw[j] = blocks[j].cols();
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j) {
                    const auto& b = blocks[i * n + j];
                    if (b.rows() != rh[i] || b.cols() != cw[j])
                        return fail("inconsistent block partition");
                }
            Eigen::Index rows = 0, cols = 0;
            for (auto v : rh) rows += v;
            for (auto v : cw) cols += v;
            ComplexMatrix out = ComplexMatrix::Zero(rows, cols);
            Eigen::Index ro = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
                Eigen::Index co = 0;
                for (Eigen::Index j = 0; j < n; ++j) {
                    out.block(ro, co, rh[i], cw[j]) = blocks[i * n + j];
                    co += cw[j];
                }
                ro += rh[i];
            }
            return out;
        }
        case BlockKind::SingleRow: {
            if (blocks.empty()) return fail("single-row needs at least one block");
            const auto& s1 = blocks[0];
            if (s1.rows() != s1.cols()) return fail("leading block must be square");
            const Eigen::Index d = s1.rows();
            Eigen::Index total = d;
            for (std::size_t j = 1; j < blocks.size(); ++j) {
                if (blocks[j].rows() != d) return fail("row blocks must share the leading height");
                total += blocks[j].cols();
            }
            ComplexMatrix out = ComplexMatrix::Zero(total, total);
            Eigen::Index co = 0;
            for (const auto& b : blocks) {
                out.block(0, co, d, b.cols()) = b;
                co += b.cols();
            }
            return out;
        }
    }
    return fail("unknown block kind");
}

}  // namespace nradius
