#include "nradius/catalog.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "nradius/matfun.hpp"
#include "nradius/numrad.hpp"

namespace nradius {

namespace {

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

// omega of a Hermitian PSD-type argument equals its operator norm.
double psd_omega(const ComplexMatrix& h) { return op_norm(h); }

double omega_of(const ComplexMatrix& m) { return numerical_radius(m).value; }

struct P {  // validated parameter view
    Complex alpha{};
    double beta = 0, mu = 0, lambda = 0, r = 0, s = 0, p = 0, q = 0;
    int n = 0;
    DerivedConstants c{};
    bool has_consts = false;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw ParamOutOfDomainError(msg);
}

P unpack(const BoundDescriptor& d, const BoundParams& bp, bool skip_lambda = false) {
    P v;
    const auto& dom = d.param_domain;
    if (dom.alpha) {
        require(bp.alpha.has_value(), d.id + ": alpha is required");
        v.alpha = *bp.alpha;
        require(v.alpha != Complex(0, 0), d.id + ": alpha must be nonzero");
    }
    if (dom.beta) {
        require(bp.beta.has_value(), d.id + ": beta is required");
        v.beta = *bp.beta;
        require(v.beta >= 0, d.id + ": beta must be >= 0");
    }
    if (dom.mu) {
        require(bp.mu.has_value(), d.id + ": mu is required");
        v.mu = *bp.mu;
        require(v.mu >= 0 && v.mu <= 1, d.id + ": mu must lie in [0, 1]");
    }
    if (dom.lambda && !skip_lambda) {
        require(bp.lambda_exp.has_value(), d.id + ": lambda is required");
        v.lambda = *bp.lambda_exp;
        require(v.lambda >= 0 && v.lambda <= 1, d.id + ": lambda must lie in [0, 1]");
    }
    if (dom.r) {
        require(bp.r.has_value(), d.id + ": r is required");
        v.r = *bp.r;
        require(v.r >= dom.min_r, d.id + ": r must be >= " + std::to_string(dom.min_r));
    }
    if (dom.s) {
        require(bp.s.has_value(), d.id + ": s is required");
        v.s = *bp.s;
        require(v.s >= 1.0, d.id + ": s must be >= 1");
    }
    if (dom.n && !dom.n_structural) {
        require(bp.n.has_value(), d.id + ": n is required");
        v.n = *bp.n;
        require(v.n >= dom.min_n, d.id + ": n must be >= " + std::to_string(dom.min_n));
    } else if (dom.n_structural && bp.n.has_value()) {
        v.n = *bp.n;
        require(v.n >= dom.min_n, d.id + ": n must be >= " + std::to_string(dom.min_n));
    }
    if (dom.pq) {
        require(bp.p.has_value() && bp.q.has_value(), d.id + ": p and q are required");
        v.p = *bp.p;
        v.q = *bp.q;
        require(v.p > 1 && v.q > 1, d.id + ": p and q must exceed 1");
        require(std::abs(1.0 / v.p + 1.0 / v.q - 1.0) <= 1e-12,
                d.id + ": p and q must be conjugate exponents");
        if (dom.pr_qr_ge2) {
            const double rr = dom.r ? v.r : 1.0;
            require(v.p * rr >= 2.0 - 1e-12 && v.q * rr >= 2.0 - 1e-12,
                    d.id + ": p*r and q*r must be >= 2");
        }
    }
    if (dom.alpha && dom.beta) {
        BoundParams cp;
        cp.alpha = v.alpha;
        cp.beta = v.beta;
        v.c = derived_constants(cp);
        v.has_consts = true;
    } else if (dom.beta) {
        BoundParams cp;
        cp.alpha = Complex(2, 0);
        cp.beta = v.beta;
        v.c = derived_constants(cp);
        v.has_consts = true;
    }
    return v;
}

void check_shape(const BoundDescriptor& d, const BoundInput& in) {
    if (in.shape != d.input_shape)
        throw ShapeMismatchError(d.id + ": input shape does not match the descriptor");
    for (const auto& m : in.mats)
        if (!m.allFinite()) throw Error(d.id + ": non-finite operand entries");
}

// ---- operand views -------------------------------------------------------

const ComplexMatrix& single_mat(const BoundInput& in) { return in.mats.at(0); }

struct PairView {
    const ComplexMatrix& b;
    const ComplexMatrix& c;
};
PairView pair_view(const BoundInput& in) {
    if (in.mats.size() != 2) throw ShapeMismatchError("pair input needs exactly two matrices");
    return {in.mats[0], in.mats[1]};
}

struct B2View {
    const ComplexMatrix& t;
    const ComplexMatrix& x;
    const ComplexMatrix& y;
    const ComplexMatrix& s;
};
B2View b2_view(const BoundInput& in) {
    if (in.mats.size() != 4) throw ShapeMismatchError("2x2 block input needs exactly four matrices");
    return {in.mats[0], in.mats[1], in.mats[2], in.mats[3]};
}

int nxn_order(const BoundInput& in) {
    std::size_t n = 0;
    while (n * n < in.mats.size()) ++n;
    if (n * n != in.mats.size() || n == 0)
        throw ShapeMismatchError("n x n block input needs a perfect square number of matrices");
    return static_cast<int>(n);
}

// Split an off-diagonal [[0, M1], [M2, 0]] operator with square blocks.
struct OffDiagParts {
    ComplexMatrix upper;  // M1
    ComplexMatrix lower;  // M2
};
OffDiagParts split_offdiag(const ComplexMatrix& m, const std::string& who) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw ShapeMismatchError(who + ": operator must be square with even dimension");
    const Eigen::Index d = m.rows() / 2;
    const double scale = std::max(1.0, m.norm());
    if (m.block(0, 0, d, d).norm() > 1e-12 * scale || m.block(d, d, d, d).norm() > 1e-12 * scale)
        throw ShapeMismatchError(who + ": diagonal blocks must vanish");
    return {m.block(0, d, d, d), m.block(d, 0, d, d)};
}

struct DiagParts {
    ComplexMatrix first;
    ComplexMatrix second;
};
DiagParts split_diag(const ComplexMatrix& m, const std::string& who) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw ShapeMismatchError(who + ": operator must be square with even dimension");
    const Eigen::Index d = m.rows() / 2;
    const double scale = std::max(1.0, m.norm());
    if (m.block(0, d, d, d).norm() > 1e-12 * scale || m.block(d, 0, d, d).norm() > 1e-12 * scale)
        throw ShapeMismatchError(who + ": off-diagonal blocks must vanish");
    return {m.block(0, 0, d, d), m.block(d, d, d, d)};
}

struct TripleView {
    const ComplexMatrix& a;
    const ComplexMatrix& x;
    const ComplexMatrix& b;
};
TripleView triple_view(const BoundInput& in) {
    if (in.mats.size() != 3) throw ShapeMismatchError("triple input needs exactly three matrices");
    return {in.mats[0], in.mats[1], in.mats[2]};
}

std::vector<TripleView> triple_list_view(const BoundInput& in) {
    if (in.mats.empty() || in.mats.size() % 3 != 0)
        throw ShapeMismatchError("triple list input needs 3k matrices");
    std::vector<TripleView> out;
    for (std::size_t i = 0; i < in.mats.size(); i += 3)
        out.push_back({in.mats[i], in.mats[i + 1], in.mats[i + 2]});
    return out;
}

// ---- shared formula pieces ----------------------------------------------

double max_abs_pair_norm(const ComplexMatrix& b, const ComplexMatrix& c, double pc, double pb) {
    // max{ || |C|^pc + |B*|^pb ||, || |B|^pc + |C*|^pb || }
    return std::max(op_norm(abs_power(c, pc) + abs_star_power(b, pb)),
                    op_norm(abs_power(b, pc) + abs_star_power(c, pb)));
}

double max_weighted_omega(const ComplexMatrix& b, const ComplexMatrix& c, double mu) {
    // max{ omega(|B*|^{2(1-mu)} |C|^{2 mu}), omega(|C*|^{2(1-mu)} |B|^{2 mu}) }
    return std::max(omega_of(abs_star_power(b, 2 * (1 - mu)) * abs_power(c, 2 * mu)),
                    omega_of(abs_star_power(c, 2 * (1 - mu)) * abs_power(b, 2 * mu)));
}

void validate_fg_spectrum(const FgPair& fg, const RealVector& spectrum) {
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        const double t = spectrum[i];
        const double ft = fg.f(t);
        const double gt = fg.g(t);
        if (!(ft >= -1e-12) || !(gt >= -1e-12))
            throw ParamOutOfDomainError("f,g pair: negative value at t = " + std::to_string(t));
        if (std::abs(ft * gt - t) > 1e-8 * std::max(1.0, std::abs(t)))
            throw ParamOutOfDomainError("f,g pair: f(t) g(t) != t at t = " + std::to_string(t));
    }
}

// fn applied to the spectrum of |M|, optionally validating an f,g pair there.
ComplexMatrix apply_to_abs(const ComplexMatrix& m, const std::function<double(double)>& fn,
                           const FgPair* check) {
    HermitianEigen eg = hermitian_eigs(m.adjoint() * m);
    RealVector w = eg.eigenvalues.cwiseMax(0.0).cwiseSqrt();
    if (check) validate_fg_spectrum(*check, w);
    RealVector out(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        out[i] = fn(w[i]);
        if (!std::isfinite(out[i]))
            throw ParamOutOfDomainError("f,g pair: non-finite value on the spectrum");
    }
    return eg.eigenvectors * out.asDiagonal() * eg.eigenvectors.adjoint();
}

// f(t)^k on |M|
ComplexMatrix fk_abs(const ComplexMatrix& m, double k, const FgPair& fg, bool check) {
    return apply_to_abs(m, [&](double t) { return std::pow(fg.f(t), k); }, check ? &fg : nullptr);
}

// g(t)^k on |M*|
ComplexMatrix gk_absstar(const ComplexMatrix& m, double k, const FgPair& fg, bool check) {
    return apply_to_abs(m.adjoint(), [&](double t) { return std::pow(fg.g(t), k); },
                        check ? &fg : nullptr);
}

double comparison_diag_entry_fg(const ComplexMatrix& sii, double s, const FgPair& fg, bool check) {
    return 0.5 * psd_omega(fk_abs(sii, 2 * s, fg, check) + gk_absstar(sii, 2 * s, fg, check));
}

double comparison_fg_core(const BoundInput& in, double s, const FgPair& fg, bool check) {
    std::size_t nn = 0;
    while (nn * nn < in.mats.size()) ++nn;
    const int n = static_cast<int>(nn);
    ComplexMatrix hat(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const ComplexMatrix& b = in.mats[i * n + j];
            hat(i, j) = i == j ? Complex(comparison_diag_entry_fg(b, s, fg, check), 0.0)
                               : Complex(std::pow(op_norm(b), s), 0.0);
        }
    return std::pow(double(n), 2 * s - 2) * omega_of(hat);
}

double comparison_2x2_core(const BoundInput& in, double s, const FgPair& fg, bool check) {
    const double t11 = comparison_diag_entry_fg(in.mats[0], s, fg, check);
    const double t22 = comparison_diag_entry_fg(in.mats[3], s, fg, check);
    const double off = std::pow(op_norm(in.mats[1]), s) + std::pow(op_norm(in.mats[2]), s);
    return std::pow(2.0, 2 * s - 3) *
           (t11 + t22 + std::sqrt((t11 - t22) * (t11 - t22) + off * off));
}

double offdiag_fg_core(const ComplexMatrix& b, const ComplexMatrix& c, double r, const FgPair& fg,
                       bool check) {
    const double w1 = psd_omega(fk_abs(b, 2 * r, fg, check) + gk_absstar(c, 2 * r, fg, check));
    const double w2 = psd_omega(gk_absstar(b, 2 * r, fg, check) + fk_abs(c, 2 * r, fg, check));
    return std::pow(2.0, r - 2) * std::sqrt(w1) * std::sqrt(w2);
}

double malik_core(const ComplexMatrix& b, const ComplexMatrix& c, const DerivedConstants& dc,
                  double r, double p, double q, const FgPair& fg, bool check) {
    const double n4 = max_abs_pair_norm(b, c, 4 * r, 4 * r);
    const double n2 = max_abs_pair_norm(b, c, 2 * r, 2 * r);
    const ComplexMatrix bc = b * c, cb = c * b;
    auto young = [&](const ComplexMatrix& m) {
        return op_norm(fk_abs(m, p * r, fg, check) / p + gk_absstar(m, q * r, fg, check) / q);
    };
    return dc.gamma1 / 8 * n4 + dc.gamma2 / 8 * n2 * std::max(young(bc), young(cb));
}

double binom_pq_core(const ComplexMatrix& b, const ComplexMatrix& c, int n, double p, double q,
                     const FgPair& fg, bool check) {
    const ComplexMatrix bc = b * c, cb = c * b;
    auto npair = [&](double k) {
        return std::max(op_norm(abs_power(c, k * p) / p + abs_star_power(b, k * q) / q),
                        op_norm(abs_power(b, k * p) / p + abs_star_power(c, k * q) / q));
    };
    auto fgpair = [&](double k) {
        return std::max(op_norm(fk_abs(bc, k * p, fg, check) / p +
                                gk_absstar(bc, k * q, fg, check) / q),
                        op_norm(fk_abs(cb, k * p, fg, check) / p +
                                gk_absstar(cb, k * q, fg, check) / q));
    };
    const double scale = std::pow(2.0, -n);
    double total = scale * (npair(n) + fgpair(n));
    for (int k = 1; k < n; ++k) total += scale * binomial(n, k) * npair(k) * fgpair(n - k);
    return total;
}

double sum_product_core(const std::vector<TripleView>& trips, double r, double p, double q,
                        const FgPair& fg, bool check) {
    const Eigen::Index dim = trips[0].b.cols();
    ComplexMatrix s1 = ComplexMatrix::Zero(dim, dim);
    ComplexMatrix s2 = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : trips) {
        s1 += t.b.adjoint() * fk_abs(t.x, 2, fg, check) * t.b;
        s2 += t.a.adjoint() * gk_absstar(t.x, 2, fg, check) * t.a;
    }
    return psd_omega(matrix_power_psd((s1 + s1.adjoint()) / 2, p * r / 2) / p +
                     matrix_power_psd((s2 + s2.adjoint()) / 2, q * r / 2) / q);
}

// Repaired binomial off-diagonal bound on omega^{2n}. With
// N = max{|| |C|^{4mu} + |B*|^{4(1-mu)} ||, || |B|^{4mu} + |C*|^{4(1-mu)} ||},
// W = max_weighted_omega and m = n/2 (integer division):
//   omega^{2n} <= sum_{k=0}^{m} C(m,k) l1^k l2^{m-k} (N/2)^{n-m+k} W^{m-k}.
double seema_rhs(const ComplexMatrix& b, const ComplexMatrix& c, const DerivedConstants& dc,
                 double mu, int n) {
    const double w = max_weighted_omega(b, c, mu);
    const double nn = max_abs_pair_norm(b, c, 4 * mu, 4 * (1 - mu));
    const int m = n / 2;
    double total = 0.0;
    for (int k = 0; k <= m; ++k)
        total += binomial(m, k) * std::pow(dc.lambda1, k) * std::pow(dc.lambda2, m - k) *
                 std::pow(nn / 2.0, n - m + k) * std::pow(w, m - k);
    return total;
}

struct KzParts {
    double n4;      // max{|| |T|^4+|X*|^4 ||, || |S|^4+|Y*|^4 ||}
    double n2;      // max{|| |T|^2+|X*|^2 ||, || |S|^2+|Y*|^2 ||}
    double omega_e; // omega([[0, XS], [YT, 0]])
};
KzParts kz_parts(const B2View& v) {
    KzParts k{};
    k.n4 = std::max(op_norm(abs_power(v.t, 4) + abs_star_power(v.x, 4)),
                    op_norm(abs_power(v.s, 4) + abs_star_power(v.y, 4)));
    k.n2 = std::max(op_norm(abs_power(v.t, 2) + abs_star_power(v.x, 2)),
                    op_norm(abs_power(v.s, 2) + abs_star_power(v.y, 2)));
    k.omega_e = omega_of(block_compose(BlockKind::OffDiag, {v.x * v.s, v.y * v.t}));
    return k;
}

using EvalFn = std::function<double(const BoundDescriptor&, const BoundInput&, const BoundParams&)>;
using TargetFn = std::function<ComplexMatrix(const BoundDescriptor&, const BoundInput&, const BoundParams&)>;

struct BoundDef {
    BoundDescriptor desc;
    EvalFn eval;
    TargetFn target;
};

ComplexMatrix identity_target(const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
    return single_mat(in);
}

ComplexMatrix offdiag_target(const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
    auto v = pair_view(in);
    return block_compose(BlockKind::OffDiag, {v.b, v.c});
}

ComplexMatrix b2_target(const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
    auto v = b2_view(in);
    return block_compose(BlockKind::Full2x2, {v.t, v.x, v.y, v.s});
}

ComplexMatrix nxn_target(const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
    return block_compose(BlockKind::FullNxN, in.mats);
}

constexpr double kHoldsRel = 1e-8;
constexpr double kHoldsAbs = 1e-10;

std::vector<BoundDef> build_catalog();

const std::vector<BoundDef>& catalog() {
    static const std::vector<BoundDef> defs = build_catalog();
    return defs;
}

const BoundDef& find_def(const std::string& id) {
    for (const auto& d : catalog())
        if (d.desc.id == id) return d;
    throw UnknownBoundError("unknown bound id: " + id);
}

std::vector<BoundDef> build_catalog() {
    std::vector<BoundDef> defs;
    auto add = [&defs](BoundDescriptor desc, EvalFn eval, TargetFn target) {
        defs.push_back({std::move(desc), std::move(eval), std::move(target)});
    };
    auto exp_const = [](double k) {
        return [k](const BoundParams&) { return k; };
    };
    auto exp_2r = [](const BoundParams& p) { return 2.0 * p.r.value_or(1.0); };
    auto exp_r = [](const BoundParams& p) { return p.r.value_or(1.0); };
    auto exp_s = [](const BoundParams& p) { return p.s.value_or(1.0); };
    auto exp_4r = [](const BoundParams& p) { return 4.0 * p.r.value_or(1.0); };
    auto exp_2n = [](const BoundParams& p) { return 2.0 * p.n.value_or(2); };

    ParamDomain none;

    // ---- norm equivalence and Kittaneh refinements ----
    add({"norm-upper", InputShape::Single, none, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
         "two-sided norm equivalence of the numerical radius, upper half", "1 matrix",
         exp_const(1)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            return op_norm(single_mat(in));
        },
        identity_target);
    add({"norm-lower", InputShape::Single, none, BoundSide::LowerOnOmegaPower, LhsKind::Omega,
         "two-sided norm equivalence of the numerical radius, lower half", "1 matrix",
         exp_const(1)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            return 0.5 * op_norm(single_mat(in));
        },
        identity_target);
    add({"kittaneh-lower", InputShape::Single, none, BoundSide::LowerOnOmegaPower, LhsKind::Omega,
         "Kittaneh refinement, lower bound on omega^2", "1 matrix", exp_const(2)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            const auto& m = single_mat(in);
            return 0.25 * op_norm(abs_power(m, 2) + abs_star_power(m, 2));
        },
        identity_target);
    add({"kittaneh-upper", InputShape::Single, none, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
         "Kittaneh refinement, upper bound on omega^2", "1 matrix", exp_const(2)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            const auto& m = single_mat(in);
            return 0.5 * op_norm(abs_power(m, 2) + abs_star_power(m, 2));
        },
        identity_target);

    {
        ParamDomain d;
        d.r = true;
        add({"el-haddad-kittaneh", InputShape::Single, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "El-Haddad-Kittaneh power bound on omega^{2r}", "1 matrix", exp_2r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                return 0.5 * op_norm(abs_power(m, 2 * v.r) + abs_star_power(m, 2 * v.r));
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.r = true;
        add({"dragomir-product", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "Dragomir bound on omega^r(S*T) for operator products",
             "2 matrices: T S (target S*T)", exp_r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                return 0.5 * op_norm(abs_power(pr.b, 2 * v.r) + abs_power(pr.c, 2 * v.r));
            },
            [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) -> ComplexMatrix {
                auto pr = pair_view(in);
                if (pr.b.rows() != pr.c.rows())
                    throw ShapeMismatchError("dragomir-product: T and S must have equal heights");
                return pr.c.adjoint() * pr.b;
            });
    }

    // ---- block comparison matrices ----
    auto hat_matrix = [](const BoundInput& in, auto&& entry) -> ComplexMatrix {
        const int n = nxn_order(in);
        ComplexMatrix hat(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) hat(i, j) = entry(in.mats[i * n + j], i, j, in, n);
        return hat;
    };

    {
        ParamDomain d;
        d.n = true;
        d.n_structural = true;
        auto hou_eval = [hat_matrix](const BoundDescriptor& bd, const BoundInput& in,
                                     const BoundParams&) {
            ComplexMatrix hat(0, 0);
            hat = hat_matrix(in, [](const ComplexMatrix& b, int, int, const BoundInput&, int) {
                return Complex(op_norm(b), 0.0);
            });
            if (bd.id == "hou-blocknorm") return omega_of(hat);
            if (bd.id == "hou-blocknorm-norm") return op_norm(hat);
            return spectral_radius(hat);
        };
        add({"hou-blocknorm", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "Hou-Du block-norm comparison for omega", "n^2 blocks, row-major", exp_const(1)},
            hou_eval, nxn_target);
        add({"hou-blocknorm-norm", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower,
             LhsKind::OperatorNorm, "Hou-Du block-norm comparison for the operator norm",
             "n^2 blocks, row-major", exp_const(1)},
            hou_eval, nxn_target);
        add({"hou-blocknorm-specrad", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower,
             LhsKind::SpectralRadius, "Hou-Du block-norm comparison for the spectral radius",
             "n^2 blocks, row-major", exp_const(1)},
            hou_eval, nxn_target);

        add({"bani-domi-kittaneh", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "Bani-Domi-Kittaneh comparison matrix bound",
             "n^2 blocks, row-major", exp_const(1)},
            [hat_matrix](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
                return omega_of(hat_matrix(
                    in, [](const ComplexMatrix& b, int i, int j, const BoundInput&, int) {
                        if (i == j)
                            return Complex(0.5 * (op_norm(b) + std::sqrt(op_norm(b * b))), 0.0);
                        return Complex(op_norm(b), 0.0);
                    }));
            },
            nxn_target);
        add({"abu-omar-kittaneh", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "Abu-Omar-Kittaneh comparison matrix bound",
             "n^2 blocks, row-major", exp_const(1)},
            [hat_matrix](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
                return omega_of(hat_matrix(
                    in, [](const ComplexMatrix& b, int i, int j, const BoundInput&, int) {
                        if (i == j) return Complex(omega_of(b), 0.0);
                        return Complex(op_norm(b), 0.0);
                    }));
            },
            nxn_target);
        add({"af-offdiag", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "comparison matrix with paired off-diagonal numerical radii",
             "n^2 blocks, row-major", exp_const(1)},
            [hat_matrix](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
                return omega_of(hat_matrix(
                    in, [](const ComplexMatrix& b, int i, int j, const BoundInput& input, int n) {
                        if (i == j) return Complex(omega_of(b), 0.0);
                        const ComplexMatrix& opp = input.mats[j * n + i];
                        return Complex(omega_of(block_compose(BlockKind::OffDiag, {b, opp})), 0.0);
                    }));
            },
            nxn_target);
    }

    ParamDomain single_row_dom;
    single_row_dom.n = true;
    single_row_dom.n_structural = true;
    add({"single-row", InputShape::SingleRow, single_row_dom, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
         "single nonzero block row: (1/2)(w(S1) + sqrt(w(S1)^2 + sum ||Sj||^2))",
         "k blocks S1..Sk; S1 square", exp_const(1)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            if (in.mats.empty()) throw ShapeMismatchError("single-row: needs at least one block");
            const double w1 = omega_of(in.mats[0]);
            double sq = 0.0;
            for (std::size_t j = 1; j < in.mats.size(); ++j) {
                const double nj = op_norm(in.mats[j]);
                sq += nj * nj;
            }
            return 0.5 * (w1 + std::sqrt(w1 * w1 + sq));
        },
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            return block_compose(BlockKind::SingleRow, in.mats);
        });

    {
        ParamDomain d;
        d.s = true;
        d.lambda = true;
        d.n = true;
        d.n_structural = true;
        add({"comparison-fg", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "f,g comparison matrix bound on omega^s, coefficient n^{2s-2}",
             "n^2 blocks, row-major", exp_s},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                nxn_order(in);
                return comparison_fg_core(in, v.s, power_fg(v.lambda), false);
            },
            nxn_target);
    }
    {
        ParamDomain d;
        d.s = true;
        d.lambda = true;
        add({"comparison-2x2", InputShape::BlocksNxN, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "closed-form 2x2 specialization of the f,g comparison bound",
             "4 blocks, row-major", exp_s},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                if (in.mats.size() != 4)
                    throw ShapeMismatchError("comparison-2x2: needs exactly four blocks");
                return comparison_2x2_core(in, v.s, power_fg(v.lambda), false);
            },
            nxn_target);
    }
    {
        ParamDomain d;
        d.r = true;
        d.lambda = true;
        add({"offdiag-fg", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "off-diagonal f,g bound: 2^{r-2} sqrt(w(f^{2r}(|B|)+g^{2r}(|C*|))) "
             "sqrt(w(g^{2r}(|B*|)+f^{2r}(|C|)))",
             "2 matrices: B C (target offdiag)", exp_r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                return offdiag_fg_core(pr.b, pr.c, v.r, power_fg(v.lambda), false);
            },
            offdiag_target);
    }

    // ---- generalized-Buzano fourth-power family ----
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        add({"moby-a1", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power off-diagonal bound with delta constants",
             "2 matrices: B C (target offdiag)", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                const double nm = max_abs_pair_norm(pr.b, pr.c, 2, 2);
                const double wm = std::max(omega_of(pr.b * pr.c), omega_of(pr.c * pr.b));
                return v.c.delta1 / 4 * nm * nm + v.c.delta2 * wm * wm;
            },
            offdiag_target);
        add({"moby-a2", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power single-operator bound with delta constants", "1 matrix", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
                const double w2 = omega_of(m * m);
                return v.c.delta1 / 4 * n2 * n2 + v.c.delta2 * w2 * w2;
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.beta = true;
        d.r = true;
        add({"ramadan1", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "4r-th power off-diagonal bound with gamma constants",
             "2 matrices: B C (target offdiag)", exp_4r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                const double nm = max_abs_pair_norm(pr.b, pr.c, 2 * v.r, 2 * v.r);
                const double wm = std::max(std::pow(omega_of(pr.b * pr.c), v.r),
                                           std::pow(omega_of(pr.c * pr.b), v.r));
                return v.c.gamma1 / 16 * nm * nm + v.c.gamma2 / 8 * nm * wm;
            },
            offdiag_target);
        add({"ramadan1-single", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "4r-th power single-operator bound with gamma constants", "1 matrix", exp_4r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double nm = op_norm(abs_power(m, 2 * v.r) + abs_star_power(m, 2 * v.r));
                return v.c.gamma1 / 16 * nm * nm +
                       v.c.gamma2 / 8 * nm * std::pow(omega_of(m * m), v.r);
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.beta = true;
        d.r = true;
        d.pq = true;
        d.lambda = true;
        d.pr_qr_ge2 = true;
        add({"malik-a1", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "4r-th power off-diagonal bound with Young-split product term",
             "2 matrices: B C (target offdiag)", exp_4r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                return malik_core(pr.b, pr.c, v.c, v.r, v.p, v.q, power_fg(v.lambda), false);
            },
            offdiag_target);
    }
    {
        ParamDomain d;
        d.beta = true;
        d.r = true;
        d.lambda = true;
        add({"cor3.18", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "4r-th power single-operator bound with squared-operator norm term", "1 matrix",
             exp_4r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n4 = op_norm(abs_power(m, 4 * v.r) + abs_star_power(m, 4 * v.r));
                const double n2 = op_norm(abs_power(m, 2 * v.r) + abs_star_power(m, 2 * v.r));
                const ComplexMatrix m2 = m * m;
                const double t = op_norm(abs_power(m2, 2 * v.r * v.lambda) +
                                         abs_star_power(m2, 2 * v.r * (1 - v.lambda)));
                return (2 * v.beta + 1) / (8 * (v.beta + 1)) * n4 +
                       (2 * v.beta + 3) / (16 * (v.beta + 1)) * n2 * t;
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        d.mu = true;
        add({"chi-mu-offdiag", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power off-diagonal bound with chi constants and mu-weighted powers",
             "2 matrices: B C (target offdiag)", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                const double nn = max_abs_pair_norm(pr.b, pr.c, 4 * v.mu, 4 * (1 - v.mu));
                const double wm = max_weighted_omega(pr.b, pr.c, v.mu);
                return v.c.chi1 / 4 * nn * nn + v.c.chi2 / 2 * nn * wm;
            },
            offdiag_target);
        add({"chi-mu-single", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power single-operator bound with chi constants and mu-weighted powers",
             "1 matrix", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double nn =
                    op_norm(abs_power(m, 4 * v.mu) + abs_star_power(m, 4 * (1 - v.mu)));
                const double wm =
                    omega_of(abs_star_power(m, 2 * (1 - v.mu)) * abs_power(m, 2 * v.mu));
                return v.c.chi1 / 4 * nn * nn + v.c.chi2 / 2 * nn * wm;
            },
            identity_target);
    }

    // ---- full 2x2 fourth-power bounds ----
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        add({"kz", InputShape::Blocks2x2, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power full 2x2 bound: (2+4chi1) N4 + 4chi2 N2 w(E) + 4 w(E)^2",
             "4 blocks: T X Y S, row-major", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                KzParts k = kz_parts(b2_view(in));
                return (2 + 4 * v.c.chi1) * k.n4 + 4 * v.c.chi2 * k.n2 * k.omega_e +
                       4 * k.omega_e * k.omega_e;
            },
            b2_target);
        add({"kz-single-general", InputShape::Single, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "single-operator specialization of the kz bound", "1 matrix",
             exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n4 = op_norm(abs_power(m, 4) + abs_star_power(m, 4));
                const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
                const double w2 = omega_of(m * m);
                return (2 + 4 * v.c.chi1) / 16 * n4 + v.c.chi2 / 4 * n2 * w2 + w2 * w2 / 4;
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.beta = true;
        add({"kz-single-alpha2", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "kz single-operator bound at alpha = 2", "1 matrix", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n4 = op_norm(abs_power(m, 4) + abs_star_power(m, 4));
                const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
                const double w2 = omega_of(m * m);
                return (4 * v.beta + 3) / (16 * (v.beta + 1)) * n4 +
                       (2 * v.beta + 3) / (16 * (v.beta + 1)) * n2 * w2 + w2 * w2 / 4;
            },
            identity_target);
    }
    add({"khaddad-ref", InputShape::Single, none, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
         "omega^4 <= (1/2) || |T|^4 + |T*|^4 ||", "1 matrix", exp_const(4)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            const auto& m = single_mat(in);
            return 0.5 * op_norm(abs_power(m, 4) + abs_star_power(m, 4));
        },
        identity_target);
    add({"domkit-ref", InputShape::Single, none, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
         "omega^4 <= (3/8) || |T|^4+|T*|^4 || + (1/8) || |T|^2+|T*|^2 || w(T^2)", "1 matrix",
         exp_const(4)},
        [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
            const auto& m = single_mat(in);
            const double n4 = op_norm(abs_power(m, 4) + abs_star_power(m, 4));
            const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
            return 3.0 / 8 * n4 + 1.0 / 8 * n2 * omega_of(m * m);
        },
        identity_target);
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        d.mu = true;
        add({"modified-kz", InputShape::Blocks2x2, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "mu-split fourth-power full 2x2 bound: (2+2chi1+2chi3) N4 + (2chi2+2mu chi4) N2 w(E) "
             "+ (4+4(1-mu)chi4) w(E)^2",
             "4 blocks: T X Y S, row-major", exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                KzParts k = kz_parts(b2_view(in));
                return (2 + 2 * v.c.chi1 + 2 * v.c.chi3) * k.n4 +
                       (2 * v.c.chi2 + 2 * v.mu * v.c.chi4) * k.n2 * k.omega_e +
                       (4 + 4 * (1 - v.mu) * v.c.chi4) * k.omega_e * k.omega_e;
            },
            b2_target);
        add({"pvs-single-general", InputShape::Single, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "single-operator specialization of the mu-split bound", "1 matrix",
             exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n4 = op_norm(abs_power(m, 4) + abs_star_power(m, 4));
                const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
                const double w2 = omega_of(m * m);
                return (1 + v.c.chi1 + v.c.chi3) / 8 * n4 +
                       (v.c.chi2 + v.mu * v.c.chi4) / 8 * n2 * w2 +
                       (1 + (1 - v.mu) * v.c.chi4) / 4 * w2 * w2;
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.beta = true;
        d.mu = true;
        add({"pvs-single-alpha2", InputShape::Single, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega, "mu-split single-operator bound at alpha = 2", "1 matrix",
             exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                const double n4 = op_norm(abs_power(m, 4) + abs_star_power(m, 4));
                const double n2 = op_norm(abs_power(m, 2) + abs_star_power(m, 2));
                const double w2 = omega_of(m * m);
                return (10 * v.beta + 7) / (32 * (v.beta + 1)) * n4 +
                       (2 * v.beta + 2 * v.mu + 3) / (32 * (v.beta + 1)) * n2 * w2 +
                       (2 * v.beta + 3 - v.mu) / (8 * (v.beta + 1)) * w2 * w2;
            },
            identity_target);
    }

    // ---- binomial families ----
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        d.mu = true;
        d.n = true;
        add({"seema9", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "binomial lambda1/lambda2 bound on omega^{2n} of an off-diagonal operator",
             "2 matrices: B C (target offdiag)", exp_2n},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                return seema_rhs(pr.b, pr.c, v.c, v.mu, v.n);
            },
            offdiag_target);
        add({"mutah1", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "binomial lambda1/lambda2 bound on omega^{2n} of a single operator", "1 matrix",
             exp_2n},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                return seema_rhs(m, m, v.c, v.mu, v.n);
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        add({"ineq9.1", InputShape::Single, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "fourth-power case of the binomial bound (n = 2, mu = 1/2)", "1 matrix",
             exp_const(4)},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                const auto& m = single_mat(in);
                return seema_rhs(m, m, v.c, 0.5, 2);
            },
            identity_target);
    }
    {
        ParamDomain d;
        d.n = true;
        d.pq = true;
        d.lambda = true;
        add({"binom-pq", InputShape::Pair, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "1/2^n binomial bound on omega^{2n} with Young-split norms",
             "2 matrices: B C (target offdiag)", exp_2n},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto pr = pair_view(in);
                return binom_pq_core(pr.b, pr.c, v.n, v.p, v.q, power_fg(v.lambda), false);
            },
            offdiag_target);
    }
    {
        ParamDomain d;
        d.alpha = true;
        d.beta = true;
        d.mu = true;
        d.n = true;
        add({"full-2x2-2n", InputShape::Blocks2x2, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "2n-th power bound for a full 2x2 operator: 2^{2n-1}(max w^{2n}(diag) + binomial "
             "off-diagonal bound)",
             "4 blocks: A B C D, row-major", exp_2n},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto b2 = b2_view(in);
                const double wd = std::max(omega_of(b2.t), omega_of(b2.s));
                return std::pow(2.0, 2 * v.n - 1) *
                       (std::pow(wd, 2 * v.n) + seema_rhs(b2.x, b2.y, v.c, v.mu, v.n));
            },
            b2_target);
    }

    // ---- weighted product bounds ----
    {
        ParamDomain d;
        d.mu = true;
        d.r = true;
        d.pq = true;
        d.pr_qr_ge2 = true;
        add({"weighted-product-alpha", InputShape::TripleAXB, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega,
             "omega^r(|A|^mu Y |B|^mu) bound for off-diagonal A, Y, B with Young-split norms",
             "3 matrices: A Y B (each off-diagonal 2x2 block form)", exp_r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto tr = triple_view(in);
                auto a = split_offdiag(tr.a, bd.id), x = split_offdiag(tr.x, bd.id),
                     b = split_offdiag(tr.b, bd.id);
                const double nx =
                    std::max(std::pow(op_norm(x.upper), v.r), std::pow(op_norm(x.lower), v.r));
                const double n1 = op_norm(abs_power(a.upper, v.p * v.r) / v.p +
                                          abs_power(b.upper, v.q * v.r) / v.q);
                const double n2 = op_norm(abs_power(a.lower, v.p * v.r) / v.p +
                                          abs_power(b.lower, v.q * v.r) / v.q);
                return nx * std::max(std::pow(n1, v.mu), std::pow(n2, v.mu));
            },
            [](const BoundDescriptor&, const BoundInput& in,
               const BoundParams& bp) -> ComplexMatrix {
                const double w = bp.mu.value_or(0.0);
                auto tr = triple_view(in);
                return matrix_power_psd(tr.a.adjoint() * tr.a, w / 2) * tr.x *
                       matrix_power_psd(tr.b.adjoint() * tr.b, w / 2);
            });
    }
    {
        ParamDomain d;
        d.mu = true;
        d.r = true;
        d.min_r = 2.0;
        add({"weighted-product-split", InputShape::TripleAXB, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega,
             "omega^r(|A|^mu Y |B|^{1-mu}) bound for off-diagonal A, Y, B",
             "3 matrices: A Y B (each off-diagonal 2x2 block form)", exp_r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                auto tr = triple_view(in);
                auto a = split_offdiag(tr.a, bd.id), x = split_offdiag(tr.x, bd.id),
                     b = split_offdiag(tr.b, bd.id);
                const double nx =
                    std::max(std::pow(op_norm(x.upper), v.r), std::pow(op_norm(x.lower), v.r));
                const double n2 = op_norm(v.mu * abs_power(a.lower, v.r) +
                                          (1 - v.mu) * abs_power(b.lower, v.r));
                const double n1 = op_norm(v.mu * abs_power(a.upper, v.r) +
                                          (1 - v.mu) * abs_power(b.upper, v.r));
                return nx * std::max(n1, n2);
            },
            [](const BoundDescriptor&, const BoundInput& in,
               const BoundParams& bp) -> ComplexMatrix {
                const double w = bp.mu.value_or(0.0);
                auto tr = triple_view(in);
                return matrix_power_psd(tr.a.adjoint() * tr.a, w / 2) * tr.x *
                       matrix_power_psd(tr.b.adjoint() * tr.b, (1 - w) / 2);
            });
    }
    {
        ParamDomain d;
        d.mu = true;
        d.r = true;
        d.min_r = 2.0;
        add({"half-power-chain", InputShape::TripleAXB, d, BoundSide::UpperOnOmegaPower,
             LhsKind::Omega,
             "omega^r(A^{1/2} Y B^{1/2}) chained bound for block-diagonal PSD A, B",
             "3 matrices: A Y B (block-diagonal; A, B PSD)", exp_r},
            [](const BoundDescriptor&, const BoundInput& in, const BoundParams& bp) {
                return half_power_chain_values(in, bp)[0];
            },
            [](const BoundDescriptor&, const BoundInput& in,
               const BoundParams&) -> ComplexMatrix {
                auto tr = triple_view(in);
                return matrix_power_psd(tr.a, 0.5) * tr.x * matrix_power_psd(tr.b, 0.5);
            });
    }
    {
        ParamDomain d;
        d.r = true;
        d.pq = true;
        d.lambda = true;
        d.n = true;
        d.n_structural = true;
        d.pr_qr_ge2 = true;
        add({"sum-product", InputShape::TripleList, d, BoundSide::UpperOnOmegaPower, LhsKind::Omega,
             "omega^r(sum A_i* X_i B_i) bound via congruence sums",
             "3k matrices: A1 X1 B1 A2 X2 B2 ...", exp_r},
            [](const BoundDescriptor& bd, const BoundInput& in, const BoundParams& bp) {
                P v = unpack(bd, bp);
                return sum_product_core(triple_list_view(in), v.r, v.p, v.q, power_fg(v.lambda),
                                        false);
            },
            [](const BoundDescriptor&, const BoundInput& in, const BoundParams&) {
                auto trips = triple_list_view(in);
                ComplexMatrix sum =
                    ComplexMatrix::Zero(trips[0].a.cols(), trips[0].b.cols());
                for (const auto& t : trips) sum += t.a.adjoint() * t.x * t.b;
                return sum;
            });
    }

    return defs;
}

}  // namespace

// ---- BoundInput constructors ----------------------------------------------

BoundInput BoundInput::single(ComplexMatrix m) {
    BoundInput in;
    in.shape = InputShape::Single;
    in.mats.push_back(std::move(m));
    return in;
}
BoundInput BoundInput::pair(ComplexMatrix b, ComplexMatrix c) {
    BoundInput in;
    in.shape = InputShape::Pair;
    in.mats.push_back(std::move(b));
    in.mats.push_back(std::move(c));
    return in;
}
BoundInput BoundInput::blocks2x2(ComplexMatrix t, ComplexMatrix x, ComplexMatrix y,
                                 ComplexMatrix s) {
    BoundInput in;
    in.shape = InputShape::Blocks2x2;
    in.mats = {std::move(t), std::move(x), std::move(y), std::move(s)};
    return in;
}
BoundInput BoundInput::blocks_nxn(std::vector<ComplexMatrix> row_major_blocks) {
    BoundInput in;
    in.shape = InputShape::BlocksNxN;
    in.mats = std::move(row_major_blocks);
    return in;
}
BoundInput BoundInput::single_row(std::vector<ComplexMatrix> row_blocks) {
    BoundInput in;
    in.shape = InputShape::SingleRow;
    in.mats = std::move(row_blocks);
    return in;
}
BoundInput BoundInput::triple(ComplexMatrix a, ComplexMatrix x, ComplexMatrix b) {
    BoundInput in;
    in.shape = InputShape::TripleAXB;
    in.mats = {std::move(a), std::move(x), std::move(b)};
    return in;
}
BoundInput BoundInput::triple_list(std::vector<ComplexMatrix> flat_axb) {
    BoundInput in;
    in.shape = InputShape::TripleList;
    in.mats = std::move(flat_axb);
    return in;
}

std::string ParamDomain::describe() const {
    std::ostringstream os;
    bool first = true;
    auto item = [&](const std::string& t) {
        if (!first) os << ", ";
        os << t;
        first = false;
    };
    if (alpha) item("alpha != 0");
    if (beta) item("beta >= 0");
    if (mu) item("mu in [0,1]");
    if (lambda) item("lambda in [0,1]");
    if (r) item("r >= " + std::to_string(min_r).substr(0, 3));
    if (s) item("s >= 1");
    if (n && n_structural)
        item("n >= " + std::to_string(min_n) + " (block count; inferred from operands)");
    else if (n)
        item("n >= " + std::to_string(min_n));
    if (pq) item(pr_qr_ge2 ? "1/p+1/q = 1, pr,qr >= 2" : "1/p+1/q = 1");
    if (first) os << "none";
    return os.str();
}

const std::vector<BoundDescriptor>& list_bounds() {
    static const std::vector<BoundDescriptor> descs = [] {
        std::vector<BoundDescriptor> out;
        for (const auto& d : catalog()) out.push_back(d.desc);
        return out;
    }();
    return descs;
}

const BoundDescriptor& find_bound(const std::string& id) { return find_def(id).desc; }

std::string omega_exponent_doc(const std::string& id) {
    const BoundDescriptor& d = find_bound(id);
    BoundParams probe;
    probe.r = 1.0;
    probe.s = 1.0;
    probe.n = 2;
    const double at_unit = d.omega_exponent_fn(probe);
    probe.r = 2.0;
    probe.s = 2.0;
    probe.n = 3;
    const double at_scaled = d.omega_exponent_fn(probe);
    if (at_unit == at_scaled) {  // constant exponent
        char buf[16];
        std::snprintf(buf, sizeof buf, "%g", at_unit);
        return buf;
    }
    if (d.param_domain.s) return "s";
    if (d.param_domain.n && at_unit == 4.0) return "2n";
    if (d.param_domain.r && at_unit == 1.0) return "r";
    if (d.param_domain.r && at_unit == 2.0) return "2r";
    if (d.param_domain.r && at_unit == 4.0) return "4r";
    return "k(params)";
}

void validate_params(const BoundDescriptor& d, const BoundParams& p) { unpack(d, p); }

double evaluate_bound(const std::string& id, const BoundInput& input, const BoundParams& params) {
    const BoundDef& def = find_def(id);
    check_shape(def.desc, input);
    unpack(def.desc, params);
    return def.eval(def.desc, input, params);
}

ComplexMatrix bound_target(const std::string& id, const BoundInput& input,
                           const BoundParams& params) {
    const BoundDef& def = find_def(id);
    check_shape(def.desc, input);
    return def.target(def.desc, input, params);
}

CheckResult check_bound(const std::string& id, const BoundInput& input, const BoundParams& params) {
    const BoundDef& def = find_def(id);
    check_shape(def.desc, input);
    unpack(def.desc, params);
    const ComplexMatrix target = def.target(def.desc, input, params);
    double lhs_base = 0.0;
    switch (def.desc.lhs_kind) {
        case LhsKind::Omega: lhs_base = omega_of(target); break;
        case LhsKind::OperatorNorm: lhs_base = op_norm(target); break;
        case LhsKind::SpectralRadius: lhs_base = spectral_radius(target); break;
    }
    CheckResult res;
    res.omega_power = std::pow(lhs_base, def.desc.omega_exponent(params));
    res.bound = def.eval(def.desc, input, params);
    if (def.desc.side == BoundSide::UpperOnOmegaPower) {
        res.slack = res.bound - res.omega_power;
        res.holds = res.omega_power <= res.bound * (1 + kHoldsRel) + kHoldsAbs;
    } else {
        res.slack = res.omega_power - res.bound;
        res.holds = res.bound <= res.omega_power * (1 + kHoldsRel) + kHoldsAbs;
    }
    return res;
}

std::vector<RefinementChain> refinement_chains() {
    std::vector<RefinementChain> chains;
    {
        RefinementChain ch;
        ch.id = "moby-a2-vs-power-norm";
        ch.elements = {{"moby-a2", 1.0}, {"kittaneh-upper", 2.0}};
        ch.pinned.alpha = Complex(2, 0);
        ch.note = "fourth-power delta bound at alpha = 2 against the squared Kittaneh upper bound";
        chains.push_back(std::move(ch));
    }
    {
        RefinementChain ch;
        ch.id = "kz-refinement";
        ch.elements = {{"kz-single-alpha2", 1.0}, {"domkit-ref", 1.0}, {"khaddad-ref", 1.0}};
        ch.note = "alpha = 2 kz bound refines the two classical fourth-power bounds";
        chains.push_back(std::move(ch));
    }
    {
        RefinementChain ch;
        ch.id = "ineq9.1-chain";
        ch.elements = {{"ineq9.1", 1.0}, {"khaddad-ref", 1.0}};
        ch.pinned.alpha = Complex(2, 0);
        ch.note = "binomial fourth-power bound at alpha = 2 stays below the half-norm bound";
        chains.push_back(std::move(ch));
    }
    return chains;
}

std::vector<double> evaluate_chain(const RefinementChain& chain, const BoundInput& input,
                                   const BoundParams& params) {
    BoundParams merged = params;
    if (chain.pinned.alpha) merged.alpha = chain.pinned.alpha;
    if (chain.pinned.beta) merged.beta = chain.pinned.beta;
    if (chain.pinned.mu) merged.mu = chain.pinned.mu;
    if (chain.pinned.lambda_exp) merged.lambda_exp = chain.pinned.lambda_exp;
    if (chain.pinned.r) merged.r = chain.pinned.r;
    if (chain.pinned.s) merged.s = chain.pinned.s;
    if (chain.pinned.n) merged.n = chain.pinned.n;
    std::vector<double> values;
    values.reserve(chain.elements.size());
    for (const auto& el : chain.elements)
        values.push_back(std::pow(evaluate_bound(el.bound_id, input, merged), el.power));
    return values;
}

Lemma233Result lemma233_transform_bound(const ComplexMatrix& k, const ComplexMatrix& p,
                                        const ComplexMatrix& q, double r) {
    if (k.rows() != k.cols() || k.rows() == 0)
        throw NonSquareError("lemma233_transform_bound: K must be square");
    if (!(r >= 1.0)) throw ParamOutOfDomainError("lemma233_transform_bound: r must be >= 1");
    auto inverse_selfadjoint = [](const ComplexMatrix& m, const char* name) {
        if (m.rows() != m.cols())
            throw NonSquareError(std::string("lemma233_transform_bound: ") + name +
                                 " must be square");
        const double asym = (m - m.adjoint()).norm();
        if (asym > 1e-10 * std::max(1.0, m.norm()))
            throw NotSelfAdjointError(std::string("lemma233_transform_bound: ") + name +
                                      " is not self-adjoint");
        HermitianEigen eg = hermitian_eigs(m);
        RealVector inv = eg.eigenvalues;
        for (Eigen::Index i = 0; i < inv.size(); ++i) {
            if (std::abs(inv[i]) <= 1e-10)
                throw NotInvertibleError(std::string("lemma233_transform_bound: ") + name +
                                         " has an eigenvalue within 1e-10 of zero");
            inv[i] = 1.0 / inv[i];
        }
        return ComplexMatrix(eg.eigenvectors * inv.asDiagonal() * eg.eigenvectors.adjoint());
    };
    if (p.rows() != k.rows() || q.rows() != k.rows())
        throw ShapeMismatchError("lemma233_transform_bound: P, Q must match K's dimension");
    const ComplexMatrix pinv = inverse_selfadjoint(p, "P");
    const ComplexMatrix qinv = inverse_selfadjoint(q, "Q");
    const ComplexMatrix transformed = (p * k * qinv + pinv * k * q) / 2.0;
    Lemma233Result res;
    res.lhs = std::pow(omega_of(k), r);
    res.rhs = std::pow(omega_of(transformed), r);
    return res;
}

std::array<double, 3> half_power_chain_values(const BoundInput& input, const BoundParams& params) {
    const BoundDescriptor& d = find_bound("half-power-chain");
    check_shape(d, input);
    P v = unpack(d, params);
    auto tr = triple_view(input);
    auto a = split_diag(tr.a, d.id), x = split_diag(tr.x, d.id), b = split_diag(tr.b, d.id);
    const double nx =
        std::max(std::pow(op_norm(x.first), v.r), std::pow(op_norm(x.second), v.r));
    auto pw = [&](const ComplexMatrix& m) { return matrix_power_psd(m, v.r); };
    const ComplexMatrix a1r = pw(a.first), a2r = pw(a.second), b1r = pw(b.first),
                        b2r = pw(b.second);
    const double v1 =
        nx * std::max(psd_omega((a1r + b1r) / 2), psd_omega((a2r + b2r) / 2));
    auto mix = [&](const ComplexMatrix& ar, const ComplexMatrix& br) {
        return psd_omega(v.mu * ar + (1 - v.mu) * br) + psd_omega((1 - v.mu) * ar + v.mu * br);
    };
    const double v2 = 0.5 * nx * std::max(mix(a1r, b1r), mix(a2r, b2r));
    const double n_fwd = std::max(op_norm(v.mu * a1r + (1 - v.mu) * b1r),
                                  op_norm(v.mu * a2r + (1 - v.mu) * b2r));
    const double n_rev = std::max(op_norm((1 - v.mu) * a1r + v.mu * b1r),
                                  op_norm((1 - v.mu) * a2r + v.mu * b2r));
    const double v3 = 0.5 * nx * (n_fwd + n_rev);
    return {v1, v2, v3};
}

FgPair power_fg(double lambda) {
    FgPair fg;
    fg.f = [lambda](double t) { return t == 0.0 ? 0.0 : std::pow(t, lambda); };
    fg.g = [lambda](double t) { return t == 0.0 ? 0.0 : std::pow(t, 1.0 - lambda); };
    return fg;
}

double evaluate_bound_fg(const std::string& id, const BoundInput& input,
                         const BoundParams& params, const FgPair& fg) {
    const BoundDescriptor& d = find_bound(id);
    check_shape(d, input);
    P v = unpack(d, params, /*skip_lambda=*/true);
    if (id == "comparison-fg") {
        nxn_order(input);
        return comparison_fg_core(input, v.s, fg, true);
    }
    if (id == "comparison-2x2") {
        if (input.mats.size() != 4)
            throw ShapeMismatchError("comparison-2x2: needs exactly four blocks");
        return comparison_2x2_core(input, v.s, fg, true);
    }
    if (id == "offdiag-fg") {
        auto pr = pair_view(input);
        return offdiag_fg_core(pr.b, pr.c, v.r, fg, true);
    }
    if (id == "malik-a1") {
        auto pr = pair_view(input);
        return malik_core(pr.b, pr.c, v.c, v.r, v.p, v.q, fg, true);
    }
    if (id == "binom-pq") {
        auto pr = pair_view(input);
        return binom_pq_core(pr.b, pr.c, v.n, v.p, v.q, fg, true);
    }
    if (id == "sum-product")
        return sum_product_core(triple_list_view(input), v.r, v.p, v.q, fg, true);
    throw ParamOutOfDomainError(id + ": bound is not parameterized by an f,g pair");
}

double seema9_displayed(const BoundInput& pair_input, const BoundParams& params,
                        bool binomial_lemma_ordering) {
    const BoundDescriptor& d = find_bound("seema9");
    check_shape(d, pair_input);
    P v = unpack(d, params);
    auto pr = pair_view(pair_input);
    const double w = max_weighted_omega(pr.b, pr.c, v.mu);
    auto normmax = [&](double e) { return max_abs_pair_norm(pr.b, pr.c, e * v.mu, e * (1 - v.mu)); };
    const double l1 = v.c.lambda1, l2 = v.c.lambda2;
    double total = std::pow(l1, v.n) / 2 * normmax(4.0 * v.n) + std::pow(l2, v.n) * std::pow(w, v.n);
    for (int k = 1; k < v.n; ++k) {
        if (!binomial_lemma_ordering)
            total += 0.5 * binomial(v.n, k) * std::pow(l1, v.n - k) * std::pow(l2, k) *
                     normmax(4.0 * (v.n - k)) * std::pow(w, k);
        else
            total += 0.5 * binomial(v.n, k) * std::pow(l1, k) * std::pow(l2, v.n - k) *
                     normmax(2.0 * (v.n + k)) * std::pow(w, v.n - k);
    }
    return total;
}

}  // namespace nradius
