#include "nradius/lemmas.hpp"

#include <cmath>

#include "nradius/matfun.hpp"

namespace nradius {

namespace {

double binomial(int n, int k) {
    double v = 1.0;
    for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
    return v;
}

constexpr double kRel = 1e-10;
constexpr double kAbs = 1e-12;

struct Ctx {
    std::vector<ComplexVector> v;
    Complex alpha{2.0, 0.0};
    double beta = 0, r = 1, mu = 0.5;
    int n = 1;
};

Complex inner(const ComplexVector& a, const ComplexVector& b) {
    // <a, b>, conjugate-linear in the second argument
    return (b.adjoint() * a)(0, 0);
}

// Buzano-family triple (a, b, e) with e normalized.
struct Triple {
    ComplexVector a, b, e;
    double na, nb, iab;
    Complex alpha;
    double beta;
};

Triple triple_of(const Ctx& c) {
    Triple t;
    t.a = c.v[0];
    t.b = c.v[1];
    t.e = c.v[2];
    const double ne = t.e.norm();
    if (ne == 0.0) throw WrongArityError("lemma: the unit vector e must be nonzero");
    t.e /= ne;
    t.na = t.a.norm();
    t.nb = t.b.norm();
    t.iab = std::abs(inner(t.a, t.b));
    t.alpha = c.alpha;
    t.beta = c.beta;
    return t;
}

double buzano_product(const Triple& t) {
    return std::abs(inner(t.a, t.e) * inner(t.e, t.b));
}

struct LemmaDef {
    LemmaDescriptor desc;
    std::function<std::pair<double, double>(const Ctx&)> eval;  // (lhs, rhs)
};

const std::vector<LemmaDef>& defs() {
    static const std::vector<LemmaDef> table = [] {
        std::vector<LemmaDef> t;
        auto add = [&t](LemmaDescriptor d, std::function<std::pair<double, double>(const Ctx&)> f) {
            t.push_back({std::move(d), std::move(f)});
        };

        add({"cauchy-schwarz", 2, false, false, false, false, false, 1,
             "|<x,y>|^2 <= ||x||^2 ||y||^2"},
            [](const Ctx& c) {
                const double i = std::abs(inner(c.v[0], c.v[1]));
                return std::make_pair(i * i, c.v[0].squaredNorm() * c.v[1].squaredNorm());
            });

        add({"buzano", 3, false, false, false, false, false, 1,
             "|<a,e><e,b>| <= (1/2)(||a|| ||b|| + |<a,b>|)"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                return std::make_pair(buzano_product(t), 0.5 * (t.na * t.nb + t.iab));
            });

        add({"generalized-buzano", 3, true, false, false, false, false, 1,
             "|<a,e><e,b>| <= (max{1,|alpha-1|} ||a|| ||b|| + |<a,b>|) / |alpha|"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                const double mh = std::max(1.0, std::abs(t.alpha - 1.0));
                return std::make_pair(buzano_product(t),
                                      (mh * t.na * t.nb + t.iab) / std::abs(t.alpha));
            });

        add({"mix-al-be", 3, true, true, false, false, false, 1,
             "|<a,e><e,b>|^2 <= chi1 ||a||^2 ||b||^2 + chi2 ||a|| ||b|| |<a,b>|"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                BoundParams bp;
                bp.alpha = t.alpha;
                bp.beta = t.beta;
                DerivedConstants dc = derived_constants(bp);
                const double s = buzano_product(t);
                return std::make_pair(s * s, dc.chi1 * t.na * t.na * t.nb * t.nb +
                                                 dc.chi2 * t.na * t.nb * t.iab);
            });

        add({"buzano-beta", 3, false, true, false, false, false, 1,
             "|<a,e><e,b>|^2 <= (1/4)((2b+1)/(b+1) ||a||^2 ||b||^2 + (2b+3)/(b+1) ||a|| ||b|| "
             "|<a,b>|)"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                const double s = buzano_product(t);
                const double g1 = (2 * t.beta + 1) / (t.beta + 1);
                const double g2 = (2 * t.beta + 3) / (t.beta + 1);
                return std::make_pair(
                    s * s, 0.25 * (g1 * t.na * t.na * t.nb * t.nb + g2 * t.na * t.nb * t.iab));
            });

        add({"ramadan-kareem1", 3, true, true, false, false, false, 1,
             "|<a,e><e,b>|^2 <= delta1 ||a||^2 ||b||^2 + delta2 |<a,b>|^2"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                BoundParams bp;
                bp.alpha = t.alpha;
                bp.beta = t.beta;
                DerivedConstants dc = derived_constants(bp);
                const double s = buzano_product(t);
                return std::make_pair(s * s, dc.delta1 * t.na * t.na * t.nb * t.nb +
                                                 dc.delta2 * t.iab * t.iab);
            });

        add({"ramad13", 3, false, true, false, false, false, 1,
             "|<a,e><e,b>|^2 <= (1/2)((2b+1)/(b+1) ||a||^2 ||b||^2 + 1/(b+1) |<a,b>|^2)"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                const double s = buzano_product(t);
                return std::make_pair(
                    s * s, 0.5 * ((2 * t.beta + 1) / (t.beta + 1) * t.na * t.na * t.nb * t.nb +
                                  1.0 / (t.beta + 1) * t.iab * t.iab));
            });

        add({"modified-buzano", 3, false, true, true, false, false, 1,
             "|<a,e><e,b>|^{2r} <= (1/4)((2b+1)/(b+1) (||a|| ||b||)^{2r} + (2b+3)/(b+1) (||a|| "
             "||b||)^r |<a,b>|^r)"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                const double s = buzano_product(t);
                const double g1 = (2 * t.beta + 1) / (t.beta + 1);
                const double g2 = (2 * t.beta + 3) / (t.beta + 1);
                const double prod = t.na * t.nb;
                return std::make_pair(std::pow(s, 2 * c.r),
                                      0.25 * (g1 * std::pow(prod, 2 * c.r) +
                                              g2 * std::pow(prod, c.r) * std::pow(t.iab, c.r)));
            });

        add({"great-a1", 3, true, true, false, true, false, 1,
             "|<a,e><e,b>|^{2n} <= sum_k C(n,k) l1^k l2^{n-k} (||a|| ||b||)^{n+k} |<a,b>|^{n-k}"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                BoundParams bp;
                bp.alpha = t.alpha;
                bp.beta = t.beta;
                DerivedConstants dc = derived_constants(bp);
                const double s = buzano_product(t);
                const double prod = t.na * t.nb;
                double rhs = 0.0;
                for (int k = 0; k <= c.n; ++k)
                    rhs += binomial(c.n, k) * std::pow(dc.lambda1, k) *
                           std::pow(dc.lambda2, c.n - k) * std::pow(prod, c.n + k) *
                           std::pow(t.iab, c.n - k);
                return std::make_pair(std::pow(s, 2 * c.n), rhs);
            });

        add({"drag", 3, false, false, false, false, false, 1,
             "|<a,e>|^2 + |<e,b>|^2 <= sqrt(||a||^4 + ||b||^4 + 2 |<a,b>|^2)"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                const double u = std::abs(inner(t.a, t.e));
                const double w = std::abs(inner(t.e, t.b));
                return std::make_pair(
                    u * u + w * w,
                    std::sqrt(std::pow(t.na, 4) + std::pow(t.nb, 4) + 2 * t.iab * t.iab));
            });

        add({"bohr", 1, false, false, true, false, false, 1,
             "(sum a_i)^r <= n^{r-1} sum a_i^r for positive a_i (entry moduli)"},
            [](const Ctx& c) {
                const ComplexVector& v = c.v[0];
                double sum = 0.0, sum_r = 0.0;
                for (Eigen::Index i = 0; i < v.size(); ++i) {
                    const double ai = std::abs(v[i]);
                    sum += ai;
                    sum_r += std::pow(ai, c.r);
                }
                return std::make_pair(std::pow(sum, c.r),
                                      std::pow(double(v.size()), c.r - 1) * sum_r);
            });

        add({"jensen-power", 1, false, false, true, false, true, 1,
             "a^w b^{1-w} <= w a + (1-w) b <= (w a^r + (1-w) b^r)^{1/r}"},
            [](const Ctx& c) {
                const ComplexVector& v = c.v[0];
                if (v.size() < 2) throw WrongArityError("jensen-power: needs a 2-entry vector");
                const double a = std::abs(v[0]);
                const double b = std::abs(v[1]);
                if (a <= 0 || b <= 0)
                    throw ParamOutOfDomainError("jensen-power: entries must be nonzero");
                const double gm = std::pow(a, c.mu) * std::pow(b, 1 - c.mu);
                const double pm = std::pow(c.mu * std::pow(a, c.r) + (1 - c.mu) * std::pow(b, c.r),
                                           1.0 / c.r);
                return std::make_pair(gm, pm);
            });

        add({"holder-mccarthy", 3, false, false, true, false, false, 1,
             "<A x, x>^r <= <A^r x, x> for PSD A = aa* + bb*, unit x = e/||e||, r >= 1"},
            [](const Ctx& c) {
                Triple t = triple_of(c);
                ComplexMatrix a_mat = t.a * t.a.adjoint() + t.b * t.b.adjoint();
                const double base = (t.e.adjoint() * a_mat * t.e)(0, 0).real();
                const ComplexMatrix powed = matrix_power_psd(a_mat, c.r);
                const double rhs = (t.e.adjoint() * powed * t.e)(0, 0).real();
                return std::make_pair(std::pow(std::max(base, 0.0), c.r), rhs);
            });

        return t;
    }();
    return table;
}

const LemmaDef& find_lemma_def(const std::string& id) {
    for (const auto& d : defs())
        if (d.desc.id == id) return d;
    throw UnknownLemmaError("unknown lemma id: " + id);
}

}  // namespace

const std::vector<LemmaDescriptor>& list_lemmas() {
    static const std::vector<LemmaDescriptor> out = [] {
        std::vector<LemmaDescriptor> v;
        for (const auto& d : defs()) v.push_back(d.desc);
        return v;
    }();
    return out;
}

const LemmaDescriptor& find_lemma(const std::string& id) { return find_lemma_def(id).desc; }

LemmaCheck evaluate_lemma(const std::string& lemma_id, const std::vector<ComplexVector>& vectors,
                          const BoundParams& params) {
    const LemmaDef& def = find_lemma_def(lemma_id);
    if (static_cast<int>(vectors.size()) != def.desc.arity)
        throw WrongArityError(lemma_id + ": expected " + std::to_string(def.desc.arity) +
                              " vectors, got " + std::to_string(vectors.size()));
    for (const auto& v : vectors)
        if (!v.allFinite()) throw Error(lemma_id + ": non-finite vector entries");

    Ctx ctx;
    ctx.v = vectors;
    if (def.desc.needs_alpha) {
        if (!params.alpha) throw ParamOutOfDomainError(lemma_id + ": alpha is required");
        if (*params.alpha == Complex(0, 0)) throw ZeroAlphaError(lemma_id + ": alpha must be nonzero");
        ctx.alpha = *params.alpha;
    }
    if (def.desc.needs_beta) {
        if (!params.beta) throw ParamOutOfDomainError(lemma_id + ": beta is required");
        if (!(*params.beta >= 0)) throw ParamOutOfDomainError(lemma_id + ": beta must be >= 0");
        ctx.beta = *params.beta;
    }
    if (def.desc.needs_r) {
        if (!params.r) throw ParamOutOfDomainError(lemma_id + ": r is required");
        if (!(*params.r >= 1)) throw ParamOutOfDomainError(lemma_id + ": r must be >= 1");
        ctx.r = *params.r;
    }
    if (def.desc.needs_n) {
        if (!params.n) throw ParamOutOfDomainError(lemma_id + ": n is required");
        if (*params.n < def.desc.min_n)
            throw ParamOutOfDomainError(lemma_id + ": n must be >= " +
                                        std::to_string(def.desc.min_n));
        ctx.n = *params.n;
    }
    if (def.desc.needs_mu) {
        if (!params.mu) throw ParamOutOfDomainError(lemma_id + ": mu is required");
        if (!(*params.mu >= 0 && *params.mu <= 1))
            throw ParamOutOfDomainError(lemma_id + ": mu must lie in [0, 1]");
        ctx.mu = *params.mu;
    }

    auto [lhs, rhs] = def.eval(ctx);
    LemmaCheck out;
    out.lemma_id = lemma_id;
    out.lhs = lhs;
    out.rhs = rhs;
    out.margin = rhs - lhs;
    out.holds = lhs <= rhs * (1 + kRel) + kAbs;
    if (lemma_id == "jensen-power") {
        // the chain's middle link must hold as well
        const double a = std::abs(vectors[0][0]);
        const double b = std::abs(vectors[0][1]);
        const double am = ctx.mu * a + (1 - ctx.mu) * b;
        out.holds = out.holds && lhs <= am * (1 + kRel) + kAbs && am <= rhs * (1 + kRel) + kAbs;
    }
    return out;
}

}  // namespace nradius
