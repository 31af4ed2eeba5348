#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nradius/params.hpp"
#include "nradius/types.hpp"

namespace nradius {

enum class InputShape { Single, Pair, Blocks2x2, BlocksNxN, SingleRow, TripleAXB, TripleList };
enum class BoundSide { UpperOnOmegaPower, LowerOnOmegaPower };

/// Functional bounded on the left-hand side. Omega for almost everything;
/// the hou-blocknorm-norm / -specrad variants bound the operator norm and
/// the spectral radius of the assembled matrix instead.
enum class LhsKind { Omega, OperatorNorm, SpectralRadius };

/// Operand container. Block lists are row-major.
struct BoundInput {
    InputShape shape = InputShape::Single;
    std::vector<ComplexMatrix> mats;

    static BoundInput single(ComplexMatrix m);
    static BoundInput pair(ComplexMatrix b, ComplexMatrix c);
    static BoundInput blocks2x2(ComplexMatrix t, ComplexMatrix x, ComplexMatrix y, ComplexMatrix s);
    static BoundInput blocks_nxn(std::vector<ComplexMatrix> row_major_blocks);
    static BoundInput single_row(std::vector<ComplexMatrix> row_blocks);
    static BoundInput triple(ComplexMatrix a, ComplexMatrix x, ComplexMatrix b);
    static BoundInput triple_list(std::vector<ComplexMatrix> flat_axb);
};

/// Which parameters a bound needs, plus the domain constraints checked at
/// evaluation time.
struct ParamDomain {
    bool alpha = false;
    bool beta = false;
    bool mu = false;
    bool lambda = false;
    bool r = false;
    bool s = false;
    bool n = false;   // structural block/summand count or binomial power
    bool n_structural = false;  // n sizes the input; inferred from operands when evaluating
    bool pq = false;
    double min_r = 1.0;
    int min_n = 2;
    bool pr_qr_ge2 = false;  // require p*r >= 2 and q*r >= 2
    std::string describe() const;
};

struct BoundDescriptor {
    std::string id;
    InputShape input_shape;
    ParamDomain param_domain;
    BoundSide side;
    LhsKind lhs_kind;
    std::string citation;   // literature anchor
    std::string input_doc;  // how positional operand files bind
    std::function<double(const BoundParams&)> omega_exponent_fn;

    double omega_exponent(const BoundParams& p) const { return omega_exponent_fn(p); }
};

/// The full immutable catalog.
const std::vector<BoundDescriptor>& list_bounds();

/// Lookup by id; UnknownBoundError if absent.
const BoundDescriptor& find_bound(const std::string& id);

/// Human-readable omega exponent ("1", "2r", "4r", "s", "2n", ...).
std::string omega_exponent_doc(const std::string& id);

/// Validate params against the descriptor's domain; ParamOutOfDomainError
/// with a message naming the offending parameter.
void validate_params(const BoundDescriptor& d, const BoundParams& p);

/// Right-hand side of the named inequality.
double evaluate_bound(const std::string& id, const BoundInput& input, const BoundParams& params);

/// Scalar function pair with f(t) g(t) = t and f, g >= 0 on [0, inf).
struct FgPair {
    std::function<double(double)> f;
    std::function<double(double)> g;
};

/// The power family f(t) = t^lambda, g(t) = t^{1-lambda} (0^0 taken as 0).
FgPair power_fg(double lambda);

/// Evaluate an f,g-parameterized bound (comparison-fg, comparison-2x2,
/// offdiag-fg, malik-a1, binom-pq, sum-product) with an arbitrary pair.
/// The pair is validated by sampling f(t) g(t) = t on every spectrum it
/// touches, within relative 1e-8; params.lambda_exp is ignored.
double evaluate_bound_fg(const std::string& id, const BoundInput& input,
                         const BoundParams& params, const FgPair& fg);

/// The matrix whose omega-power (or norm / spectral radius) the bound controls.
ComplexMatrix bound_target(const std::string& id, const BoundInput& input, const BoundParams& params);

struct CheckResult {
    double omega_power = 0.0;  // lhs functional value (power applied)
    double bound = 0.0;
    double slack = 0.0;  // >= 0 when the inequality holds
    bool holds = false;
};

/// Evaluate both sides. For upper bounds holds means
/// omega_power <= bound*(1+1e-8) + 1e-10 and slack = bound - omega_power;
/// lower bounds mirror this.
CheckResult check_bound(const std::string& id, const BoundInput& input, const BoundParams& params);

/// One element of a refinement chain: the catalog value of `bound_id`
/// raised to `power` (power lifts a bound on omega^j to one on omega^{j*power}).
struct ChainElement {
    std::string bound_id;
    double power = 1.0;
};

/// Ordered bound list, nondecreasing on every shared in-domain input once
/// the pinned parameters are merged in.
struct RefinementChain {
    std::string id;
    std::vector<ChainElement> elements;
    BoundParams pinned;
    std::string note;
};

std::vector<RefinementChain> refinement_chains();

/// Values of each chain element on a shared input. Pinned parameters
/// override the caller's.
std::vector<double> evaluate_chain(const RefinementChain& chain, const BoundInput& input,
                                   const BoundParams& params);

struct Lemma233Result {
    double lhs = 0.0;  // omega(K)^r
    double rhs = 0.0;  // omega((P K Q^{-1} + P^{-1} K Q)/2)^r
};

/// Similarity-transform comparison. P and Q must be self-adjoint and
/// invertible (min |eigenvalue| > 1e-10). The ordering lhs <= rhs is
/// guaranteed for positive definite P, Q; indefinite self-adjoint
/// transforms can break it (see tests).
Lemma233Result lemma233_transform_bound(const ComplexMatrix& k, const ComplexMatrix& p,
                                        const ComplexMatrix& q, double r = 1.0);

/// The three chained right-hand sides of the half-power product bound,
/// tightest first. evaluate_bound("half-power-chain", ...) returns the first.
std::array<double, 3> half_power_chain_values(const BoundInput& input, const BoundParams& params);

/// Diagnostic: the binomial off-diagonal bound exactly as displayed in its
/// source, in both index orderings. Both are refuted by nilpotent
/// counterexamples (see tests); the catalog's "seema9" uses the repaired
/// form. Kept so the discrepancy stays inspectable.
double seema9_displayed(const BoundInput& pair_input, const BoundParams& params,
                        bool binomial_lemma_ordering);

}  // namespace nradius
