#pragma once

#include <string>
#include <vector>

#include "nradius/params.hpp"
#include "nradius/types.hpp"

namespace nradius {

struct LemmaCheck {
    std::string lemma_id;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;   // lhs <= rhs*(1+1e-10) + 1e-12
    double margin = 0.0;  // rhs - lhs
};

struct LemmaDescriptor {
    std::string id;
    int arity = 0;         // number of input vectors
    bool needs_alpha = false;
    bool needs_beta = false;
    bool needs_r = false;
    bool needs_n = false;
    bool needs_mu = false;  // weight of the power-mean lemma
    int min_n = 1;
    std::string statement;  // human-readable display
};

/// The 13 inner-product-space lemmas.
const std::vector<LemmaDescriptor>& list_lemmas();

const LemmaDescriptor& find_lemma(const std::string& id);

/// Evaluate one lemma on concrete vectors. Conventions:
///  - Buzano-family lemmas take (a, b, e); e is normalized to unit length.
///  - "cauchy-schwarz" takes (x, y).
///  - "bohr" takes one vector; the positive reals are its entry moduli.
///  - "jensen-power" takes one vector; a = |v1|, b = |v2| must be > 0,
///    weight = mu, exponent = r. lhs/rhs are the chain's outer members,
///    holds also requires the middle (arithmetic-mean) link.
///  - "holder-mccarthy" takes (a, b, e): the PSD operand is aa* + bb* and
///    the unit vector is e normalized.
LemmaCheck evaluate_lemma(const std::string& lemma_id, const std::vector<ComplexVector>& vectors,
                          const BoundParams& params);

}  // namespace nradius
