// Independent brute-force ground truth. Everything here settles questions by
// exhaustive search at a fixed Hensel margin, never by the closed formulas it
// is meant to check: conic solvability for Hilbert symbols, primitive-vector
// isotropy, complement enumeration for the subform order, and the exact
// rational-matrix check of the two eigenspace dimension formulas.
#pragma once

#include <utility>
#include <vector>

#include "sympair/local_field.hpp"
#include "sympair/quad_form.hpp"
#include "sympair/rational.hpp"

namespace sympair {

struct SearchBudget {
    int modulus_exponent = 0;  // search modulo p^N
    long long max_candidates = 200'000'000;
};

// the fixed margins the searches below run at
SearchBudget conic_budget(const LocalField& field, long long a, long long b);
SearchBudget isotropy_budget(const QuadForm& b);

// Solvability of a x^2 + b y^2 = z^2 in primitive triples modulo p^N with
// N = v_p(4ab) + 3 after stripping square factors of p; this margin makes a
// primitive solution mod p^N equivalent to solvability in Q_p (any primitive
// triple has a unit among x, y, and a simple Hensel lift applies).
Sign hilbert_oracle(const LocalField& field, long long a, long long b);

// Exhaustive primitive-vector search for B(v) = 0 mod p^N, with the per-form
// margin N = 2 (v_p(2) + max_i v_p(a_i)) + 3. p-adic fields, rank <= 6.
bool isotropy_oracle(const QuadForm& b);

// enumerate every diagonal complement D over canonical class representatives
// and test equivalent(C + D, B); complement rank must stay <= 4
bool subform_oracle(const QuadForm& c, const QuadForm& b);

// Verifies, for invertible rational r and an involution h with h r h^-1 = r^-1,
// the two formulas expressing dim V_1(h) and dim V_1(rh) through the primary
// decomposition of r. Throws when the preconditions fail (h^2 = I, the
// intertwining law, semisimplicity of r).
bool dimension_formula_check(const RatMat& r, const RatMat& h);

// block-built (r, h) instances mixing primary value types A, B and C,
// every total dimension up to max_dim; preconditions hold by construction
std::vector<std::pair<RatMat, RatMat>> dimension_formula_suite(int max_dim);

}  // namespace sympair
