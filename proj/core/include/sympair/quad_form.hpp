// Non-degenerate quadratic forms over a local field, stored as diagonals of
// square classes. Equivalence is decided by the complete invariants (rank,
// det, Hasse) over Q_p and by signature over R; no matrix search anywhere.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sympair/local_field.hpp"

namespace sympair {

struct QuadForm {
    LocalField field = LocalField::real();
    std::vector<SquareClass> diag;

    int rank() const { return static_cast<int>(diag.size()); }
    bool operator==(const QuadForm&) const = default;
};

QuadForm quad_form_classes(const LocalField& field, std::vector<SquareClass> diag);
QuadForm quad_form(const LocalField& field, const std::vector<long long>& entries);

// Complete invariant record. Real forms carry the signature as primary data;
// det and hasse are derived so the p-adic interface stays uniform.
struct QuadInvariants {
    LocalField field = LocalField::real();
    int rank = 0;
    SquareClass det;
    Sign hasse;
    int pos = 0, neg = 0;  // real only

    bool operator==(const QuadInvariants& o) const;
};

QuadInvariants real_invariants(int pos, int neg);
QuadInvariants padic_invariants(const LocalField& field, int rank, const SquareClass& det, Sign hasse);

// rank <= 1 forces hasse = +1; rank 2 excludes (det = -1, hasse = -1);
// rank 0 forces the trivial pair; rank >= 3 is unrestricted
bool invariants_realizable(const LocalField& field, int rank, const SquareClass& det, Sign hasse);

QuadInvariants invariants(const QuadForm& b);

bool equivalent(const QuadForm& b, const QuadForm& c);
bool equivalent(const QuadInvariants& b, const QuadInvariants& c);

QuadForm direct_sum(const QuadForm& b, const QuadForm& c);
QuadInvariants direct_sum(const QuadInvariants& b, const QuadInvariants& c);

// Q([1,-1,...,1,-1]) of rank 2k
QuadForm hyperbolic(const LocalField& field, int k);

bool is_isotropic(const QuadForm& b);          // rank >= 1
bool is_isotropic(const QuadInvariants& inv);  // rank >= 1

// Witt index
int mu(const QuadForm& b);
int mu(const QuadInvariants& inv);

struct WittDecomposition {
    int index = 0;
    QuadInvariants kernel;  // anisotropic part
};
WittDecomposition witt_decompose(const QuadForm& b);
WittDecomposition witt_decompose(const QuadInvariants& inv);

// true iff B + Q([-x]) is isotropic
bool represents(const QuadForm& b, const SquareClass& x);
std::vector<SquareClass> rep_set(const QuadForm& b);

// C <= B in the Witt-cancellation ordering, decided through the forced
// complement invariants (rank(B)-rank(C), det(B)det(C), {det C,-det B}H(B)H(C))
bool is_subform(const QuadForm& c, const QuadForm& b);
bool is_subform(const QuadInvariants& c, const QuadInvariants& b);

QuadForm scale(const QuadForm& b, const SquareClass& lambda);

// every diagonal of given rank over canonical class representatives
std::vector<QuadForm> all_diagonal_forms(const LocalField& field, int rank);
// all diagonals equivalent to the given invariants
std::vector<QuadForm> diagonalizations_of(const QuadInvariants& inv);
// lexicographically first diagonal with the given invariants
QuadForm canonical_form(const QuadInvariants& inv);
// all realizable invariant records of the given rank (deterministic order)
std::vector<QuadInvariants> enumerate_invariants(const LocalField& field, int rank);

std::string to_string(const QuadForm& b);  // qf(Qp:3)[1,u,p,up] / qf(R)[+,-]
QuadForm parse_quad_form(std::string_view text);

}  // namespace sympair
