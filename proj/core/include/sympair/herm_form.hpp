// Hermitian forms for a quadratic extension E/F, stored as their complete
// invariant record: rank plus determinant class in F*/N_{E/F}(E*) for p-adic
// F, rank plus signature for C/R. No Gram matrices anywhere in scope.
#pragma once

#include <string>
#include <string_view>

#include "sympair/local_field.hpp"

namespace sympair {

// E = F(sqrt d), d nontrivial. Over R the only choice is d = -1 (E = C).
struct QuadExt {
    LocalField base = LocalField::real();
    SquareClass d;

    bool operator==(const QuadExt&) const = default;
};

QuadExt quad_ext(const LocalField& base, const SquareClass& d);
QuadExt complex_over_real();

// whether -1 is a norm from E, i.e. the class of -1 in F*/N_{E/F}(E*)
bool minus_one_is_norm(const QuadExt& ext);

struct HermForm {
    QuadExt ext;
    int rank = 0;
    bool det_is_norm = true;  // p-adic: det class in F*/N
    int pos = 0, neg = 0;     // real (E = C) only

    bool operator==(const HermForm&) const = default;
};

HermForm herm_form(const QuadExt& ext, int rank, bool det_is_norm);
HermForm herm_form_real(int pos, int neg);

bool herm_equivalent(const HermForm& b, const HermForm& c);

// Witt index. Anisotropic Hermitian forms over p-adic F have rank <= 2; the
// rank-2 isotropic class is the one whose det equals the class of -1.
int herm_mu(const HermForm& b);

bool herm_is_subform(const HermForm& c, const HermForm& b);

HermForm herm_direct_sum(const HermForm& b, const HermForm& c);

std::string to_string(const QuadExt& ext);
std::string to_string(const HermForm& b);  // hf(Qp:3,d=p)[rank=2,det=nonnorm] / hf(C/R)[2,1]
QuadExt parse_quad_ext(std::string_view text);
HermForm parse_herm_form(std::string_view text);

}  // namespace sympair
