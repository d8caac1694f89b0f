#include <doctest.h>

#include <stdexcept>

#include "sympair/herm_form.hpp"

using namespace sympair;

namespace {
const LocalField Q2 = LocalField::padic(2);
const LocalField Q3 = LocalField::padic(3);

QuadExt q3_sqrt3() { return quad_ext(Q3, square_class(Q3, 3)); }
QuadExt q2_sqrt5() { return quad_ext(Q2, square_class(Q2, 5)); }
}  // namespace

TEST_CASE("extension construction") {
    CHECK_THROWS_AS(quad_ext(Q3, square_class(Q3, 4)), std::invalid_argument);
    CHECK_THROWS_AS(quad_ext(LocalField::real(), square_class(LocalField::real(), 2)),
                    std::invalid_argument);
    CHECK(complex_over_real().d == square_class(LocalField::real(), -1));
    // -1 is a norm from Q3(sqrt 3): -3 = N(sqrt 3) and 3 is a square there
    CHECK(minus_one_is_norm(q3_sqrt3()) == is_norm(square_class(Q3, -1), square_class(Q3, 3)));
}

TEST_CASE("equivalence is rank plus determinant") {
    QuadExt e = q3_sqrt3();
    CHECK(herm_equivalent(herm_form(e, 0, true), herm_form(e, 0, true)));
    CHECK_FALSE(herm_equivalent(herm_form(e, 2, true), herm_form(e, 2, false)));
    CHECK_FALSE(herm_equivalent(herm_form_real(2, 0), herm_form_real(1, 1)));
    CHECK_THROWS_AS(herm_equivalent(herm_form(e, 1, true), herm_form(q2_sqrt5(), 1, true)),
                    std::invalid_argument);
    CHECK_THROWS_AS(herm_form(e, 0, false), std::invalid_argument);
}

TEST_CASE("Witt index") {
    QuadExt e = q3_sqrt3();
    CHECK(herm_mu(herm_form(e, 1, true)) == 0);
    CHECK(herm_mu(herm_form(e, 1, false)) == 0);
    CHECK(herm_mu(herm_form_real(1, 1)) == 1);
    CHECK(herm_mu(herm_form_real(3, 1)) == 1);
    // rank-3 p-adic Hermitian forms are isotropic whatever the determinant
    CHECK(herm_mu(herm_form(e, 3, true)) >= 1);
    CHECK(herm_mu(herm_form(e, 3, false)) >= 1);
    // the hyperbolic plane is the rank-2 class with det = class(-1)
    bool minus = minus_one_is_norm(e);
    CHECK(herm_mu(herm_form(e, 2, minus)) == 1);
    CHECK(herm_mu(herm_form(e, 2, !minus)) == 0);
    CHECK(herm_mu(herm_form(e, 4, true)) >= 1);
}

TEST_CASE("direct sums") {
    QuadExt e = q3_sqrt3();
    HermForm b = herm_form(e, 2, false);
    CHECK(herm_equivalent(herm_direct_sum(b, herm_form(e, 0, true)), b));
    HermForm sum = herm_direct_sum(herm_form(e, 1, true), herm_form(e, 1, false));
    CHECK(sum.rank == 2);
    CHECK_FALSE(sum.det_is_norm);
    HermForm rsum = herm_direct_sum(herm_form_real(1, 0), herm_form_real(0, 1));
    CHECK(rsum.pos == 1);
    CHECK(rsum.neg == 1);
    // det multiplicativity over all small rank pairs
    for (const QuadExt& ext : {q3_sqrt3(), q2_sqrt5()})
        for (bool d1 : {true, false})
            for (bool d2 : {true, false})
                CHECK(herm_direct_sum(herm_form(ext, 1, d1), herm_form(ext, 2, d2)).det_is_norm ==
                      (d1 == d2));
}

TEST_CASE("subform order with brute-force complements") {
    for (const QuadExt& ext : {q3_sqrt3(), q2_sqrt5()}) {
        std::vector<HermForm> forms;
        for (int rank = 0; rank <= 3; ++rank)
            for (bool det : {true, false}) {
                if (rank == 0 && !det) continue;
                forms.push_back(herm_form(ext, rank, det));
            }
        for (const HermForm& c : forms)
            for (const HermForm& b : forms) {
                bool brute = false;
                for (const HermForm& d : forms)
                    if (c.rank + d.rank == b.rank && herm_equivalent(herm_direct_sum(c, d), b)) brute = true;
                CHECK(herm_is_subform(c, b) == brute);
            }
    }
    CHECK(herm_is_subform(herm_form(q3_sqrt3(), 1, false), herm_form(q3_sqrt3(), 2, true)));
    CHECK_FALSE(herm_is_subform(herm_form_real(2, 0), herm_form_real(1, 1)));
}

TEST_CASE("Hermitian Witt cancellation") {
    for (const QuadExt& ext : {q3_sqrt3(), q2_sqrt5()}) {
        std::vector<HermForm> forms;
        for (int rank = 0; rank <= 3; ++rank)
            for (bool det : {true, false}) {
                if (rank == 0 && !det) continue;
                forms.push_back(herm_form(ext, rank, det));
            }
        for (const HermForm& b : forms)
            for (const HermForm& b2 : forms)
                for (const HermForm& c : forms)
                    if (herm_equivalent(herm_direct_sum(b, c), herm_direct_sum(b2, c)))
                        CHECK(herm_equivalent(b, b2));
    }
}

TEST_CASE("Hermitian text round-trip") {
    HermForm b = herm_form(q3_sqrt3(), 2, false);
    CHECK(to_string(b) == "hf(Qp:3,d=p)[rank=2,det=nonnorm]");
    CHECK(parse_herm_form(to_string(b)) == b);
    HermForm r = herm_form_real(2, 1);
    CHECK(to_string(r) == "hf(C/R)[2,1]");
    CHECK(parse_herm_form(to_string(r)) == r);
    CHECK(parse_herm_form("hf(Qp:2,d=5)[rank=1,det=norm]") == herm_form(q2_sqrt5(), 1, true));
    CHECK_THROWS_AS(parse_herm_form("hf(Qp:3,d=1)[rank=1,det=norm]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_herm_form("hf(Qp:3,d=p)[rank=1]"), std::invalid_argument);
}
