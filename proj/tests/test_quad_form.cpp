#include <doctest.h>

#include <stdexcept>

#include "sympair/oracle.hpp"
#include "sympair/quad_form.hpp"

using namespace sympair;

namespace {
const LocalField R = LocalField::real();
const LocalField Q2 = LocalField::padic(2);
const LocalField Q3 = LocalField::padic(3);
const LocalField Q5 = LocalField::padic(5);
}  // namespace

TEST_CASE("invariants") {
    QuadInvariants a = invariants(quad_form(R, {1, -1}));
    CHECK(a.rank == 2);
    CHECK(a.pos == 1);
    CHECK(a.neg == 1);

    QuadInvariants b = invariants(quad_form(Q3, {1, -1}));
    CHECK(b.det == square_class(Q3, -1));
    CHECK(b.hasse == Sign::plus());

    QuadInvariants c = invariants(quad_form(Q3, {3, 3}));
    CHECK(c.det.trivial());
    CHECK(c.hasse == Sign::minus());

    // derived real det/hasse
    QuadInvariants d = real_invariants(1, 2);
    CHECK(d.det == square_class(R, 1));
    CHECK(d.hasse == Sign::minus());
}

TEST_CASE("equivalence by invariants") {
    CHECK(equivalent(quad_form(Q5, {1, -1}), quad_form(Q5, {2, -2})));
    CHECK_FALSE(equivalent(quad_form(R, {1, 1}), quad_form(R, {1, -1})));
    CHECK(equivalent(quad_form(Q3, {1, 2}), quad_form(Q3, {2, 1})));
    CHECK_THROWS_AS(equivalent(quad_form(Q3, {1}), quad_form(Q5, {1})), std::invalid_argument);
}

TEST_CASE("direct sum and the Hasse composition law") {
    QuadForm b = quad_form(Q3, {1, 2});
    CHECK(equivalent(direct_sum(b, QuadForm{Q3, {}}), b));
    CHECK(equivalent(direct_sum(quad_form(Q3, {1}), quad_form(Q3, {-1})), hyperbolic(Q3, 1)));
    CHECK(invariants(direct_sum(quad_form(Q3, {3}), quad_form(Q3, {3}))) == invariants(quad_form(Q3, {3, 3})));
    for (const LocalField& f : {Q2, Q3}) {
        for (const QuadForm& x : all_diagonal_forms(f, 2))
            for (const QuadForm& y : all_diagonal_forms(f, 2)) {
                QuadInvariants ix = invariants(x), iy = invariants(y);
                QuadInvariants sum = invariants(direct_sum(x, y));
                CHECK(sum.det == class_mul(ix.det, iy.det));
                CHECK(sum.hasse == ix.hasse * iy.hasse * hilbert(ix.det, iy.det));
            }
    }
}

TEST_CASE("hyperbolic forms") {
    CHECK(hyperbolic(Q3, 0).rank() == 0);
    QuadInvariants r = invariants(hyperbolic(R, 1));
    CHECK(r.pos == 1);
    CHECK(r.neg == 1);
    QuadInvariants h2 = invariants(hyperbolic(Q3, 2));
    CHECK(h2.det.trivial());
    CHECK(mu(h2) == 2);
}

TEST_CASE("isotropy") {
    CHECK(is_isotropic(quad_form(Q3, {1, -1})));
    CHECK_FALSE(is_isotropic(quad_form(R, {1, 1})));
    CHECK(is_isotropic(quad_form(Q3, {1, 1, 2, 3, 6})));
    CHECK_FALSE(is_isotropic(quad_form(Q3, {1, 1})));
    CHECK_THROWS_AS(is_isotropic(QuadForm{Q3, {}}), std::invalid_argument);
}

TEST_CASE("Witt index and decomposition") {
    for (const LocalField& f : {R, Q3, Q2})
        for (int k = 0; k <= 3; ++k) CHECK(mu(hyperbolic(f, k)) == k);
    CHECK(mu(quad_form(R, {1, 1, -1})) == 1);

    // Q([1,1,3,2]) over Q3 splits one plane off a rank-2 anisotropic kernel
    QuadForm b = quad_form(Q3, {1, 1, 3, 2});
    CHECK(mu(b) == 1);
    WittDecomposition w = witt_decompose(b);
    CHECK(w.index == 1);
    CHECK(w.kernel.rank == 2);
    CHECK(w.kernel.det == square_class(Q3, 3));
    CHECK_FALSE(is_isotropic(w.kernel));
    CHECK(isotropy_oracle(canonical_form(w.kernel)) == false);

    WittDecomposition h2 = witt_decompose(hyperbolic(Q3, 2));
    CHECK(h2.index == 2);
    CHECK(h2.kernel.rank == 0);

    WittDecomposition rw = witt_decompose(quad_form(R, {1, 1, -1}));
    CHECK(rw.index == 1);
    CHECK(rw.kernel.pos == 1);
    CHECK(rw.kernel.neg == 0);

    // mu equals the largest k with H_k <= B
    for (const QuadForm& f4 : all_diagonal_forms(Q3, 3)) {
        int k = mu(f4);
        CHECK(is_subform(hyperbolic(Q3, k), f4));
        CHECK_FALSE(is_subform(hyperbolic(Q3, k + 1), f4));
    }
}

TEST_CASE("representation sets") {
    // the rank-2 rule {gamma, -ab} = {a,b}, exhaustively over Q3
    for (const SquareClass& a : enumerate_classes(Q3))
        for (const SquareClass& b : enumerate_classes(Q3)) {
            QuadForm f = quad_form_classes(Q3, {a, b});
            SquareClass mab = class_mul(square_class(Q3, -1), class_mul(a, b));
            for (const SquareClass& g : enumerate_classes(Q3))
                CHECK(represents(f, g) == (hilbert(g, mab) == hilbert(a, b)));
        }
    CHECK_FALSE(represents(quad_form(R, {1, 1}), square_class(R, -1)));
    CHECK(rep_set(hyperbolic(Q3, 1)).size() == 4);
    CHECK(rep_set(quad_form(R, {1})).size() == 1);
    // every nondegenerate rank-4 form over Q3 represents every class
    for (const QuadForm& f : all_diagonal_forms(Q3, 4)) CHECK(rep_set(f).size() == 4);
    CHECK_THROWS_AS(represents(QuadForm{Q3, {}}, square_class(Q3, 1)), std::invalid_argument);
    // represents(B,x) <=> x in rep_set(B)
    QuadForm f = quad_form(Q3, {1, 3});
    std::vector<SquareClass> rs = rep_set(f);
    for (const SquareClass& x : enumerate_classes(Q3)) {
        bool in = false;
        for (const SquareClass& y : rs) in |= x == y;
        CHECK(in == represents(f, x));
    }
}

TEST_CASE("subform agrees with complement enumeration over Q2") {
    std::vector<QuadInvariants> all;
    all.push_back(invariants(QuadForm{Q2, {}}));
    for (int rank = 1; rank <= 3; ++rank)
        for (const QuadInvariants& inv : enumerate_invariants(Q2, rank)) all.push_back(inv);
    for (const QuadInvariants& c : all)
        for (const QuadInvariants& b : all) {
            if (b.rank < c.rank) continue;
            CHECK(is_subform(c, b) == subform_oracle(canonical_form(c), canonical_form(b)));
        }
}

TEST_CASE("Hasse sum law across ranks") {
    for (const LocalField& f : {Q2, Q3})
        for (int r1 = 1; r1 <= 3; ++r1)
            for (int r2 = 1; r2 <= 3; ++r2)
                for (const QuadInvariants& x : enumerate_invariants(f, r1))
                    for (const QuadInvariants& y : enumerate_invariants(f, r2)) {
                        QuadInvariants sum = invariants(direct_sum(canonical_form(x), canonical_form(y)));
                        CHECK(sum.det == class_mul(x.det, y.det));
                        CHECK(sum.hasse == x.hasse * y.hasse * hilbert(x.det, y.det));
                    }
}

TEST_CASE("subform criterion") {
    QuadForm b = quad_form(Q3, {1, 2, 3});
    CHECK(is_subform(b, b));
    // any rank-1 form sits inside any rank-4 form over Q3
    for (const QuadForm& c : all_diagonal_forms(Q3, 1))
        for (const QuadForm& big : all_diagonal_forms(Q3, 4)) CHECK(is_subform(c, big));
    // the unique non-realizable complement: forced (rank 2, det -1, hasse -1)
    QuadForm blocked = canonical_form(padic_invariants(Q3, 3, square_class(Q3, 2), Sign::minus()));
    CHECK_FALSE(is_subform(quad_form(Q3, {1}), blocked));
    CHECK_FALSE(subform_oracle(quad_form(Q3, {1}), blocked));
    CHECK_FALSE(invariants_realizable(Q3, 2, square_class(Q3, -1), Sign::minus()));
    // real rule is componentwise signature
    CHECK(is_subform(quad_form(R, {1, -1}), quad_form(R, {1, 1, -1})));
    CHECK_FALSE(is_subform(quad_form(R, {-1, -1}), quad_form(R, {1, 1, -1})));
}

TEST_CASE("Witt cancellation at the invariant level") {
    for (const LocalField& f : {Q3, Q5}) {
        std::vector<QuadForm> small = all_diagonal_forms(f, 2);
        for (const QuadForm& b : all_diagonal_forms(f, 3))
            for (const QuadForm& b2 : all_diagonal_forms(f, 3))
                for (const QuadForm& c : small)
                    if (equivalent(direct_sum(b, c), direct_sum(b2, c))) CHECK(equivalent(b, b2));
    }
}

TEST_CASE("scaling") {
    QuadForm b = quad_form(Q3, {1, 1});
    CHECK(equivalent(scale(b, square_class(Q3, 4)), b));
    QuadForm scaled = scale(b, square_class(Q3, 2));
    CHECK(invariants(scaled).hasse == hilbert(square_class(Q3, 2), square_class(Q3, 2)));
    QuadInvariants flipped = invariants(scale(quad_form(R, {1, 1, -1}), square_class(R, -1)));
    CHECK(flipped.pos == 1);
    CHECK(flipped.neg == 2);
}

TEST_CASE("canonical forms and enumeration") {
    for (const LocalField& f : {Q2, Q3}) {
        for (int rank = 0; rank <= 4; ++rank)
            for (const QuadInvariants& inv : enumerate_invariants(f, rank))
                CHECK(invariants(canonical_form(inv)) == inv);
    }
    CHECK(enumerate_invariants(Q3, 2).size() == 7);
    CHECK(enumerate_invariants(Q2, 2).size() == 15);
    CHECK(enumerate_invariants(Q3, 1).size() == 4);
    CHECK_THROWS_AS(padic_invariants(Q3, 1, square_class(Q3, 1), Sign::minus()), std::invalid_argument);
    CHECK_THROWS_AS(padic_invariants(Q3, 2, square_class(Q3, -1), Sign::minus()), std::invalid_argument);
}

TEST_CASE("form text round-trip") {
    CHECK(to_string(quad_form(Q3, {1, 2, 3, 6})) == "qf(Qp:3)[1,u,p,up]");
    CHECK(to_string(quad_form(R, {1, 1, -1})) == "qf(R)[+,+,-]");
    QuadForm parsed = parse_quad_form("qf(Qp:3)[1,u,p,up]");
    CHECK(parsed == quad_form(Q3, {1, 2, 3, 6}));
    CHECK(parse_quad_form("qf(Qp:3)[1,-1]") == quad_form(Q3, {1, -1}));
    CHECK(parse_quad_form("qf(R)[+,-]") == quad_form(R, {1, -1}));
    for (const LocalField& f : {R, Q2, Q3})
        for (const QuadForm& b : all_diagonal_forms(f, 2)) CHECK(parse_quad_form(to_string(b)) == b);
    CHECK(parse_quad_form("qf(Qp:5)[]").rank() == 0);
    CHECK_THROWS_AS(parse_quad_form("qf(Qp:3)[0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_quad_form("q(R)[+]"), std::invalid_argument);
}
