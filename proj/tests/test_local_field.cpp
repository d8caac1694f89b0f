#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sympair/local_field.hpp"
#include "sympair/oracle.hpp"

using namespace sympair;

namespace {
const LocalField R = LocalField::real();
const LocalField Q2 = LocalField::padic(2);
const LocalField Q3 = LocalField::padic(3);
const LocalField Q5 = LocalField::padic(5);
}  // namespace

TEST_CASE("field construction") {
    CHECK(Q3.prime() == 3);
    CHECK(R.class_count() == 2);
    CHECK(Q5.class_count() == 4);
    CHECK(Q2.class_count() == 8);
    CHECK(Q3.nonresidue() == 2);
    CHECK(Q5.nonresidue() == 2);
    CHECK(LocalField::padic(7).nonresidue() == 3);
    CHECK_THROWS_AS(LocalField::padic(4), std::invalid_argument);
    CHECK_THROWS_AS(LocalField::padic(1), std::invalid_argument);
}

TEST_CASE("square class reduction") {
    CHECK(square_class(R, -4).unit == -1);
    CHECK(square_class(R, 9).unit == 1);
    CHECK_THROWS_AS(square_class(R, 0), std::invalid_argument);

    // 9/2 over Q3 reduces to the class of 1/2; 2 is not a square mod 3
    SquareClass c = square_class(Q3, 9, 2);
    CHECK(c.val_parity == 0);
    CHECK(c.unit == 1);
    for (int y = 0; y < 3; ++y) CHECK(y * y % 3 != 2);

    // 17 is a 2-adic square: a root of z^2 = 17 mod 32 exists and lifts
    SquareClass s17 = square_class(Q2, 17);
    CHECK(s17.trivial());
    bool witness = false;
    for (int z = 0; z < 32; ++z) witness |= (z * z - 17) % 32 == 0;
    CHECK(witness);

    CHECK(square_class(Q3, 5, 20).trivial());  // 5/20 = 1/4
    CHECK(square_class(Q2, -1).unit == 7);
    CHECK(square_class(Q3, 18).val_parity == 0);  // 18 = 2 * 3^2
    CHECK(square_class(Q3, 18).unit == 1);
}

TEST_CASE("class multiplication is the exponent-2 group law") {
    CHECK(class_mul(square_class(R, -1), square_class(R, -1)) == square_class(R, 1));
    CHECK(class_mul(square_class(Q3, 3), square_class(Q3, 2)) == square_class(Q3, 6));
    CHECK(class_mul(square_class(Q2, 3), square_class(Q2, 5)) == square_class(Q2, 7));
    for (const LocalField& f : {R, Q2, Q3, Q5})
        for (const SquareClass& a : enumerate_classes(f)) {
            CHECK(class_mul(a, a).trivial());
            for (const SquareClass& b : enumerate_classes(f))
                CHECK(class_mul(a, b) == class_mul(b, a));
        }
    CHECK_THROWS_AS(class_mul(square_class(R, 1), square_class(Q3, 1)), std::invalid_argument);
}

TEST_CASE("square_class is multiplicative on rationals") {
    const long long samples[] = {1, -1, 2, 3, 5, -6, 12, 45, -50, 98};
    for (const LocalField& f : {R, Q2, Q3, Q5})
        for (long long x : samples)
            for (long long y : samples)
                CHECK(class_mul(square_class(f, x), square_class(f, y)) == square_class(f, x * y));
}

TEST_CASE("hilbert symbol values") {
    CHECK(hilbert(square_class(R, -1), square_class(R, -1)) == Sign::minus());
    CHECK(hilbert(square_class(R, -1), square_class(R, 2)) == Sign::plus());
    CHECK(hilbert(square_class(Q3, 3), square_class(Q3, 3)) == Sign::minus());
    CHECK(hilbert(square_class(Q3, 2), square_class(Q3, 3)) == Sign::minus());
    CHECK(hilbert(square_class(Q5, 5), square_class(Q5, 5)) == Sign::plus());
    CHECK(hilbert(square_class(Q2, 2), square_class(Q2, 5)) == Sign::minus());
    CHECK(hilbert(square_class(Q2, -1), square_class(Q2, -1)) == Sign::minus());
    CHECK_THROWS_AS(hilbert(square_class(Q3, 1), square_class(Q5, 1)), std::invalid_argument);
}

TEST_CASE("hilbert symbol identities") {
    for (const LocalField& f : {R, Q2, Q3, Q5, LocalField::padic(7)}) {
        std::vector<SquareClass> cls = enumerate_classes(f);
        for (const SquareClass& a : cls) {
            CHECK(hilbert(a, class_mul(a, square_class(f, -1))) == Sign::plus());  // {a,-a} = 1
            bool hit_minus = false;
            for (const SquareClass& b : cls) {
                CHECK(hilbert(a, b) == hilbert(b, a));
                for (const SquareClass& c : cls)
                    CHECK(hilbert(a, class_mul(b, c)) == hilbert(a, b) * hilbert(a, c));
                if (!hilbert(a, b).is_plus()) hit_minus = true;
            }
            if (!a.trivial()) CHECK(hit_minus);  // nondegeneracy
        }
    }
}

TEST_CASE("hilbert symbol agrees with the conic oracle") {
    for (const LocalField& f : {R, Q2, Q3, Q5}) {
        for (const SquareClass& a : enumerate_classes(f))
            for (const SquareClass& b : enumerate_classes(f))
                CHECK(hilbert(a, b) == hilbert_oracle(f, a.representative(), b.representative()));
    }
}

TEST_CASE("norm groups") {
    CHECK(is_norm(square_class(Q3, -3), square_class(Q3, 3)));
    CHECK_FALSE(is_norm(square_class(R, -1), square_class(R, -1)));
    CHECK_FALSE(is_norm(square_class(Q3, 2), square_class(Q3, 3)));
    CHECK_THROWS_AS(is_norm(square_class(Q3, 2), square_class(Q3, 4)), std::invalid_argument);

    std::vector<SquareClass> real_norms = norm_group_mod_squares(square_class(R, -1));
    CHECK(real_norms.size() == 1);
    CHECK(real_norms[0].trivial());

    std::vector<SquareClass> q3_norms = norm_group_mod_squares(square_class(Q3, 3));
    CHECK(q3_norms.size() == 2);
    CHECK(q3_norms[0].trivial());
    CHECK(q3_norms[1] == square_class(Q3, -3));

    for (const SquareClass& d : enumerate_classes(Q2)) {
        if (d.trivial()) continue;
        CHECK(norm_group_mod_squares(d).size() == 4);
    }
}

TEST_CASE("class enumeration and ordering") {
    CHECK(enumerate_classes(R).size() == 2);
    CHECK(enumerate_classes(Q5).size() == 4);
    CHECK(enumerate_classes(Q2).size() == 8);
    for (const LocalField& f : {R, Q2, Q3, Q5}) {
        std::vector<SquareClass> cls = enumerate_classes(f);
        CHECK(cls.front().trivial());
        std::set<long long> reps;
        for (size_t i = 0; i < cls.size(); ++i) {
            reps.insert(cls[i].representative());
            CHECK(class_index(cls[i]) == static_cast<int>(i));
        }
        CHECK(reps.size() == cls.size());
    }
    std::vector<SquareClass> q2 = enumerate_classes(Q2);
    CHECK(q2[1].representative() == 3);
    CHECK(q2[4].representative() == 2);
    CHECK(q2[7].representative() == 14);
}

TEST_CASE("class text round-trip") {
    CHECK(to_string(square_class(Q3, 2)) == "Qp:3|u");
    CHECK(to_string(square_class(Q3, 6)) == "Qp:3|3u");
    CHECK(to_string(square_class(R, -2)) == "R|-");
    CHECK(to_string(square_class(Q2, 10)) == "Qp:2|10");
    for (const LocalField& f : {R, Q2, Q3, Q5})
        for (const SquareClass& c : enumerate_classes(f)) CHECK(parse_square_class(to_string(c)) == c);
    CHECK_THROWS_AS(parse_square_class("Qp:3|"), std::invalid_argument);
    CHECK_THROWS_AS(parse_square_class("Qp:2|u"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("Qp:6"), std::invalid_argument);
}

TEST_CASE("formula path matches the oracle on raw integers") {
    // not just canonical representatives: the reduction itself is on trial
    for (const LocalField& f : {Q2, Q3, Q5})
        for (long long a = -12; a <= 12; ++a)
            for (long long b = 1; b <= 12; ++b) {
                if (a == 0) continue;
                CHECK(hilbert(square_class(f, a), square_class(f, b)) == hilbert_oracle(f, a, b));
                CHECK(hilbert(square_class(f, a), square_class(f, -b)) == hilbert_oracle(f, a, -b));
            }
}
