// Square-class arithmetic of local fields: F*/(F*)^2, Hilbert symbols and
// norm groups of quadratic extensions, for F = R or Q_p. All values are
// immutable and every operation is pure.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sympair {

class LocalField {
public:
    static LocalField real() { return LocalField(0); }
    static LocalField padic(long long p);

    bool is_real() const { return p_ == 0; }
    bool is_padic() const { return p_ != 0; }
    bool is_dyadic() const { return p_ == 2; }
    long long prime() const;

    // order of F*/(F*)^2: 2 for R, 4 for odd p, 8 for p = 2
    int class_count() const;

    // smallest positive quadratic nonresidue mod p (odd p only)
    long long nonresidue() const;

    bool operator==(const LocalField&) const = default;

private:
    explicit LocalField(long long p) : p_(p) {}
    long long p_ = 0;  // 0 encodes R
};

class Sign {
public:
    Sign() = default;
    explicit Sign(int v);
    static Sign plus() { return Sign(1); }
    static Sign minus() { return Sign(-1); }
    int value() const { return v_; }
    bool is_plus() const { return v_ > 0; }
    Sign operator*(Sign o) const { return Sign(v_ * o.v_); }
    bool operator==(const Sign&) const = default;

private:
    int v_ = 1;
};

// One element of F*/(F*)^2. unit is the residue tag:
//   R      : +1 / -1
//   odd p  : 0 (square unit) / 1 (nonresidue unit)
//   p = 2  : odd residue mod 8, one of 1,3,5,7
struct SquareClass {
    LocalField field = LocalField::real();
    int val_parity = 0;
    int unit = 1;

    bool trivial() const;
    // small integer representative: R: +-1; odd p: 1,u,p,up; p=2: 1..7, 2..14
    long long representative() const;
    bool operator==(const SquareClass&) const = default;
};

// reduction F* -> F*/(F*)^2 of the rational num/den
SquareClass square_class(const LocalField& field, long long num, long long den = 1);

SquareClass class_mul(const SquareClass& a, const SquareClass& b);

// {a,b} = +1 iff ax^2 + by^2 = 1 is solvable in F. Computed by the closed
// tame/wild formulas; the search oracle (oracle.hpp) is the independent check.
Sign hilbert(const SquareClass& a, const SquareClass& b);

// x in N_{F(sqrt d)/F}(F(sqrt d)*) <=> {x,d} = +1. d must be nontrivial.
bool is_norm(const SquareClass& x, const SquareClass& d);

// the index-2 subgroup {x : {x,d} = +1} of the square-class group
std::vector<SquareClass> norm_group_mod_squares(const SquareClass& d);

// complete duplicate-free list, trivial class first
std::vector<SquareClass> enumerate_classes(const LocalField& field);

// position of c in enumerate_classes order
int class_index(const SquareClass& c);

std::string to_string(const LocalField& field);  // "R", "Qp:3"
std::string to_string(const Sign& s);            // "1", "-1"
std::string to_string(const SquareClass& c);     // "R|-", "Qp:3|u", "Qp:3|3u"

LocalField parse_field(std::string_view text);
SquareClass parse_square_class(std::string_view text);

}  // namespace sympair
