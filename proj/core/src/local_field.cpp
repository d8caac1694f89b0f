#include "sympair/local_field.hpp"

#include <charconv>
#include <stdexcept>

namespace sympair {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long pow_mod(long long base, long long exp, long long mod) {
    unsigned __int128 acc = 1, b = ((base % mod) + mod) % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<long long>(acc);
}

// Legendre symbol (a|p) for a a unit mod odd p
int legendre(long long a, long long p) {
    long long r = pow_mod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

void require_same_field(const SquareClass& a, const SquareClass& b) {
    if (!(a.field == b.field)) throw std::invalid_argument("square classes live over different fields");
}

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2, u odd
int eps2(int u) { return ((u - 1) / 2) % 2; }
int omega2(int u) { return ((u * u - 1) / 8) % 2; }

}  // namespace

LocalField LocalField::padic(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    return LocalField(p);
}

long long LocalField::prime() const {
    if (is_real()) throw std::logic_error("the real field has no residual prime");
    return p_;
}

int LocalField::class_count() const {
    if (is_real()) return 2;
    return is_dyadic() ? 8 : 4;
}

long long LocalField::nonresidue() const {
    long long p = prime();
    if (p == 2) throw std::logic_error("nonresidue() is defined for odd p only");
    for (long long a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return a;
    throw std::logic_error("no nonresidue found");  // unreachable for p > 2
}

Sign::Sign(int v) : v_(v) {
    if (v != 1 && v != -1) throw std::invalid_argument("sign must be +-1");
}

bool SquareClass::trivial() const {
    if (val_parity != 0) return false;
    if (field.is_real()) return unit == 1;
    return field.is_dyadic() ? unit == 1 : unit == 0;
}

long long SquareClass::representative() const {
    if (field.is_real()) return unit;
    long long p = field.prime();
    long long u = 1;
    if (field.is_dyadic())
        u = unit;
    else if (unit == 1)
        u = field.nonresidue();
    return val_parity ? p * u : u;
}

SquareClass square_class(const LocalField& field, long long num, long long den) {
    if (num == 0 || den == 0) throw std::invalid_argument("square class of zero");
    if (field.is_real()) {
        int sign = (num > 0) == (den > 0) ? 1 : -1;
        return SquareClass{field, 0, sign};
    }
    long long p = field.prime();
    int v = 0;
    while (num % p == 0) { num /= p; ++v; }
    while (den % p == 0) { den /= p; --v; }
    SquareClass c{field, mod2(v), 0};
    if (field.is_dyadic()) {
        // den is odd, and odd^2 = 1 mod 8, so den^{-1} = den mod 8
        long long r = (num % 8) * (den % 8) % 8;
        c.unit = static_cast<int>((r + 8) % 8);
    } else {
        c.unit = legendre(num, p) * legendre(den, p) == 1 ? 0 : 1;
    }
    return c;
}

SquareClass class_mul(const SquareClass& a, const SquareClass& b) {
    require_same_field(a, b);
    SquareClass c{a.field, (a.val_parity + b.val_parity) % 2, 1};
    if (a.field.is_real())
        c.unit = a.unit * b.unit;
    else if (a.field.is_dyadic())
        c.unit = (a.unit * b.unit) % 8;
    else
        c.unit = (a.unit + b.unit) % 2;
    return c;
}

Sign hilbert(const SquareClass& a, const SquareClass& b) {
    require_same_field(a, b);
    const LocalField& f = a.field;
    if (f.is_real())
        return (a.unit < 0 && b.unit < 0) ? Sign::minus() : Sign::plus();
    int alpha = a.val_parity, beta = b.val_parity;
    if (f.is_dyadic()) {
        int e = eps2(a.unit) * eps2(b.unit) + alpha * omega2(b.unit) + beta * omega2(a.unit);
        return e % 2 ? Sign::minus() : Sign::plus();
    }
    long long p = f.prime();
    int eps_p = static_cast<int>(((p - 1) / 2) % 2);
    int lu = a.unit == 0 ? 1 : -1;  // Legendre of the unit parts
    int lv = b.unit == 0 ? 1 : -1;
    int val = (alpha * beta * eps_p) % 2 ? -1 : 1;
    if (beta) val *= lu;
    if (alpha) val *= lv;
    return Sign(val);
}

bool is_norm(const SquareClass& x, const SquareClass& d) {
    require_same_field(x, d);
    if (d.trivial()) throw std::invalid_argument("d is a square: not a quadratic extension");
    return hilbert(x, d).is_plus();
}

std::vector<SquareClass> norm_group_mod_squares(const SquareClass& d) {
    if (d.trivial()) throw std::invalid_argument("d is a square: not a quadratic extension");
    std::vector<SquareClass> group;
    for (const SquareClass& x : enumerate_classes(d.field))
        if (hilbert(x, d).is_plus()) group.push_back(x);
    return group;
}

std::vector<SquareClass> enumerate_classes(const LocalField& field) {
    std::vector<SquareClass> out;
    if (field.is_real()) {
        out.push_back(SquareClass{field, 0, 1});
        out.push_back(SquareClass{field, 0, -1});
        return out;
    }
    if (field.is_dyadic()) {
        for (int v = 0; v <= 1; ++v)
            for (int u : {1, 3, 5, 7}) out.push_back(SquareClass{field, v, u});
        return out;
    }
    for (int v = 0; v <= 1; ++v)
        for (int u : {0, 1}) out.push_back(SquareClass{field, v, u});
    return out;
}

int class_index(const SquareClass& c) {
    if (c.field.is_real()) return c.unit == 1 ? 0 : 1;
    if (c.field.is_dyadic()) return c.val_parity * 4 + (c.unit - 1) / 2;
    return c.val_parity * 2 + c.unit;
}

std::string to_string(const LocalField& field) {
    return field.is_real() ? "R" : "Qp:" + std::to_string(field.prime());
}

std::string to_string(const Sign& s) { return s.is_plus() ? "1" : "-1"; }

std::string to_string(const SquareClass& c) {
    std::string tag;
    if (c.field.is_real()) {
        tag = c.unit == 1 ? "+" : "-";
    } else if (c.field.is_dyadic()) {
        tag = std::to_string(c.representative());
    } else {
        if (c.val_parity) tag = std::to_string(c.field.prime());
        if (c.unit == 1) tag += "u";
        if (tag.empty()) tag = "1";
    }
    return to_string(c.field) + "|" + tag;
}

LocalField parse_field(std::string_view text) {
    if (text == "R") return LocalField::real();
    if (text.rfind("Qp:", 0) == 0) {
        long long p = 0;
        auto body = text.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size())
            throw std::invalid_argument("bad field spec: " + std::string(text));
        return LocalField::padic(p);
    }
    throw std::invalid_argument("bad field spec: " + std::string(text));
}

SquareClass parse_square_class(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw std::invalid_argument("bad class literal: " + std::string(text));
    LocalField field = parse_field(text.substr(0, bar));
    std::string_view tag = text.substr(bar + 1);
    if (tag.empty()) throw std::invalid_argument("bad class literal: " + std::string(text));
    if (field.is_real()) {
        if (tag == "+") return square_class(field, 1);
        if (tag == "-") return square_class(field, -1);
        throw std::invalid_argument("bad real class tag: " + std::string(tag));
    }
    bool with_u = tag.back() == 'u';
    if (with_u) tag.remove_suffix(1);
    long long n = 1;
    if (!tag.empty()) {
        auto [ptr, ec] = std::from_chars(tag.data(), tag.data() + tag.size(), n);
        if (ec != std::errc() || ptr != tag.data() + tag.size() || n == 0)
            throw std::invalid_argument("bad class tag: " + std::string(tag));
    }
    if (with_u && field.is_dyadic()) throw std::invalid_argument("tag 'u' is ambiguous over Q2");
    SquareClass c = square_class(field, n);
    if (with_u) c = class_mul(c, square_class(field, field.nonresidue()));
    return c;
}

}  // namespace sympair
