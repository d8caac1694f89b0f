#include "sympair/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace sympair {

namespace {

__int128 pow_big(long long b, int e) {
    __int128 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int val_p(long long x, long long p) {
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

long long strip_square_p_part(long long x, long long p) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
}

long long mod_pos(long long x, long long m) { return ((x % m) + m) % m; }

std::vector<char> squares_mod(long long m) {
    std::vector<char> sq(m, 0);
    for (long long z = 0; z < m; ++z) sq[z * z % m] = 1;
    return sq;
}

}  // namespace

SearchBudget conic_budget(const LocalField& field, long long a, long long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    if (field.is_real()) return SearchBudget{0, 0};
    long long p = field.prime();
    a = strip_square_p_part(a, p);
    b = strip_square_p_part(b, p);
    SearchBudget out;
    out.modulus_exponent = val_p(4 * (a < 0 ? -a : a) * (b < 0 ? -b : b), p) + 3;
    return out;
}

SearchBudget isotropy_budget(const QuadForm& b) {
    if (!b.field.is_padic()) throw std::invalid_argument("isotropy oracle is p-adic only");
    int max_val = 0;
    for (const SquareClass& c : b.diag) max_val = std::max(max_val, c.val_parity);
    SearchBudget out;
    out.modulus_exponent = 2 * ((b.field.prime() == 2 ? 1 : 0) + max_val) + 3;
    return out;
}

Sign hilbert_oracle(const LocalField& field, long long a, long long b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    if (field.is_real()) return (a < 0 && b < 0) ? Sign::minus() : Sign::plus();

    long long p = field.prime();
    a = strip_square_p_part(a, p);
    b = strip_square_p_part(b, p);
    SearchBudget budget = conic_budget(field, a, b);
    int n = budget.modulus_exponent;
    if (3 * pow_big(p, n) > budget.max_candidates) throw std::runtime_error("conic search budget exceeded");
    long long m = static_cast<long long>(pow_big(p, n));
    long long am = mod_pos(a, m), bm = mod_pos(b, m);
    std::vector<char> sq = squares_mod(m);

    // Any primitive zero of ax^2 + by^2 - z^2 mod p^n (n >= 2) has x or y a
    // unit, and unit scaling normalizes that coordinate to 1.
    for (long long y = 0; y < m; ++y)
        if (sq[(am + bm % m * (y * y % m)) % m]) return Sign::plus();
    for (long long x = 0; x < m; ++x)
        if (sq[(bm + am % m * (x * x % m)) % m]) return Sign::plus();
    return Sign::minus();
}

bool isotropy_oracle(const QuadForm& b) {
    if (!b.field.is_padic()) throw std::invalid_argument("isotropy oracle is p-adic only");
    if (b.rank() < 1 || b.rank() > 6) throw std::invalid_argument("isotropy oracle handles ranks 1..6");
    long long p = b.field.prime();
    std::vector<long long> entries;
    for (const SquareClass& c : b.diag) entries.push_back(c.representative());
    SearchBudget budget = isotropy_budget(b);
    int n = budget.modulus_exponent;
    __int128 work = 2 * pow_big(p, n) * pow_big(p, n) * b.rank();
    if (work > budget.max_candidates) throw std::runtime_error("isotropy search budget exceeded");
    long long m = static_cast<long long>(pow_big(p, n));

    // reachable[0][v]: a_1 x_1^2 + ... = v with all coordinates divisible by p
    // reachable[1][v]: same with at least one unit coordinate
    std::vector<char> reach[2];
    reach[0].assign(m, 0);
    reach[1].assign(m, 0);
    reach[0][0] = 1;
    for (long long a : entries) {
        long long am = mod_pos(a, m);
        std::vector<char> next[2];
        next[0].assign(m, 0);
        next[1].assign(m, 0);
        for (long long x = 0; x < m; ++x) {
            long long term = am * (x * x % m) % m;
            int unit = x % p != 0;
            for (int was = 0; was < 2; ++was) {
                int now = std::max(was, unit);
                const std::vector<char>& src = reach[was];
                std::vector<char>& dst = next[now];
                if (term == 0) {
                    for (long long v = 0; v < m; ++v) dst[v] |= src[v];
                } else {
                    for (long long v = 0; v < m; ++v)
                        if (src[v]) dst[(v + term) % m] = 1;
                }
            }
        }
        reach[0] = std::move(next[0]);
        reach[1] = std::move(next[1]);
    }
    return reach[1][0];
}

bool subform_oracle(const QuadForm& c, const QuadForm& b) {
    if (!(c.field == b.field)) throw std::invalid_argument("forms live over different fields");
    if (c.rank() > b.rank()) return false;
    int diff = b.rank() - c.rank();
    if (diff > 4) throw std::invalid_argument("subform oracle handles complement ranks <= 4");
    for (const QuadForm& d : all_diagonal_forms(b.field, diff))
        if (equivalent(direct_sum(c, d), b)) return true;
    return false;
}

// ---- dimension formula ------------------------------------------------------

namespace {

std::vector<Fraction> poly_derivative(const std::vector<Fraction>& p) {
    int deg = static_cast<int>(p.size()) - 1;
    std::vector<Fraction> d;
    for (int i = 0; i < deg; ++i) d.push_back(p[i] * Fraction(deg - i));
    return d;
}

// gcd degree over integer coefficient vectors (highest degree first), with
// content stripping after every elimination so coefficients stay small
using BigInt = __int128;

BigInt big_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { BigInt t = a % b; a = b; b = t; }
    return a;
}

void strip_poly(std::vector<BigInt>& p) {
    size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + lead);
    BigInt content = 0;
    for (BigInt c : p) content = big_gcd(content, c);
    if (content > 1)
        for (BigInt& c : p) c /= content;
}

std::vector<BigInt> clear_denominators(const std::vector<Fraction>& p) {
    BigInt lcm = 1;
    for (const Fraction& c : p) lcm = lcm / big_gcd(lcm, c.den) * c.den;
    std::vector<BigInt> out;
    out.reserve(p.size());
    for (const Fraction& c : p) out.push_back(BigInt(c.num) * (lcm / c.den));
    strip_poly(out);
    return out;
}

int poly_gcd_degree(const std::vector<Fraction>& pa, const std::vector<Fraction>& pb) {
    std::vector<BigInt> a = clear_denominators(pa), b = clear_denominators(pb);
    while (!a.empty() && !b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        BigInt la = a[0], lb = b[0];
        for (BigInt& c : a) c *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[j] -= la * b[j];
        strip_poly(a);
    }
    const std::vector<BigInt>& g = a.empty() ? b : a;
    return static_cast<int>(g.size()) - 1;
}

// monic minimal polynomial (highest degree first) through the first Krylov
// dependency among I, A, A^2, ... in the n^2-dimensional matrix space
std::vector<Fraction> min_poly(const RatMat& a) {
    int n = a.rows();
    struct Row {
        std::vector<Fraction> vec;    // echelon row, normalized to leading 1
        std::vector<Fraction> combo;  // its expression in the original powers
        int lead = 0;
    };
    std::vector<Row> basis;
    RatMat power = RatMat::identity(n);
    for (int k = 0; k <= n; ++k) {
        Row row;
        row.vec.resize(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) row.vec[static_cast<size_t>(i) * n + j] = power.at(i, j);
        row.combo.assign(n + 1, Fraction());
        row.combo[k] = 1;
        for (const Row& b : basis) {
            Fraction factor = row.vec[b.lead];
            if (factor.is_zero()) continue;
            for (int t = 0; t < n * n; ++t) row.vec[t] = row.vec[t] - factor * b.vec[t];
            for (int t = 0; t <= n; ++t) row.combo[t] = row.combo[t] - factor * b.combo[t];
        }
        int lead = -1;
        for (int t = 0; t < n * n && lead < 0; ++t)
            if (!row.vec[t].is_zero()) lead = t;
        if (lead < 0) {
            std::vector<Fraction> m(k + 1);  // combo is monic at index k by construction
            for (int t = 0; t <= k; ++t) m[k - t] = row.combo[t];
            return m;
        }
        Fraction leadv = row.vec[lead];
        for (int t = 0; t < n * n; ++t) row.vec[t] = row.vec[t] / leadv;
        for (int t = 0; t <= n; ++t) row.combo[t] = row.combo[t] / leadv;
        row.lead = lead;
        basis.push_back(std::move(row));
        if (k < n) power = power * a;
    }
    throw std::logic_error("no annihilating polynomial of degree <= n");
}

bool is_semisimple(const RatMat& r) {
    std::vector<Fraction> m = min_poly(r);
    return poly_gcd_degree(m, poly_derivative(m)) == 0;
}

}  // namespace

bool dimension_formula_check(const RatMat& r, const RatMat& h) {
    int n = r.rows();
    if (r.cols() != n || h.rows() != n || h.cols() != n)
        throw std::invalid_argument("square matrices of equal size required");
    RatMat id = RatMat::identity(n);
    if (!(h * h == id)) throw std::invalid_argument("h is not an involution");
    if (!(((h * r) * h) * r == id)) throw std::invalid_argument("h r h^-1 != r^-1");
    if (RatMat(r).rank() != n) throw std::invalid_argument("r is not invertible");
    if (!is_semisimple(r)) throw std::invalid_argument("r is not semisimple");

    RatMat r_minus = r - id, r_plus = r + id;
    RatMat h_minus = h - id;
    RatMat rh_minus = r * h - id;

    int dim_v1_r = r_minus.kernel_dim();
    int dim_vm1_r = r_plus.kernel_dim();
    int ab_total = n - dim_v1_r - dim_vm1_r;  // sum over type A and B primary spaces
    if (ab_total % 2 != 0) return false;

    int dim_v1_h = h_minus.kernel_dim();
    int dim_v1_rh = rh_minus.kernel_dim();

    int v1r_v1h = kernel_intersection_dim(r_minus, h_minus);
    int vm1r_v1h = kernel_intersection_dim(r_plus, h_minus);
    int vm1r_vm1h = kernel_intersection_dim(r_plus, h + id);

    bool first = dim_v1_h == ab_total / 2 + v1r_v1h + vm1r_v1h;
    bool second = dim_v1_rh == ab_total / 2 + v1r_v1h + vm1r_vm1h;
    return first && second;
}

namespace {

struct Block {
    RatMat r, h;
};

// type A, rational pair (lambda, lambda^-1)
Block block_a_rational(long long lambda) {
    Block b;
    b.r = RatMat(2, 2);
    b.r.at(0, 0) = Fraction(lambda);
    b.r.at(1, 1) = Fraction(1, lambda);
    b.h = RatMat::from_rows({{0, 1}, {1, 0}});
    return b;
}

// type A, lambda a root of x^2 - x - 1 (lambda^-1 generates a different
// prime of Q[x]); r = diag(C, C^-1), h swaps the two copies
Block block_a_quadratic() {
    Block b;
    b.r = RatMat(4, 4);
    // companion of x^2 - x - 1 and its inverse
    b.r.at(0, 1) = 1;
    b.r.at(1, 0) = 1;
    b.r.at(1, 1) = 1;
    b.r.at(2, 3) = 1;
    b.r.at(3, 2) = 1;
    b.r.at(2, 2) = -1;
    RatMat h(4, 4);
    h.at(0, 2) = 1;
    h.at(1, 3) = 1;
    h.at(2, 0) = 1;
    h.at(3, 1) = 1;
    b.h = h;
    return b;
}

// type B: lambda and lambda^-1 conjugate roots of x^2 - 3x + 1; in the basis
// {1, lambda} of Q[lambda], r is multiplication by lambda and h the Galois
// conjugation lambda -> lambda^-1 = 3 - lambda
Block block_b() {
    Block b;
    b.r = RatMat::from_rows({{0, -1}, {1, 3}});
    b.h = RatMat::from_rows({{1, 3}, {0, -1}});
    return b;
}

// type C: r = sign * I_k with a commuting involution
Block block_c(int sign, int k, bool swap_h) {
    Block b;
    b.r = RatMat::identity(k).scaled(Fraction(sign));
    if (swap_h && k >= 2) {
        RatMat h(k, k);
        h.at(0, 1) = 1;
        h.at(1, 0) = 1;
        for (int i = 2; i < k; ++i) h.at(i, i) = 1;
        b.h = h;
    } else {
        RatMat h = RatMat::identity(k);
        if (k >= 1) h.at(k - 1, k - 1) = -1;
        b.h = h;
    }
    return b;
}

Block combine(const std::vector<Block>& blocks) {
    std::vector<RatMat> rs, hs;
    for (const Block& b : blocks) {
        rs.push_back(b.r);
        hs.push_back(b.h);
    }
    return Block{block_diag(rs), block_diag(hs)};
}

}  // namespace

std::vector<std::pair<RatMat, RatMat>> dimension_formula_suite(int max_dim) {
    std::vector<Block> atoms = {
        block_a_rational(2),       // dim 2
        block_a_rational(-3),      // dim 2
        block_a_quadratic(),       // dim 4
        block_b(),                 // dim 2
        block_c(1, 2, false),      // dim 2
        block_c(1, 2, true),       // dim 2
        block_c(-1, 2, false),     // dim 2
        block_c(-1, 1, false),     // dim 1
        block_c(1, 1, false),      // dim 1
    };
    std::vector<std::pair<RatMat, RatMat>> suite;
    size_t k = atoms.size();
    // singles, pairs and triples of atoms within the dimension budget
    for (size_t i = 0; i < k; ++i) {
        if (atoms[i].r.rows() > max_dim) continue;
        Block b = atoms[i];
        suite.emplace_back(b.r, b.h);
        for (size_t j = i; j < k; ++j) {
            int d2 = atoms[i].r.rows() + atoms[j].r.rows();
            if (d2 > max_dim) continue;
            Block b2 = combine({atoms[i], atoms[j]});
            suite.emplace_back(b2.r, b2.h);
            for (size_t l = j; l < k; ++l) {
                if (d2 + atoms[l].r.rows() > max_dim) continue;
                Block b3 = combine({atoms[i], atoms[j], atoms[l]});
                suite.emplace_back(b3.r, b3.h);
            }
        }
    }
    // one everything-at-once mix when it fits
    if (max_dim >= 8) {
        Block full = combine({block_a_rational(2), block_b(), block_c(1, 2, true), block_c(-1, 2, false)});
        suite.emplace_back(full.r, full.h);
    }
    return suite;
}

}  // namespace sympair
