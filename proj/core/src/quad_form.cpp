#include "sympair/quad_form.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace sympair {

namespace {

void require_same_field(const LocalField& a, const LocalField& b) {
    if (!(a == b)) throw std::invalid_argument("forms live over different fields");
}

SquareClass minus_one(const LocalField& field) { return square_class(field, -1); }

// invariants of the form left after splitting one hyperbolic plane off
QuadInvariants strip_plane(const QuadInvariants& inv) {
    QuadInvariants out = inv;
    out.rank -= 2;
    out.det = class_mul(inv.det, minus_one(inv.field));
    out.hasse = inv.hasse * hilbert(minus_one(inv.field), out.det);
    return out;
}

}  // namespace

QuadForm quad_form_classes(const LocalField& field, std::vector<SquareClass> diag) {
    for (const SquareClass& c : diag)
        if (!(c.field == field)) throw std::invalid_argument("diagonal entry over the wrong field");
    return QuadForm{field, std::move(diag)};
}

QuadForm quad_form(const LocalField& field, const std::vector<long long>& entries) {
    std::vector<SquareClass> diag;
    diag.reserve(entries.size());
    for (long long e : entries) diag.push_back(square_class(field, e));
    return QuadForm{field, std::move(diag)};
}

bool QuadInvariants::operator==(const QuadInvariants& o) const {
    if (!(field == o.field) || rank != o.rank) return false;
    if (field.is_real()) return pos == o.pos && neg == o.neg;
    return det == o.det && hasse == o.hasse;
}

QuadInvariants real_invariants(int pos, int neg) {
    if (pos < 0 || neg < 0) throw std::invalid_argument("negative signature entry");
    QuadInvariants inv;
    inv.field = LocalField::real();
    inv.rank = pos + neg;
    inv.pos = pos;
    inv.neg = neg;
    inv.det = square_class(inv.field, neg % 2 ? -1 : 1);
    inv.hasse = Sign((neg * (neg - 1) / 2) % 2 ? -1 : 1);
    return inv;
}

QuadInvariants padic_invariants(const LocalField& field, int rank, const SquareClass& det, Sign hasse) {
    if (!field.is_padic()) throw std::invalid_argument("padic_invariants needs a p-adic field");
    if (!(det.field == field)) throw std::invalid_argument("det over the wrong field");
    if (!invariants_realizable(field, rank, det, hasse))
        throw std::invalid_argument("no form carries these invariants");
    QuadInvariants inv;
    inv.field = field;
    inv.rank = rank;
    inv.det = det;
    inv.hasse = hasse;
    return inv;
}

bool invariants_realizable(const LocalField& field, int rank, const SquareClass& det, Sign hasse) {
    if (rank < 0) return false;
    if (rank == 0) return det.trivial() && hasse.is_plus();
    if (rank == 1) return hasse.is_plus();
    if (rank == 2) return !(det == square_class(field, -1) && !hasse.is_plus());
    return true;
}

QuadInvariants invariants(const QuadForm& b) {
    if (b.field.is_real()) {
        int pos = 0, neg = 0;
        for (const SquareClass& c : b.diag) (c.unit == 1 ? pos : neg)++;
        return real_invariants(pos, neg);
    }
    SquareClass det = square_class(b.field, 1);
    Sign hasse = Sign::plus();
    for (size_t i = 0; i < b.diag.size(); ++i) {
        det = class_mul(det, b.diag[i]);
        for (size_t j = i + 1; j < b.diag.size(); ++j) hasse = hasse * hilbert(b.diag[i], b.diag[j]);
    }
    return padic_invariants(b.field, b.rank(), det, hasse);
}

bool equivalent(const QuadForm& b, const QuadForm& c) {
    require_same_field(b.field, c.field);
    return invariants(b) == invariants(c);
}

bool equivalent(const QuadInvariants& b, const QuadInvariants& c) {
    require_same_field(b.field, c.field);
    return b == c;
}

QuadForm direct_sum(const QuadForm& b, const QuadForm& c) {
    require_same_field(b.field, c.field);
    QuadForm out = b;
    out.diag.insert(out.diag.end(), c.diag.begin(), c.diag.end());
    return out;
}

QuadInvariants direct_sum(const QuadInvariants& b, const QuadInvariants& c) {
    require_same_field(b.field, c.field);
    if (b.field.is_real()) return real_invariants(b.pos + c.pos, b.neg + c.neg);
    return padic_invariants(b.field, b.rank + c.rank, class_mul(b.det, c.det),
                            b.hasse * c.hasse * hilbert(b.det, c.det));
}

QuadForm hyperbolic(const LocalField& field, int k) {
    if (k < 0) throw std::invalid_argument("negative hyperbolic rank");
    std::vector<SquareClass> diag;
    for (int i = 0; i < k; ++i) {
        diag.push_back(square_class(field, 1));
        diag.push_back(square_class(field, -1));
    }
    return QuadForm{field, std::move(diag)};
}

bool is_isotropic(const QuadForm& b) { return is_isotropic(invariants(b)); }

bool is_isotropic(const QuadInvariants& inv) {
    if (inv.rank < 1) throw std::invalid_argument("isotropy of the rank-0 form");
    if (inv.field.is_real()) return inv.pos >= 1 && inv.neg >= 1;
    SquareClass m1 = minus_one(inv.field);
    switch (inv.rank) {
        case 1: return false;
        case 2: return inv.det == m1;
        case 3: return inv.hasse == hilbert(m1, class_mul(m1, inv.det));
        case 4: return !(inv.det.trivial() && inv.hasse == Sign::minus() * hilbert(m1, m1));
        default: return true;
    }
}

int mu(const QuadForm& b) { return mu(invariants(b)); }

int mu(const QuadInvariants& inv) { return witt_decompose(inv).index; }

WittDecomposition witt_decompose(const QuadForm& b) { return witt_decompose(invariants(b)); }

WittDecomposition witt_decompose(const QuadInvariants& inv) {
    if (inv.field.is_real()) {
        int k = std::min(inv.pos, inv.neg);
        return WittDecomposition{k, real_invariants(inv.pos - k, inv.neg - k)};
    }
    QuadInvariants cur = inv;
    int k = 0;
    while (cur.rank >= 1 && is_isotropic(cur)) {
        cur = strip_plane(cur);
        ++k;
    }
    return WittDecomposition{k, cur};
}

bool represents(const QuadForm& b, const SquareClass& x) {
    if (b.rank() < 1) throw std::invalid_argument("the rank-0 form represents nothing");
    if (!(x.field == b.field)) throw std::invalid_argument("scalar over the wrong field");
    QuadForm probe = b;
    probe.diag.push_back(class_mul(x, minus_one(b.field)));
    return is_isotropic(probe);
}

std::vector<SquareClass> rep_set(const QuadForm& b) {
    std::vector<SquareClass> out;
    for (const SquareClass& x : enumerate_classes(b.field))
        if (represents(b, x)) out.push_back(x);
    return out;
}

bool is_subform(const QuadForm& c, const QuadForm& b) { return is_subform(invariants(c), invariants(b)); }

bool is_subform(const QuadInvariants& c, const QuadInvariants& b) {
    require_same_field(c.field, b.field);
    if (c.field.is_real()) return c.pos <= b.pos && c.neg <= b.neg;
    if (c.rank > b.rank) return false;
    if (c.rank == b.rank) return c == b;
    SquareClass d = class_mul(b.det, c.det);
    Sign h = hilbert(c.det, class_mul(b.det, minus_one(b.field))) * b.hasse * c.hasse;
    return invariants_realizable(b.field, b.rank - c.rank, d, h);
}

QuadForm scale(const QuadForm& b, const SquareClass& lambda) {
    if (!(lambda.field == b.field)) throw std::invalid_argument("scalar over the wrong field");
    QuadForm out = b;
    for (SquareClass& c : out.diag) c = class_mul(c, lambda);
    return out;
}

std::vector<QuadForm> all_diagonal_forms(const LocalField& field, int rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    std::vector<QuadForm> out;
    std::vector<SquareClass> classes = enumerate_classes(field);
    std::vector<int> idx(rank, 0);
    while (true) {
        std::vector<SquareClass> diag;
        diag.reserve(rank);
        for (int i : idx) diag.push_back(classes[i]);
        out.push_back(QuadForm{field, std::move(diag)});
        int pos = rank - 1;
        while (pos >= 0 && idx[pos] + 1 == static_cast<int>(classes.size())) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return out;
}

std::vector<QuadForm> diagonalizations_of(const QuadInvariants& inv) {
    std::vector<QuadForm> out;
    for (QuadForm& b : all_diagonal_forms(inv.field, inv.rank))
        if (invariants(b) == inv) out.push_back(std::move(b));
    return out;
}

QuadForm canonical_form(const QuadInvariants& inv) {
    if (inv.field.is_real()) {
        std::vector<SquareClass> diag;
        for (int i = 0; i < inv.pos; ++i) diag.push_back(square_class(inv.field, 1));
        for (int i = 0; i < inv.neg; ++i) diag.push_back(square_class(inv.field, -1));
        return QuadForm{inv.field, std::move(diag)};
    }
    if (!invariants_realizable(inv.field, inv.rank, inv.det, inv.hasse))
        throw std::invalid_argument("invariants are not realizable");
    if (inv.rank == 0) return QuadForm{inv.field, {}};
    std::vector<SquareClass> classes = enumerate_classes(inv.field);
    // a 1-padded prefix leaves det and hasse to the last three entries
    int tail = std::min(inv.rank, 3);
    std::vector<SquareClass> prefix(inv.rank - tail, classes[0]);
    std::vector<int> idx(tail, 0);
    while (true) {
        std::vector<SquareClass> diag = prefix;
        for (int i : idx) diag.push_back(classes[i]);
        QuadForm b{inv.field, std::move(diag)};
        if (invariants(b) == inv) return b;
        int pos = tail - 1;
        while (pos >= 0 && idx[pos] + 1 == static_cast<int>(classes.size())) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    throw std::logic_error("no diagonal realizes the given invariants");
}

std::vector<QuadInvariants> enumerate_invariants(const LocalField& field, int rank) {
    std::vector<QuadInvariants> out;
    if (field.is_real()) {
        for (int pos = rank; pos >= 0; --pos) out.push_back(real_invariants(pos, rank - pos));
        return out;
    }
    for (const SquareClass& det : enumerate_classes(field))
        for (Sign h : {Sign::plus(), Sign::minus()})
            if (invariants_realizable(field, rank, det, h))
                out.push_back(padic_invariants(field, rank, det, h));
    return out;
}

std::string to_string(const QuadForm& b) {
    std::string s = "qf(" + to_string(b.field) + ")[";
    for (size_t i = 0; i < b.diag.size(); ++i) {
        if (i) s += ",";
        const SquareClass& c = b.diag[i];
        if (b.field.is_real()) {
            s += c.unit == 1 ? "+" : "-";
        } else if (b.field.is_dyadic()) {
            s += std::to_string(c.representative());
        } else {
            std::string tag;
            if (c.unit == 1) tag = "u";
            if (c.val_parity) tag += "p";
            s += tag.empty() ? "1" : tag;
        }
    }
    return s + "]";
}

namespace {

SquareClass parse_form_entry(const LocalField& field, std::string_view tok) {
    if (tok.empty()) throw std::invalid_argument("empty form entry");
    if (field.is_real()) {
        if (tok == "+" || tok == "+1" || tok == "1") return square_class(field, 1);
        if (tok == "-" || tok == "-1") return square_class(field, -1);
    }
    SquareClass c = square_class(field, 1);
    bool neg = false;
    if (tok.front() == '-') { neg = true; tok.remove_prefix(1); }
    bool has_p = false, has_u = false;
    while (!tok.empty() && (tok.back() == 'u' || tok.back() == 'p')) {
        (tok.back() == 'u' ? has_u : has_p) = true;
        tok.remove_suffix(1);
    }
    long long n = 1;
    if (!tok.empty()) {
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || n == 0)
            throw std::invalid_argument("bad form entry");
    }
    c = square_class(field, neg ? -n : n);
    if (has_p) c = class_mul(c, square_class(field, field.prime()));
    if (has_u) c = class_mul(c, square_class(field, field.nonresidue()));
    return c;
}

}  // namespace

QuadForm parse_quad_form(std::string_view text) {
    if (text.rfind("qf(", 0) != 0) throw std::invalid_argument("bad form literal: " + std::string(text));
    auto close = text.find(')');
    auto open = text.find('[', close);
    if (close == std::string_view::npos || open == std::string_view::npos || text.back() != ']')
        throw std::invalid_argument("bad form literal: " + std::string(text));
    LocalField field = parse_field(text.substr(3, close - 3));
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::vector<SquareClass> diag;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        diag.push_back(parse_form_entry(field, tok));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return QuadForm{field, std::move(diag)};
}

}  // namespace sympair
