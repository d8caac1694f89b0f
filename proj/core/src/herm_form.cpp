#include "sympair/herm_form.hpp"

#include <stdexcept>

namespace sympair {

namespace {

void require_same_ext(const HermForm& a, const HermForm& b) {
    if (!(a.ext == b.ext)) throw std::invalid_argument("Hermitian forms over different extensions");
}

}  // namespace

QuadExt quad_ext(const LocalField& base, const SquareClass& d) {
    if (!(d.field == base)) throw std::invalid_argument("d over the wrong field");
    if (d.trivial()) throw std::invalid_argument("d is a square: not a quadratic extension");
    if (base.is_real() && d.unit != -1) throw std::invalid_argument("the only real quadratic extension is C");
    return QuadExt{base, d};
}

QuadExt complex_over_real() {
    LocalField r = LocalField::real();
    return QuadExt{r, square_class(r, -1)};
}

bool minus_one_is_norm(const QuadExt& ext) {
    return is_norm(square_class(ext.base, -1), ext.d);
}

HermForm herm_form(const QuadExt& ext, int rank, bool det_is_norm) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    if (ext.base.is_real()) throw std::invalid_argument("real Hermitian forms carry a signature");
    if (rank == 0 && !det_is_norm) throw std::invalid_argument("rank 0 forces the trivial det class");
    HermForm b;
    b.ext = ext;
    b.rank = rank;
    b.det_is_norm = det_is_norm;
    return b;
}

HermForm herm_form_real(int pos, int neg) {
    if (pos < 0 || neg < 0) throw std::invalid_argument("negative signature entry");
    HermForm b;
    b.ext = complex_over_real();
    b.rank = pos + neg;
    b.pos = pos;
    b.neg = neg;
    b.det_is_norm = neg % 2 == 0;
    return b;
}

bool herm_equivalent(const HermForm& b, const HermForm& c) {
    require_same_ext(b, c);
    if (b.rank != c.rank) return false;
    if (b.ext.base.is_real()) return b.pos == c.pos && b.neg == c.neg;
    return b.det_is_norm == c.det_is_norm;
}

int herm_mu(const HermForm& b) {
    if (b.ext.base.is_real()) return std::min(b.pos, b.neg);
    int rank = b.rank;
    bool det = b.det_is_norm;
    bool minus = minus_one_is_norm(b.ext);
    int k = 0;
    // the hyperbolic plane has det class -1; peel until the anisotropic core
    while (rank >= 3) {
        rank -= 2;
        det = det == minus;
        ++k;
    }
    if (rank == 2 && det == minus) ++k;
    return k;
}

bool herm_is_subform(const HermForm& c, const HermForm& b) {
    require_same_ext(c, b);
    if (c.ext.base.is_real()) return c.pos <= b.pos && c.neg <= b.neg;
    if (c.rank > b.rank) return false;
    if (c.rank == b.rank) return herm_equivalent(c, b);
    return true;  // both det classes occur in every rank >= 1, so a complement always exists
}

HermForm herm_direct_sum(const HermForm& b, const HermForm& c) {
    require_same_ext(b, c);
    if (b.ext.base.is_real()) return herm_form_real(b.pos + c.pos, b.neg + c.neg);
    return herm_form(b.ext, b.rank + c.rank, b.det_is_norm == c.det_is_norm);
}

std::string to_string(const QuadExt& ext) {
    if (ext.base.is_real()) return "C/R";
    return to_string(ext.base) + "(sqrt " + to_string(ext.d) + ")";
}

std::string to_string(const HermForm& b) {
    if (b.ext.base.is_real())
        return "hf(C/R)[" + std::to_string(b.pos) + "," + std::to_string(b.neg) + "]";
    const SquareClass& d = b.ext.d;
    std::string tag;
    if (b.ext.base.is_dyadic()) {
        tag = std::to_string(d.representative());
    } else {
        if (d.val_parity) tag = "p";
        if (d.unit == 1) tag += "u";
        if (tag.empty()) tag = "1";
    }
    return "hf(" + to_string(b.ext.base) + ",d=" + tag + ")[rank=" + std::to_string(b.rank) +
           ",det=" + (b.det_is_norm ? "norm" : "nonnorm") + "]";
}

namespace {

int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("bad integer");
    int sign = 1;
    size_t i = 0;
    if (s[0] == '-') { sign = -1; i = 1; }
    int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer");
        v = v * 10 + (s[i] - '0');
    }
    return sign * v;
}

}  // namespace

QuadExt parse_quad_ext(std::string_view text) {
    if (text == "C/R") return complex_over_real();
    // Qp:3(sqrt Qp:3|p) or the bare d-tag form Qp:3,d=p used inside hf(...)
    auto comma = text.find(",d=");
    if (comma != std::string_view::npos) {
        LocalField base = parse_field(text.substr(0, comma));
        std::string_view tag = text.substr(comma + 3);
        bool has_u = false, has_p = false;
        while (!tag.empty() && (tag.back() == 'u' || tag.back() == 'p')) {
            (tag.back() == 'u' ? has_u : has_p) = true;
            tag.remove_suffix(1);
        }
        long long n = tag.empty() ? 1 : parse_int(tag);
        SquareClass d = square_class(base, n);
        if (has_p) d = class_mul(d, square_class(base, base.prime()));
        if (has_u) d = class_mul(d, square_class(base, base.nonresidue()));
        return quad_ext(base, d);
    }
    throw std::invalid_argument("bad extension literal: " + std::string(text));
}

HermForm parse_herm_form(std::string_view text) {
    if (text.rfind("hf(", 0) != 0 || text.back() != ']')
        throw std::invalid_argument("bad Hermitian literal: " + std::string(text));
    auto close = text.find(')');
    auto open = text.find('[', close);
    if (close == std::string_view::npos || open == std::string_view::npos)
        throw std::invalid_argument("bad Hermitian literal: " + std::string(text));
    std::string_view head = text.substr(3, close - 3);
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    if (head == "C/R") {
        auto comma = body.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("real Hermitian literal needs [pos,neg]");
        return herm_form_real(parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)));
    }
    QuadExt ext = parse_quad_ext(head);
    int rank = -1;
    int det = -1;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("bad Hermitian field: " + std::string(item));
        std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "rank") rank = parse_int(val);
        else if (key == "det") det = val == "norm" ? 1 : val == "nonnorm" ? 0 : -1;
        else throw std::invalid_argument("bad Hermitian field: " + std::string(item));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    if (rank < 0 || det < 0) throw std::invalid_argument("Hermitian literal needs rank= and det=");
    return herm_form(ext, rank, det == 1);
}

}  // namespace sympair
