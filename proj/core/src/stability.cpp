#include "sympair/stability.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace sympair {

namespace {

// citation tags; the README maps each tag to the statement it encodes
constexpr const char* kComplexStable = "rem:complex-pairs-stable";
constexpr const char* kGelfandUncovered = "rem:gelfand-uncovered";
constexpr const char* kGelfandImpliesP = "thm:gelfand-implies-pstable";

constexpr const char* kGLxGLStable = "thm:glxgl-stable";
constexpr const char* kGLxGLGelfand = "gp:glxgl-prior-work";
constexpr const char* kSLxGLDims = "cor:slxgl-dims";
constexpr const char* kSLxGLGelfand = "thm:slxgl-gelfand";
constexpr const char* kGLOverEStable = "thm:gl-over-e-stable";
constexpr const char* kGLOverEGelfand = "thm:gl-over-e-gelfand";
constexpr const char* kSLOverEReal = "thm:sl-over-e-real-stable";
constexpr const char* kSLOverENonarch = "thm:sl-over-e-nonarch-not-s-stable";
constexpr const char* kSLOverEGelfand = "thm:sl-over-e-gelfand";
constexpr const char* kGLBasechange = "thm:gl-basechange-stable";
constexpr const char* kGLBasechangeGelfand = "gp:gl-basechange-prior-work";
constexpr const char* kSLBasechangeParity = "thm:sl-basechange-parity";
constexpr const char* kSLBasechangeGelfand = "thm:sl-basechange-gelfand";
constexpr const char* kOReal = "thm:o-real";
constexpr const char* kORealGelfand = "thm:o-real-gelfand";
constexpr const char* kOStableA = "tbl:o-stable-A";
constexpr const char* kOPStableB = "tbl:o-pstable-B";
constexpr const char* kOSStableC = "tbl:o-sstable-C";
constexpr const char* kOPStableNote = "note:o-pstable-residual-char";
constexpr const char* kOGelfandNonarch = "thm:o-gelfand-nonarch";
constexpr const char* kOGelfandOpen = "rem:o-gelfand-open";
constexpr const char* kUReal = "thm:u-real";
constexpr const char* kURealGelfand = "thm:u-real-gelfand";
constexpr const char* kUStableD = "tbl:u-stable-D";
constexpr const char* kUSStableC = "tbl:u-sstable-C";
constexpr const char* kUGelfandNonarch = "thm:u-gelfand-nonarch";
constexpr const char* kGLOCriterion = "thm:gl-o-criterion";
constexpr const char* kGLUCriterion = "thm:gl-u-criterion";
constexpr const char* kCompactPair = "gp:compact-pair-classical";
constexpr const char* kAbelianPair = "gp:abelian-pair";
constexpr const char* kQuaternionUnstable = "thm:quaternion-unstable";
constexpr const char* kQuaternionPST = "ex:quaternion-no-parabolics";
constexpr const char* kQuaternionGelfand = "rem:quaternion-gelfand-open";

Tri tri(bool b) { return b ? Tri::yes : Tri::no; }

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool definite(const QuadInvariants& inv) { return inv.pos == 0 || inv.neg == 0; }
bool definite(const HermForm& b) { return b.pos == 0 || b.neg == 0; }

void require_padic_pair(const QuadForm& bp, const QuadForm& bm) {
    if (!(bp.field == bm.field)) throw std::invalid_argument("pair components over different fields");
    if (!bp.field.is_padic()) throw std::invalid_argument("non-Archimedean condition evaluated over R");
}

Verdict finish(Verdict v) {
    enforce_implication_chain(v);
    return v;
}

}  // namespace

std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        default: return "unknown";
    }
}

GroundField GroundField::padic(long long p) {
    LocalField::padic(p);  // primality check
    return {Kind::padic, p};
}

GroundField GroundField::of(const LocalField& f) {
    return f.is_real() ? real() : padic(f.prime());
}

LocalField GroundField::local() const {
    if (is_complex()) throw std::invalid_argument("no square-class arithmetic over C in scope");
    return is_real() ? LocalField::real() : LocalField::padic(p);
}

std::string to_string(const GroundField& f) {
    if (f.is_real()) return "R";
    if (f.is_complex()) return "C";
    return "Qp:" + std::to_string(f.p);
}

GroundField parse_ground_field(std::string_view text) {
    if (text == "C") return GroundField::complex();
    return GroundField::of(parse_field(text));
}

void enforce_implication_chain(const Verdict& v) {
    if (v.stable == Tri::yes && v.p_stable != Tri::yes)
        throw std::logic_error("implication chain broken: stable without p-stable");
    if (v.p_stable == Tri::yes && v.s_stable != Tri::yes)
        throw std::logic_error("implication chain broken: p-stable without s-stable");
    if (v.gelfand == Tri::yes && v.p_stable != Tri::yes)
        throw std::logic_error("implication chain broken: Gelfand without p-stable");
}

int orthogonal_rank(const QuadForm& bplus, const QuadForm& bminus) {
    if (!(bplus.field == bminus.field)) throw std::invalid_argument("pair components over different fields");
    return std::min({bplus.rank(), bminus.rank(), mu(direct_sum(bplus, bminus))});
}

int unitary_rank(const HermForm& bplus, const HermForm& bminus) {
    if (!(bplus.ext == bminus.ext)) throw std::invalid_argument("pair components over different extensions");
    return std::min({bplus.rank, bminus.rank, herm_mu(herm_direct_sum(bplus, bminus))});
}

bool sign_twin_exists(const QuadForm& bplus, const QuadForm& bminus) {
    require_padic_pair(bplus, bminus);
    if (bplus.rank() > 3 || bminus.rank() > 3)
        throw std::invalid_argument("sign-twin search is limited to ranks <= 3");
    SquareClass minus_one = square_class(bplus.field, -1);
    std::vector<QuadForm> dp = diagonalizations_of(invariants(bplus));
    std::vector<QuadForm> dm = diagonalizations_of(invariants(bminus));
    size_t m = std::min(bplus.diag.size(), bminus.diag.size());
    for (const QuadForm& a : dp)
        for (const QuadForm& b : dm) {
            bool match = true;
            for (size_t i = 0; i < m && match; ++i)
                match = b.diag[i] == a.diag[i] || b.diag[i] == class_mul(a.diag[i], minus_one);
            if (match) return true;
        }
    return false;
}

bool condition_A(const QuadForm& bplus, const QuadForm& bminus) {
    require_padic_pair(bplus, bminus);
    if (std::min(bplus.rank(), bminus.rank()) <= 1) return true;
    long long p = bplus.field.prime();
    int dim = bplus.rank() + bminus.rank();
    return p != 2 && dim <= 5 && mu(direct_sum(bplus, bminus)) <= 1 && mu(bplus) == 0 &&
           mu(bminus) == 0 && !sign_twin_exists(bplus, bminus);
}

bool condition_B(const QuadForm& bplus, const QuadForm& bminus) {
    require_padic_pair(bplus, bminus);
    if (std::min(bplus.rank(), bminus.rank()) <= 1) return true;
    int total_mu = mu(direct_sum(bplus, bminus));
    if (total_mu == 0) return true;
    long long p = bplus.field.prime();
    int dim = bplus.rank() + bminus.rank();
    return p != 2 && dim <= 5 && total_mu <= 1 && mu(bplus) == 0 && mu(bminus) == 0;
}

bool condition_C(const QuadForm& bplus, const QuadForm& bminus) {
    require_padic_pair(bplus, bminus);
    return orthogonal_rank(bplus, bminus) <= 1;
}

bool condition_C(const HermForm& bplus, const HermForm& bminus) {
    if (!bplus.ext.base.is_padic()) throw std::invalid_argument("non-Archimedean condition evaluated over R");
    return unitary_rank(bplus, bminus) <= 1;
}

bool condition_D(const HermForm& bplus, const HermForm& bminus) {
    if (!(bplus.ext == bminus.ext)) throw std::invalid_argument("pair components over different extensions");
    if (!bplus.ext.base.is_padic()) throw std::invalid_argument("non-Archimedean condition evaluated over R");
    return std::min(bplus.rank, bminus.rank) <= 1;
}

std::vector<SquareClass> quaternion_kernel(long long p) {
    if (p == 2 || !is_prime_ll(p)) throw std::invalid_argument("the obstruction needs an odd prime");
    LocalField f = LocalField::padic(p);
    SquareClass d = square_class(f, p);
    std::vector<SquareClass> kernel;
    for (const SquareClass& x : norm_group_mod_squares(d))
        if (is_norm(x, d)) kernel.push_back(x);
    return kernel;
}

int quaternion_obstruction(long long p) { return static_cast<int>(quaternion_kernel(p).size()); }

// ---- classify ----------------------------------------------------------------

namespace {

Verdict classify_glxgl(const GLxGLPair& s) {
    if (s.dim_plus < 0 || s.dim_minus < 0 || s.dim_plus + s.dim_minus < 1)
        throw std::invalid_argument("GLxGL needs nonnegative dims with positive total");
    Verdict v;
    v.stable = v.s_stable = v.p_stable = Tri::yes;
    v.citations.push_back(s.field.is_complex() ? kComplexStable : kGLxGLStable);
    if (s.field.is_complex()) {
        v.gelfand = Tri::unknown;
        v.citations.push_back(kGelfandUncovered);
    } else {
        v.gelfand = Tri::yes;
        v.citations.push_back(kGLxGLGelfand);
    }
    return v;
}

Verdict classify_slxgl(const SLxGLPair& s) {
    if (s.dim_plus < 0 || s.dim_minus < 0 || s.dim_plus + s.dim_minus < 1)
        throw std::invalid_argument("SLxGL needs nonnegative dims with positive total");
    Verdict v;
    if (s.field.is_complex()) {
        v.stable = v.s_stable = v.p_stable = Tri::yes;
        v.gelfand = Tri::unknown;
        v.citations = {kComplexStable, kGelfandUncovered};
        return v;
    }
    bool split = s.dim_plus != s.dim_minus;
    v.stable = v.s_stable = v.p_stable = tri(split);
    v.gelfand = tri(split);
    v.citations = {kSLxGLDims, kSLxGLGelfand};
    return v;
}

Verdict classify_gl_over_e(const GLFOverEPair& s) {
    if (s.dim < 1) throw std::invalid_argument("dimension must be positive");
    Verdict v;
    v.stable = v.s_stable = v.p_stable = Tri::yes;
    v.gelfand = Tri::yes;
    v.citations = {kGLOverEStable, kGLOverEGelfand};
    return v;
}

Verdict classify_sl_over_e(const SLFOverEPair& s) {
    if (s.dim < 1) throw std::invalid_argument("dimension must be positive");
    Verdict v;
    if (s.ext.base.is_real()) {
        v.stable = v.s_stable = v.p_stable = Tri::yes;
        v.gelfand = Tri::yes;
        v.citations = {kSLOverEReal, kSLOverEGelfand};
    } else {
        v.stable = v.s_stable = v.p_stable = Tri::no;
        v.gelfand = Tri::no;
        v.citations = {kSLOverENonarch, kSLOverEGelfand, kGelfandImpliesP};
    }
    return v;
}

Verdict classify_gl_basechange(const GLBasechangePair& s) {
    if (s.dim < 1) throw std::invalid_argument("dimension must be positive");
    Verdict v;
    v.stable = v.s_stable = v.p_stable = Tri::yes;
    v.gelfand = Tri::yes;
    v.citations = {kGLBasechange, kGLBasechangeGelfand};
    return v;
}

Verdict classify_sl_basechange(const SLBasechangePair& s) {
    if (s.dim < 1) throw std::invalid_argument("dimension must be positive");
    bool odd = s.dim % 2 == 1;
    Verdict v;
    v.stable = v.s_stable = v.p_stable = tri(odd);
    v.gelfand = tri(odd);
    v.citations = {kSLBasechangeParity, kSLBasechangeGelfand};
    if (!odd) v.citations.push_back(kGelfandImpliesP);
    return v;
}

Verdict classify_o_pair(const OPair& s) {
    if (!(s.bplus.field == s.bminus.field)) throw std::invalid_argument("pair components over different fields");
    if (s.bplus.rank() + s.bminus.rank() < 1) throw std::invalid_argument("zero-rank total form");
    Verdict v;
    if (s.bplus.field.is_real()) {
        bool def = definite(invariants(s.bplus)) || definite(invariants(s.bminus));
        v.stable = v.s_stable = v.p_stable = tri(def);
        v.gelfand = tri(def);
        v.citations = {kOReal, kORealGelfand};
        if (!def) v.citations.push_back(kGelfandImpliesP);
        return v;
    }
    bool a = condition_A(s.bplus, s.bminus);
    bool b = condition_B(s.bplus, s.bminus);
    bool c = condition_C(s.bplus, s.bminus);
    v.stable = tri(a);
    v.p_stable = tri(b);
    v.s_stable = tri(c);
    v.citations = {kOStableA, kOPStableB, kOSStableC};
    {
        // the theorem's p-stability bullet omits the residual-characteristic
        // restriction that the compiled condition (B) carries; flag rows where
        // the two readings part ways (possible over Q2 only)
        int total_mu = mu(direct_sum(s.bplus, s.bminus));
        bool theorem_b = std::min(s.bplus.rank(), s.bminus.rank()) <= 1 || total_mu == 0 ||
                         (s.bplus.rank() + s.bminus.rank() <= 5 && total_mu == 1 && mu(s.bplus) == 0 &&
                          mu(s.bminus) == 0);
        if (theorem_b != b) v.citations.push_back(kOPStableNote);
    }
    if (a) {
        v.gelfand = Tri::yes;
        v.citations.push_back(kOGelfandNonarch);
    } else if (!b) {
        v.gelfand = Tri::no;
        v.citations.push_back(kGelfandImpliesP);
    } else {
        v.gelfand = Tri::unknown;
        v.citations.push_back(kOGelfandOpen);
    }
    return v;
}

Verdict classify_u_pair(const UPair& s) {
    if (!(s.bplus.ext == s.bminus.ext)) throw std::invalid_argument("pair components over different extensions");
    if (s.bplus.rank + s.bminus.rank < 1) throw std::invalid_argument("zero-rank total form");
    Verdict v;
    if (s.bplus.ext.base.is_real()) {
        bool def = definite(s.bplus) || definite(s.bminus);
        v.stable = v.s_stable = v.p_stable = tri(def);
        v.gelfand = tri(def);
        v.citations = {kUReal, kURealGelfand};
        if (!def) v.citations.push_back(kGelfandImpliesP);
        return v;
    }
    bool d = condition_D(s.bplus, s.bminus);
    bool c = condition_C(s.bplus, s.bminus);
    v.stable = v.p_stable = tri(d);
    v.s_stable = tri(c);
    v.gelfand = tri(d);
    v.citations = {kUStableD, kUSStableC, d ? kUGelfandNonarch : kGelfandImpliesP};
    return v;
}

Verdict classify_gl_o(const GLOPair& s) {
    if (s.b.rank() < 1) throw std::invalid_argument("zero-rank form");
    bool crit = s.b.field.is_real() ? definite(invariants(s.b)) : s.b.rank() == 1;
    Verdict v;
    v.stable = v.s_stable = v.p_stable = tri(crit);
    v.gelfand = tri(crit);
    v.citations = {kGLOCriterion};
    v.citations.push_back(crit ? (s.b.field.is_real() ? kCompactPair : kAbelianPair) : kGelfandImpliesP);
    return v;
}

Verdict classify_gl_u(const GLUPair& s) {
    if (s.b.rank < 1) throw std::invalid_argument("zero-rank form");
    bool crit = s.b.ext.base.is_real() ? definite(s.b) : s.b.rank == 1;
    Verdict v;
    v.stable = v.s_stable = v.p_stable = tri(crit);
    v.gelfand = tri(crit);
    v.citations = {kGLUCriterion};
    v.citations.push_back(crit ? (s.b.ext.base.is_real() ? kCompactPair : kAbelianPair) : kGelfandImpliesP);
    return v;
}

Verdict classify_quaternion(const QuaternionPair& s) {
    if (!is_prime_ll(s.p) || s.p % 4 != 3)
        throw std::invalid_argument("the quaternion family needs a prime p = 3 mod 4");
    Verdict v;
    v.stable = Tri::no;
    v.s_stable = Tri::yes;
    v.p_stable = Tri::yes;
    v.gelfand = Tri::unknown;
    v.citations = {kQuaternionUnstable, kQuaternionPST, kQuaternionGelfand};
    return v;
}

}  // namespace

Verdict classify(const PairSpec& spec) {
    Verdict v = std::visit(
        [](const auto& s) -> Verdict {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GLxGLPair>) return classify_glxgl(s);
            else if constexpr (std::is_same_v<T, SLxGLPair>) return classify_slxgl(s);
            else if constexpr (std::is_same_v<T, GLFOverEPair>) return classify_gl_over_e(s);
            else if constexpr (std::is_same_v<T, SLFOverEPair>) return classify_sl_over_e(s);
            else if constexpr (std::is_same_v<T, GLBasechangePair>) return classify_gl_basechange(s);
            else if constexpr (std::is_same_v<T, SLBasechangePair>) return classify_sl_basechange(s);
            else if constexpr (std::is_same_v<T, OPair>) return classify_o_pair(s);
            else if constexpr (std::is_same_v<T, UPair>) return classify_u_pair(s);
            else if constexpr (std::is_same_v<T, GLOPair>) return classify_gl_o(s);
            else if constexpr (std::is_same_v<T, GLUPair>) return classify_gl_u(s);
            else return classify_quaternion(s);
        },
        spec);
    return finish(std::move(v));
}

std::string family_tag(const PairSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GLxGLPair>) return "GLxGL";
            else if constexpr (std::is_same_v<T, SLxGLPair>) return "SLxGL";
            else if constexpr (std::is_same_v<T, GLFOverEPair>) return "GL_F_over_E";
            else if constexpr (std::is_same_v<T, SLFOverEPair>) return "SL_F_over_E";
            else if constexpr (std::is_same_v<T, GLBasechangePair>) return "GL_basechange";
            else if constexpr (std::is_same_v<T, SLBasechangePair>) return "SL_basechange";
            else if constexpr (std::is_same_v<T, OPair>) return "O";
            else if constexpr (std::is_same_v<T, UPair>) return "U";
            else if constexpr (std::is_same_v<T, GLOPair>) return "GL_O";
            else if constexpr (std::is_same_v<T, GLUPair>) return "GL_U";
            else return "quaternion";
        },
        spec);
}

std::string params_text(const PairSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, GLxGLPair> || std::is_same_v<T, SLxGLPair>)
                return "field=" + to_string(s.field) + " dims=" + std::to_string(s.dim_plus) + "," +
                       std::to_string(s.dim_minus);
            else if constexpr (std::is_same_v<T, GLFOverEPair> || std::is_same_v<T, SLFOverEPair> ||
                               std::is_same_v<T, GLBasechangePair> || std::is_same_v<T, SLBasechangePair>)
                return "ext=" + to_string(s.ext) + " dim=" + std::to_string(s.dim);
            else if constexpr (std::is_same_v<T, OPair>)
                return "B+=" + to_string(s.bplus) + " B-=" + to_string(s.bminus);
            else if constexpr (std::is_same_v<T, UPair>)
                return "B+=" + to_string(s.bplus) + " B-=" + to_string(s.bminus);
            else if constexpr (std::is_same_v<T, GLOPair>)
                return "B=" + to_string(s.b);
            else if constexpr (std::is_same_v<T, GLUPair>)
                return "B=" + to_string(s.b);
            else
                return "p=" + std::to_string(s.p);
        },
        spec);
}

// ---- sweeps ------------------------------------------------------------------

std::vector<Family> all_families() {
    return {Family::glxgl, Family::slxgl, Family::gl_f_over_e, Family::sl_f_over_e,
            Family::gl_basechange, Family::sl_basechange, Family::o_pair, Family::u_pair,
            Family::gl_o, Family::gl_u};
}

std::string to_string(Family f) {
    switch (f) {
        case Family::glxgl: return "GLxGL";
        case Family::slxgl: return "SLxGL";
        case Family::gl_f_over_e: return "GL_F_over_E";
        case Family::sl_f_over_e: return "SL_F_over_E";
        case Family::gl_basechange: return "GL_basechange";
        case Family::sl_basechange: return "SL_basechange";
        case Family::o_pair: return "O";
        case Family::u_pair: return "U";
        case Family::gl_o: return "GL_O";
        default: return "GL_U";
    }
}

Family parse_family(std::string_view tag) {
    for (Family f : all_families())
        if (to_string(f) == tag) return f;
    throw std::invalid_argument("unknown family tag: " + std::string(tag));
}

namespace {

SquareClass default_ext_class(const LocalField& f) {
    if (f.is_real()) return square_class(f, -1);
    if (f.is_dyadic()) return square_class(f, 5);  // the unramified extension of Q2
    return square_class(f, f.nonresidue());
}

void check_bounds(const SweepBounds& b) {
    if (b.max_total_rank < 0 || b.max_total_rank > 8 || b.max_signature < 0 || b.max_signature > 4 ||
        b.max_dim < 0 || b.max_dim > 12)
        throw std::invalid_argument("sweep bounds exceed the guard");
}

std::vector<QuadForm> forms_up_to(const LocalField& f, int rank, int max_sig) {
    std::vector<QuadForm> out;
    if (f.is_real()) {
        for (int pos = 0; pos <= max_sig; ++pos)
            for (int neg = 0; neg <= max_sig; ++neg)
                if (pos + neg == rank) out.push_back(canonical_form(real_invariants(pos, neg)));
        return out;
    }
    for (const QuadInvariants& inv : enumerate_invariants(f, rank)) out.push_back(canonical_form(inv));
    return out;
}

}  // namespace

namespace {

// classification is pure, so rows shard freely across workers; output order
// stays the enumeration order
std::vector<SweepRow> classify_rows(std::vector<PairSpec> specs) {
    std::vector<SweepRow> rows(specs.size());
    for (size_t i = 0; i < specs.size(); ++i) rows[i].spec = std::move(specs[i]);

    size_t workers = std::min<size_t>(std::thread::hardware_concurrency(), 8);
    if (workers < 2 || rows.size() < 64) {
        for (SweepRow& row : rows) row.verdict = classify(row.spec);
        return rows;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&rows, &errors, w, workers]() {
            try {
                for (size_t i = w; i < rows.size(); i += workers) rows[i].verdict = classify(rows[i].spec);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace

std::vector<SweepRow> sweep(Family family, const GroundField& field, const SweepBounds& bounds,
                            std::optional<SquareClass> ext_d) {
    check_bounds(bounds);
    std::vector<PairSpec> specs;
    auto add = [&specs](PairSpec spec) { specs.push_back(std::move(spec)); };

    if (family == Family::glxgl || family == Family::slxgl) {
        for (int total = 2; total <= bounds.max_dim; ++total)
            for (int dp = 1; dp < total; ++dp) {
                if (family == Family::glxgl)
                    add(GLxGLPair{field, dp, total - dp});
                else
                    add(SLxGLPair{field, dp, total - dp});
            }
        return classify_rows(std::move(specs));
    }

    if (field.is_complex()) throw std::invalid_argument("family is parameterized by forms or extensions: no C rows");
    LocalField f = field.local();

    switch (family) {
        case Family::gl_f_over_e:
        case Family::sl_f_over_e:
        case Family::gl_basechange:
        case Family::sl_basechange: {
            QuadExt ext = quad_ext(f, ext_d.value_or(default_ext_class(f)));
            for (int dim = 1; dim <= bounds.max_dim; ++dim) {
                if (family == Family::gl_f_over_e) add(GLFOverEPair{ext, dim});
                else if (family == Family::sl_f_over_e) add(SLFOverEPair{ext, dim});
                else if (family == Family::gl_basechange) add(GLBasechangePair{ext, dim});
                else add(SLBasechangePair{ext, dim});
            }
            break;
        }
        case Family::o_pair: {
            int cap = f.is_real() ? 2 * bounds.max_signature : bounds.max_total_rank;
            for (int rp = 1; rp < cap; ++rp)
                for (int rm = 1; rp + rm <= cap; ++rm)
                    for (const QuadForm& bp : forms_up_to(f, rp, bounds.max_signature))
                        for (const QuadForm& bm : forms_up_to(f, rm, bounds.max_signature))
                            add(OPair{bp, bm});
            break;
        }
        case Family::u_pair: {
            if (f.is_real()) {
                for (int p1 = 0; p1 <= bounds.max_signature; ++p1)
                    for (int q1 = 0; q1 <= bounds.max_signature; ++q1)
                        for (int p2 = 0; p2 <= bounds.max_signature; ++p2)
                            for (int q2 = 0; q2 <= bounds.max_signature; ++q2) {
                                if (p1 + q1 < 1 || p2 + q2 < 1) continue;
                                add(UPair{herm_form_real(p1, q1), herm_form_real(p2, q2)});
                            }
            } else {
                QuadExt ext = quad_ext(f, ext_d.value_or(default_ext_class(f)));
                for (int rp = 1; rp < bounds.max_total_rank; ++rp)
                    for (int rm = 1; rp + rm <= bounds.max_total_rank; ++rm)
                        for (bool dp : {true, false})
                            for (bool dm : {true, false})
                                add(UPair{herm_form(ext, rp, dp), herm_form(ext, rm, dm)});
            }
            break;
        }
        case Family::gl_o: {
            int cap = f.is_real() ? 2 * bounds.max_signature : bounds.max_total_rank;
            for (int rank = 1; rank <= cap; ++rank)
                for (const QuadForm& b : forms_up_to(f, rank, bounds.max_signature)) add(GLOPair{b});
            break;
        }
        case Family::gl_u: {
            if (f.is_real()) {
                for (int pos = 0; pos <= bounds.max_signature; ++pos)
                    for (int neg = 0; neg <= bounds.max_signature; ++neg)
                        if (pos + neg >= 1) add(GLUPair{herm_form_real(pos, neg)});
            } else {
                QuadExt ext = quad_ext(f, ext_d.value_or(default_ext_class(f)));
                for (int rank = 1; rank <= bounds.max_total_rank; ++rank)
                    for (bool det : {true, false}) add(GLUPair{herm_form(ext, rank, det)});
            }
            break;
        }
        default: break;
    }
    return classify_rows(std::move(specs));
}

std::vector<SweepRow> sweep_all(const GroundField& field, const SweepBounds& bounds) {
    std::vector<SweepRow> rows;
    for (Family f : all_families()) {
        if (field.is_complex() && f != Family::glxgl && f != Family::slxgl) continue;
        std::vector<SweepRow> part = sweep(f, field, bounds);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<std::string> check_sweep(const std::vector<SweepRow>& rows) {
    std::vector<std::string> bad;
    auto complain = [&bad](const SweepRow& row, const std::string& what) {
        bad.push_back(family_tag(row.spec) + " " + params_text(row.spec) + ": " + what);
    };
    for (const SweepRow& row : rows) {
        const Verdict& v = row.verdict;
        try {
            enforce_implication_chain(v);
        } catch (const std::exception& e) {
            complain(row, e.what());
        }
        if (v.gelfand == Tri::unknown) {
            bool o_gap = std::holds_alternative<OPair>(row.spec) && v.p_stable == Tri::yes &&
                         v.stable == Tri::no;
            bool complex_dims = false;
            if (const auto* g = std::get_if<GLxGLPair>(&row.spec)) complex_dims = g->field.is_complex();
            if (const auto* g = std::get_if<SLxGLPair>(&row.spec)) complex_dims = g->field.is_complex();
            if (!o_gap && !complex_dims) complain(row, "gelfand unknown outside the O-pair gap");
        }
        if (const auto* o = std::get_if<OPair>(&row.spec)) {
            if (o->bplus.field.is_padic()) {
                bool rank_le1 = orthogonal_rank(o->bplus, o->bminus) <= 1;
                if ((v.s_stable == Tri::yes) != rank_le1) complain(row, "s-stable disagrees with the rank formula");
            } else {
                if (!(v.stable == v.s_stable && v.s_stable == v.p_stable && v.p_stable == v.gelfand))
                    complain(row, "real O verdict columns disagree");
            }
        } else if (const auto* u = std::get_if<UPair>(&row.spec)) {
            if (u->bplus.ext.base.is_padic()) {
                bool d = condition_D(u->bplus, u->bminus);
                if (v.stable != v.p_stable) complain(row, "U stable and p-stable differ");
                if ((v.stable == Tri::yes) != d) complain(row, "U stable disagrees with condition (D)");
                if ((v.s_stable == Tri::yes) != (unitary_rank(u->bplus, u->bminus) <= 1))
                    complain(row, "U s-stable disagrees with the rank formula");
            }
        } else if (const auto* s = std::get_if<SLxGLPair>(&row.spec)) {
            if (!s->field.is_complex()) {
                bool split = s->dim_plus != s->dim_minus;
                if ((v.stable == Tri::yes) != split || v.gelfand != v.stable)
                    complain(row, "SLxGL does not flip at equal dims");
            }
        } else if (const auto* s2 = std::get_if<SLBasechangePair>(&row.spec)) {
            bool odd = s2->dim % 2 == 1;
            if ((v.stable == Tri::yes) != odd || v.gelfand != v.stable)
                complain(row, "SL basechange does not flip at dim parity");
        }
    }
    return bad;
}

}  // namespace sympair
