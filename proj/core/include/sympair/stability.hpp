// The decision engine: classify each symmetric-pair family as stable,
// s-stable, p-stable and Gelfand over a given ground field, through the
// compiled per-family criteria (conditions (A)-(D), dimension parities,
// definiteness) evaluated from the form/extension primitives. Every verdict
// carries citation tags and honors the implication chain
// stable => p-stable => s-stable and gelfand => p-stable.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sympair/herm_form.hpp"
#include "sympair/local_field.hpp"
#include "sympair/quad_form.hpp"

namespace sympair {

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

// ground field for the dimension-parameterized families; C short-circuits
struct GroundField {
    enum class Kind { real, complex, padic } kind = Kind::real;
    long long p = 0;

    static GroundField real() { return {Kind::real, 0}; }
    static GroundField complex() { return {Kind::complex, 0}; }
    static GroundField padic(long long p);
    static GroundField of(const LocalField& f);

    bool is_real() const { return kind == Kind::real; }
    bool is_complex() const { return kind == Kind::complex; }
    bool is_padic() const { return kind == Kind::padic; }
    LocalField local() const;  // throws for complex
    bool operator==(const GroundField&) const = default;
};
std::string to_string(const GroundField& f);
GroundField parse_ground_field(std::string_view text);

// ---- pair families ----------------------------------------------------------

struct GLxGLPair { GroundField field; int dim_plus = 0, dim_minus = 0; };
struct SLxGLPair { GroundField field; int dim_plus = 0, dim_minus = 0; };
struct GLFOverEPair { QuadExt ext; int dim = 1; };      // (GL_F(V), GL_E(V), Ad_J), dim = dim_E V
struct SLFOverEPair { QuadExt ext; int dim = 1; };
struct GLBasechangePair { QuadExt ext; int dim = 1; };  // (GL(V(E)), GL(V(F)), c)
struct SLBasechangePair { QuadExt ext; int dim = 1; };
struct OPair { QuadForm bplus, bminus; };
struct UPair { HermForm bplus, bminus; };
struct GLOPair { QuadForm b; };
struct GLUPair { HermForm b; };
struct QuaternionPair { long long p = 3; };  // the norm-one pair, p = 3 mod 4

using PairSpec = std::variant<GLxGLPair, SLxGLPair, GLFOverEPair, SLFOverEPair, GLBasechangePair,
                              SLBasechangePair, OPair, UPair, GLOPair, GLUPair, QuaternionPair>;

std::string family_tag(const PairSpec& spec);
std::string params_text(const PairSpec& spec);

struct Verdict {
    Tri stable = Tri::unknown;
    Tri s_stable = Tri::unknown;
    Tri p_stable = Tri::unknown;
    Tri gelfand = Tri::unknown;
    std::vector<std::string> citations;
};

// throws when the chain stable => p => s or gelfand => p is broken
void enforce_implication_chain(const Verdict& v);

Verdict classify(const PairSpec& spec);

// min(rank B+, rank B-, mu(B+ + B-))
int orthogonal_rank(const QuadForm& bplus, const QuadForm& bminus);
int unitary_rank(const HermForm& bplus, const HermForm& bminus);

// some diagonalizations B+ = Q([a,b,...]), B- = Q([e1 a, e2 b,...]) with
// independent signs e_i, the shorter diagonal matched against a prefix;
// non-Archimedean, ranks <= 3 each
bool sign_twin_exists(const QuadForm& bplus, const QuadForm& bminus);

// the summary conditions for the orthogonal and unitary rows
bool condition_A(const QuadForm& bplus, const QuadForm& bminus);
bool condition_B(const QuadForm& bplus, const QuadForm& bminus);
bool condition_C(const QuadForm& bplus, const QuadForm& bminus);
bool condition_C(const HermForm& bplus, const HermForm& bminus);
bool condition_D(const HermForm& bplus, const HermForm& bminus);

// order of the kernel of N(Q_p(sqrt p))/(Q_p*)^2 -> Q_p*/N(Q_p(sqrt p)); the
// norm-quotient obstruction behind the quaternion example (odd p)
int quaternion_obstruction(long long p);
std::vector<SquareClass> quaternion_kernel(long long p);

// ---- sweeps -----------------------------------------------------------------

enum class Family {
    glxgl, slxgl, gl_f_over_e, sl_f_over_e, gl_basechange, sl_basechange,
    o_pair, u_pair, gl_o, gl_u,
};
std::vector<Family> all_families();
std::string to_string(Family f);
Family parse_family(std::string_view tag);  // also accepts "quaternion" spellings via classify only

struct SweepBounds {
    int max_total_rank = 4;   // non-Archimedean forms, both sides together
    int max_signature = 2;    // real: per-entry cap
    int max_dim = 4;          // dimension families: total dimension cap
};

struct SweepRow {
    PairSpec spec;
    Verdict verdict;
};

// deterministic enumeration of one family over one ground field; extension
// families take d (default: -1 over R, the nonresidue over odd p, 5 over Q2)
std::vector<SweepRow> sweep(Family family, const GroundField& field, const SweepBounds& bounds,
                            std::optional<SquareClass> ext_d = std::nullopt);

// every family in order, same bounds
std::vector<SweepRow> sweep_all(const GroundField& field, const SweepBounds& bounds);

// re-assert the implication chain and the per-family cross-formula identities
// on finished rows; returns human-readable violations (empty = consistent)
std::vector<std::string> check_sweep(const std::vector<SweepRow>& rows);

}  // namespace sympair
