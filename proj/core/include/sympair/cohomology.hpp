// Non-abelian first cohomology of Z/2 = {id, theta} acting on a finite group,
// with groups held as explicit multiplication tables so every statement is
// decidable by enumeration: cocycles, coboundary orbits, twisting, kernels,
// the symmetrization map and the centralizer stability criterion.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sympair {

class InvolutiveGroup {
public:
    // mul is the n*n row-major table, theta an involutive automorphism table.
    // Group axioms and the theta laws are verified (associativity exhaustively
    // for n <= 64, on a deterministic sample above).
    static InvolutiveGroup from_tables(std::vector<std::string> names, std::vector<int> mul,
                                       std::vector<int> theta);

    int size() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return mul_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int theta(int a) const { return theta_[a]; }
    int sigma(int a) const { return theta_[inv_[a]]; }     // sigma(g) = theta(g^-1)
    int symmetrize(int g) const { return mul(g, sigma(g)); }  // s(g) = g sigma(g)
    const std::string& name(int a) const { return names_[a]; }
    int index_of(std::string_view name) const;  // -1 when absent
    const std::vector<int>& theta_table() const { return theta_; }

    InvolutiveGroup with_theta(std::vector<int> theta) const;

private:
    InvolutiveGroup() = default;
    int n_ = 0, id_ = 0;
    std::vector<std::string> names_;
    std::vector<int> mul_, inv_, theta_;
};

struct CohomologyClass {
    int representative = 0;   // smallest element index in the orbit
    std::vector<int> orbit;   // sorted delta-orbit inside S
};

struct PointedSet {
    std::vector<CohomologyClass> classes;
    int base = 0;  // index into classes of the class of the identity
};

// S = {s : s theta(s) = e}, the 1-cocycles
std::vector<int> symmetric_part(const InvolutiveGroup& g);

// orbits of S under delta_g(s) = g^-1 s theta(g), pointed at the class of e
PointedSet h1(const InvolutiveGroup& g);

// same carrier with theta'(x) = a theta(x) a^-1; a must be a cocycle
InvolutiveGroup twist(const InvolutiveGroup& g, int a);

// the theta-stable subgroup on the given elements, with remapped indices
InvolutiveGroup subgroup(const InvolutiveGroup& g, const std::vector<int>& elements);

// classes of H^1(theta, K) that become coboundaries in G
std::vector<CohomologyClass> kernel_h1(const InvolutiveGroup& g, const std::vector<int>& k_elements);

struct SymmetrizationClasses {
    std::vector<int> s0;   // image of the symmetrization map, sorted
    bool bijection_ok = false;  // |S0| == [G : G^theta]
};
SymmetrizationClasses symmetrization_classes(const InvolutiveGroup& g);

// sigma(HgH) == HgH by direct set computation, H = fixed points of theta
bool double_coset_stable(const InvolutiveGroup& g, int elt);

// r = s(g) lies in the coboundary orbit of e inside Z_G(r)
bool centralizer_criterion(const InvolutiveGroup& g, int elt);

// r -> rh is a well-defined bijection H^1(Ad_h, G) -> {h' : h'^2 = h^2}/conj,
// base point to the class of h; requires h^2 central
bool conjugacy_bijection_check(const InvolutiveGroup& g, int h);

// |X^theta / G^theta| == |KH^1(theta, Z_G(x0), G)| for the conjugation orbit X
// of the theta-fixed point x0
bool descent_identity_holds(const InvolutiveGroup& g, int x0);

std::vector<int> fixed_points(const InvolutiveGroup& g);        // H = G^theta
std::vector<int> centralizer(const InvolutiveGroup& g, int r);
std::vector<int> conjugacy_class(const InvolutiveGroup& g, int x);
std::vector<int> coboundaries(const InvolutiveGroup& g);        // {g^-1 theta(g)}

// ---- builtin groups -------------------------------------------------------

// plain multiplication tables with element names; theta = identity
InvolutiveGroup cyclic_group(int n);
InvolutiveGroup dihedral_group_8();    // D4, order 8
InvolutiveGroup quaternion_group_8();  // Q8
InvolutiveGroup symmetric_group(int n);  // n <= 5
InvolutiveGroup direct_product(const InvolutiveGroup& a, const InvolutiveGroup& b);

// named involution builders
std::vector<int> theta_identity(const InvolutiveGroup& g);
std::vector<int> theta_inversion(const InvolutiveGroup& g);          // abelian only
std::vector<int> theta_conjugation(const InvolutiveGroup& g, int h); // needs h^2 central
std::vector<int> theta_flip(const InvolutiveGroup& a, const InvolutiveGroup& b);  // on a x b

// every automorphism theta with theta^2 = id, deduplicated, deterministic order
std::vector<std::vector<int>> all_involutive_automorphisms(const InvolutiveGroup& g);

// "Z12", "D4", "Q8", "S4", and products joined with 'x' such as "S3xS3"
InvolutiveGroup builtin_group(std::string_view name);

}  // namespace sympair
