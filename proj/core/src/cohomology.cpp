#include "sympair/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sympair {

namespace {

constexpr int kMaxOrder = 200;
constexpr int kExhaustiveAssocLimit = 64;

void check_group_tables(int n, const std::vector<int>& mul) {
    for (int v : mul)
        if (v < 0 || v >= n) throw std::invalid_argument("multiplication table entry out of range");
    // identity: a two-sided unit must exist
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = mul[e * n + a] == a && mul[a * n + e] == a;
        if (ok) id = e;
    }
    if (id < 0) throw std::invalid_argument("no identity element");
    // inverses: each row and column must be a permutation containing id
    for (int a = 0; a < n; ++a) {
        std::vector<char> seen(n, 0);
        bool has_inv = false;
        for (int b = 0; b < n; ++b) {
            int ab = mul[a * n + b];
            if (seen[ab]) throw std::invalid_argument("row is not a permutation");
            seen[ab] = 1;
            if (ab == id) has_inv = true;
        }
        if (!has_inv) throw std::invalid_argument("element without inverse");
    }
    auto assoc = [&](int a, int b, int c) {
        return mul[mul[a * n + b] * n + c] == mul[a * n + mul[b * n + c]];
    };
    if (n <= kExhaustiveAssocLimit) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c)) throw std::invalid_argument("multiplication is not associative");
    } else {
        unsigned long long state = 0x9e3779b97f4a7c15ULL;
        for (int i = 0; i < 200000; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            int a = static_cast<int>((state >> 16) % n);
            int b = static_cast<int>((state >> 32) % n);
            int c = static_cast<int>((state >> 48) % n);
            if (!assoc(a, b, c)) throw std::invalid_argument("multiplication is not associative");
        }
    }
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

InvolutiveGroup InvolutiveGroup::from_tables(std::vector<std::string> names, std::vector<int> mul,
                                             std::vector<int> theta) {
    int n = static_cast<int>(names.size());
    if (n <= 0 || n > kMaxOrder) throw std::invalid_argument("group order out of range");
    if (mul.size() != static_cast<size_t>(n) * n) throw std::invalid_argument("multiplication table size mismatch");
    if (theta.size() != static_cast<size_t>(n)) throw std::invalid_argument("theta table size mismatch");
    check_group_tables(n, mul);

    InvolutiveGroup g;
    g.n_ = n;
    g.names_ = std::move(names);
    g.mul_ = std::move(mul);
    g.theta_ = std::move(theta);
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a;
        if (ok) { g.id_ = e; break; }
    }
    g.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == g.id_) g.inv_[a] = b;

    for (int a = 0; a < n; ++a) {
        int t = g.theta_[a];
        if (t < 0 || t >= n) throw std::invalid_argument("theta entry out of range");
        if (g.theta_[t] != a) throw std::invalid_argument("theta is not an involution");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.theta_[g.mul(a, b)] != g.mul(g.theta_[a], g.theta_[b]))
                throw std::invalid_argument("theta is not an automorphism");
    return g;
}

int InvolutiveGroup::index_of(std::string_view name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

InvolutiveGroup InvolutiveGroup::with_theta(std::vector<int> theta) const {
    return from_tables(names_, mul_, std::move(theta));
}

std::vector<int> symmetric_part(const InvolutiveGroup& g) {
    std::vector<int> s;
    for (int a = 0; a < g.size(); ++a)
        if (g.mul(a, g.theta(a)) == g.identity()) s.push_back(a);
    return s;
}

PointedSet h1(const InvolutiveGroup& g) {
    std::vector<int> s = symmetric_part(g);
    std::vector<char> in_s(g.size(), 0);
    for (int x : s) in_s[x] = 1;
    std::vector<int> cls(g.size(), -1);
    PointedSet out;
    for (int start : s) {
        if (cls[start] >= 0) continue;
        CohomologyClass c;
        std::vector<int> stack{start};
        cls[start] = static_cast<int>(out.classes.size());
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            c.orbit.push_back(x);
            for (int a = 0; a < g.size(); ++a) {
                int y = g.mul(g.mul(g.inv(a), x), g.theta(a));
                if (cls[y] < 0) {
                    cls[y] = cls[start];
                    stack.push_back(y);
                }
            }
        }
        std::sort(c.orbit.begin(), c.orbit.end());
        c.representative = c.orbit.front();
        out.classes.push_back(std::move(c));
    }
    out.base = cls[g.identity()];
    return out;
}

InvolutiveGroup twist(const InvolutiveGroup& g, int a) {
    if (a < 0 || a >= g.size() || g.mul(a, g.theta(a)) != g.identity())
        throw std::invalid_argument("twisting element is not a cocycle");
    std::vector<int> theta(g.size());
    for (int x = 0; x < g.size(); ++x) theta[x] = g.mul(g.mul(a, g.theta(x)), g.inv(a));
    return g.with_theta(std::move(theta));
}

InvolutiveGroup subgroup(const InvolutiveGroup& g, const std::vector<int>& elements) {
    std::vector<int> elems = sorted_unique(elements);
    std::vector<int> pos(g.size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    int m = static_cast<int>(elems.size());
    std::vector<std::string> names(m);
    std::vector<int> mul(static_cast<size_t>(m) * m), theta(m);
    for (int i = 0; i < m; ++i) {
        names[i] = g.name(elems[i]);
        if (pos[g.inv(elems[i])] < 0) throw std::invalid_argument("subgroup not closed under inverse");
        int t = g.theta(elems[i]);
        if (pos[t] < 0) throw std::invalid_argument("subgroup not theta-stable");
        theta[i] = pos[t];
        for (int j = 0; j < m; ++j) {
            int p = g.mul(elems[i], elems[j]);
            if (pos[p] < 0) throw std::invalid_argument("subgroup not closed under multiplication");
            mul[i * m + j] = pos[p];
        }
    }
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

std::vector<int> coboundaries(const InvolutiveGroup& g) {
    std::vector<int> cb;
    for (int x = 0; x < g.size(); ++x) cb.push_back(g.mul(g.inv(x), g.theta(x)));
    return sorted_unique(std::move(cb));
}

std::vector<CohomologyClass> kernel_h1(const InvolutiveGroup& g, const std::vector<int>& k_elements) {
    InvolutiveGroup k = subgroup(g, k_elements);
    std::vector<int> elems = sorted_unique(k_elements);
    std::vector<int> cb = coboundaries(g);
    std::vector<CohomologyClass> out;
    for (const CohomologyClass& c : h1(k).classes) {
        int rep_in_g = elems[c.representative];
        if (std::binary_search(cb.begin(), cb.end(), rep_in_g)) out.push_back(c);
    }
    return out;
}

SymmetrizationClasses symmetrization_classes(const InvolutiveGroup& g) {
    std::vector<int> s0;
    for (int x = 0; x < g.size(); ++x) s0.push_back(g.symmetrize(x));
    s0 = sorted_unique(std::move(s0));
    int h = static_cast<int>(fixed_points(g).size());
    return SymmetrizationClasses{s0, static_cast<int>(s0.size()) == g.size() / h};
}

std::vector<int> fixed_points(const InvolutiveGroup& g) {
    std::vector<int> h;
    for (int a = 0; a < g.size(); ++a)
        if (g.theta(a) == a) h.push_back(a);
    return h;
}

std::vector<int> centralizer(const InvolutiveGroup& g, int r) {
    std::vector<int> z;
    for (int a = 0; a < g.size(); ++a)
        if (g.mul(a, r) == g.mul(r, a)) z.push_back(a);
    return z;
}

std::vector<int> conjugacy_class(const InvolutiveGroup& g, int x) {
    std::vector<int> cls;
    for (int a = 0; a < g.size(); ++a) cls.push_back(g.mul(g.mul(a, x), g.inv(a)));
    return sorted_unique(std::move(cls));
}

bool double_coset_stable(const InvolutiveGroup& g, int elt) {
    std::vector<int> h = fixed_points(g);
    std::vector<char> coset(g.size(), 0);
    for (int a : h)
        for (int b : h) coset[g.mul(g.mul(a, elt), b)] = 1;
    for (int x = 0; x < g.size(); ++x)
        if (coset[x] && !coset[g.sigma(x)]) return false;
    return true;
}

bool centralizer_criterion(const InvolutiveGroup& g, int elt) {
    int r = g.symmetrize(elt);
    std::vector<int> z = centralizer(g, r);
    for (int a : z)
        if (g.mul(g.inv(a), g.theta(a)) == r) return true;
    return false;
}

bool conjugacy_bijection_check(const InvolutiveGroup& g, int h) {
    int h2 = g.mul(h, h);
    for (int a = 0; a < g.size(); ++a)
        if (g.mul(a, h2) != g.mul(h2, a)) throw std::invalid_argument("h^2 is not central");
    InvolutiveGroup gh = g.with_theta(theta_conjugation(g, h));

    auto class_of = [&](int x) { return conjugacy_class(gh, x); };
    std::vector<std::vector<int>> target_classes;
    for (int x = 0; x < g.size(); ++x) {
        if (g.mul(x, x) != h2) continue;
        std::vector<int> cls = class_of(x);
        if (std::find(target_classes.begin(), target_classes.end(), cls) == target_classes.end())
            target_classes.push_back(std::move(cls));
    }

    PointedSet coh = h1(gh);
    std::vector<int> hit(target_classes.size(), 0);
    for (size_t ci = 0; ci < coh.classes.size(); ++ci) {
        int image_class = -1;
        for (int r : coh.classes[ci].orbit) {
            int rh = gh.mul(r, h);
            if (gh.mul(rh, rh) != h2) return false;
            int found = -1;
            for (size_t t = 0; t < target_classes.size(); ++t)
                if (std::binary_search(target_classes[t].begin(), target_classes[t].end(), rh)) {
                    found = static_cast<int>(t);
                    break;
                }
            if (found < 0) return false;
            if (image_class < 0) image_class = found;
            if (image_class != found) return false;  // not well defined
        }
        hit[image_class]++;
        if (static_cast<int>(ci) == coh.base) {
            // base point must land on the class of h itself
            if (!std::binary_search(target_classes[image_class].begin(), target_classes[image_class].end(), h))
                return false;
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](int c) { return c == 1; });
}

bool descent_identity_holds(const InvolutiveGroup& g, int x0) {
    if (g.theta(x0) != x0) throw std::invalid_argument("x0 must be theta-fixed");
    std::vector<int> orbit = conjugacy_class(g, x0);
    std::vector<int> fixed;
    for (int x : orbit)
        if (g.theta(x) == x) fixed.push_back(x);
    // orbits of H on the theta-fixed part of the class
    std::vector<int> h = fixed_points(g);
    std::set<int> seen;
    int orbits = 0;
    for (int x : fixed) {
        if (seen.count(x)) continue;
        ++orbits;
        for (int a : h) seen.insert(g.mul(g.mul(a, x), g.inv(a)));
    }
    size_t kernel = kernel_h1(g, centralizer(g, x0)).size();
    return static_cast<size_t>(orbits) == kernel;
}

// ---- builtins --------------------------------------------------------------

InvolutiveGroup cyclic_group(int n) {
    if (n < 1 || n > kMaxOrder) throw std::invalid_argument("cyclic order out of range");
    std::vector<std::string> names(n);
    std::vector<int> mul(static_cast<size_t>(n) * n), theta(n);
    for (int i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        theta[i] = i;
        for (int j = 0; j < n; ++j) mul[i * n + j] = (i + j) % n;
    }
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

InvolutiveGroup dihedral_group_8() {
    // elements r^i s^e, i < 4; s r s = r^-1
    std::vector<std::string> names;
    for (int e = 0; e <= 1; ++e)
        for (int i = 0; i < 4; ++i) {
            std::string nm = i == 0 ? "" : i == 1 ? "r" : "r" + std::to_string(i);
            if (e) nm += "s";
            if (nm.empty()) nm = "e";
            names.push_back(nm);
        }
    auto idx = [](int i, int e) { return e * 4 + i; };
    std::vector<int> mul(64), theta(8);
    for (int e1 = 0; e1 <= 1; ++e1)
        for (int i1 = 0; i1 < 4; ++i1)
            for (int e2 = 0; e2 <= 1; ++e2)
                for (int i2 = 0; i2 < 4; ++i2) {
                    // (r^i1 s^e1)(r^i2 s^e2) = r^(i1 + (-1)^e1 i2) s^(e1+e2)
                    int i = ((i1 + (e1 ? -i2 : i2)) % 4 + 4) % 4;
                    mul[idx(i1, e1) * 8 + idx(i2, e2)] = idx(i, (e1 + e2) % 2);
                }
    for (int k = 0; k < 8; ++k) theta[k] = k;
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

InvolutiveGroup quaternion_group_8() {
    // 1,-1,i,-i,j,-j,k,-k
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto enc = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
    // unit table on {1,i,j,k}: result unit and sign
    const int u_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int s_tab[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<int> mul(64), theta(8);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : 1;
            int ub = b / 2, sb = b % 2 ? -1 : 1;
            mul[a * 8 + b] = enc(u_tab[ua][ub], sa * sb * s_tab[ua][ub]);
        }
    for (int k = 0; k < 8; ++k) theta[k] = k;
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

InvolutiveGroup symmetric_group(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group supports n <= 5");
    std::vector<std::vector<int>> perms = all_permutations(n);
    int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> rank;
    for (int i = 0; i < m; ++i) rank[perms[i]] = i;
    std::vector<std::string> names(m);
    std::vector<int> mul(static_cast<size_t>(m) * m), theta(m);
    for (int i = 0; i < m; ++i) {
        std::string nm;
        for (int v : perms[i]) nm += std::to_string(v + 1);
        names[i] = nm;
        theta[i] = i;
        for (int j = 0; j < m; ++j) {
            std::vector<int> comp(n);  // (p_i . p_j)(x) = p_i(p_j(x))
            for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
            mul[i * m + j] = rank[comp];
        }
    }
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

InvolutiveGroup direct_product(const InvolutiveGroup& a, const InvolutiveGroup& b) {
    int n = a.size() * b.size();
    if (n > kMaxOrder) throw std::invalid_argument("product order out of range");
    std::vector<std::string> names(n);
    std::vector<int> mul(static_cast<size_t>(n) * n), theta(n);
    auto idx = [&](int i, int j) { return i * b.size() + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            names[idx(i, j)] = "(" + a.name(i) + "|" + b.name(j) + ")";
            theta[idx(i, j)] = idx(a.theta(i), b.theta(j));
            for (int i2 = 0; i2 < a.size(); ++i2)
                for (int j2 = 0; j2 < b.size(); ++j2)
                    mul[idx(i, j) * n + idx(i2, j2)] = idx(a.mul(i, i2), b.mul(j, j2));
        }
    return InvolutiveGroup::from_tables(std::move(names), std::move(mul), std::move(theta));
}

std::vector<int> theta_identity(const InvolutiveGroup& g) {
    std::vector<int> t(g.size());
    std::iota(t.begin(), t.end(), 0);
    return t;
}

std::vector<int> theta_inversion(const InvolutiveGroup& g) {
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) throw std::invalid_argument("inversion needs an abelian group");
    std::vector<int> t(g.size());
    for (int a = 0; a < g.size(); ++a) t[a] = g.inv(a);
    return t;
}

std::vector<int> theta_conjugation(const InvolutiveGroup& g, int h) {
    int h2 = g.mul(h, h);
    for (int a = 0; a < g.size(); ++a)
        if (g.mul(a, h2) != g.mul(h2, a)) throw std::invalid_argument("Ad_h is an involution only for central h^2");
    std::vector<int> t(g.size());
    for (int a = 0; a < g.size(); ++a) t[a] = g.mul(g.mul(h, a), g.inv(h));
    return t;
}

std::vector<int> theta_flip(const InvolutiveGroup& a, const InvolutiveGroup& b) {
    if (a.size() != b.size()) throw std::invalid_argument("flip needs identical factors");
    int n = a.size() * b.size();
    std::vector<int> t(n);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) t[i * b.size() + j] = j * b.size() + i;
    return t;
}

namespace {

// smallest generating tuple, found by breadth over tuple sizes
std::vector<int> generating_tuple(const InvolutiveGroup& g) {
    int n = g.size();
    auto closure_size = [&](const std::vector<int>& gens) {
        std::vector<char> in(n, 0);
        std::vector<int> stack{g.identity()};
        in[g.identity()] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int h : gens) {
                int y = g.mul(x, h);
                if (!in[y]) { in[y] = 1; ++count; stack.push_back(y); }
            }
        }
        return count;
    };
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> tuple(k, 0);
        while (true) {
            if (closure_size(tuple) == n) return tuple;
            int pos = k - 1;
            while (pos >= 0 && tuple[pos] + 1 == n) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
    }
    throw std::invalid_argument("no generating tuple of size <= 3");
}

}  // namespace

std::vector<std::vector<int>> all_involutive_automorphisms(const InvolutiveGroup& g) {
    int n = g.size();
    std::vector<int> gens = generating_tuple(g);
    int k = static_cast<int>(gens.size());

    // express every element as a word: parent pointer + generator used
    std::vector<int> parent(n, -1), via(n, -1);
    std::vector<int> order{g.identity()};
    {
        std::vector<char> in(n, 0);
        in[g.identity()] = 1;
        for (size_t head = 0; head < order.size(); ++head) {
            int x = order[head];
            for (int gi = 0; gi < k; ++gi) {
                int y = g.mul(x, gens[gi]);
                if (!in[y]) {
                    in[y] = 1;
                    parent[y] = x;
                    via[y] = gi;
                    order.push_back(y);
                }
            }
        }
    }

    std::set<std::vector<int>> found;
    std::vector<int> choice(k, 0);
    while (true) {
        std::vector<int> phi(n, -1);
        phi[g.identity()] = g.identity();
        bool ok = true;
        for (int x : order) {
            if (x == g.identity()) continue;
            phi[x] = g.mul(phi[parent[x]], choice[via[x]]);
        }
        // homomorphism, bijectivity and involutivity checks
        std::vector<char> image(n, 0);
        for (int x = 0; x < n && ok; ++x) {
            if (image[phi[x]]) ok = false;
            image[phi[x]] = 1;
        }
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) ok = false;
        for (int a = 0; a < n && ok; ++a)
            if (phi[phi[a]] != a) ok = false;
        if (ok) found.insert(phi);

        int pos = k - 1;
        while (pos >= 0 && choice[pos] + 1 == n) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

InvolutiveGroup builtin_group(std::string_view name) {
    auto x = name.find('x');
    if (x != std::string_view::npos)
        return direct_product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)));
    if (name == "D4") return dihedral_group_8();
    if (name == "Q8") return quaternion_group_8();
    if (!name.empty() && name[0] == 'S') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw std::invalid_argument("unknown group: " + std::string(name));
            n = n * 10 + (name[i] - '0');
        }
        return symmetric_group(n);
    }
    if (!name.empty() && name[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw std::invalid_argument("unknown group: " + std::string(name));
            n = n * 10 + (name[i] - '0');
        }
        return cyclic_group(n);
    }
    throw std::invalid_argument("unknown group: " + std::string(name));
}

}  // namespace sympair
