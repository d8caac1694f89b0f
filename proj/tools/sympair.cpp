// sympair: square-class and Hilbert-symbol calculator, quadratic/Hermitian
// form toolkit, finite H^1 reports and the symmetric-pair stability tables.
// Exit codes: 0 success (or boolean true), 1 boolean false, 2 usage error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sympair/cohomology.hpp"
#include "sympair/oracle.hpp"
#include "sympair/render.hpp"
#include "sympair/stability.hpp"

using namespace sympair;

namespace {

struct Rational {
    long long num = 1;
    long long den = 1;
};

Rational parse_rational(const std::string& text) {
    Rational r;
    auto slash = text.find('/');
    r.num = std::stoll(text.substr(0, slash));
    if (slash != std::string::npos) r.den = std::stoll(text.substr(slash + 1));
    if (r.num == 0 || r.den == 0) throw std::invalid_argument("zero is not in F*");
    return r;
}

// class tag relative to a field: an integer with optional u/p suffixes
SquareClass parse_class_tag(const LocalField& field, std::string tag) {
    bool has_u = false, has_p = false;
    while (!tag.empty() && (tag.back() == 'u' || tag.back() == 'p')) {
        (tag.back() == 'u' ? has_u : has_p) = true;
        tag.pop_back();
    }
    long long n = tag.empty() ? 1 : std::stoll(tag);
    SquareClass c = square_class(field, n);
    if (has_p) c = class_mul(c, square_class(field, field.prime()));
    if (has_u) c = class_mul(c, square_class(field, field.nonresidue()));
    return c;
}

bool is_herm_literal(const std::string& text) { return text.rfind("hf(", 0) == 0; }

int emit_bool(bool value) {
    std::cout << (value ? "true" : "false") << "\n";
    return value ? 0 : 1;
}

void write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
}

// ---- hilbert ----------------------------------------------------------------

int run_hilbert(const std::string& field_spec, const std::string& a_text, const std::string& b_text,
                bool with_oracle) {
    LocalField f = parse_field(field_spec);
    Rational a = parse_rational(a_text), b = parse_rational(b_text);
    Sign engine = hilbert(square_class(f, a.num, a.den), square_class(f, b.num, b.den));
    std::cout << to_string(engine) << "\n";
    if (with_oracle) {
        Sign probe = hilbert_oracle(f, a.num * a.den, b.num * b.den);
        std::cout << "oracle: " << to_string(probe) << "\n";
        if (!(probe == engine)) {
            std::cerr << "engine and oracle disagree\n";
            return 1;
        }
    }
    return 0;
}

// ---- form -------------------------------------------------------------------

int run_form_invariants(const std::string& literal, bool as_json) {
    if (is_herm_literal(literal)) {
        HermForm b = parse_herm_form(literal);
        if (b.ext.base.is_real())
            std::cout << "rank=" << b.rank << " pos=" << b.pos << " neg=" << b.neg << "\n";
        else
            std::cout << "rank=" << b.rank << " det=" << (b.det_is_norm ? "norm" : "nonnorm") << "\n";
        return 0;
    }
    QuadInvariants inv = invariants(parse_quad_form(literal));
    if (as_json) {
        std::cout << invariants_to_json(inv) << "\n";
    } else if (inv.field.is_real()) {
        std::cout << "rank=" << inv.rank << " pos=" << inv.pos << " neg=" << inv.neg << "\n";
    } else {
        std::cout << "rank=" << inv.rank << " det=" << to_string(inv.det)
                  << " hasse=" << to_string(inv.hasse) << "\n";
    }
    return 0;
}

int run_form_equiv(const std::string& lhs, const std::string& rhs) {
    if (is_herm_literal(lhs) || is_herm_literal(rhs))
        return emit_bool(herm_equivalent(parse_herm_form(lhs), parse_herm_form(rhs)));
    return emit_bool(equivalent(parse_quad_form(lhs), parse_quad_form(rhs)));
}

int run_form_mu(const std::string& literal) {
    int k = is_herm_literal(literal) ? herm_mu(parse_herm_form(literal)) : mu(parse_quad_form(literal));
    std::cout << k << "\n";
    return 0;
}

int run_form_witt(const std::string& literal) {
    WittDecomposition w = witt_decompose(parse_quad_form(literal));
    std::cout << "index=" << w.index << " kernel=" << to_string(canonical_form(w.kernel)) << "\n";
    return 0;
}

int run_form_rep(const std::string& literal) {
    QuadForm b = parse_quad_form(literal);
    std::string sep;
    for (const SquareClass& c : rep_set(b)) {
        std::cout << sep << to_string(c);
        sep = " ";
    }
    std::cout << "\n";
    return 0;
}

int run_form_leq(const std::string& lhs, const std::string& rhs) {
    if (is_herm_literal(lhs) || is_herm_literal(rhs))
        return emit_bool(herm_is_subform(parse_herm_form(lhs), parse_herm_form(rhs)));
    return emit_bool(is_subform(parse_quad_form(lhs), parse_quad_form(rhs)));
}

// ---- pair -------------------------------------------------------------------

struct PairArgs {
    std::string family;
    std::string field = "R";
    std::string dims;
    int dim = 1;
    std::string ext;
    std::string bplus, bminus, b;
    long long p = 3;
    std::string format = "plain";
};

QuadExt ext_from_args(const std::string& field_spec, const std::string& ext_tag) {
    LocalField f = parse_field(field_spec);
    if (ext_tag.empty()) {
        if (f.is_real()) return complex_over_real();
        if (f.is_dyadic()) return quad_ext(f, square_class(f, 5));
        return quad_ext(f, square_class(f, f.nonresidue()));
    }
    return quad_ext(f, parse_class_tag(f, ext_tag));
}

PairSpec build_pair_spec(const PairArgs& a) {
    if (a.family == "quaternion") return QuaternionPair{a.p};
    if (a.family == "GLxGL" || a.family == "SLxGL") {
        auto comma = a.dims.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--dims expects d+,d-");
        int dp = std::stoi(a.dims.substr(0, comma));
        int dm = std::stoi(a.dims.substr(comma + 1));
        GroundField f = parse_ground_field(a.field);
        if (a.family == "GLxGL") return GLxGLPair{f, dp, dm};
        return SLxGLPair{f, dp, dm};
    }
    if (a.family == "GL_F_over_E") return GLFOverEPair{ext_from_args(a.field, a.ext), a.dim};
    if (a.family == "SL_F_over_E") return SLFOverEPair{ext_from_args(a.field, a.ext), a.dim};
    if (a.family == "GL_basechange") return GLBasechangePair{ext_from_args(a.field, a.ext), a.dim};
    if (a.family == "SL_basechange") return SLBasechangePair{ext_from_args(a.field, a.ext), a.dim};
    if (a.family == "O") return OPair{parse_quad_form(a.bplus), parse_quad_form(a.bminus)};
    if (a.family == "U") return UPair{parse_herm_form(a.bplus), parse_herm_form(a.bminus)};
    if (a.family == "GL_O") return GLOPair{parse_quad_form(a.b)};
    if (a.family == "GL_U") return GLUPair{parse_herm_form(a.b)};
    throw std::invalid_argument("unknown family: " + a.family);
}

int run_pair(const PairArgs& args) {
    PairSpec spec = build_pair_spec(args);
    Verdict v = classify(spec);
    if (args.format == "json")
        std::cout << verdict_to_json(spec, v) << "\n";
    else if (args.format == "md" || args.format == "markdown")
        std::cout << sweep_to_markdown({SweepRow{spec, v}});
    else
        std::cout << verdict_to_plain(spec, v);
    return 0;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::string family = "all";
    std::string field = "Qp:3";
    int max_rank = 4;
    int max_sig = 2;
    int max_dim = 4;
    std::string ext;
    std::string format = "md";
    std::string out;
    bool check = false;
};

int run_sweep(const SweepArgs& args) {
    GroundField field = parse_ground_field(args.field);
    SweepBounds bounds{args.max_rank, args.max_sig, args.max_dim};
    std::optional<SquareClass> ext_d;
    if (!args.ext.empty()) ext_d = parse_class_tag(field.local(), args.ext);

    std::vector<SweepRow> rows;
    if (args.family == "all") {
        rows = sweep_all(field, bounds);
    } else {
        rows = sweep(parse_family(args.family), field, bounds, ext_d);
    }

    std::string text;
    if (args.format == "json") text = sweep_to_json(rows) + "\n";
    else if (args.format == "csv") text = sweep_to_csv(rows);
    else text = sweep_to_markdown(rows);
    write_out(text, args.out);

    if (args.check) {
        std::vector<std::string> bad = check_sweep(rows);
        for (const std::string& line : bad) std::cerr << "violation: " << line << "\n";
        if (!bad.empty()) return 1;
        std::cerr << "checked " << rows.size() << " rows: consistent\n";
    }
    return 0;
}

// ---- cohom ------------------------------------------------------------------

InvolutiveGroup load_group_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> mul = j.at("mul").get<std::vector<std::vector<int>>>();
    std::vector<int> theta = j.at("theta").get<std::vector<int>>();
    std::vector<int> flat;
    for (const std::vector<int>& row : mul) {
        if (row.size() != names.size()) throw std::invalid_argument("ragged multiplication table");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return InvolutiveGroup::from_tables(std::move(names), std::move(flat), std::move(theta));
}

InvolutiveGroup apply_theta(const InvolutiveGroup& g, const std::string& spec,
                            const std::string& builtin_name) {
    if (spec.empty() || spec == "id") return g.with_theta(theta_identity(g));
    if (spec == "inv") return g.with_theta(theta_inversion(g));
    if (spec == "flip") {
        auto x = builtin_name.find('x');
        if (x == std::string::npos) throw std::invalid_argument("flip needs a product group AxA");
        InvolutiveGroup a = builtin_group(builtin_name.substr(0, x));
        InvolutiveGroup b = builtin_group(builtin_name.substr(x + 1));
        return g.with_theta(theta_flip(a, b));
    }
    if (spec.rfind("ad:", 0) == 0) {
        int h = g.index_of(spec.substr(3));
        if (h < 0) throw std::invalid_argument("no element named " + spec.substr(3));
        return g.with_theta(theta_conjugation(g, h));
    }
    if (spec.rfind("aut:", 0) == 0) {
        std::vector<std::vector<int>> autos = all_involutive_automorphisms(g);
        size_t k = std::stoul(spec.substr(4));
        if (k >= autos.size()) throw std::invalid_argument("automorphism index out of range");
        return g.with_theta(autos[k]);
    }
    throw std::invalid_argument("bad theta spec: " + spec);
}

int run_cohom(const std::string& name, const std::string& file, const std::string& theta_spec) {
    InvolutiveGroup base = file.empty() ? builtin_group(name) : load_group_json(file);
    InvolutiveGroup g = file.empty() ? apply_theta(base, theta_spec, name) : base;

    std::vector<int> s = symmetric_part(g);
    PointedSet coh = h1(g);
    SymmetrizationClasses sym = symmetrization_classes(g);

    std::cout << "group " << (file.empty() ? name : file) << ", order " << g.size() << "\n";
    std::cout << "|H| = " << fixed_points(g).size() << ", |S| = " << s.size() << "\n";
    std::cout << "|H1| = " << coh.classes.size() << "\n";
    for (size_t i = 0; i < coh.classes.size(); ++i) {
        const CohomologyClass& c = coh.classes[i];
        std::cout << "  class " << i << (static_cast<int>(i) == coh.base ? " (base)" : "") << ": rep "
                  << g.name(c.representative) << ", orbit size " << c.orbit.size() << "\n";
    }
    std::cout << "symmetrization bijection G/H -> S0: " << (sym.bijection_ok ? "ok" : "BROKEN") << "\n";

    int stable_count = 0;
    bool agree = true;
    for (int x = 0; x < g.size(); ++x) {
        bool dc = double_coset_stable(g, x);
        if (dc) ++stable_count;
        agree &= dc == centralizer_criterion(g, x);
    }
    std::cout << "stable elements: " << stable_count << "/" << g.size()
              << ", centralizer criterion agrees: " << (agree ? "yes" : "NO") << "\n";
    return agree ? 0 : 1;
}

// ---- oracle -----------------------------------------------------------------

int run_oracle_hilbert(const std::string& field_spec, long long a, long long b) {
    std::cout << to_string(hilbert_oracle(parse_field(field_spec), a, b)) << "\n";
    return 0;
}

int run_oracle_isotropy(const std::string& literal) {
    return emit_bool(isotropy_oracle(parse_quad_form(literal)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local-field square-class calculus and symmetric-pair stability tables"};
    app.require_subcommand(1);

    // hilbert
    std::string h_field, h_a, h_b;
    bool h_oracle = false;
    CLI::App* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol {a,b} over R or Q_p");
    hilbert_cmd->add_option("field", h_field, "R or Qp:<p>")->required();
    hilbert_cmd->add_option("a", h_a, "nonzero rational, e.g. -4 or 9/2")->required();
    hilbert_cmd->add_option("b", h_b)->required();
    hilbert_cmd->add_flag("--oracle", h_oracle, "confirm against the conic search oracle");

    // form
    CLI::App* form_cmd = app.add_subcommand("form", "quadratic/Hermitian form calculator");
    form_cmd->require_subcommand(1);
    std::string f_lit, f_rhs;
    bool f_json = false;
    CLI::App* inv_cmd = form_cmd->add_subcommand("invariants", "rank, det, Hasse / signature");
    inv_cmd->add_option("form", f_lit)->required();
    inv_cmd->add_flag("--json", f_json);
    CLI::App* equiv_cmd = form_cmd->add_subcommand("equiv", "equivalence test (exit 0/1)");
    equiv_cmd->add_option("lhs", f_lit)->required();
    equiv_cmd->add_option("rhs", f_rhs)->required();
    CLI::App* mu_cmd = form_cmd->add_subcommand("mu", "Witt index");
    mu_cmd->add_option("form", f_lit)->required();
    CLI::App* witt_cmd = form_cmd->add_subcommand("witt", "hyperbolic index and anisotropic kernel");
    witt_cmd->add_option("form", f_lit)->required();
    CLI::App* rep_cmd = form_cmd->add_subcommand("rep", "represented square classes");
    rep_cmd->add_option("form", f_lit)->required();
    CLI::App* leq_cmd = form_cmd->add_subcommand("leq", "subform test C <= B (exit 0/1)");
    leq_cmd->add_option("lhs", f_lit)->required();
    leq_cmd->add_option("rhs", f_rhs)->required();

    // pair
    PairArgs pair_args;
    CLI::App* pair_cmd = app.add_subcommand("pair", "classify one symmetric-pair instance");
    pair_cmd
        ->add_option("family", pair_args.family,
                     "GLxGL SLxGL GL_F_over_E SL_F_over_E GL_basechange SL_basechange O U GL_O GL_U quaternion")
        ->required();
    pair_cmd->add_option("--field", pair_args.field, "R, C or Qp:<p>");
    pair_cmd->add_option("--dims", pair_args.dims, "d+,d- for the GLxGL/SLxGL families");
    pair_cmd->add_option("--dim", pair_args.dim, "dimension for the extension families");
    pair_cmd->add_option("--ext", pair_args.ext, "d tag for E = F(sqrt d), e.g. u, p, 5, -1");
    pair_cmd->add_option("--bplus", pair_args.bplus, "qf(...) or hf(...) literal");
    pair_cmd->add_option("--bminus", pair_args.bminus);
    pair_cmd->add_option("--b", pair_args.b, "form literal for GL_O / GL_U");
    pair_cmd->add_option("-p,--prime", pair_args.p, "prime = 3 mod 4 for the quaternion family");
    pair_cmd->add_option("--format", pair_args.format, "plain | json | md");

    // sweep
    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify a whole family range");
    sweep_cmd->add_option("--family", sweep_args.family, "family tag or 'all'");
    sweep_cmd->add_option("--field", sweep_args.field, "R, C or Qp:<p>");
    sweep_cmd->add_option("--max-rank", sweep_args.max_rank, "total rank cap (non-Archimedean forms)");
    sweep_cmd->add_option("--max-sig", sweep_args.max_sig, "per-entry signature cap (real forms)");
    sweep_cmd->add_option("--max-dim", sweep_args.max_dim, "dimension cap (GL/SL families)");
    sweep_cmd->add_option("--ext", sweep_args.ext, "d tag for the extension families");
    sweep_cmd->add_option("--format", sweep_args.format, "md | csv | json");
    sweep_cmd->add_option("--out", sweep_args.out, "write the table to a file");
    sweep_cmd->add_flag("--check", sweep_args.check,
                        "re-assert per-row invariants; nonzero exit on violation");

    // cohom
    std::string c_name, c_file, c_theta;
    CLI::App* cohom_cmd = app.add_subcommand("cohom", "H1 report for a finite group with involution");
    cohom_cmd->add_option("group", c_name, "builtin name, e.g. D4, Q8, S4, S3xS3, Z12");
    cohom_cmd->add_option("--file", c_file, "group JSON: {elements, mul, theta}");
    cohom_cmd->add_option("--theta", c_theta, "id | inv | flip | ad:<element> | aut:<k>");

    // oracle
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force spot checks");
    oracle_cmd->require_subcommand(1);
    std::string o_field, o_form;
    long long o_a = 1, o_b = 1;
    CLI::App* oh_cmd = oracle_cmd->add_subcommand("hilbert", "conic search");
    oh_cmd->add_option("field", o_field)->required();
    oh_cmd->add_option("a", o_a)->required();
    oh_cmd->add_option("b", o_b)->required();
    CLI::App* oi_cmd = oracle_cmd->add_subcommand("isotropy", "primitive-vector search (exit 0/1)");
    oi_cmd->add_option("form", o_form)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hilbert_cmd) return run_hilbert(h_field, h_a, h_b, h_oracle);
        if (*form_cmd) {
            if (*inv_cmd) return run_form_invariants(f_lit, f_json);
            if (*equiv_cmd) return run_form_equiv(f_lit, f_rhs);
            if (*mu_cmd) return run_form_mu(f_lit);
            if (*witt_cmd) return run_form_witt(f_lit);
            if (*rep_cmd) return run_form_rep(f_lit);
            if (*leq_cmd) return run_form_leq(f_lit, f_rhs);
        }
        if (*pair_cmd) return run_pair(pair_args);
        if (*sweep_cmd) return run_sweep(sweep_args);
        if (*cohom_cmd) {
            if (c_name.empty() && c_file.empty())
                throw std::invalid_argument("cohom needs a builtin name or --file");
            return run_cohom(c_name, c_file, c_theta);
        }
        if (*oracle_cmd) {
            if (*oh_cmd) return run_oracle_hilbert(o_field, o_a, o_b);
            if (*oi_cmd) return run_oracle_isotropy(o_form);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
