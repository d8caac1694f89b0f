#include "sympair/render.hpp"

#include <json.hpp>

namespace sympair {

namespace {

using nlohmann::json;

json spec_params_json(const PairSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            json j;
            if constexpr (std::is_same_v<T, GLxGLPair> || std::is_same_v<T, SLxGLPair>) {
                j["field"] = to_string(s.field);
                j["dim_plus"] = s.dim_plus;
                j["dim_minus"] = s.dim_minus;
            } else if constexpr (std::is_same_v<T, GLFOverEPair> || std::is_same_v<T, SLFOverEPair> ||
                                 std::is_same_v<T, GLBasechangePair> || std::is_same_v<T, SLBasechangePair>) {
                j["field"] = to_string(s.ext.base);
                j["d"] = to_string(s.ext.d);
                j["dim"] = s.dim;
            } else if constexpr (std::is_same_v<T, OPair>) {
                j["bplus"] = to_string(s.bplus);
                j["bminus"] = to_string(s.bminus);
            } else if constexpr (std::is_same_v<T, UPair>) {
                j["bplus"] = to_string(s.bplus);
                j["bminus"] = to_string(s.bminus);
            } else if constexpr (std::is_same_v<T, GLOPair>) {
                j["b"] = to_string(s.b);
            } else if constexpr (std::is_same_v<T, GLUPair>) {
                j["b"] = to_string(s.b);
            } else {
                j["p"] = s.p;
            }
            return j;
        },
        spec);
}

json verdict_json(const PairSpec& spec, const Verdict& v) {
    json j;
    j["family"] = family_tag(spec);
    j["params"] = spec_params_json(spec);
    j["stable"] = to_string(v.stable);
    j["s_stable"] = to_string(v.s_stable);
    j["p_stable"] = to_string(v.p_stable);
    j["gelfand"] = to_string(v.gelfand);
    j["citations"] = v.citations;
    return j;
}

Tri tri_from(const std::string& s) {
    if (s == "yes") return Tri::yes;
    if (s == "no") return Tri::no;
    if (s == "unknown") return Tri::unknown;
    throw std::invalid_argument("bad tri-state value: " + s);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string joined_citations(const Verdict& v) {
    std::string out;
    for (size_t i = 0; i < v.citations.size(); ++i) {
        if (i) out += ";";
        out += v.citations[i];
    }
    return out;
}

}  // namespace

std::string invariants_to_json(const QuadInvariants& inv) {
    json j;
    j["rank"] = inv.rank;
    if (inv.field.is_real()) {
        j["pos"] = inv.pos;
        j["neg"] = inv.neg;
    } else {
        j["det"] = to_string(inv.det);
        j["hasse"] = to_string(inv.hasse);
    }
    return j.dump();
}

std::string verdict_to_json(const PairSpec& spec, const Verdict& v) {
    return verdict_json(spec, v).dump();
}

ParsedVerdict parse_verdict_json(std::string_view text) {
    json j = json::parse(text);
    ParsedVerdict out;
    out.family = j.at("family").get<std::string>();
    out.verdict.stable = tri_from(j.at("stable").get<std::string>());
    out.verdict.s_stable = tri_from(j.at("s_stable").get<std::string>());
    out.verdict.p_stable = tri_from(j.at("p_stable").get<std::string>());
    out.verdict.gelfand = tri_from(j.at("gelfand").get<std::string>());
    out.verdict.citations = j.at("citations").get<std::vector<std::string>>();
    return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& r : rows) arr.push_back(verdict_json(r.spec, r.verdict));
    return arr.dump();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "family,params,stable,s_stable,p_stable,gelfand,citations\n";
    for (const SweepRow& r : rows) {
        out += csv_escape(family_tag(r.spec)) + "," + csv_escape(params_text(r.spec)) + "," +
               to_string(r.verdict.stable) + "," + to_string(r.verdict.s_stable) + "," +
               to_string(r.verdict.p_stable) + "," + to_string(r.verdict.gelfand) + "," +
               csv_escape(joined_citations(r.verdict)) + "\n";
    }
    return out;
}

std::string sweep_to_markdown(const std::vector<SweepRow>& rows) {
    std::string out = "| Pair | Parameters | Stable | S-st. | P-st. | Gelfand | Citations |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const SweepRow& r : rows) {
        out += "| " + family_tag(r.spec) + " | " + params_text(r.spec) + " | " +
               to_string(r.verdict.stable) + " | " + to_string(r.verdict.s_stable) + " | " +
               to_string(r.verdict.p_stable) + " | " + to_string(r.verdict.gelfand) + " | " +
               joined_citations(r.verdict) + " |\n";
    }
    return out;
}

std::string verdict_to_plain(const PairSpec& spec, const Verdict& v) {
    return family_tag(spec) + " " + params_text(spec) + "\n  stable:   " + to_string(v.stable) +
           "\n  s-stable: " + to_string(v.s_stable) + "\n  p-stable: " + to_string(v.p_stable) +
           "\n  gelfand:  " + to_string(v.gelfand) + "\n  cites:    " + joined_citations(v) + "\n";
}

}  // namespace sympair
