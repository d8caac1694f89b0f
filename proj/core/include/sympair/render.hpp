// Stable textual renderings of verdicts and sweep tables: a schema-stable
// JSON object per verdict, plus CSV and markdown renderings of the same rows.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sympair/quad_form.hpp"
#include "sympair/stability.hpp"

namespace sympair {

std::string invariants_to_json(const QuadInvariants& inv);

std::string verdict_to_json(const PairSpec& spec, const Verdict& v);

// parsed back from verdict_to_json output; used by round-trip checks
struct ParsedVerdict {
    std::string family;
    Verdict verdict;
};
ParsedVerdict parse_verdict_json(std::string_view text);

std::string sweep_to_json(const std::vector<SweepRow>& rows);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_markdown(const std::vector<SweepRow>& rows);

// one-line plain rendering, e.g. for terminal output
std::string verdict_to_plain(const PairSpec& spec, const Verdict& v);

}  // namespace sympair
