#pragma once

#include "qsc/bounds.hpp"
#include "qsc/classify.hpp"
#include "qsc/errata.hpp"
#include "qsc/hilbfn.hpp"
#include "qsc/invariants.hpp"
#include "qsc/scrolls.hpp"

#include <string>
#include <vector>

namespace qsc {

enum class Format { Text, Json, Markdown, Csv };

Format parse_format(const std::string& s);

// Every renderer is deterministic: fixed key order, no timestamps.
std::string render_table(const TableArtifact& t, Format f);
// Emits the system matrix, its determinant and the solution vector; at d = 8
// the one-parameter family.
std::string render_scroll_solution(const Rational& d, Format f);
std::string render_invariants(const InvariantRecord& r, Format f);
std::string render_fourfold_scan(const FourfoldScan& s, Format f);
std::string render_cascade(const CascadeTrace& t, Format f);
std::string render_exclusions(const ExclusionReport& r, Format f);
std::string render_errata(const std::vector<ErrataEntry>& e, Format f);
std::string render_verify(const VerifyReport& r, Format f);
std::string render_presentation_check(const std::string& spec, Format f);
std::string render_liaison(Format f);

}  // namespace qsc
