#pragma once

#include <string>
#include <vector>

namespace qsc {

// A formula whose quoted form fails the engine's cross-checks, together with
// the corrected form used throughout and the oracle values pinning it down.
struct ErrataEntry {
    std::string id;
    std::string location;
    std::string printed_form;
    std::string corrected_form;
    std::vector<std::string> evidence;
};

// All evidence values are recomputed on the spot, so the report doubles as a
// self-test of the corrections.
std::vector<ErrataEntry> errata_report();

}  // namespace qsc
