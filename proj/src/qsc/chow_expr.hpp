#pragma once

#include "qsc/chow.hpp"

#include <string>

namespace qsc {

// Evaluates ring expressions like "h^2 * h^3", "2*L1 + L2", "(h - L)^2" on
// Q^n. Symbols: h; L (the linear-space class, odd n); L1, L2 (the rulings,
// even n). The unicode lambda spellings are accepted as aliases.
ChowClass eval_chow_expr(int n, const std::string& expr,
                         MiddlePairing pairing = MiddlePairing::Parity);

}  // namespace qsc
