#pragma once

#include <vector>

#include "swarmlang/diag.hpp"
#include "swarmlang/token.hpp"

namespace swarmlang {

/// Splits a source unit into tokens. `//` comments and whitespace are
/// discarded. The returned list always ends with an EndOfInput sentinel,
/// even when diagnostics were reported.
std::vector<Token> tokenize(const SourceUnit& unit, Diagnostics& diags);

bool isSwarmKeyword(const std::string& word);

}  // namespace swarmlang
