#pragma once

#include <vector>

#include "swarmlang/ast.hpp"
#include "swarmlang/diag.hpp"
#include "swarmlang/token.hpp"

namespace swarmlang {

/// Parses one token stream into a FileUnit. Syntax errors are reported with
/// an expectation message; the parser then recovers at the next top-level
/// `class` keyword and continues, so several classes' errors surface in one
/// run. The token list must end with the EndOfInput sentinel.
FileUnit parseUnit(const std::vector<Token>& tokens, const std::string& path, Diagnostics& diags);

/// Lex + parse every source unit into one program.
Program parseProgram(const std::vector<SourceUnit>& units, Diagnostics& diags);

}  // namespace swarmlang
