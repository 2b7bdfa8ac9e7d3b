#include "swarmlang/diag.hpp"

#include <sstream>

namespace swarmlang {

std::string Diagnostic::format() const {
    std::ostringstream out;
    out << span.file << ':' << span.startLine << ':' << span.startCol << ": "
        << (severity == Severity::Error ? "error" : "warning") << '[' << code << "]: " << message;
    return out.str();
}

std::string Diagnostics::formatAll() const {
    std::string out;
    for (const auto& d : items_) {
        out += d.format();
        out += '\n';
    }
    return out;
}

}  // namespace swarmlang
