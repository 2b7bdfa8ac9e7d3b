#pragma once

#include <string>
#include <vector>

namespace swarmlang {

/// Half-open source range. Lines and columns are 1-based; `endCol` points one
/// past the last character of the range.
struct Span {
    std::string file;
    int startLine = 0;
    int startCol = 0;
    int endLine = 0;
    int endCol = 0;

    bool valid() const { return startLine > 0; }
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;    // "E021", "W001", ...
    std::string message;
    Span span;

    /// Renders as `path:line:col: error[E0xx]: message`.
    std::string format() const;
};

class Diagnostics {
public:
    void error(std::string code, std::string message, Span span) {
        items_.push_back({Severity::Error, std::move(code), std::move(message), std::move(span)});
    }
    void warning(std::string code, std::string message, Span span) {
        items_.push_back({Severity::Warning, std::move(code), std::move(message), std::move(span)});
    }

    bool hasErrors() const {
        for (const auto& d : items_)
            if (d.severity == Severity::Error) return true;
        return false;
    }
    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }

    const std::vector<Diagnostic>& items() const { return items_; }

    /// One formatted diagnostic per line.
    std::string formatAll() const;

private:
    std::vector<Diagnostic> items_;
};

/// A source file handed to the compiler. `text` must be valid UTF-8.
struct SourceUnit {
    std::string path;
    std::string text;
};

}  // namespace swarmlang
