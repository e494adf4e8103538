#pragma once

#include <string>

namespace acmut {

struct SourceSpan {
    int line = 1;    // 1-based
    int column = 1;  // 1-based
};

enum class ParseErrorKind { Syntax, UnknownEntity, DuplicateDeclaration };

std::string to_string(ParseErrorKind kind);

struct ParseError {
    SourceSpan span;
    ParseErrorKind kind = ParseErrorKind::Syntax;
    std::string message;
};

// "line:column: kind: message"
std::string format_error(const ParseError& error);

}  // namespace acmut
