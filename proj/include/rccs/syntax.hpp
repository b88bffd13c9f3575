#pragma once

// Tokenizer and recursive-descent pieces shared by the CCS and RCCS parsers.

#include "rccs/label.hpp"
#include "rccs/term.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rccs::syntax {

enum class Tok {
    Name,
    Number,
    Dot,
    Bang,
    Bar,
    Plus,
    Backslash,
    LParen,
    RParen,
    LAngle,
    RAngle,
    Comma,
    Star,
    LBrace,
    RBrace,
    Triangle, // "|>"
    End
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

class Cursor {
public:
    explicit Cursor(std::string_view text);

    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool accept(Tok kind);
    Token expect(Tok kind, const char* what);
    [[noreturn]] void fail(const std::string& message) const;
    [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

/// Top-level term: parallel composition level.
Term parse_parallel(Cursor& c);
/// Restriction level: a sum followed by any number of "\ a".
Term parse_restriction(Cursor& c);
Label parse_action(Cursor& c);
std::string parse_name(Cursor& c);

} // namespace rccs::syntax
