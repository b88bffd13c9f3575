#include "rccs/parse.hpp"

#include "rccs/error.hpp"
#include "rccs/syntax.hpp"

#include <cctype>

namespace rccs::syntax {

namespace {

bool name_start(char ch) { return ch >= 'a' && ch <= 'z'; }
bool name_char(char ch)
{
    return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
}

} // namespace

Cursor::Cursor(std::string_view text)
{
    std::size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (name_start(ch)) {
            while (i < text.size() && name_char(text[i])) ++i;
            tokens_.push_back({Tok::Name, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            tokens_.push_back({Tok::Number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (ch) {
        case '.': kind = Tok::Dot; break;
        case '!': kind = Tok::Bang; break;
        case '|':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                kind = Tok::Triangle;
                len = 2;
            } else {
                kind = Tok::Bar;
            }
            break;
        case '+': kind = Tok::Plus; break;
        case '\\': kind = Tok::Backslash; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '<': kind = Tok::LAngle; break;
        case '>': kind = Tok::RAngle; break;
        case ',': kind = Tok::Comma; break;
        case '*': kind = Tok::Star; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        default:
            throw SyntaxError(std::string("unexpected character '") + ch + "'", i);
        }
        tokens_.push_back({kind, std::string(text.substr(i, len)), i});
        i += len;
    }
    tokens_.push_back({Tok::End, "", text.size()});
}

const Token& Cursor::peek(std::size_t ahead) const
{
    std::size_t k = pos_ + ahead;
    return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

Token Cursor::next()
{
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
}

bool Cursor::accept(Tok kind)
{
    if (peek().kind != kind) return false;
    next();
    return true;
}

Token Cursor::expect(Tok kind, const char* what)
{
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
}

void Cursor::fail(const std::string& message) const
{
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.offset);
}

void Cursor::fail_at(const std::string& message, std::size_t offset) const
{
    throw SyntaxError(message, offset);
}

std::string parse_name(Cursor& c)
{
    if (c.peek().kind != Tok::Name) c.fail("expected a name");
    if (c.peek().text == "tau") c.fail("tau is not a legal name here");
    return c.next().text;
}

Label parse_action(Cursor& c)
{
    if (c.accept(Tok::Bang)) return Label::output(parse_name(c));
    return Label::input(parse_name(c));
}

namespace {

Term parse_atom(Cursor& c)
{
    const Token& t = c.peek();
    switch (t.kind) {
    case Tok::Number:
        if (t.text != "0") c.fail("expected 0");
        c.next();
        return Term::nil();
    case Tok::LParen: {
        c.next();
        Term inner = parse_parallel(c);
        c.expect(Tok::RParen, "')'");
        return inner;
    }
    case Tok::Name:
    case Tok::Bang: {
        Label l = parse_action(c);
        Term cont;
        if (c.accept(Tok::Dot)) cont = parse_atom(c);
        return Term::prefix(std::move(l), std::move(cont));
    }
    default: c.fail("expected a term");
    }
}

Term parse_sum(Cursor& c)
{
    std::size_t first_offset = c.peek().offset;
    Term first = parse_atom(c);
    if (c.peek().kind != Tok::Plus) return first;
    if (first.kind() != Term::Kind::Sum) c.fail_at("summands must be prefixed", first_offset);
    std::vector<Term::Summand> summands = first.summands();
    while (c.accept(Tok::Plus)) {
        std::size_t offset = c.peek().offset;
        Term next = parse_atom(c);
        if (next.kind() != Term::Kind::Sum) c.fail_at("summands must be prefixed", offset);
        summands.insert(summands.end(), next.summands().begin(), next.summands().end());
    }
    return Term::sum(std::move(summands));
}

} // namespace

Term parse_restriction(Cursor& c)
{
    Term t = parse_sum(c);
    while (c.accept(Tok::Backslash)) t = Term::restrict(std::move(t), parse_name(c));
    return t;
}

Term parse_parallel(Cursor& c)
{
    Term t = parse_restriction(c);
    while (c.accept(Tok::Bar)) t = Term::parallel(std::move(t), parse_restriction(c));
    return t;
}

} // namespace rccs::syntax

namespace rccs {

Term parse_term(std::string_view text)
{
    syntax::Cursor c(text);
    Term t = syntax::parse_parallel(c);
    c.expect(syntax::Tok::End, "end of input");
    return t;
}

Label parse_label(std::string_view text)
{
    syntax::Cursor c(text);
    if (c.peek().kind == syntax::Tok::Name && c.peek().text == "tau") {
        c.next();
        c.expect(syntax::Tok::End, "end of input");
        return Label::tau();
    }
    Label l = syntax::parse_action(c);
    c.expect(syntax::Tok::End, "end of input");
    return l;
}

} // namespace rccs
