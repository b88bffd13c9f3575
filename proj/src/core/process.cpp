#include "rccs/process.hpp"

#include "rccs/error.hpp"
#include "rccs/parse.hpp"
#include "rccs/syntax.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace rccs {

Memory Memory::pushed(MemoryItem item) const
{
    Memory m = *this;
    m.items.push_back(std::move(item));
    return m;
}

Memory Memory::popped() const
{
    Memory m = *this;
    if (!m.items.empty()) m.items.pop_back();
    return m;
}

bool Memory::top_is_fork() const
{
    return !items.empty() && std::holds_alternative<Fork>(items.back());
}

const MemoryEvent* Memory::top_event() const
{
    if (items.empty()) return nullptr;
    return std::get_if<MemoryEvent>(&items.back());
}

// ---------------------------------------------------------------------------

struct Process::Node {
    Kind kind = Kind::Thread;
    Memory memory;
    Term code;
    std::optional<Process> left;
    std::optional<Process> right;
    std::string name;
};

Process Process::thread(Memory memory, Term code)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Thread;
    node->memory = std::move(memory);
    node->code = std::move(code);
    return Process(std::move(node));
}

Process Process::parallel(Process left, Process right)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Parallel;
    node->left = std::move(left);
    node->right = std::move(right);
    return Process(std::move(node));
}

Process Process::restrict(Process body, std::string name)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Restrict;
    node->left = std::move(body);
    node->name = std::move(name);
    return Process(std::move(node));
}

Process::Kind Process::kind() const { return node_->kind; }

const Memory& Process::memory() const
{
    if (kind() != Kind::Thread) throw std::logic_error("not a thread");
    return node_->memory;
}

const Term& Process::code() const
{
    if (kind() != Kind::Thread) throw std::logic_error("not a thread");
    return node_->code;
}

const Process& Process::left() const
{
    if (kind() != Kind::Parallel) throw std::logic_error("not a parallel process");
    return *node_->left;
}

const Process& Process::right() const
{
    if (kind() != Kind::Parallel) throw std::logic_error("not a parallel process");
    return *node_->right;
}

const Process& Process::body() const
{
    if (kind() != Kind::Restrict) throw std::logic_error("not a restriction");
    return *node_->left;
}

const std::string& Process::bound() const
{
    if (kind() != Kind::Restrict) throw std::logic_error("not a restriction");
    return node_->name;
}

bool operator==(const Process& a, const Process& b)
{
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Process::Kind::Thread: return a.memory() == b.memory() && a.code() == b.code();
    case Process::Kind::Parallel: return a.left() == b.left() && a.right() == b.right();
    case Process::Kind::Restrict: return a.bound() == b.bound() && a.body() == b.body();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using syntax::Cursor;
using syntax::Tok;
using syntax::Token;

Memory parse_memory(Cursor& c)
{
    std::vector<MemoryItem> top_first;
    while (true) {
        if (c.accept(Tok::LBrace)) {
            c.expect(Tok::RBrace, "'}'");
            break;
        }
        if (c.accept(Tok::Star)) {
            top_first.push_back(Fork{});
        } else if (c.accept(Tok::LAngle)) {
            Token num = c.expect(Tok::Number, "an event identifier");
            unsigned long value = 0;
            try {
                value = std::stoul(num.text);
            } catch (const std::exception&) {
                c.fail_at("identifier out of range", num.offset);
            }
            if (value > 0xffffffffUL) c.fail_at("identifier out of range", num.offset);
            c.expect(Tok::Comma, "','");
            Label l = syntax::parse_action(c);
            Term alt;
            if (c.accept(Tok::Comma)) alt = syntax::parse_parallel(c);
            c.expect(Tok::RAngle, "'>'");
            top_first.push_back(MemoryEvent{EventId{static_cast<std::uint32_t>(value)}, l, alt});
        } else {
            c.fail("expected a memory item");
        }
        if (c.peek().kind == Tok::Triangle) break;
        c.expect(Tok::Dot, "'.'");
    }
    Memory m;
    m.items.assign(top_first.rbegin(), top_first.rend());
    return m;
}

Process parse_proc_parallel(Cursor& c);

Process parse_proc_atom(Cursor& c)
{
    if (c.accept(Tok::LParen)) {
        Process p = parse_proc_parallel(c);
        c.expect(Tok::RParen, "')'");
        return p;
    }
    Memory m = parse_memory(c);
    c.expect(Tok::Triangle, "'|>'");
    Term code = syntax::parse_restriction(c);
    return Process::thread(std::move(m), std::move(code));
}

Process parse_proc_restriction(Cursor& c)
{
    Process p = parse_proc_atom(c);
    while (c.accept(Tok::Backslash)) p = Process::restrict(std::move(p), syntax::parse_name(c));
    return p;
}

Process parse_proc_parallel(Cursor& c)
{
    Process p = parse_proc_restriction(c);
    while (c.accept(Tok::Bar)) p = Process::parallel(std::move(p), parse_proc_restriction(c));
    return p;
}

} // namespace

Process parse_process(std::string_view text)
{
    if (text.find("|>") == std::string_view::npos) return Process::thread(Memory{}, parse_term(text));
    Cursor c(text);
    Process p = parse_proc_parallel(c);
    c.expect(Tok::End, "end of input");
    return p;
}

// ---------------------------------------------------------------------------
// Printing

std::string format_memory(const Memory& m)
{
    std::string out;
    for (auto it = m.items.rbegin(); it != m.items.rend(); ++it) {
        if (std::holds_alternative<Fork>(*it)) {
            out += "*.";
        } else {
            const auto& e = std::get<MemoryEvent>(*it);
            out += "<" + std::to_string(e.id.value) + "," + e.label.str() + "," +
                   format_term(e.alternative) + ">.";
        }
    }
    return out + "{}";
}

namespace {

std::string format_code(const Term& t)
{
    std::string s = format_term(t);
    return t.kind() == Term::Kind::Parallel ? "(" + s + ")" : s;
}

std::string format_proc(const Process& p, int level)
{
    switch (p.kind()) {
    case Process::Kind::Thread: return format_memory(p.memory()) + " |> " + format_code(p.code());
    case Process::Kind::Parallel: {
        std::string s = format_proc(p.left(), 0) + " | " + format_proc(p.right(), 1);
        return level > 0 ? "(" + s + ")" : s;
    }
    case Process::Kind::Restrict:
        if (p.body().kind() == Process::Kind::Restrict)
            return format_proc(p.body(), 1) + " \\ " + p.bound();
        return "(" + format_proc(p.body(), 0) + ") \\ " + p.bound();
    }
    return {};
}

} // namespace

std::string format_process(const Process& p) { return format_proc(p, 0); }

// ---------------------------------------------------------------------------
// Traces

std::vector<TransitionRecord> parse_trace(std::string_view text)
{
    std::vector<TransitionRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        auto bad = [&](const std::string& why) {
            return InputError("trace line " + std::to_string(line_no) + ": " + why);
        };
        if (line[0] != '+' && line[0] != '-') throw bad("expected '+' or '-'");
        Direction dir = line[0] == '+' ? Direction::Forward : Direction::Backward;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw bad("expected 'id:label'");
        std::string id_text = line.substr(1, colon - 1);
        auto s = id_text.find_first_not_of(" \t");
        if (s == std::string::npos) throw bad("missing identifier");
        id_text = id_text.substr(s, id_text.find_last_not_of(" \t") - s + 1);
        if (id_text.find_first_not_of("0123456789") != std::string::npos || id_text.size() > 9)
            throw bad("bad identifier '" + id_text + "'");
        Label l = Label::tau();
        try {
            l = parse_label(line.substr(colon + 1));
        } catch (const SyntaxError& e) {
            throw bad(e.what());
        }
        out.push_back({dir, EventId{static_cast<std::uint32_t>(std::stoul(id_text))}, l});
    }
    return out;
}

std::string format_record(const TransitionRecord& r)
{
    return std::string(r.direction == Direction::Forward ? "+ " : "- ") + std::to_string(r.id.value) + ":" +
           r.label.str();
}

// ---------------------------------------------------------------------------
// Queries and simple maps

namespace {

void collect_ids(const Process& p, std::set<EventId>& out)
{
    switch (p.kind()) {
    case Process::Kind::Thread:
        for (const auto& item : p.memory().items)
            if (const auto* e = std::get_if<MemoryEvent>(&item)) out.insert(e->id);
        return;
    case Process::Kind::Parallel:
        collect_ids(p.left(), out);
        collect_ids(p.right(), out);
        return;
    case Process::Kind::Restrict: collect_ids(p.body(), out); return;
    }
}

void collect_names(const Process& p, std::set<std::string>& out)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        for (const auto& item : p.memory().items)
            if (const auto* e = std::get_if<MemoryEvent>(&item)) {
                out.insert(e->label.name());
                auto alt = rccs::all_names(e->alternative);
                out.insert(alt.begin(), alt.end());
            }
        auto code = rccs::all_names(p.code());
        out.insert(code.begin(), code.end());
        return;
    }
    case Process::Kind::Parallel:
        collect_names(p.left(), out);
        collect_names(p.right(), out);
        return;
    case Process::Kind::Restrict:
        out.insert(p.bound());
        collect_names(p.body(), out);
        return;
    }
}

} // namespace

std::set<EventId> ids(const Process& p)
{
    std::set<EventId> out;
    collect_ids(p, out);
    return out;
}

std::set<std::string> all_names(const Process& p)
{
    std::set<std::string> out;
    collect_names(p, out);
    return out;
}

Process rename_id(const Process& p, EventId from, EventId to)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        Memory m = p.memory();
        for (auto& item : m.items)
            if (auto* e = std::get_if<MemoryEvent>(&item); e && e->id == from) e->id = to;
        return Process::thread(std::move(m), p.code());
    }
    case Process::Kind::Parallel:
        return Process::parallel(rename_id(p.left(), from, to), rename_id(p.right(), from, to));
    case Process::Kind::Restrict: return Process::restrict(rename_id(p.body(), from, to), p.bound());
    }
    return p;
}

Term erase(const Process& p)
{
    switch (p.kind()) {
    case Process::Kind::Thread: return p.code();
    case Process::Kind::Parallel: return Term::parallel(erase(p.left()), erase(p.right()));
    case Process::Kind::Restrict: return Term::restrict(erase(p.body()), p.bound());
    }
    return {};
}

Process addfork(const Process& p)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        Memory m = p.memory();
        m.items.insert(m.items.begin(), Fork{});
        return Process::thread(std::move(m), p.code());
    }
    case Process::Kind::Parallel: return Process::parallel(addfork(p.left()), addfork(p.right()));
    case Process::Kind::Restrict: return Process::restrict(addfork(p.body()), p.bound());
    }
    return p;
}

} // namespace rccs
