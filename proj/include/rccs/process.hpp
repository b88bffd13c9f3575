#pragma once

#include "rccs/label.hpp"
#include "rccs/term.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rccs {

struct EventId {
    std::uint32_t value = 0;

    friend auto operator<=>(const EventId&, const EventId&) = default;
    friend bool operator==(const EventId&, const EventId&) = default;
};

/// Memory entry <i, alpha, Q>: Q is the discarded sum branch, nil if none.
struct MemoryEvent {
    EventId id;
    Label label;
    Term alternative;

    friend bool operator==(const MemoryEvent&, const MemoryEvent&) = default;
};

/// Fork marker recording a parallel split.
struct Fork {
    friend bool operator==(const Fork&, const Fork&) = default;
};

using MemoryItem = std::variant<MemoryEvent, Fork>;

/// Memory stack. items.front() sits just above the empty base, items.back() is the top.
struct Memory {
    std::vector<MemoryItem> items;

    bool empty() const { return items.empty(); }
    Memory pushed(MemoryItem item) const;
    Memory popped() const;
    const MemoryItem& top() const { return items.back(); }
    bool top_is_fork() const;
    /// Null when the top is a fork or the memory is empty.
    const MemoryEvent* top_event() const;

    friend bool operator==(const Memory&, const Memory&) = default;
};

/// RCCS process: thread (m |> P), parallel, restriction. Immutable.
class Process {
public:
    enum class Kind { Thread, Parallel, Restrict };

    static Process thread(Memory memory, Term code);
    static Process parallel(Process left, Process right);
    static Process restrict(Process body, std::string name);

    Kind kind() const;
    const Memory& memory() const;
    const Term& code() const;
    const Process& left() const;
    const Process& right() const;
    const Process& body() const;
    const std::string& bound() const;

    friend bool operator==(const Process& a, const Process& b);

private:
    struct Node;
    explicit Process(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class Direction { Forward, Backward };

struct TransitionRecord {
    Direction direction;
    EventId id;
    Label label;

    friend bool operator==(const TransitionRecord&, const TransitionRecord&) = default;
};

struct Transition {
    EventId id;
    Label label;
    Process target;
};

/// Parse `<i,l,P>.*.{} |> P | ...`. A text without "|>" is read as a CCS term
/// and wrapped as {} |> P. Throws SyntaxError.
Process parse_process(std::string_view text);
std::string format_process(const Process& p);
std::string format_memory(const Memory& m);

/// One record per non-blank line: "+ i:label" or "- i:label"; '#' starts a comment.
std::vector<TransitionRecord> parse_trace(std::string_view text);
std::string format_record(const TransitionRecord& r);

std::set<EventId> ids(const Process& p);
/// Every name occurring anywhere in p (codes, alternatives, memory labels, binders).
std::set<std::string> all_names(const Process& p);
Process rename_id(const Process& p, EventId from, EventId to);

Term erase(const Process& p);
Process addfork(const Process& p);

} // namespace rccs
