#pragma once

// Encoding CCS terms and RCCS processes into configuration structures.

#include "rccs/confstruct.hpp"
#include "rccs/process.hpp"
#include "rccs/term.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace rccs {

/// [[0]] = empty, [[a.P]] = a.[[P]], [[P|Q]] = [[P]] | [[Q]], [[P+Q]] = [[P]] + [[Q]]
/// (n-ary sums folded left), [[P\a]] = [[P]] restricted to non-a events, with the
/// events it leaves dead dropped.
ConfStruct encode_ccs(const Term& t);

/// No auto-concurrency and no auto-conflict: distinct events enabled at the same
/// configuration carry distinct labels.
bool is_singly_labelled(const ConfStruct& c);
bool is_singly_labelled(const Term& t);

/// Pairs (i, j) with i strictly below j: i deeper than j in some thread memory,
/// closed transitively (shared synchronisation ids glue threads together).
std::set<std::pair<EventId, EventId>> memory_order(const Process& r);

struct Address {
    ConfStruct structure;
    EventSet at;
    /// Memory id to event of `at`.
    std::map<EventId, std::size_t> id_match;
};

/// Structure of the erased origin and the configuration reached by replaying the
/// reversed rollback. Throws NotCoherent, NotSinglyLabelled, AddressFailure.
Address encode_rccs(const Process& r);
/// As encode_rccs, following a forward trace from `origin` (an empty-memory process).
/// Throws ReplayError, NotSinglyLabelled, AddressFailure.
Address address_along(const Process& origin, const std::vector<TransitionRecord>& forward_trace);

/// Alias of remove_config.
ConfStruct residual(const ConfStruct& c, const EventSet& x);

struct Projection {
    ConfStruct structure;
    /// Image of each event of `structure` in [[p]]; nullopt for context-only events.
    std::vector<std::optional<std::size_t>> map;
};
/// [[C[p]]] with its projection to [[p]] for C a hole or nested P | C'.
/// Throws UnsupportedContext.
Projection projection_context(const CcsContext& c, const Term& p);

} // namespace rccs
