#pragma once

// Property checks shared by the unit tests and the acceptance runner.
// Each returns an empty string on success and a description of the failure otherwise.

#include "rccs/process.hpp"
#include "rccs/term.hpp"

#include <string>
#include <vector>

namespace rccs::testing {

/// Forward steps of r match the CCS steps of its erasure, up to congruence.
std::string check_forward_bisim(const Process& r);
/// Every forward step can be undone back to r, and every backward step redone.
std::string check_loop(const Process& r);
/// Every maximal backward reduction order ends at one origin, up to congruence.
std::string check_unique_origin(const Process& r);
/// The rearranged trace replays, is backward-then-forward and reaches a congruent target.
std::string check_parabolic(const Process& src, const std::vector<TransitionRecord>& trace);
/// The four clauses relating steps of r to steps of its address.
std::string check_rccs_correspondence(const Process& r);
/// Every causally consistent ordering of the forward trace from the origin gives the same address.
std::string check_trace_order_independence(const Process& r);
/// Ids of a forward successor are distinct per thread and shared only by a synchronisation.
std::string check_fresh_ids(const Process& r);

/// Two past events of r are unordered by memory_order.
bool has_concurrent_past(const Process& r);

} // namespace rccs::testing
