#pragma once

// The reversible LTS, structural congruence and rollback.

#include "rccs/process.hpp"

#include <set>
#include <vector>

namespace rccs {

std::vector<Transition> fwd_steps(const Process& r);
std::vector<Transition> bwd_steps(const Process& r);

/// Restrictions extruded and renamed apart, memories distributed, sums sorted,
/// bound names canonical, ids renumbered by first occurrence.
Process normal_form(const Process& r);
/// As normal_form but keeps ids and binder names; the form the LTS works on.
Process tidy(const Process& r);
/// Canonical text of normal_form(r); equal keys iff congruent.
std::string congruence_key(const Process& r);
bool congruent(const Process& r, const Process& s);

/// Throws NotCoherent.
Process origin(const Process& r);
bool is_coherent(const Process& r);

/// A backward path from r to its origin: states[0] is tidy(r), states.back() has an empty past,
/// and steps[k] leads from states[k] to states[k+1].
struct Rollback {
    std::vector<Process> states;
    std::vector<Transition> steps;
};
/// Throws NotCoherent.
Rollback rollback(const Process& r);

/// Throws ReplayError.
Process replay(const Process& src, const std::vector<TransitionRecord>& trace);
std::vector<TransitionRecord> rearrange_parabolic(const Process& src,
                                                  const std::vector<TransitionRecord>& trace);

std::set<Label> rccs_barbs(const Process& r);

/// Hole gives r; P | C gives *.{} |> P | addfork(C~[r]). Throws UnsupportedContext.
Process instantiate_context(const CcsContext& c, const Process& r);

} // namespace rccs
