#include "internal.hpp"

#include "rccs/error.hpp"
#include "rccs/rccs.hpp"

#include <map>
#include <optional>
#include <set>

namespace rccs {

namespace {

// Exhaustive memoised backward exploration. Returns one representative per
// terminal congruence class.
void explore(const Process& r, std::set<std::string>& visited, std::map<std::string, Process>& terminals)
{
    if (!visited.insert(congruence_key(r)).second) return;
    auto steps = bwd_steps(r);
    if (steps.empty()) {
        terminals.emplace(congruence_key(r), r);
        return;
    }
    for (const auto& t : steps) explore(t.target, visited, terminals);
}

Process origin_of_terminal(const Process& terminal)
{
    return Process::thread(Memory{}, erase(terminal));
}

} // namespace

Process origin(const Process& r)
{
    std::set<std::string> visited;
    std::map<std::string, Process> terminals;
    explore(tidy(r), visited, terminals);
    for (const auto& [key, t] : terminals)
        if (!detail::at_origin(t))
            throw NotCoherent("backward reduction is stuck at " + format_process(t));
    if (terminals.size() != 1)
        throw NotCoherent("backward reduction reaches " + std::to_string(terminals.size()) +
                          " non-congruent origins");
    return origin_of_terminal(terminals.begin()->second);
}

bool is_coherent(const Process& r)
{
    try {
        origin(r);
        return true;
    } catch (const NotCoherent&) {
        return false;
    }
}

Rollback rollback(const Process& r)
{
    Rollback out;
    out.states.push_back(tidy(r));
    for (;;) {
        auto steps = bwd_steps(out.states.back());
        if (steps.empty()) break;
        out.steps.push_back(steps.front());
        out.states.push_back(steps.front().target);
    }
    if (!detail::at_origin(out.states.back()))
        throw NotCoherent("backward reduction is stuck at " + format_process(out.states.back()));
    return out;
}

namespace {

Process replay_step(const Process& state, const TransitionRecord& rec, std::size_t index)
{
    std::map<std::string, Process> matches;
    if (rec.direction == Direction::Forward) {
        if (ids(state).count(rec.id))
            throw ReplayError("id " + std::to_string(rec.id.value) + " is already in use", index);
        for (const auto& t : fwd_steps(state)) {
            if (t.label != rec.label) continue;
            Process target = rec.id == t.id ? t.target : rename_id(t.target, t.id, rec.id);
            matches.emplace(congruence_key(target), target);
        }
    } else {
        for (const auto& t : bwd_steps(state))
            if (t.id == rec.id && t.label == rec.label) matches.emplace(congruence_key(t.target), t.target);
    }
    if (matches.empty()) throw ReplayError("no transition matches " + format_record(rec), index);
    if (matches.size() > 1)
        throw ReplayError(std::to_string(matches.size()) + " transitions match " + format_record(rec), index);
    return matches.begin()->second;
}

} // namespace

Process replay(const Process& src, const std::vector<TransitionRecord>& trace)
{
    Process state = tidy(src);
    for (std::size_t k = 0; k < trace.size(); ++k) state = replay_step(state, trace[k], k);
    return state;
}

std::vector<TransitionRecord> rearrange_parabolic(const Process& src, const std::vector<TransitionRecord>& trace)
{
    Process target = replay(src, trace);
    std::vector<TransitionRecord> out = trace;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k + 1 < out.size(); ++k) {
            if (out[k].direction != Direction::Forward || out[k + 1].direction != Direction::Backward) continue;
            if (out[k].id == out[k + 1].id && out[k].label == out[k + 1].label)
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(k), out.begin() + static_cast<std::ptrdiff_t>(k) + 2);
            else
                std::swap(out[k], out[k + 1]);
            changed = true;
            break;
        }
    }
    if (!congruent(replay(src, out), target))
        throw std::logic_error("rearranged trace reaches a different process");
    return out;
}

} // namespace rccs
