#include "rccs/encode.hpp"

#include "rccs/error.hpp"
#include "rccs/rccs.hpp"

namespace rccs {

namespace {

void collect_memories(const Process& p, std::vector<Memory>& out)
{
    switch (p.kind()) {
    case Process::Kind::Thread: out.push_back(p.memory()); return;
    case Process::Kind::Parallel:
        collect_memories(p.left(), out);
        collect_memories(p.right(), out);
        return;
    case Process::Kind::Restrict: collect_memories(p.body(), out); return;
    }
}

struct Step {
    EventId id;
    Label label;
    Process after;
};

Address walk(const Process& origin, const std::vector<Step>& steps)
{
    Term start = erase(origin);
    Address a{encode_ccs(start), {}, {}};
    if (!is_singly_labelled(a.structure))
        throw NotSinglyLabelled(format_term(start) + " is not singly labelled");
    const ConfStruct& c = a.structure;

    for (std::size_t k = 0; k < steps.size(); ++k) {
        const Step& s = steps[k];
        auto order = memory_order(s.after);
        ConfStruct target = encode_ccs(erase(s.after));
        std::vector<std::size_t> found;
        for (const auto& ext : config_steps(c, a.at)) {
            if (c.label(ext.event) != CsLabel(s.label)) continue;
            bool agree = true;
            for (const auto& [j, f] : a.id_match)
                agree = agree && (order.count({j, s.id}) != 0) == causes(c, ext.target, f, ext.event);
            if (!agree) continue;
            if (!iso(remove_config(c, ext.target), target)) continue;
            found.push_back(ext.event);
        }
        if (found.size() != 1)
            throw AddressFailure("step " + std::to_string(k) + " (" + std::to_string(s.id.value) + ":" +
                                 s.label.str() + "): " + std::to_string(found.size()) + " candidate events at " +
                                 format_config(c, a.at));
        a.at.insert(found.front());
        a.id_match[s.id] = found.front();
    }
    return a;
}

} // namespace

std::set<std::pair<EventId, EventId>> memory_order(const Process& r)
{
    std::vector<Memory> memories;
    collect_memories(r, memories);
    std::set<std::pair<EventId, EventId>> order;
    std::set<EventId> all;
    for (const auto& m : memories) {
        std::vector<EventId> stack;
        for (const auto& item : m.items)
            if (const auto* e = std::get_if<MemoryEvent>(&item)) {
                for (EventId below : stack)
                    if (below != e->id) order.insert({below, e->id});
                stack.push_back(e->id);
                all.insert(e->id);
            }
    }
    for (EventId k : all)
        for (EventId i : all)
            if (order.count({i, k}))
                for (EventId j : all)
                    if (order.count({k, j})) order.insert({i, j});
    return order;
}

Address encode_rccs(const Process& r)
{
    Rollback rb = rollback(r);
    std::vector<Step> steps;
    for (std::size_t k = rb.steps.size(); k-- > 0;)
        steps.push_back({rb.steps[k].id, rb.steps[k].label, rb.states[k]});
    return walk(rb.states.back(), steps);
}

Address address_along(const Process& origin, const std::vector<TransitionRecord>& forward_trace)
{
    if (!ids(origin).empty()) throw InputError("the origin of a trace must have an empty memory");
    std::vector<Step> steps;
    Process state = tidy(origin);
    for (std::size_t k = 0; k < forward_trace.size(); ++k) {
        const auto& rec = forward_trace[k];
        if (rec.direction != Direction::Forward) throw ReplayError("backward record in a forward trace", k);
        try {
            state = replay(state, {rec});
        } catch (const ReplayError& e) {
            std::string what = e.what();
            throw ReplayError(what.substr(what.find(": ") + 2), k);
        }
        steps.push_back({rec.id, rec.label, state});
    }
    return walk(origin, steps);
}

} // namespace rccs
