#include "rccs/confstruct.hpp"

namespace rccs {

std::vector<EventSet> causes_in(const ConfStruct& c, const EventSet& x)
{
    std::vector<EventSet> below(c.event_count());
    std::vector<bool> seen(c.event_count(), false);
    for (const auto& z : c.configs()) {
        if (!z.subset_of(x)) continue;
        for (std::size_t e : z.members()) {
            below[e] = seen[e] ? (below[e] & z) : z;
            seen[e] = true;
        }
    }
    return below;
}

bool causes(const ConfStruct& c, const EventSet& x, std::size_t e1, std::size_t e2)
{
    for (const auto& z : c.configs())
        if (z.subset_of(x) && z.contains(e2) && !z.contains(e1)) return false;
    return true;
}

bool immediate_cause(const ConfStruct& c, const EventSet& x, std::size_t e1, std::size_t e2)
{
    if (e1 == e2) return false;
    auto below = causes_in(c, x);
    if (!below[e2].contains(e1)) return false;
    for (std::size_t e3 : x.members())
        if (e3 != e1 && e3 != e2 && below[e3].contains(e1) && below[e2].contains(e3)) return false;
    return true;
}

ConfStruct remove_config(const ConfStruct& c, const EventSet& x)
{
    std::vector<Event> events = c.events();
    std::vector<EventSet> configs;
    for (const auto& y : c.configs())
        if (x.subset_of(y)) configs.push_back(y - x);
    // Removed events stay in the event list but occur in no configuration.
    return ConfStruct(std::move(events), std::move(configs));
}

std::vector<ConfigStep> config_steps(const ConfStruct& c, const EventSet& x)
{
    std::vector<ConfigStep> out;
    for (std::size_t e = 0; e < c.event_count(); ++e) {
        if (x.contains(e)) continue;
        EventSet y = x.with(e);
        if (c.contains(y)) out.push_back({e, y});
    }
    return out;
}

std::vector<ConfigStep> config_backsteps(const ConfStruct& c, const EventSet& x)
{
    std::vector<ConfigStep> out;
    for (std::size_t e : x.members()) {
        EventSet y = x.without(e);
        if (c.contains(y)) out.push_back({e, y});
    }
    return out;
}

std::vector<Label> barbs_at(const ConfStruct& c, const EventSet& x)
{
    std::set<Label> out;
    for (const auto& s : config_steps(c, x)) {
        const CsLabel& l = c.label(s.event);
        if (l.is_action() && !l.is_tau()) out.insert(l.action());
    }
    return {out.begin(), out.end()};
}

bool is_maximal(const ConfStruct& c, const EventSet& x)
{
    for (const auto& y : c.configs())
        if (y.size() > x.size() && x.subset_of(y)) return false;
    return true;
}

bool is_top(const ConfStruct& c, const EventSet& x)
{
    return is_maximal(c, x) && x.size() == c.configs().back().size();
}

std::multiset<std::string> label_multiset(const ConfStruct& c, const EventSet& x)
{
    std::multiset<std::string> out;
    for (std::size_t e : x.members()) out.insert(c.label(e).str());
    return out;
}

} // namespace rccs
