#include "rccs/confstruct.hpp"

#include "rccs/error.hpp"

#include <functional>
#include <unordered_set>

namespace rccs {

namespace {

void check_cap(std::size_t events)
{
    if (events > event_cap())
        throw CapacityExceeded("structure needs " + std::to_string(events) + " events, the cap is " +
                               std::to_string(event_cap()) + " (set RCCS_EVENT_CAP to raise it)");
}

EventSet shifted(const EventSet& x, std::size_t by)
{
    EventSet out;
    for (std::size_t e : x.members()) out.insert(e + by);
    return out;
}

using PairFilter = std::function<bool(const CsLabel&, const CsLabel&)>;

// Events are laid out as (e1,*) for every e1, then (*,e2) for every e2, then the
// admitted pairs. Configurations are the sets whose projections are configurations,
// on which both projections are injective, and whose pairs of events are separated
// by such a set below them.
Product product_impl(const ConfStruct& a, const ConfStruct& b, const PairFilter& admit)
{
    const std::size_t n1 = a.event_count();
    const std::size_t n2 = b.event_count();
    std::vector<Event> events;
    Product out;
    for (std::size_t e = 0; e < n1; ++e) {
        events.push_back({"(" + a.event(e).id + ",*)", a.label(e)});
        out.proj1.push_back(e);
        out.proj2.push_back(std::nullopt);
    }
    for (std::size_t e = 0; e < n2; ++e) {
        events.push_back({"(*," + b.event(e).id + ")", b.label(e)});
        out.proj1.push_back(std::nullopt);
        out.proj2.push_back(e);
    }
    std::vector<std::vector<std::optional<std::size_t>>> pair_index(n1, std::vector<std::optional<std::size_t>>(n2));
    for (std::size_t e1 = 0; e1 < n1; ++e1)
        for (std::size_t e2 = 0; e2 < n2; ++e2) {
            if (!admit(a.label(e1), b.label(e2))) continue;
            pair_index[e1][e2] = events.size();
            events.push_back({"(" + a.event(e1).id + "," + b.event(e2).id + ")",
                              CsLabel::pair(a.label(e1), b.label(e2))});
            out.proj1.push_back(e1);
            out.proj2.push_back(e2);
        }
    check_cap(events.size());

    std::unordered_set<EventSet, EventSetHash> candidates;
    for (const auto& y1 : a.configs()) {
        auto m1 = y1.members();
        for (const auto& y2 : b.configs()) {
            EventSet x;
            EventSet used2;
            std::function<void(std::size_t)> match = [&](std::size_t k) {
                if (k == m1.size()) {
                    EventSet full = x;
                    for (std::size_t e2 : (y2 - used2).members()) full.insert(n1 + e2);
                    candidates.insert(full);
                    return;
                }
                std::size_t e1 = m1[k];
                x.insert(e1);
                match(k + 1);
                x.erase(e1);
                for (std::size_t e2 : (y2 - used2).members()) {
                    auto p = pair_index[e1][e2];
                    if (!p) continue;
                    x.insert(*p);
                    used2.insert(e2);
                    match(k + 1);
                    used2.erase(e2);
                    x.erase(*p);
                }
            };
            match(0);
        }
    }

    std::vector<EventSet> pool(candidates.begin(), candidates.end());
    std::vector<EventSet> configs;
    for (const auto& x : pool) {
        std::vector<EventSet> below;
        for (const auto& z : pool)
            if (z.subset_of(x)) below.push_back(z);
        // Each event's membership pattern over the sets below x; equal patterns coincide.
        std::set<std::vector<bool>> patterns;
        auto members = x.members();
        for (std::size_t e : members) {
            std::vector<bool> pattern;
            for (const auto& z : below) pattern.push_back(z.contains(e));
            patterns.insert(std::move(pattern));
        }
        if (patterns.size() == members.size()) configs.push_back(x);
    }
    out.structure = ConfStruct(std::move(events), std::move(configs));
    return out;
}

} // namespace

ConfStruct prefix(const Label& l, const ConfStruct& c)
{
    check_cap(c.event_count() + 1);
    std::vector<Event> events{{"e", CsLabel(l)}};
    for (const auto& e : c.events()) events.push_back({"e." + e.id, e.label});
    std::vector<EventSet> configs{EventSet{}};
    for (const auto& x : c.configs()) configs.push_back(shifted(x, 1).with(0));
    return ConfStruct(std::move(events), std::move(configs));
}

ConfStruct coproduct(const ConfStruct& a, const ConfStruct& b)
{
    check_cap(a.event_count() + b.event_count());
    std::vector<Event> events;
    for (const auto& e : a.events()) events.push_back({"1." + e.id, e.label});
    for (const auto& e : b.events()) events.push_back({"2." + e.id, e.label});
    std::vector<EventSet> configs = a.configs();
    for (const auto& x : b.configs()) configs.push_back(shifted(x, a.event_count()));
    return ConfStruct(std::move(events), std::move(configs));
}

Product product(const ConfStruct& a, const ConfStruct& b)
{
    return product_impl(a, b, [](const CsLabel&, const CsLabel&) { return true; });
}

ConfStruct relabel(const ConfStruct& c, const std::vector<CsLabel>& labels)
{
    if (labels.size() != c.event_count()) throw std::invalid_argument("relabel: one label per event required");
    std::vector<Event> events = c.events();
    for (std::size_t e = 0; e < events.size(); ++e) events[e].label = labels[e];
    return ConfStruct(std::move(events), c.configs());
}

ConfStruct restrict_events(const ConfStruct& c, const EventSet& keep)
{
    std::vector<std::optional<std::size_t>> renumber(c.event_count());
    std::vector<Event> events;
    for (std::size_t e = 0; e < c.event_count(); ++e)
        if (keep.contains(e)) {
            renumber[e] = events.size();
            events.push_back(c.event(e));
        }
    std::vector<EventSet> configs;
    for (const auto& x : c.configs()) {
        if (!x.subset_of(keep)) continue;
        EventSet y;
        for (std::size_t e : x.members()) y.insert(*renumber[e]);
        configs.push_back(y);
    }
    return ConfStruct(std::move(events), std::move(configs));
}

ConfStruct restrict_name(const ConfStruct& c, const std::string& n)
{
    EventSet keep;
    for (std::size_t e = 0; e < c.event_count(); ++e) {
        const CsLabel& l = c.label(e);
        if (!(l.is_action() && !l.is_tau() && l.action().name() == n)) keep.insert(e);
    }
    return restrict_events(c, keep);
}

namespace {

CsLabel synchronised(const CsLabel& l)
{
    if (l.kind() != CsLabel::Kind::Pair) return l;
    const CsLabel& a = l.left();
    const CsLabel& b = l.right();
    if (a.is_action() && b.is_action() && !a.is_tau() && a.action().complements(b.action()))
        return CsLabel(Label::tau());
    return CsLabel::zero();
}

} // namespace

Product parallel_with_projections(const ConfStruct& a, const ConfStruct& b)
{
    // Pairs that relabel to 0 are removed by the final restriction anyway; skipping
    // them up front leaves the restricted structure unchanged.
    Product p = product_impl(a, b, [](const CsLabel& l1, const CsLabel& l2) {
        return synchronised(CsLabel::pair(l1, l2)).kind() != CsLabel::Kind::Zero;
    });
    std::vector<CsLabel> labels;
    EventSet keep;
    for (std::size_t e = 0; e < p.structure.event_count(); ++e) {
        labels.push_back(synchronised(p.structure.label(e)));
        if (labels.back().kind() != CsLabel::Kind::Zero) keep.insert(e);
    }
    Product out;
    out.structure = restrict_events(relabel(p.structure, labels), keep);
    for (std::size_t e : keep.members()) {
        out.proj1.push_back(p.proj1[e]);
        out.proj2.push_back(p.proj2[e]);
    }
    return out;
}

ConfStruct parallel(const ConfStruct& a, const ConfStruct& b)
{
    return parallel_with_projections(a, b).structure;
}

ConfStruct trim(const ConfStruct& c)
{
    return restrict_events(c, c.live_events());
}

} // namespace rccs
