#include "internal.hpp"

#include "rccs/error.hpp"
#include "rccs/rccs.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace rccs {

namespace {

using detail::Flat;

// Replace threads (indexed left to right) of a restriction-free process.
Process replace_threads(const Process& p, const std::map<std::size_t, Process>& repl, std::size_t& next)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        auto it = repl.find(next++);
        return it == repl.end() ? p : it->second;
    }
    case Process::Kind::Parallel: {
        Process l = replace_threads(p.left(), repl, next);
        Process r = replace_threads(p.right(), repl, next);
        return Process::parallel(std::move(l), std::move(r));
    }
    case Process::Kind::Restrict: break;
    }
    throw std::logic_error("restriction inside a flattened core");
}

EventId min_unused(const std::set<EventId>& used)
{
    std::uint32_t v = 1;
    while (used.count(EventId{v})) ++v;
    return EventId{v};
}

Term without(const Term& sum, std::size_t index)
{
    std::vector<Term::Summand> rest;
    for (std::size_t k = 0; k < sum.summands().size(); ++k)
        if (k != index) rest.push_back(sum.summands()[k]);
    return Term::sum(std::move(rest));
}

class Results {
public:
    void add(EventId id, Label label, Process target)
    {
        std::string key = std::to_string(id.value) + " " + label.str() + " " + format_process(target);
        if (!seen_.insert(key).second) return;
        out_.push_back({id, std::move(label), std::move(target)});
    }
    std::vector<Transition> take() { return std::move(out_); }

private:
    std::set<std::string> seen_;
    std::vector<Transition> out_;
};

Process rebuild(const Flat& f, const std::map<std::size_t, Process>& repl)
{
    std::size_t next = 0;
    return tidy(detail::assemble({f.bound, replace_threads(f.core, repl, next)}));
}

// Node of the parallel tree used to find mergeable subtrees for backward steps.
struct TreeNode {
    int left = -1;
    int right = -1;
    std::size_t lo = 0; // thread range [lo, hi)
    std::size_t hi = 0;
    bool mergeable = false;
    Memory memory;
    Term code;
};

int build_tree(const Process& p, std::vector<TreeNode>& nodes, std::size_t& next_thread)
{
    int index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    if (p.kind() == Process::Kind::Thread) {
        TreeNode& n = nodes[index];
        n.lo = next_thread++;
        n.hi = next_thread;
        n.mergeable = true;
        n.memory = p.memory();
        n.code = p.code();
        return index;
    }
    int l = build_tree(p.left(), nodes, next_thread);
    int r = build_tree(p.right(), nodes, next_thread);
    TreeNode& n = nodes[index];
    n.left = l;
    n.right = r;
    n.lo = nodes[l].lo;
    n.hi = nodes[r].hi;
    if (nodes[l].mergeable && nodes[r].mergeable && nodes[l].memory == nodes[r].memory &&
        nodes[l].memory.top_is_fork()) {
        n.mergeable = true;
        n.memory = nodes[l].memory.popped();
        n.code = Term::parallel(nodes[l].code, nodes[r].code);
    }
    return index;
}

Process rebuild_tree(const std::vector<TreeNode>& nodes, int index, const std::vector<Process>& threads,
                     const std::map<int, Process>& repl)
{
    if (auto it = repl.find(index); it != repl.end()) return it->second;
    const TreeNode& n = nodes[index];
    if (n.left < 0) return threads[n.lo];
    return Process::parallel(rebuild_tree(nodes, n.left, threads, repl),
                             rebuild_tree(nodes, n.right, threads, repl));
}

// m |> a.P + Q restored from a node whose merged memory has <i,a,Q> on top.
std::optional<Process> restored(const TreeNode& n)
{
    const MemoryEvent* e = n.memory.top_event();
    const Term& alt = e->alternative;
    if (alt.kind() != Term::Kind::Nil && alt.kind() != Term::Kind::Sum) return std::nullopt;
    std::vector<Term::Summand> ss{{e->label, n.code}};
    ss.insert(ss.end(), alt.summands().begin(), alt.summands().end());
    return Process::thread(n.memory.popped(), Term::sum(std::move(ss)));
}

} // namespace

bool detail::at_origin(const Process& r)
{
    Flat f = detail::flatten(r);
    std::vector<TreeNode> nodes;
    std::size_t next = 0;
    build_tree(f.core, nodes, next);
    return nodes[0].mergeable && nodes[0].memory.empty();
}

std::vector<Transition> fwd_steps(const Process& r)
{
    Flat f = detail::flatten(r);
    std::set<std::string> hidden(f.bound.begin(), f.bound.end());
    auto ts = detail::threads(f.core);
    EventId fresh = min_unused(ids(f.core));
    Results out;

    auto fire = [&](std::size_t k, std::size_t s) {
        const Term& code = ts[k].code();
        const auto& summand = code.summands()[s];
        return Process::thread(ts[k].memory().pushed(MemoryEvent{fresh, summand.prefix, without(code, s)}),
                               summand.continuation);
    };

    for (std::size_t k = 0; k < ts.size(); ++k) {
        if (ts[k].code().kind() != Term::Kind::Sum) continue;
        for (std::size_t s = 0; s < ts[k].code().summands().size(); ++s) {
            const Label& l = ts[k].code().summands()[s].prefix;
            if (hidden.count(l.name())) continue;
            out.add(fresh, l, rebuild(f, {{k, fire(k, s)}}));
        }
    }
    for (std::size_t k1 = 0; k1 < ts.size(); ++k1) {
        if (ts[k1].code().kind() != Term::Kind::Sum) continue;
        for (std::size_t k2 = k1 + 1; k2 < ts.size(); ++k2) {
            if (ts[k2].code().kind() != Term::Kind::Sum) continue;
            const auto& s1 = ts[k1].code().summands();
            const auto& s2 = ts[k2].code().summands();
            for (std::size_t a = 0; a < s1.size(); ++a)
                for (std::size_t b = 0; b < s2.size(); ++b)
                    if (s1[a].prefix.complements(s2[b].prefix))
                        out.add(fresh, Label::tau(), rebuild(f, {{k1, fire(k1, a)}, {k2, fire(k2, b)}}));
        }
    }
    return out.take();
}

std::vector<Transition> bwd_steps(const Process& r)
{
    Flat f = detail::flatten(r);
    std::set<std::string> hidden(f.bound.begin(), f.bound.end());
    auto ts = detail::threads(f.core);
    std::vector<TreeNode> nodes;
    std::size_t next = 0;
    build_tree(f.core, nodes, next);

    // Threads holding each id, and the nodes exposing it on top of a merged memory.
    std::map<EventId, std::vector<std::size_t>> holders;
    for (std::size_t k = 0; k < ts.size(); ++k) {
        std::set<EventId> mine;
        for (const auto& item : ts[k].memory().items)
            if (const auto* e = std::get_if<MemoryEvent>(&item)) mine.insert(e->id);
        for (EventId i : mine) holders[i].push_back(k);
    }
    std::map<EventId, std::vector<int>> exposing;
    for (int n = 0; n < static_cast<int>(nodes.size()); ++n)
        if (nodes[n].mergeable)
            if (const MemoryEvent* e = nodes[n].memory.top_event()) exposing[e->id].push_back(n);

    auto covered = [&](EventId i, std::initializer_list<int> ns) {
        for (std::size_t k : holders[i]) {
            bool inside = false;
            for (int n : ns) inside = inside || (nodes[n].lo <= k && k < nodes[n].hi);
            if (!inside) return false;
        }
        return true;
    };
    auto finish = [&](const std::map<int, Process>& repl) {
        Process core = rebuild_tree(nodes, 0, ts, repl);
        return tidy(detail::assemble({f.bound, core}));
    };

    Results out;
    for (const auto& [i, ns] : exposing) {
        for (int n : ns) {
            const MemoryEvent* e = nodes[n].memory.top_event();
            if (hidden.count(e->label.name()) || !covered(i, {n})) continue;
            if (auto p = restored(nodes[n])) out.add(i, e->label, finish({{n, *p}}));
        }
        for (std::size_t a = 0; a < ns.size(); ++a)
            for (std::size_t b = a + 1; b < ns.size(); ++b) {
                const TreeNode& na = nodes[ns[a]];
                const TreeNode& nb = nodes[ns[b]];
                if (!na.memory.top_event()->label.complements(nb.memory.top_event()->label)) continue;
                if (na.hi > nb.lo && nb.hi > na.lo) continue;
                if (!covered(i, {ns[a], ns[b]})) continue;
                auto pa = restored(na);
                auto pb = restored(nb);
                if (pa && pb) out.add(i, Label::tau(), finish({{ns[a], *pa}, {ns[b], *pb}}));
            }
    }
    return out.take();
}

std::set<Label> rccs_barbs(const Process& r)
{
    std::set<Label> out;
    for (const auto& t : fwd_steps(r))
        if (!t.label.is_tau()) out.insert(t.label);
    return out;
}

Process instantiate_context(const CcsContext& c, const Process& r)
{
    switch (c.kind()) {
    case CcsContext::Kind::Hole: return r;
    case CcsContext::Kind::Parallel:
        return Process::parallel(Process::thread(Memory{}.pushed(Fork{}), c.term()),
                                 addfork(instantiate_context(c.inner(), r)));
    default: break;
    }
    throw UnsupportedContext("only contexts of the form P | [] are supported, got " + format_context(c));
}

} // namespace rccs
