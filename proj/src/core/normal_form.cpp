#include "internal.hpp"

#include "rccs/rccs.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace rccs {

namespace detail {

namespace {

using Env = std::map<std::string, std::string>;

std::string lookup(const Env& env, const std::string& n)
{
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
}

Label rename_label(const Label& l, const Env& env)
{
    return l.is_tau() ? l : l.renamed(lookup(env, l.name()));
}

void free_in_process(const Process& p, std::set<std::string>& bound, std::set<std::string>& out)
{
    auto add_term = [&](const Term& t) {
        for (const auto& n : free_names(t))
            if (!bound.count(n)) out.insert(n);
    };
    switch (p.kind()) {
    case Process::Kind::Thread:
        for (const auto& item : p.memory().items)
            if (const auto* e = std::get_if<MemoryEvent>(&item)) {
                if (!e->label.is_tau() && !bound.count(e->label.name())) out.insert(e->label.name());
                add_term(e->alternative);
            }
        add_term(p.code());
        return;
    case Process::Kind::Parallel:
        free_in_process(p.left(), bound, out);
        free_in_process(p.right(), bound, out);
        return;
    case Process::Kind::Restrict: {
        bool fresh = bound.insert(p.bound()).second;
        free_in_process(p.body(), bound, out);
        if (fresh) bound.erase(p.bound());
        return;
    }
    }
}

// Renames binders apart and strips every restriction, recording the binders.
class Extruder {
public:
    explicit Extruder(const Process& r) : avoid_(all_names(r))
    {
        std::set<std::string> bound;
        free_in_process(r, bound, claimed_);
    }

    std::vector<std::string> binders;

    Process process(const Process& p, const Env& env)
    {
        switch (p.kind()) {
        case Process::Kind::Thread: {
            Memory m = p.memory();
            for (auto& item : m.items)
                if (auto* e = std::get_if<MemoryEvent>(&item)) {
                    e->label = rename_label(e->label, env);
                    e->alternative = term(e->alternative, env);
                }
            return Process::thread(std::move(m), term(p.code(), env));
        }
        case Process::Kind::Parallel: return Process::parallel(process(p.left(), env), process(p.right(), env));
        case Process::Kind::Restrict: {
            Env inner = env;
            inner[p.bound()] = bind(p.bound());
            return process(p.body(), inner);
        }
        }
        return p;
    }

    Term term(const Term& t, const Env& env)
    {
        switch (t.kind()) {
        case Term::Kind::Nil: return t;
        case Term::Kind::Sum: {
            std::vector<Term::Summand> out;
            for (const auto& s : t.summands())
                out.push_back({rename_label(s.prefix, env), term(s.continuation, env)});
            return Term::sum(std::move(out));
        }
        case Term::Kind::Parallel: return Term::parallel(term(t.left(), env), term(t.right(), env));
        case Term::Kind::Restrict: {
            Env inner = env;
            inner[t.bound()] = bind(t.bound());
            return term(t.body(), inner);
        }
        }
        return t;
    }

private:
    std::string bind(const std::string& name)
    {
        std::string chosen = name;
        if (claimed_.count(name)) {
            std::set<std::string> avoid = avoid_;
            avoid.insert(claimed_.begin(), claimed_.end());
            chosen = fresh_name(name, avoid);
        }
        claimed_.insert(chosen);
        binders.push_back(chosen);
        return chosen;
    }

    std::set<std::string> avoid_;
    std::set<std::string> claimed_;
};

Process distribute(const Process& p)
{
    switch (p.kind()) {
    case Process::Kind::Thread:
        if (p.code().kind() == Term::Kind::Parallel) {
            Memory forked = p.memory().pushed(Fork{});
            return Process::parallel(distribute(Process::thread(forked, p.code().left())),
                                     distribute(Process::thread(forked, p.code().right())));
        }
        return p;
    case Process::Kind::Parallel: return Process::parallel(distribute(p.left()), distribute(p.right()));
    case Process::Kind::Restrict: return Process::restrict(distribute(p.body()), p.bound());
    }
    return p;
}

Process sort_process(const Process& p)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        Memory m = p.memory();
        for (auto& item : m.items)
            if (auto* e = std::get_if<MemoryEvent>(&item)) e->alternative = sort_sums(e->alternative);
        return Process::thread(std::move(m), sort_sums(p.code()));
    }
    case Process::Kind::Parallel: return Process::parallel(sort_process(p.left()), sort_process(p.right()));
    case Process::Kind::Restrict: return Process::restrict(sort_process(p.body()), p.bound());
    }
    return p;
}

void used_names(const Process& p, std::set<std::string>& out)
{
    auto names = all_names(p);
    out.insert(names.begin(), names.end());
}

Process renumber(const Process& core)
{
    std::map<EventId, EventId> m;
    for (const auto& t : threads(core))
        for (const auto& item : t.memory().items)
            if (const auto* e = std::get_if<MemoryEvent>(&item))
                m.emplace(e->id, EventId{static_cast<std::uint32_t>(m.size() + 1)});
    // Rename through a disjoint range first so that chains like 2->1, 1->2 are safe.
    Process out = core;
    std::uint32_t offset = 0;
    for (const auto& [from, to] : m) offset = std::max({offset, from.value, to.value});
    for (const auto& [from, to] : m) out = rename_id(out, from, EventId{offset + to.value});
    for (const auto& [from, to] : m) out = rename_id(out, EventId{offset + to.value}, to);
    return out;
}

} // namespace

Term sort_sums(const Term& t)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return t;
    case Term::Kind::Sum: {
        std::vector<Term::Summand> ss;
        for (const auto& s : t.summands()) ss.push_back({s.prefix, sort_sums(s.continuation)});
        std::sort(ss.begin(), ss.end(), [](const Term::Summand& a, const Term::Summand& b) {
            if (a.prefix != b.prefix) return a.prefix < b.prefix;
            return compare(a.continuation, b.continuation) < 0;
        });
        return Term::sum(std::move(ss));
    }
    case Term::Kind::Parallel: return Term::parallel(sort_sums(t.left()), sort_sums(t.right()));
    case Term::Kind::Restrict: return Term::restrict(sort_sums(t.body()), t.bound());
    }
    return t;
}

Term rename_names(const Term& t, const std::map<std::string, std::string>& m)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return t;
    case Term::Kind::Sum: {
        std::vector<Term::Summand> ss;
        for (const auto& s : t.summands()) ss.push_back({rename_label(s.prefix, m), rename_names(s.continuation, m)});
        return Term::sum(std::move(ss));
    }
    case Term::Kind::Parallel: return Term::parallel(rename_names(t.left(), m), rename_names(t.right(), m));
    case Term::Kind::Restrict: return Term::restrict(rename_names(t.body(), m), lookup(m, t.bound()));
    }
    return t;
}

Process rename_names(const Process& p, const std::map<std::string, std::string>& m)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        Memory mem = p.memory();
        for (auto& item : mem.items)
            if (auto* e = std::get_if<MemoryEvent>(&item)) {
                e->label = rename_label(e->label, m);
                e->alternative = rename_names(e->alternative, m);
            }
        return Process::thread(std::move(mem), rename_names(p.code(), m));
    }
    case Process::Kind::Parallel: return Process::parallel(rename_names(p.left(), m), rename_names(p.right(), m));
    case Process::Kind::Restrict: return Process::restrict(rename_names(p.body(), m), lookup(m, p.bound()));
    }
    return p;
}

std::vector<Process> threads(const Process& core)
{
    std::vector<Process> out;
    std::vector<Process> stack{core};
    while (!stack.empty()) {
        Process p = stack.back();
        stack.pop_back();
        switch (p.kind()) {
        case Process::Kind::Thread: out.push_back(p); break;
        case Process::Kind::Parallel:
            stack.push_back(p.right());
            stack.push_back(p.left());
            break;
        case Process::Kind::Restrict: stack.push_back(p.body()); break;
        }
    }
    return out;
}

Flat flatten(const Process& r)
{
    Extruder ex(r);
    Process core = ex.process(r, {});
    std::set<std::string> used;
    used_names(core, used);
    Flat f{{}, sort_process(distribute(core))};
    for (const auto& b : ex.binders)
        if (used.count(b)) f.bound.push_back(b);
    return f;
}

Process assemble(const Flat& f)
{
    Process p = f.core;
    for (auto it = f.bound.rbegin(); it != f.bound.rend(); ++it) p = Process::restrict(p, *it);
    return p;
}

} // namespace detail

Process tidy(const Process& r) { return detail::assemble(detail::flatten(r)); }

Process normal_form(const Process& r)
{
    detail::Flat f = detail::flatten(r);
    Process core = detail::renumber(f.core);
    if (f.bound.empty()) return core;

    std::set<std::string> free;
    detail::used_names(core, free);
    for (const auto& b : f.bound) free.erase(b);
    std::vector<std::string> canon;
    for (std::size_t k = 0; canon.size() < f.bound.size(); ++k) {
        std::string c = "h" + std::to_string(k);
        if (!free.count(c)) canon.push_back(c);
    }

    std::vector<std::size_t> perm(f.bound.size());
    std::iota(perm.begin(), perm.end(), 0);
    const bool exhaustive = perm.size() <= 6;
    std::optional<Process> best;
    std::string best_key;
    do {
        std::map<std::string, std::string> m;
        for (std::size_t j = 0; j < perm.size(); ++j) m[f.bound[j]] = canon[perm[j]];
        detail::Flat g{canon, detail::sort_process(detail::rename_names(core, m))};
        Process candidate = detail::assemble(g);
        std::string key = format_process(candidate);
        if (!best || key < best_key) {
            best = candidate;
            best_key = std::move(key);
        }
    } while (exhaustive && std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

std::string congruence_key(const Process& r) { return format_process(normal_form(r)); }

bool congruent(const Process& r, const Process& s) { return congruence_key(r) == congruence_key(s); }

} // namespace rccs
