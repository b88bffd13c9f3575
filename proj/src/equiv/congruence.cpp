#include "internal.hpp"

#include "rccs/encode.hpp"
#include "rccs/error.hpp"
#include "rccs/rccs.hpp"

#include <map>

namespace rccs {

CcsContext discriminating_context(const ConfStruct& c, const EventSet& x, const std::set<std::string>& avoid)
{
    std::set<std::string> used = avoid;
    std::vector<Term> factors;
    std::size_t counter = 0;
    for (std::size_t e : x.members()) {
        const CsLabel& l = c.label(e);
        if (!l.is_action() || l.is_tau())
            throw TauEventInConfig("event " + c.event(e).id + " is labelled " + l.str() + " and has no complement");
        std::string fresh;
        do fresh = "c" + std::to_string(counter++);
        while (used.count(fresh));
        used.insert(fresh);
        factors.push_back(Term::sum({{l.action().complement(), Term::nil()}, {Label::input(fresh), Term::nil()}}));
    }
    CcsContext out = CcsContext::hole();
    for (std::size_t k = factors.size(); k-- > 0;) out = CcsContext::parallel(factors[k], out);
    return out;
}

std::vector<CcsContext> enumerate_contexts(const std::set<std::string>& names, std::size_t max_prefixes)
{
    std::vector<Label> labels;
    for (const auto& n : names) {
        labels.push_back(Label::input(n));
        labels.push_back(Label::output(n));
    }
    // by_size[k]: terms with exactly k prefixes, one per congruence class
    std::vector<std::vector<Term>> by_size(max_prefixes + 1);
    std::set<std::string> seen;
    auto add = [&](std::size_t k, const Term& t) {
        if (seen.insert(canonical_key(t)).second) by_size[k].push_back(t);
    };
    for (std::size_t k = 1; k <= max_prefixes; ++k) {
        for (const auto& l : labels)
            for (const auto& t : k == 1 ? std::vector<Term>{Term::nil()} : by_size[k - 1]) add(k, Term::prefix(l, t));
        for (std::size_t i = 1; i < k; ++i)
            for (const auto& p : by_size[i])
                for (const auto& q : by_size[k - i]) {
                    if (p.kind() == Term::Kind::Sum && q.kind() == Term::Kind::Sum) {
                        auto ss = p.summands();
                        ss.insert(ss.end(), q.summands().begin(), q.summands().end());
                        add(k, Term::sum(ss));
                    }
                    add(k, Term::parallel(p, q));
                }
    }
    std::vector<CcsContext> out{CcsContext::hole()};
    for (const auto& level : by_size)
        for (const auto& t : level) out.push_back(CcsContext::parallel(t, CcsContext::hole()));
    return out;
}

CongruenceResult bounded_congruence(const Process& r, const Process& s, const std::vector<CcsContext>& contexts)
{
    Process orig_r = origin(r);
    Process orig_s = origin(s);
    CongruenceResult out;
    for (const auto& c : contexts) {
        ++out.contexts_checked;
        BisimResult b = rccs_bfb_bisim(instantiate_context(c, orig_r), instantiate_context(c, orig_s));
        if (!b.verdict.equivalent()) {
            out.verdict = b.verdict;
            out.verdict.reason = "context " + format_context(c) + ": " + b.verdict.reason;
            out.separating = c;
            return out;
        }
    }
    out.verdict.outcome = Outcome::BoundedEquivalent;
    out.verdict.reason = "no separating context among " + std::to_string(out.contexts_checked);
    return out;
}

TheoremReport main_theorem_check(const Term& p, const Term& q, std::size_t depth_bound, bool require_singly_labelled)
{
    ConfStruct a = encode_ccs(p);
    ConfStruct b = encode_ccs(q);
    TheoremReport out;
    out.singly_labelled = is_singly_labelled(a) && is_singly_labelled(b);
    if (require_singly_labelled && !out.singly_labelled)
        throw NotSinglyLabelled("main theorem check needs singly labelled terms");
    out.hhpb = hhpb(a, b);

    std::set<std::string> names = all_names(p);
    for (const auto& n : all_names(q)) names.insert(n);

    std::vector<CcsContext> contexts;
    std::set<std::string> seen;
    auto push = [&](const CcsContext& c) {
        if (seen.insert(format_context(c)).second) contexts.push_back(c);
    };
    for (const ConfStruct* c : {&a, &b})
        for (const auto& x : c->configs()) {
            EventSet visible;
            for (std::size_t e : x.members())
                if (!c->label(e).is_tau()) visible.insert(e);
            push(discriminating_context(*c, visible, names));
        }
    for (const auto& c : enumerate_contexts(names, depth_bound)) push(c);

    Process r = Process::thread(Memory{}, p);
    Process s = Process::thread(Memory{}, q);
    out.congruence = bounded_congruence(r, s, contexts);
    out.agree = out.hhpb.verdict.equivalent() == out.congruence.verdict.equivalent();
    return out;
}

} // namespace rccs
