// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance [--criterion ID]   (IDs 1..12 and 3b; all when omitted)

#include "generators.hpp"
#include "properties.hpp"
#include "variants.hpp"

#include "rccs/encode.hpp"
#include "rccs/equiv.hpp"
#include "rccs/error.hpp"
#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace rccs;
using namespace rccs::testing;

namespace {

struct Result {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<Result()> run;
};

ConfStruct enc(const char* s) { return encode_ccs(parse_term(s)); }
Process start(const Term& t) { return Process::thread(Memory{}, t); }

std::size_t level(const std::vector<std::vector<Triple>>& family, std::size_t i)
{
    return i < family.size() ? family[i].size() : 0;
}

bool has_empty_triple(const std::vector<std::vector<Triple>>& family)
{
    return !family.empty() && std::count(family[0].begin(), family[0].end(), Triple{}) == 1;
}

ConfStruct all_a(std::size_t n, std::vector<EventSet> configs)
{
    std::vector<Event> events;
    for (std::size_t k = 0; k < n; ++k) events.push_back({"e" + std::to_string(k + 1), CsLabel(Label::input("a"))});
    return ConfStruct(std::move(events), std::move(configs));
}

Result fail(std::string why) { return {false, std::move(why)}; }

/// Runs `n` samples of a property; stops at the first failure.
Result suite(std::size_t n, const std::function<std::string(std::size_t)>& sample)
{
    for (std::size_t k = 0; k < n; ++k) {
        std::string msg = sample(k);
        if (!msg.empty()) return fail("sample " + std::to_string(k) + ": " + msg);
    }
    return {true, std::to_string(n) + "/" + std::to_string(n) + " samples hold"};
}

Result axiom_counterexamples()
{
    struct Case {
        const char* name;
        ConfStruct c;
        const AxiomResult AxiomReport::*failing;
    };
    std::vector<Case> cases{
        {"coincidence-freeness", all_a(2, {EventSet{}, EventSet{0, 1}}), &AxiomReport::coincidence_freeness},
        {"finite completeness",
         all_a(3, {EventSet{}, EventSet{0}, EventSet{1}, EventSet{2}, EventSet{0, 1}, EventSet{0, 2}, EventSet{1, 2}}),
         &AxiomReport::finite_completeness},
        {"stability",
         all_a(3, {EventSet{}, EventSet{0}, EventSet{1}, EventSet{0, 1}, EventSet{0, 2}, EventSet{1, 2},
                   EventSet{0, 1, 2}}),
         &AxiomReport::stability},
    };
    const std::vector<const AxiomResult AxiomReport::*> all{&AxiomReport::finiteness,
                                                            &AxiomReport::coincidence_freeness,
                                                            &AxiomReport::finite_completeness, &AxiomReport::stability};
    for (const auto& cs : cases) {
        AxiomReport r = validate_axioms(cs.c);
        for (auto ax : all) {
            const AxiomResult& res = r.*ax;
            bool should_fail = ax == cs.failing;
            if (res.pass == should_fail) return fail(std::string(cs.name) + " structure: wrong axiom verdicts");
            if (should_fail && res.configs.empty() && res.events.empty())
                return fail(std::string(cs.name) + " structure: no witness");
        }
    }
    return {true, "each structure fails exactly its axiom, with a witness"};
}

Result encodings()
{
    auto labels = [](const ConfStruct& c) {
        std::multiset<std::string> out;
        for (std::size_t e : c.live_events().members()) out.insert(c.label(e).str());
        return out;
    };
    ConfStruct par = enc("a | b"), sum = enc("a.b + b.a"), choice = enc("a.(a | c) + b");
    std::ostringstream d;
    d << "|C(a|b)|=" << par.configs().size() << " |C(a.b+b.a)|=" << sum.configs().size()
      << " |C(a.(a|c)+b)|=" << choice.configs().size();
    bool ok = par.configs().size() == 4 && sum.configs().size() == 5 && choice.configs().size() == 6 &&
              labels(par) == std::multiset<std::string>{"a", "b"} &&
              labels(sum) == std::multiset<std::string>{"a", "a", "b", "b"} &&
              labels(choice) == std::multiset<std::string>{"a", "a", "b", "c"} &&
              par.contains(EventSet{0, 1}) && validate_axioms(choice).all_pass();
    return {ok, d.str()};
}

std::string describe(const LevelReport& r)
{
    std::ostringstream d;
    d << "|F2|=" << level(r.one_sided.forward, 2) << " |F1|=" << level(r.one_sided.forward, 1)
      << " |F0|=" << level(r.one_sided.forward, 0) << " |B1|=" << level(r.one_sided.backward, 1)
      << " |B2|=" << level(r.one_sided.backward, 2);
    return d.str();
}

Result stratification(const char* left, const char* right)
{
    LevelReport first = forw_backw_levels(enc(left), enc(right));
    LevelReport second = forw_backw_levels(enc("a | b"), enc("a.b + b.a"));
    bool ok1 = level(first.one_sided.forward, 2) == 2 && level(first.one_sided.forward, 1) == 2 &&
               level(first.one_sided.forward, 0) == 0;
    bool ok2 = level(second.one_sided.forward, 2) == 2 && level(second.one_sided.forward, 1) == 2 &&
               has_empty_triple(second.one_sided.forward) && level(second.one_sided.backward, 1) == 2 &&
               level(second.one_sided.backward, 2) == 0;
    return {ok1 && ok2, std::string(left) + " vs " + right + ": " + describe(first) + "; a|b vs a.b+b.a: " +
                            describe(second)};
}

Result hhpb_verdicts()
{
    auto d = hhpb(enc("a | b"), enc("a.b + b.a"));
    if (d.verdict.outcome != Outcome::Distinguished || d.verdict.play.empty() ||
        d.verdict.play.back().direction != Direction::Backward || d.verdict.play.back().answer)
        return fail("a|b vs a.b+b.a is not distinguished by an unanswered backward move");
    ConfStruct two = all_a(2, {EventSet{}, EventSet{0}, EventSet{1}});
    auto e = hhpb(two, two);
    Triple f1{EventSet{0}, EventSet{0}, {{0, 0}}};
    Triple f2{EventSet{0}, EventSet{1}, {{0, 1}}};
    bool has1 = std::count(e.witness.begin(), e.witness.end(), f1) == 1;
    bool has2 = std::count(e.witness.begin(), e.witness.end(), f2) == 1;
    if (e.verdict.outcome != Outcome::Equivalent || !has1 || !has2)
        return fail("two-event structures: witness lacks one of the bijections");
    return {true, "distinguished by backward move; equivalent with " + std::to_string(e.witness.size()) +
                      " witness triples covering both bijections"};
}

Result rccs_address()
{
    Process r = parse_process("<2,a,0>.*.<1,a,b>.{} |> 0 | *.<1,a,b>.{} |> c");
    if (!congruent(origin(r), parse_process("{} |> a.(a | c) + b"))) return fail("wrong origin");
    Address a = encode_rccs(r);
    ConfStruct choice = enc("a.(a | c) + b");
    auto m = iso(a.structure, choice);
    if (!m) return fail("structure is not the encoding of the origin");
    EventSet mapped;
    for (std::size_t e : a.at.members()) mapped.insert(m->at(e));
    std::vector<std::string> names;
    for (std::size_t e : mapped.members()) names.push_back(choice.event(e).id);
    bool ok = mapped.size() == 2 && label_multiset(choice, mapped) == std::multiset<std::string>{"a", "a"} &&
              barbs_at(choice, mapped) == std::vector{Label::input("c")} &&
              causes(a.structure, a.at, a.id_match.at(EventId{1}), a.id_match.at(EventId{2}));
    std::string at = "{";
    for (std::size_t k = 0; k < names.size(); ++k) at += (k ? "," : "") + names[k];
    return {ok, "address " + at + "} in [[a.(a|c)+b]], origin {} |> a.(a | c) + b"};
}

Result correspondence()
{
    Gen gen(601);
    return suite(500, [&](std::size_t) {
        Process r = gen.walk(start(gen.singly_labelled_term(6)), 5, true);
        return check_rccs_correspondence(r);
    });
}

Result parabolic()
{
    Gen gen(701);
    return suite(500, [&](std::size_t) {
        Process src = gen.walk(start(gen.singly_labelled_term(6)), 3, false);
        return check_parabolic(src, gen.mixed_trace(src, 8));
    });
}

Result unique_origin()
{
    Gen gen(801);
    auto o = suite(500, [&](std::size_t) {
        Process r = gen.walk(start(gen.term(6)), 5, true);
        return check_unique_origin(r);
    });
    if (!o.pass) return o;
    if (is_coherent(parse_process("*.<1,a,0>.{} |> b | {} |> c"))) return fail("orphaned fork accepted");
    try {
        origin(parse_process("*.<1,a,0>.{} |> b | {} |> c"));
        return fail("origin of the orphaned fork did not throw");
    } catch (const NotCoherent&) {
    }
    return {true, o.detail + "; orphaned fork rejected"};
}

Result erase_bisimulation()
{
    Gen gen(901);
    return suite(500, [&](std::size_t) { return check_forward_bisim(gen.walk(start(gen.term(6)), 5, true)); });
}

Result cross_oracle()
{
    Gen gen(1001);
    std::size_t equivalent = 0, n = 120;
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<std::string> names{"a", "b"};
        Term p = gen.singly_labelled_term(5, names);
        Term q = k % 3 == 0 ? gen.singly_labelled_term(5, names) : shuffle(p, gen);
        if (k % 3 == 1) q = Term::parallel(q, Term::nil());
        if (k % 6 == 2) q = gen.singly_labelled_term(5, names);
        bool lhs = rccs_bfb_bisim(start(p), start(q)).verdict.equivalent();
        bool rhs = cs_bfb_barbed_bisim(encode_ccs(p), encode_ccs(q)).verdict.equivalent();
        if (lhs != rhs) return fail("disagree on " + format_term(p) + " vs " + format_term(q));
        equivalent += lhs;
    }
    return {true, std::to_string(n) + "/" + std::to_string(n) + " pairs agree (" + std::to_string(equivalent) +
                      " equivalent, " + std::to_string(n - equivalent) + " distinguished)"};
}

Result main_theorem()
{
    struct Pair {
        std::string p, q;
        bool relaxed = false;
    };
    std::vector<Pair> corpus{
        {"a | b", "a.b + b.a"},
        {"a + a.b", "a.b + a.b", true},
        {"a.b + a", "a.b + a.b", true},
        {"a.(b | c)", "a.(b.c + c.b)"},
        {"a.(b | c)", "a.(c | b)"},
        {"a | b", "b | a"},
        {"a.b + c", "c + a.b"},
        {"a", "b"},
        {"a.b", "a.c"},
        {"a | !a", "a.!a + !a.a"},
        {"(a | !a) \\ a", "0"},
        {"a.(b | c) + d", "d + a.(c | b)"},
        {"a.b | c", "c | a.b"},
        {"a.b | c", "a.(b | c) + c.a.b"},
        {"a + b", "a | b"},
        {"a.(b + c)", "a.(c + b)"},
        {"(a | b) \\ c", "a | b"},
        {"(a.c | !a) \\ a", "(!a | a.c) \\ a"},
        {"a.b.c", "a.b.c"},
        {"a.!b | b", "b | a.!b"},
    };
    Gen gen(1101);
    for (int k = 0; k < 6; ++k) {
        Term p = gen.singly_labelled_term(3, {"a", "b"});
        Term q = k % 2 ? shuffle(p, gen) : gen.singly_labelled_term(3, {"a", "b"});
        corpus.push_back({format_term(p), format_term(q)});
    }
    std::size_t equivalent = 0, relaxed = 0;
    for (const auto& pair : corpus) {
        TheoremReport r = main_theorem_check(parse_term(pair.p), parse_term(pair.q), 2, !pair.relaxed);
        if (!r.agree)
            return fail("disagree on " + pair.p + " vs " + pair.q + ": hhpb " + to_string(r.hhpb.verdict.outcome) +
                        ", congruence " + to_string(r.congruence.verdict.outcome));
        if (r.congruence.verdict.outcome == Outcome::BoundedEquivalent) ++equivalent;
        relaxed += pair.relaxed;
    }
    return {true, std::to_string(corpus.size()) + "/" + std::to_string(corpus.size()) + " pairs agree (" +
                      std::to_string(equivalent) + " bounded-equivalent, " +
                      std::to_string(corpus.size() - equivalent) + " distinguished; " + std::to_string(relaxed) +
                      " not singly labelled, checked with the precondition relaxed)"};
}

Result trace_order()
{
    Gen gen(1201);
    std::size_t checked = 0;
    for (std::size_t k = 0; k < 500; ++k) {
        Process r = gen.walk(start(gen.singly_labelled_term(6, {"a", "b", "c", "d"})), 5, k % 2 == 0);
        if (!has_concurrent_past(r)) continue;
        ++checked;
        std::string msg = check_trace_order_independence(r);
        if (!msg.empty()) return fail(msg);
    }
    if (checked < 50) return fail("only " + std::to_string(checked) + " processes with concurrent past events");
    return {true, std::to_string(checked) + "/" + std::to_string(checked) +
                      " processes with concurrent past events give one address"};
}

std::vector<Criterion> criteria()
{
    return {
        {"1", "axiom counterexamples", 1, axiom_counterexamples},
        {"2", "encodings", 1, encodings},
        {"3", "stratification tables (pair as listed)", 1,
         [] { return stratification("a.b + a.b", "a.(a | c) + b"); }},
        {"3b", "stratification tables (pair of the worked example)", 1,
         [] { return stratification("a.b + a", "a.b + a.b"); }},
        {"4", "hhpb verdicts", 1, hhpb_verdicts},
        {"5", "RCCS address", 1, rccs_address},
        {"6", "operational correspondence suite", 120, correspondence},
        {"7", "parabolic trace suite", 60, parabolic},
        {"8", "unique origin suite", 120, unique_origin},
        {"9", "erase bisimulation suite", 120, erase_bisimulation},
        {"10", "checker cross-oracle", 120, cross_oracle},
        {"11", "main theorem desk check", 300, main_theorem},
        {"12", "trace order independence", 120, trace_order},
    };
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    std::string only;
    app.add_option("--criterion", only, "criterion id (1..12, 3b)");
    CLI11_PARSE(app, argc, argv);

    bool all_pass = true, found = false;
    for (const auto& c : criteria()) {
        if (!only.empty() && c.id != only) continue;
        found = true;
        auto t0 = std::chrono::steady_clock::now();
        Result o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass && secs < c.limit_seconds;
        all_pass = all_pass && pass;
        std::cout << "criterion " << c.id << " [" << c.title << "]: " << (pass ? "PASS" : "FAIL") << " -- "
                  << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s, limit "
                  << std::setprecision(0) << c.limit_seconds << " s)" << std::endl;
    }
    if (!found) {
        std::cerr << "unknown criterion " << only << "\n";
        return 2;
    }
    return all_pass ? 0 : 1;
}
