#include <doctest.h>

#include "rccs/error.hpp"
#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <algorithm>

using namespace rccs;

namespace {

Process R(const char* s) { return parse_process(s); }
Term P(const char* s) { return parse_term(s); }
Label L(const char* s) { return parse_label(s); }

TransitionRecord fwd(std::uint32_t i, const char* l) { return {Direction::Forward, EventId{i}, L(l)}; }
TransitionRecord bwd(std::uint32_t i, const char* l) { return {Direction::Backward, EventId{i}, L(l)}; }

bool has(const std::vector<Transition>& ts, std::uint32_t id, const char* label, const char* target)
{
    return std::any_of(ts.begin(), ts.end(), [&](const Transition& t) {
        return t.id.value == id && t.label == L(label) && congruent(t.target, R(target));
    });
}

std::size_t replay_failure(const Process& src, const std::vector<TransitionRecord>& trace)
{
    try {
        replay(src, trace);
    } catch (const ReplayError& e) {
        return e.step();
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("process syntax round trip")
{
    for (const char* s : {"{} |> a.b + c", "<1,a,b>.*.{} |> 0 | *.<1,a,b>.{} |> c", "({} |> a) \\ a",
                          "<2,!a,0>.<1,b,0>.{} |> (b | c)"}) {
        Process p = R(s);
        CHECK(format_process(p) == s);
        CHECK(R(format_process(p).c_str()) == p);
    }
    CHECK(R("a.b") == Process::thread(Memory{}, P("a.b")));
    CHECK(R("<1,a>.{} |> 0") == R("<1,a,0>.{} |> 0"));
    CHECK_THROWS_AS(R("<1> |> 0"), SyntaxError);
    CHECK_THROWS_AS(R("<1,a,0>.{ |> 0"), SyntaxError);
    CHECK_THROWS_AS(R("<1,tau,0>.{} |> 0"), SyntaxError);
}

TEST_CASE("trace files")
{
    auto t = parse_trace("# comment\n+ 1:a\n\n- 1:a   # undo\n+ 2:tau\n");
    REQUIRE(t.size() == 3);
    CHECK(t[0] == fwd(1, "a"));
    CHECK(t[1] == bwd(1, "a"));
    CHECK(t[2] == fwd(2, "tau"));
    CHECK(format_record(t[1]) == "- 1:a");
    CHECK_THROWS_AS(parse_trace("* 1:a"), InputError);
    CHECK_THROWS_AS(parse_trace("+ x:a"), InputError);
}

TEST_CASE("forward steps")
{
    auto s = fwd_steps(R("a.b + c"));
    CHECK(s.size() == 2);
    CHECK(has(s, 1, "a", "<1,a,c>.{} |> b"));
    CHECK(has(s, 1, "c", "<1,c,a.b>.{} |> 0"));

    s = fwd_steps(R("a"));
    REQUIRE(s.size() == 1);
    CHECK(has(s, 1, "a", "<1,a,0>.{} |> 0"));

    s = fwd_steps(R("a | !a"));
    CHECK(s.size() == 3);
    CHECK(has(s, 1, "tau", "<1,a,0>.*.{} |> 0 | <1,!a,0>.*.{} |> 0"));

    // fresh id avoids every id in use
    s = fwd_steps(R("<1,a,0>.{} |> b"));
    CHECK(has(s, 2, "b", "<2,b,0>.<1,a,0>.{} |> 0"));

    // restricted names only synchronise
    s = fwd_steps(R("(a | !a) \\ a"));
    REQUIRE(s.size() == 1);
    CHECK(s[0].label.is_tau());
    CHECK(fwd_steps(R("(a.b) \\ a")).empty());
    CHECK(fwd_steps(R("0")).empty());
}

TEST_CASE("backward steps")
{
    auto s = bwd_steps(R("<1,a,c>.{} |> b"));
    REQUIRE(s.size() == 1);
    CHECK(has(s, 1, "a", "a.b + c"));
    CHECK(bwd_steps(R("a.b")).empty());

    s = bwd_steps(R("<1,a,0>.*.{} |> 0 | <1,!a,0>.*.{} |> 0"));
    REQUIRE(s.size() == 1);
    CHECK(s[0].label.is_tau());
    CHECK(congruent(s[0].target, R("a | !a")));

    // an event under a fork waits for both branches
    s = bwd_steps(R("*.<1,a,0>.{} |> b | *.<1,a,0>.{} |> c"));
    REQUIRE(s.size() == 1);
    CHECK(has(s, 1, "a", "a.(b | c)"));

    s = bwd_steps(R("<2,a,0>.*.<1,a,b>.{} |> 0 | *.<1,a,b>.{} |> c"));
    REQUIRE(s.size() == 1);
    CHECK(has(s, 2, "a", "*.<1,a,b>.{} |> a | *.<1,a,b>.{} |> c"));
}

TEST_CASE("normal form and congruence")
{
    CHECK(congruent(R("<1,a,0>.{} |> (b | c)"), R("*.<1,a,0>.{} |> b | *.<1,a,0>.{} |> c")));
    CHECK(congruent(R("b + a"), R("a + b")));
    CHECK(congruent(R("<7,a,0>.{} |> 0"), R("<1,a,0>.{} |> 0")));
    CHECK(format_process(normal_form(R("<7,a,0>.{} |> 0"))) == "<1,a,0>.{} |> 0");
    CHECK(congruent(R("<3,a,0>.{} |> 0 | <5,b,0>.{} |> 0"), R("<1,a,0>.{} |> 0 | <2,b,0>.{} |> 0")));
    CHECK(congruent(R("(a | !a) \\ a"), R("(b | !b) \\ b")));
    CHECK(congruent(R("{} |> 0"), R("0")));
    CHECK_FALSE(congruent(R("<1,a,0>.{} |> 0"), R("<1,b,0>.{} |> 0")));
    CHECK_FALSE(congruent(R("a | b"), R("b | a")));
    CHECK_FALSE(congruent(R("(a) \\ a"), R("(a) \\ b")));
    Process p = R("<1,a,0>.{} |> (b | c) \\ b");
    CHECK(normal_form(normal_form(p)) == normal_form(p));
}

TEST_CASE("erase")
{
    CHECK(erase(R("<1,a,0>.{} |> b")) == P("b"));
    CHECK(erase(R("({} |> a) \\ a")) == P("a \\ a"));
    CHECK(erase(R("<1,a,c>.{} |> b | {} |> d")) == P("b | d"));
}

TEST_CASE("origin and coherence")
{
    Process r = R("<2,a,0>.*.<1,a,b>.{} |> 0 | *.<1,a,b>.{} |> c");
    CHECK(congruent(origin(r), R("a.(a | c) + b")));
    CHECK(is_coherent(r));
    CHECK(congruent(origin(R("a.b | c")), R("a.b | c")));

    Process bad = R("*.<1,a,0>.{} |> b | {} |> c");
    CHECK_THROWS_AS(origin(bad), NotCoherent);
    CHECK_FALSE(is_coherent(bad));
    // unmatched synchronisation id
    CHECK_FALSE(is_coherent(R("<1,a,0>.*.{} |> 0 | <1,!b,0>.*.{} |> 0")));
    CHECK_FALSE(is_coherent(R("*.{} |> a")));

    for (const auto& t : fwd_steps(R("(a.b + c) | !a.d"))) CHECK(is_coherent(t.target));

    Rollback rb = rollback(r);
    CHECK(rb.states.size() == rb.steps.size() + 1);
    CHECK(rb.steps.size() == 2);
    CHECK(congruent(rb.states.back(), R("a.(a | c) + b")));
}

TEST_CASE("barbs and contexts")
{
    CHECK(rccs_barbs(R("a.b + b.c")) == std::set<Label>{L("a"), L("b")});
    CHECK(rccs_barbs(R("<1,a,0>.{} |> 0")).empty());
    CHECK(rccs_barbs(R("<1,a,0>.*.{} |> 0 | *.{} |> !a")) == std::set<Label>{L("!a")});

    CHECK(addfork(R("<1,a,0>.{} |> b")) == R("<1,a,0>.*.{} |> b"));
    CHECK(addfork(R("a | b")) == R("*.{} |> (a | b)"));

    CcsContext hole = CcsContext::hole();
    Process r = R("<1,a,0>.{} |> b");
    CHECK(instantiate_context(hole, r) == r);
    CcsContext c = CcsContext::parallel(P("!b"), hole);
    Process cr = instantiate_context(c, r);
    CHECK(cr == R("*.{} |> !b | <1,a,0>.*.{} |> b"));
    CHECK(is_coherent(cr));
    CHECK(congruent(instantiate_context(c, R("d")), R("!b | d")));
    CHECK_FALSE(is_coherent(instantiate_context(c, R("*.<1,a,0>.{} |> b | {} |> c"))));
    CHECK_THROWS_AS(instantiate_context(CcsContext::prefix(L("a"), hole), r), UnsupportedContext);
}

TEST_CASE("replay")
{
    Process a = R("a");
    CHECK(replay(a, {}) == tidy(a));
    CHECK(congruent(replay(a, {fwd(1, "a")}), R("<1,a,0>.{} |> 0")));
    CHECK(replay(a, {fwd(9, "a")}) == R("<9,a,0>.{} |> 0"));
    CHECK(replay_failure(a, {fwd(1, "b")}) == 0);
    CHECK(replay_failure(a, {fwd(1, "a"), fwd(1, "a")}) == 1);
    CHECK(replay_failure(a, {fwd(1, "a"), bwd(2, "a")}) == 1);
    CHECK(replay_failure(R("a | a"), {fwd(1, "a")}) == 0);
    CHECK(congruent(replay(R("a | !a"), {fwd(4, "tau"), bwd(4, "tau")}), R("a | !a")));
}

TEST_CASE("parabolic traces")
{
    Process a = R("a");
    CHECK(rearrange_parabolic(a, {fwd(1, "a")}) == std::vector{fwd(1, "a")});
    CHECK(rearrange_parabolic(a, {fwd(1, "a"), bwd(1, "a")}).empty());
    Process ab = R("a | b");
    CHECK(rearrange_parabolic(ab, {fwd(1, "a"), fwd(2, "b"), bwd(1, "a")}) == std::vector{fwd(2, "b")});

    Process r = R("<1,c,0>.{} |> a.b | {} |> d");
    std::vector trace{fwd(2, "a"), fwd(3, "d"), bwd(2, "a"), bwd(1, "c")};
    auto out = rearrange_parabolic(r, trace);
    CHECK(congruent(replay(r, out), replay(r, trace)));
    auto first_fwd = std::find_if(out.begin(), out.end(),
                                  [](const TransitionRecord& t) { return t.direction == Direction::Forward; });
    CHECK(std::all_of(first_fwd, out.end(),
                      [](const TransitionRecord& t) { return t.direction == Direction::Forward; }));
    CHECK_THROWS_AS(rearrange_parabolic(a, {fwd(1, "b")}), ReplayError);
}

TEST_CASE("loop property on small processes")
{
    for (const char* s : {"a.b + c", "a | !a.b", "(a.b | !a) \\ a", "a.(b | c) + d"}) {
        std::vector<Process> frontier{R(s)};
        for (int depth = 0; depth < 3; ++depth) {
            std::vector<Process> next;
            for (const auto& p : frontier)
                for (const auto& t : fwd_steps(p)) {
                    auto back = bwd_steps(t.target);
                    CHECK(std::any_of(back.begin(), back.end(), [&](const Transition& b) {
                        return b.id == t.id && b.label == t.label && congruent(b.target, p);
                    }));
                    next.push_back(t.target);
                }
            frontier = next;
        }
    }
}
