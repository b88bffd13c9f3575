#include <doctest.h>

#include "rccs/encode.hpp"
#include "rccs/equiv.hpp"
#include "rccs/error.hpp"
#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <algorithm>

using namespace rccs;

namespace {

ConfStruct enc(const char* s) { return encode_ccs(parse_term(s)); }
Term P(const char* s) { return parse_term(s); }
Process R(const char* s) { return parse_process(s); }

ConfStruct two_a_singletons(bool with_pair)
{
    std::vector<Event> events{{"x", CsLabel(Label::input("a"))}, {"y", CsLabel(Label::input("a"))}};
    std::vector<EventSet> configs{EventSet{}, EventSet{0}, EventSet{1}};
    if (with_pair) configs.push_back(EventSet{0, 1});
    return ConfStruct(events, configs);
}

std::size_t level_size(const std::vector<std::vector<Triple>>& family, std::size_t i)
{
    return i < family.size() ? family[i].size() : 0;
}

} // namespace

TEST_CASE("hhpb verdicts")
{
    auto zero = hhpb(ConfStruct(), ConfStruct());
    CHECK(zero.verdict.outcome == Outcome::Equivalent);
    CHECK(zero.witness == std::vector{Triple{}});

    auto d = hhpb(enc("a | b"), enc("a.b + b.a"));
    CHECK(d.verdict.outcome == Outcome::Distinguished);
    REQUIRE_FALSE(d.verdict.play.empty());
    CHECK(d.verdict.play.back().direction == Direction::Backward);
    CHECK_FALSE(d.verdict.play.back().answer.has_value());
    CHECK(d.witness.empty());

    ConfStruct left = two_a_singletons(false);
    ConfStruct right = two_a_singletons(false);
    auto e = hhpb(left, right);
    CHECK(e.verdict.outcome == Outcome::Equivalent);
    Triple f1{EventSet{0}, EventSet{0}, {{0, 0}}};
    Triple f2{EventSet{0}, EventSet{1}, {{0, 1}}};
    CHECK(std::count(e.witness.begin(), e.witness.end(), f1) == 1);
    CHECK(std::count(e.witness.begin(), e.witness.end(), f2) == 1);
    for (const auto& t : e.witness) CHECK(is_matching(left, right, t, true));

    CHECK_FALSE(hhpb(two_a_singletons(true), right).verdict.equivalent());
    CHECK(hhpb(enc("a.(b | c)"), enc("a.(c | b)")).verdict.equivalent());
    CHECK_FALSE(hhpb(enc("a.(b | c)"), enc("a.(b.c + c.b)")).verdict.equivalent());
    CHECK_FALSE(hhpb(enc("a"), enc("b")).verdict.equivalent());
}

TEST_CASE("hhpb is symmetric and invariant under iso")
{
    std::vector<const char*> terms{"a | b", "a.b + b.a", "a.(b + c)", "a.b + a.c", "(a | !a) \\ a", "a + a"};
    for (const char* p : terms)
        for (const char* q : terms) {
            CAPTURE(p);
            CAPTURE(q);
            bool pq = hhpb(enc(p), enc(q)).verdict.equivalent();
            CHECK(pq == hhpb(enc(q), enc(p)).verdict.equivalent());
            CHECK(pq == hhpb(enc(p), coproduct(ConfStruct(), enc(q))).verdict.equivalent());
            if (pq)
                for (const auto& t : hhpb(enc(p), enc(q)).witness) CHECK(t.x1.size() == t.x2.size());
        }
}

TEST_CASE("levels for a.b+a vs a.b+a.b")
{
    auto r = forw_backw_levels(enc("a.b + a"), enc("a.b + a.b"));
    CHECK(level_size(r.one_sided.forward, 2) == 2);
    CHECK(level_size(r.one_sided.forward, 1) == 2);
    CHECK(level_size(r.one_sided.forward, 0) == 0);
}

TEST_CASE("levels for a|b vs a.b+b.a")
{
    auto r = forw_backw_levels(enc("a | b"), enc("a.b + b.a"));
    const auto& f = r.one_sided.forward;
    const auto& b = r.one_sided.backward;
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::vector{Triple{}});
    CHECK(f[1].size() == 2);
    CHECK(f[2].size() == 2);
    CHECK(b[0] == f[0]);
    CHECK(b[1].size() == 2);
    CHECK(b[2].empty());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (const auto& t : b[i]) CHECK(std::count(f[i].begin(), f[i].end(), t) == 1);
}

TEST_CASE("levels on identical structures")
{
    ConfStruct c = enc("a.(b | c) + d");
    auto r = forw_backw_levels(c, c);
    for (const auto& x : c.configs()) {
        Triple id{x, x, {}};
        for (std::size_t e : x.members()) id.f.push_back({e, e});
        for (const Levels* l : {&r.one_sided, &r.symmetric}) {
            CHECK(std::count(l->forward[x.size()].begin(), l->forward[x.size()].end(), id) == 1);
            CHECK(std::count(l->backward[x.size()].begin(), l->backward[x.size()].end(), id) == 1);
        }
    }
}

TEST_CASE("barbed bisimulation on terms")
{
    CHECK(ccs_barbed_bisim(P("a | b"), P("a.b + b.a")).verdict.equivalent());
    auto d = ccs_barbed_bisim(P("a"), P("b"));
    CHECK_FALSE(d.verdict.equivalent());
    CHECK(d.verdict.play.empty());
    CHECK(ccs_barbed_bisim(P("(a.b | !a) \\ a"), P("(a.b | !a) \\ a")).verdict.equivalent());
    CHECK_FALSE(ccs_barbed_bisim(P("(a.b | !a) \\ a"), P("(a.c | !a) \\ a")).verdict.equivalent());
    auto w = ccs_barbed_bisim(P("(a | !a) \\ a"), P("(b | !b) \\ b"));
    CHECK(w.verdict.equivalent());
    CHECK(w.witness.size() == 2);
}

TEST_CASE("back-and-forth barbed bisimulation on processes")
{
    CHECK(rccs_bfb_bisim(R("<1,a,c>.{} |> b"), R("<1,a,0>.{} |> b")).verdict.equivalent());
    auto d = rccs_bfb_bisim(R("<1,a,b.d>.{} |> c"), R("<2,b,a.c>.{} |> d"));
    CHECK_FALSE(d.verdict.equivalent());
    Process r = R("<1,a,0>.*.{} |> b | *.{} |> (c | !c)");
    CHECK(rccs_bfb_bisim(r, r).verdict.equivalent());

    // the backward tau of a|b is refused by a.b+b.a once both have synchronised
    Process ctx1 = R("(!a + c0) | (!b + c1) | (a | b)");
    Process ctx2 = R("(!a + c0) | (!b + c1) | (a.b + b.a)");
    CHECK_FALSE(rccs_bfb_bisim(ctx1, ctx2).verdict.equivalent());
}

TEST_CASE("back-and-forth barbed bisimulation on structures")
{
    CHECK(cs_bfb_barbed_bisim(enc("(a | !a) \\ a"), enc("(b | !b) \\ b")).verdict.equivalent());
    CHECK_FALSE(cs_bfb_barbed_bisim(enc("a"), enc("b")).verdict.equivalent());
    CHECK(cs_bfb_barbed_bisim(enc("a"), enc("a")).verdict.equivalent());
    for (auto [p, q] : {std::pair{"a | b", "a.b + b.a"}, {"(a.b | !a) \\ a", "(a.c | !a) \\ a"},
                        {"(a | !a.b) \\ a", "(a.b | !a) \\ a"}, {"(a + b) | !b", "a | !b"}}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(rccs_bfb_bisim(R(p), R(q)).verdict.equivalent() ==
              cs_bfb_barbed_bisim(enc(p), enc(q)).verdict.equivalent());
    }
}

TEST_CASE("discriminating contexts")
{
    ConfStruct c = enc("a.b");
    CHECK(format_context(discriminating_context(c, EventSet{}, {})) == "[]");
    CcsContext one = discriminating_context(c, EventSet{0}, {"a", "b"});
    CHECK(format_context(one) == "!a + c0 | []");
    CcsContext two = discriminating_context(c, EventSet{0, 1}, {"c0", "a"});
    CHECK(format_context(two) == "!a + c1 | (!b + c2 | [])");
    CHECK_THROWS_AS(discriminating_context(enc("(a | !a) \\ a"), EventSet{0}, {}), TauEventInConfig);
}

TEST_CASE("enumerated contexts")
{
    auto cs = enumerate_contexts({"a"}, 1);
    CHECK(cs.size() == 3);
    auto cs2 = enumerate_contexts({"a"}, 2);
    std::set<std::string> texts;
    for (const auto& c : cs2) texts.insert(format_context(c));
    CHECK(texts.size() == cs2.size());
    CHECK(texts.count("a | !a | []"));
    CHECK(texts.count("a + !a | []"));
    CHECK(texts.count("a.!a | []"));
}

TEST_CASE("bounded congruence")
{
    Process a = R("a.b");
    auto same = bounded_congruence(a, a, {CcsContext::hole()});
    CHECK(same.verdict.outcome == Outcome::BoundedEquivalent);
    CHECK(bounded_congruence(R("a"), R("a"), enumerate_contexts({"a"}, 2)).verdict.equivalent());

    ConfStruct ab = enc("a | b");
    std::vector<CcsContext> discr;
    for (const auto& x : ab.configs()) discr.push_back(discriminating_context(ab, x, {"a", "b"}));
    auto d = bounded_congruence(R("a | b"), R("a.b + b.a"), discr);
    CHECK(d.verdict.outcome == Outcome::Distinguished);
    REQUIRE(d.separating.has_value());
    CHECK(prefix_count(d.separating->term()) > 0);
}

TEST_CASE("main theorem desk check")
{
    auto r = main_theorem_check(P("a | b"), P("a.b + b.a"), 1);
    CHECK_FALSE(r.hhpb.verdict.equivalent());
    CHECK_FALSE(r.congruence.verdict.equivalent());
    CHECK(r.agree);

    auto s = main_theorem_check(P("a.(b | c)"), P("a.(b | c)"), 1);
    CHECK(s.hhpb.verdict.equivalent());
    CHECK(s.congruence.verdict.outcome == Outcome::BoundedEquivalent);
    CHECK(s.agree);

    CHECK_THROWS_AS(main_theorem_check(P("a + a.b"), P("a.b + a.b"), 1), NotSinglyLabelled);
    auto t = main_theorem_check(P("a + a.b"), P("a.b + a.b"), 1, false);
    CHECK_FALSE(t.singly_labelled);
    CHECK_FALSE(t.hhpb.verdict.equivalent());
}
