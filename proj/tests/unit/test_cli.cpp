#include <doctest.h>

#include "rccs/cli.hpp"
#include "rccs/json_io.hpp"
#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <sstream>

using namespace rccs;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(RCCS_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check", "nope", "a", "b"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    auto bad = run({"fmt", "a + 0"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "offset 4"));
    CHECK(run({"axioms", data("missing.json")}).code == 2);
    CHECK(run({"check", "hhpb", "{", "a"}).code == 2);
}

TEST_CASE("parse and fmt")
{
    auto p = run({"parse", "a.b + c"});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "\"kind\": \"sum\""));
    CHECK(term_from_json(p.out) == parse_term("a.b + c"));
    auto back = run({"fmt", p.out});
    CHECK(back.out == "a.b + c\n");

    auto q = run({"parse", "<1,a,0>.{} |> b | {} |> c"});
    CHECK(process_from_json(q.out) == parse_process("<1,a,0>.{} |> b | {} |> c"));
    CHECK(run({"fmt", q.out}).out == "<1,a,0>.{} |> b | {} |> c\n");
    CHECK(run({"fmt"}, "(a|b)\\a").out == "(a | b) \\ a\n");
}

TEST_CASE("encode")
{
    auto e = run({"encode", "a.(a|c)+b", "--format", "json"});
    CHECK(e.code == 0);
    ConfStruct c = confstruct_from_json(e.out);
    CHECK(c.configs().size() == 6);
    CHECK(to_json(c) == e.out);

    auto dot = run({"encode", "a|b", "--format", "dot"});
    CHECK(contains(dot.out, "digraph"));
    CHECK(contains(dot.out, "[label=\"b\"]"));

    auto r = run({"encode", "--rccs", "<2,a,0>.*.<1,a,b>.{} |> 0 | *.<1,a,b>.{} |> c"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"at\""));
    CHECK(contains(r.out, "\"id_match\""));
    CHECK(confstruct_from_json(r.out).configs().size() == 6);

    CHECK(run({"encode", "--rccs", "<1,a,a.b>.{} |> b"}).code == 2);
    CHECK(run({"encode", "a", "--format", "svg"}).code == 2);
}

TEST_CASE("axioms on the counterexample figures")
{
    auto a = run({"axioms", data("not_coincidence_free.json")});
    CHECK(a.code == 1);
    CHECK(contains(a.out, "\"failing\": [\n    \"coincidence_freeness\"\n  ]"));
    auto b = run({"axioms", data("not_finitely_complete.json")});
    CHECK(b.code == 1);
    CHECK(contains(b.out, "\"failing\": [\n    \"finite_completeness\"\n  ]"));
    auto c = run({"axioms", data("not_stable.json")});
    CHECK(c.code == 1);
    CHECK(contains(c.out, "\"failing\": [\n    \"stability\"\n  ]"));
    auto ok = run({"axioms", data("two_a_events.json")});
    CHECK(ok.code == 0);
}

TEST_CASE("checks")
{
    auto h = run({"check", "hhpb", "a|b", "a.b+b.a"});
    CHECK(h.code == 1);
    CHECK(contains(h.out, "\"verdict\": \"distinguished\""));
    CHECK(contains(h.out, "\"direction\": \"backward\""));

    auto f = run({"check", "hhpb", data("two_a_events.json"), data("two_a_events.json")});
    CHECK(f.code == 0);
    CHECK(contains(f.out, "\"witness\""));

    auto enc = run({"encode", "a.b+b.a"});
    CHECK(run({"check", "hhpb", enc.out, "b.a+a.b"}).code == 0);

    CHECK(run({"check", "barbed-ccs", "a|b", "a.b+b.a"}).code == 0);
    CHECK(run({"check", "barbed-ccs", "a", "b"}).code == 1);
    CHECK(run({"check", "bfb", "<1,a,c>.{} |> b", "<1,a,0>.{} |> b"}).code == 0);

    auto g = run({"check", "congruence", "a|b", "a.b+b.a", "--context-depth", "1"});
    CHECK(g.code == 1);
    CHECK(contains(g.out, "\"context\""));
    auto s = run({"check", "congruence", "a|b", "b|a", "--context-depth", "1"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "bounded-equivalent"));

    auto l = run({"levels", "a|b", "a.b+b.a"});
    CHECK(l.code == 0);
    CHECK(contains(l.out, "\"B_sizes\": [\n      1,\n      2,\n      0\n    ]"));
}

TEST_CASE("replay")
{
    auto ok = run({"replay", "a|b", data("par.trace")});
    CHECK(ok.code == 0);
    CHECK(congruent(parse_process(ok.out), parse_process("*.{} |> a | <2,b,0>.*.{} |> 0")));
    auto bad = run({"replay", "a", data("bad.trace")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "\"step\": 0"));
    CHECK(run({"replay", "a", data("none.trace")}).code == 2);
}

TEST_CASE("step session")
{
    auto s = run({"step", "a | !a"}, "do 3\nmem\nundo 1\norigin\nbogus\ndo 9\nquit\n");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "3) 1:tau"));
    CHECK(contains(s.out, "state: <1,a,0>.*.{} |> 0 | <1,!a,0>.*.{} |> 0"));
    CHECK(contains(s.out, "thread 1: <1,!a,0>.*.{}"));
    CHECK(contains(s.out, "origin: {} |> (a | !a)"));
    CHECK(contains(s.err, "unknown command 'bogus'"));
    CHECK(contains(s.err, "do expects a number"));

    // undo after do returns to a congruent state
    auto t = run({"step", "a.b + c"}, "do 1\nundo 1\n");
    auto first = t.out.find("state: ");
    auto last = t.out.rfind("state: ");
    CHECK(t.out.substr(first, t.out.find('\n', first) - first) == t.out.substr(last, t.out.find('\n', last) - last));
}
