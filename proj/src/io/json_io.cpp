#include "rccs/json_io.hpp"

#include "rccs/error.hpp"
#include "rccs/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace rccs {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json ids_of(const ConfStruct& c, const EventSet& x)
{
    std::vector<std::string> ids;
    for (std::size_t e : x.members()) ids.push_back(c.event(e).id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

json structure_json(const ConfStruct& c)
{
    json events = json::array();
    for (const auto& e : c.events()) events.push_back({{"id", e.id}, {"label", e.label.str()}});
    json configs = json::array();
    for (const auto& x : c.configs()) configs.push_back(ids_of(c, x));
    return {{"events", events}, {"configs", configs}};
}

json term_json(const Term& t)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return {{"kind", "nil"}};
    case Term::Kind::Sum: {
        json ss = json::array();
        for (const auto& s : t.summands())
            ss.push_back({{"prefix", s.prefix.str()}, {"continuation", term_json(s.continuation)}});
        return {{"kind", "sum"}, {"summands", ss}};
    }
    case Term::Kind::Parallel:
        return {{"kind", "parallel"}, {"left", term_json(t.left())}, {"right", term_json(t.right())}};
    case Term::Kind::Restrict: return {{"kind", "restrict"}, {"name", t.bound()}, {"body", term_json(t.body())}};
    }
    return {};
}

json process_json(const Process& p)
{
    switch (p.kind()) {
    case Process::Kind::Thread: {
        json memory = json::array();
        for (auto it = p.memory().items.rbegin(); it != p.memory().items.rend(); ++it) {
            if (const auto* e = std::get_if<MemoryEvent>(&*it))
                memory.push_back({{"id", e->id.value}, {"label", e->label.str()}, {"alternative", term_json(e->alternative)}});
            else
                memory.push_back({{"fork", true}});
        }
        return {{"kind", "thread"}, {"memory", memory}, {"code", term_json(p.code())}};
    }
    case Process::Kind::Parallel:
        return {{"kind", "parallel"}, {"left", process_json(p.left())}, {"right", process_json(p.right())}};
    case Process::Kind::Restrict:
        return {{"kind", "restrict"}, {"name", p.bound()}, {"body", process_json(p.body())}};
    }
    return {};
}

Label label_from(const json& j)
{
    try {
        return parse_label(j.get<std::string>());
    } catch (const SyntaxError& e) {
        throw InputError(std::string("bad label: ") + e.what());
    }
}

Term term_from(const json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "nil") return Term::nil();
    if (kind == "sum") {
        std::vector<Term::Summand> ss;
        for (const auto& s : j.at("summands")) {
            Label l = label_from(s.at("prefix"));
            if (l.is_tau()) throw InputError("tau prefixes are not part of the calculus");
            ss.push_back({l, term_from(s.at("continuation"))});
        }
        return Term::sum(std::move(ss));
    }
    if (kind == "parallel") return Term::parallel(term_from(j.at("left")), term_from(j.at("right")));
    if (kind == "restrict") return Term::restrict(term_from(j.at("body")), j.at("name").get<std::string>());
    throw InputError("unknown term kind '" + kind + "'");
}

Process process_from(const json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "thread") {
        Memory m;
        const auto& items = j.at("memory");
        for (auto it = items.rbegin(); it != items.rend(); ++it) {
            if (it->contains("fork"))
                m.items.push_back(Fork{});
            else
                m.items.push_back(MemoryEvent{EventId{it->at("id").get<std::uint32_t>()}, label_from(it->at("label")),
                                              term_from(it->at("alternative"))});
        }
        return Process::thread(std::move(m), term_from(j.at("code")));
    }
    if (kind == "parallel") return Process::parallel(process_from(j.at("left")), process_from(j.at("right")));
    if (kind == "restrict") return Process::restrict(process_from(j.at("body")), j.at("name").get<std::string>());
    throw InputError("unknown process kind '" + kind + "'");
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed input: ") + e.what());
    }
}

json play_json(const std::vector<Move>& play)
{
    json out = json::array();
    for (const auto& m : play)
        out.push_back({{"side", m.side},
                       {"direction", m.direction == Direction::Forward ? "forward" : "backward"},
                       {"label", m.label},
                       {"attack", m.attack},
                       {"answer", m.answer ? json(*m.answer) : json(nullptr)}});
    return out;
}

json verdict_json(const Verdict& v, const json& witness)
{
    json evidence;
    if (v.outcome == Outcome::Distinguished)
        evidence = {{"reason", v.reason}, {"play", play_json(v.play)}};
    else
        evidence = {{"witness", witness}};
    if (v.outcome == Outcome::BoundedEquivalent) evidence["note"] = v.reason;
    return {{"verdict", to_string(v.outcome)}, {"evidence", evidence}};
}

json triple_json(const ConfStruct& a, const ConfStruct& b, const Triple& t)
{
    json f = json::array();
    for (auto [e1, e2] : t.f) f.push_back({a.event(e1).id, b.event(e2).id});
    return {{"x1", ids_of(a, t.x1)}, {"x2", ids_of(b, t.x2)}, {"f", f}};
}

json levels_json(const ConfStruct& a, const ConfStruct& b, const Levels& l)
{
    auto family = [&](const std::vector<std::vector<Triple>>& fam) {
        json out = json::array();
        for (const auto& level : fam) {
            json ts = json::array();
            for (const auto& t : level) ts.push_back(triple_json(a, b, t));
            out.push_back(ts);
        }
        return out;
    };
    json sizes_f = json::array(), sizes_b = json::array();
    for (const auto& level : l.forward) sizes_f.push_back(level.size());
    for (const auto& level : l.backward) sizes_b.push_back(level.size());
    return {{"F_sizes", sizes_f}, {"B_sizes", sizes_b}, {"F", family(l.forward)}, {"B", family(l.backward)}};
}

json axiom_json(const ConfStruct& c, const AxiomResult& r)
{
    json out{{"pass", r.pass}};
    if (!r.pass) {
        json configs = json::array();
        for (const auto& x : r.configs) configs.push_back(ids_of(c, x));
        json events = json::array();
        for (std::size_t e : r.events) events.push_back(c.event(e).id);
        out["witness"] = {{"configs", configs}, {"events", events}};
        out["message"] = r.message;
    }
    return out;
}

} // namespace

std::string to_json(const ConfStruct& c) { return dump(structure_json(c)); }

ConfStruct confstruct_from_json(std::string_view text)
{
    json j = parse_json(text);
    return guarded([&] {
        std::vector<Event> events;
        std::map<std::string, std::size_t> index;
        for (const auto& e : j.at("events")) {
            std::string id = e.at("id").get<std::string>();
            index.emplace(id, events.size());
            events.push_back({id, CsLabel(label_from(e.at("label")))});
        }
        std::vector<EventSet> configs;
        for (const auto& x : j.at("configs")) {
            EventSet s;
            for (const auto& id : x) {
                auto it = index.find(id.get<std::string>());
                if (it == index.end()) throw InputError("configuration refers to unknown event '" + id.get<std::string>() + "'");
                s.insert(it->second);
            }
            configs.push_back(s);
        }
        return ConfStruct(std::move(events), std::move(configs));
    });
}

std::string to_json(const Address& a)
{
    json j = structure_json(a.structure);
    j["at"] = ids_of(a.structure, a.at);
    json m = json::object();
    for (const auto& [id, e] : a.id_match) m[std::to_string(id.value)] = a.structure.event(e).id;
    j["id_match"] = m;
    return dump(j);
}

std::string to_json(const Term& t) { return dump(term_json(t)); }
std::string to_json(const Process& p) { return dump(process_json(p)); }

Term term_from_json(std::string_view text)
{
    json j = parse_json(text);
    return guarded([&] { return term_from(j); });
}

Process process_from_json(std::string_view text)
{
    json j = parse_json(text);
    return guarded([&] { return process_from(j); });
}

std::string to_json(const ConfStruct& c, const AxiomReport& r)
{
    json failing = json::array();
    if (!r.finiteness.pass) failing.push_back("finiteness");
    if (!r.coincidence_freeness.pass) failing.push_back("coincidence_freeness");
    if (!r.finite_completeness.pass) failing.push_back("finite_completeness");
    if (!r.stability.pass) failing.push_back("stability");
    return dump({{"valid", r.all_pass()},
                 {"failing", failing},
                 {"finiteness", axiom_json(c, r.finiteness)},
                 {"coincidence_freeness", axiom_json(c, r.coincidence_freeness)},
                 {"finite_completeness", axiom_json(c, r.finite_completeness)},
                 {"stability", axiom_json(c, r.stability)}});
}

std::string to_json(const ConfStruct& a, const ConfStruct& b, const HhpbResult& r)
{
    json witness = json::array();
    for (const auto& t : r.witness) witness.push_back(triple_json(a, b, t));
    return dump(verdict_json(r.verdict, witness));
}

std::string to_json(const ConfStruct& a, const ConfStruct& b, const LevelReport& r)
{
    return dump({{"one_sided", levels_json(a, b, r.one_sided)}, {"symmetric", levels_json(a, b, r.symmetric)}});
}

std::string to_json(const BisimResult& r)
{
    json witness = json::array();
    for (const auto& [p, q] : r.witness) witness.push_back({p, q});
    return dump(verdict_json(r.verdict, witness));
}

namespace {

json congruence_json(const CongruenceResult& r)
{
    json j = verdict_json(r.verdict, json::array());
    j["contexts_checked"] = r.contexts_checked;
    if (r.separating) j["evidence"]["context"] = format_context(*r.separating);
    return j;
}

} // namespace

std::string to_json(const CongruenceResult& r) { return dump(congruence_json(r)); }

std::string to_json(const TheoremReport& r)
{
    json h{{"verdict", to_string(r.hhpb.verdict.outcome)}};
    if (!r.hhpb.verdict.equivalent()) h["reason"] = r.hhpb.verdict.reason;
    return dump({{"agree", r.agree},
                 {"singly_labelled", r.singly_labelled},
                 {"hhpb", h},
                 {"congruence", congruence_json(r.congruence)}});
}

std::string replay_error_json(std::size_t step, const std::string& message)
{
    return dump({{"error", "replay"}, {"step", step}, {"message", message}});
}

std::string to_dot(const ConfStruct& c, const EventSet* at)
{
    std::ostringstream out;
    out << "digraph configurations {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < c.configs().size(); ++k) {
        const auto& x = c.configs()[k];
        std::string label = "{";
        bool first = true;
        for (const auto& l : label_multiset(c, x)) {
            label += (first ? "" : ",") + l;
            first = false;
        }
        label += "}";
        out << "  c" << k << " [label=\"" << label << "\"";
        if (at && *at == x) out << ", style=filled, fillcolor=lightgrey";
        out << "];\n";
    }
    for (std::size_t k = 0; k < c.configs().size(); ++k)
        for (const auto& s : config_steps(c, c.configs()[k]))
            out << "  c" << k << " -> c" << *c.index_of(s.target) << " [label=\"" << c.label(s.event).str()
                << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace rccs
