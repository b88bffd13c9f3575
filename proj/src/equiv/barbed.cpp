#include "internal.hpp"

#include "rccs/parse.hpp"
#include "rccs/rccs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>

namespace rccs {

namespace {

enum class MoveKind { TauForward, TauBackward };

struct Edge {
    MoveKind kind;
    std::size_t target;
};

// Reachable state graph; states are named by their canonical text.
struct StateGraph {
    std::vector<std::string> names;
    std::vector<std::set<std::string>> barbs;
    std::vector<std::vector<Edge>> edges;
};

template <class State>
StateGraph explore(const State& root, const std::function<std::string(const State&)>& key,
                   const std::function<std::set<std::string>(const State&)>& barbs,
                   const std::function<std::vector<std::pair<MoveKind, State>>(const State&)>& moves)
{
    StateGraph g;
    std::map<std::string, std::size_t> index;
    std::vector<State> states;
    std::deque<std::size_t> queue;
    auto intern = [&](const State& s) {
        std::string k = key(s);
        auto [it, fresh] = index.emplace(k, states.size());
        if (fresh) {
            states.push_back(s);
            g.names.push_back(k);
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(root);
    while (!queue.empty()) {
        std::size_t k = queue.front();
        queue.pop_front();
        State s = states[k];
        std::vector<Edge> out;
        for (auto& [kind, t] : moves(s)) out.push_back({kind, intern(t)});
        if (g.edges.size() <= k) {
            g.edges.resize(k + 1);
            g.barbs.resize(k + 1);
        }
        g.edges[k] = std::move(out);
        g.barbs[k] = barbs(s);
    }
    return g;
}

std::string join(const std::set<std::string>& s)
{
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
    return out + "}";
}

// Greatest symmetric barbed bisimulation between the roots (state 0) of two graphs.
BisimResult bisimulate(const StateGraph& g1, const StateGraph& g2)
{
    const std::size_t n1 = g1.names.size();
    const std::size_t n2 = g2.names.size();
    constexpr std::size_t alive = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> rank(n1 * n2, alive);
    auto at = [&](std::size_t p, std::size_t q) -> std::size_t& { return rank[p * n2 + q]; };
    for (std::size_t p = 0; p < n1; ++p)
        for (std::size_t q = 0; q < n2; ++q)
            if (g1.barbs[p] != g2.barbs[q]) at(p, q) = 0;

    auto simulated = [&](const std::vector<Edge>& mine, const std::vector<Edge>& theirs, auto related) {
        for (const auto& e : mine) {
            bool ok = std::any_of(theirs.begin(), theirs.end(),
                                  [&](const Edge& f) { return f.kind == e.kind && related(e.target, f.target); });
            if (!ok) return false;
        }
        return true;
    };
    for (std::size_t round = 1;; ++round) {
        std::vector<std::size_t> lost;
        for (std::size_t p = 0; p < n1; ++p)
            for (std::size_t q = 0; q < n2; ++q) {
                if (at(p, q) != alive) continue;
                bool ok = simulated(g1.edges[p], g2.edges[q],
                                    [&](std::size_t s, std::size_t t) { return at(s, t) == alive; }) &&
                          simulated(g2.edges[q], g1.edges[p],
                                    [&](std::size_t t, std::size_t s) { return at(s, t) == alive; });
                if (!ok) lost.push_back(p * n2 + q);
            }
        if (lost.empty()) break;
        for (std::size_t k : lost) rank[k] = round;
    }

    BisimResult out;
    if (at(0, 0) == alive) {
        out.verdict.outcome = Outcome::Equivalent;
        std::vector<bool> seen(n1 * n2, false);
        std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
        seen[0] = true;
        while (!stack.empty()) {
            auto [p, q] = stack.back();
            stack.pop_back();
            out.witness.push_back({g1.names[p], g2.names[q]});
            for (const auto& e : g1.edges[p])
                for (const auto& f : g2.edges[q])
                    if (e.kind == f.kind && at(e.target, f.target) == alive && !seen[e.target * n2 + f.target]) {
                        seen[e.target * n2 + f.target] = true;
                        stack.push_back({e.target, f.target});
                    }
        }
        std::sort(out.witness.begin(), out.witness.end());
        return out;
    }

    out.verdict.outcome = Outcome::Distinguished;
    std::size_t p = 0, q = 0;
    while (at(p, q) != 0) {
        // An attacking move all of whose answers were lost earlier.
        Move m;
        std::optional<std::pair<std::size_t, std::size_t>> next;
        bool found = false;
        for (int side = 1; side <= 2 && !found; ++side) {
            const auto& mine = side == 1 ? g1.edges[p] : g2.edges[q];
            const auto& theirs = side == 1 ? g2.edges[q] : g1.edges[p];
            for (const auto& e : mine) {
                std::optional<std::pair<std::size_t, std::size_t>> best;
                bool wins = true;
                for (const auto& f : theirs) {
                    if (f.kind != e.kind) continue;
                    auto pair = side == 1 ? std::pair{e.target, f.target} : std::pair{f.target, e.target};
                    if (at(pair.first, pair.second) >= at(p, q)) wins = false;
                    if (!best || at(pair.first, pair.second) > at(best->first, best->second)) best = pair;
                }
                if (!wins) continue;
                m.side = side;
                m.direction = e.kind == MoveKind::TauForward ? Direction::Forward : Direction::Backward;
                m.label = "tau";
                m.attack = (side == 1 ? g1 : g2).names[e.target];
                if (best) m.answer = (side == 1 ? g2 : g1).names[side == 1 ? best->second : best->first];
                next = best;
                found = true;
                break;
            }
        }
        if (!found) break;
        out.verdict.play.push_back(m);
        if (!next) {
            out.verdict.reason = std::string(m.direction == Direction::Forward ? "forward" : "backward") +
                                 " tau move on side " + std::to_string(m.side) + " cannot be answered";
            return out;
        }
        std::tie(p, q) = *next;
    }
    out.verdict.reason = "barbs differ: " + join(g1.barbs[p]) + " vs " + join(g2.barbs[q]) + " at " + g1.names[p] +
                         " and " + g2.names[q];
    return out;
}

std::set<std::string> label_strings(const std::set<Label>& ls)
{
    std::set<std::string> out;
    for (const auto& l : ls) out.insert(l.str());
    return out;
}

} // namespace

BisimResult ccs_barbed_bisim(const Term& p, const Term& q)
{
    std::function<std::string(const Term&)> key = [](const Term& t) { return canonical_key(t); };
    std::function<std::set<std::string>(const Term&)> bs = [](const Term& t) { return label_strings(barbs(t)); };
    std::function<std::vector<std::pair<MoveKind, Term>>(const Term&)> mv = [](const Term& t) {
        std::vector<std::pair<MoveKind, Term>> out;
        for (const auto& s : ccs_step(t))
            if (s.label.is_tau()) out.push_back({MoveKind::TauForward, s.target});
        return out;
    };
    return bisimulate(explore(p, key, bs, mv), explore(q, key, bs, mv));
}

BisimResult rccs_bfb_bisim(const Process& r, const Process& s)
{
    std::function<std::string(const Process&)> key = [](const Process& p) { return congruence_key(p); };
    std::function<std::set<std::string>(const Process&)> bs = [](const Process& p) {
        return label_strings(rccs_barbs(p));
    };
    std::function<std::vector<std::pair<MoveKind, Process>>(const Process&)> mv = [](const Process& p) {
        std::vector<std::pair<MoveKind, Process>> out;
        for (const auto& t : fwd_steps(p))
            if (t.label.is_tau()) out.push_back({MoveKind::TauForward, t.target});
        for (const auto& t : bwd_steps(p))
            if (t.label.is_tau()) out.push_back({MoveKind::TauBackward, t.target});
        return out;
    };
    return bisimulate(explore(r, key, bs, mv), explore(s, key, bs, mv));
}

BisimResult cs_bfb_barbed_bisim(const ConfStruct& a, const ConfStruct& b)
{
    auto graph = [](const ConfStruct& c) {
        std::function<std::string(const EventSet&)> key = [&c](const EventSet& x) { return format_config(c, x); };
        std::function<std::set<std::string>(const EventSet&)> bs = [&c](const EventSet& x) {
            std::set<std::string> out;
            for (const auto& l : barbs_at(c, x)) out.insert(l.str());
            return out;
        };
        std::function<std::vector<std::pair<MoveKind, EventSet>>(const EventSet&)> mv = [&c](const EventSet& x) {
            std::vector<std::pair<MoveKind, EventSet>> out;
            for (const auto& s : config_steps(c, x))
                if (c.label(s.event).is_tau()) out.push_back({MoveKind::TauForward, s.target});
            for (const auto& s : config_backsteps(c, x))
                if (c.label(s.event).is_tau()) out.push_back({MoveKind::TauBackward, s.target});
            return out;
        };
        return explore(EventSet{}, key, bs, mv);
    };
    return bisimulate(graph(a), graph(b));
}

} // namespace rccs
