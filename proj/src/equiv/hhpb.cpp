#include "internal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace rccs {

namespace detail {

const std::vector<EventSet>& OrderCache::below(const EventSet& x)
{
    auto it = cache_.find(x);
    if (it == cache_.end()) it = cache_.emplace(x, causes_in(c_, x)).first;
    return it->second;
}

bool is_matching(OrderCache& a, OrderCache& b, const Triple& t, bool both_ways)
{
    if (t.x1.size() != t.f.size() || t.x2.size() != t.f.size()) return false;
    EventSet dom, ran;
    for (auto [e1, e2] : t.f) {
        if (!t.x1.contains(e1) || !t.x2.contains(e2)) return false;
        if (a.structure().label(e1) != b.structure().label(e2)) return false;
        dom.insert(e1);
        ran.insert(e2);
    }
    if (dom != t.x1 || ran != t.x2) return false;
    const auto& below1 = a.below(t.x1);
    const auto& below2 = b.below(t.x2);
    for (auto [p1, p2] : t.f)
        for (auto [q1, q2] : t.f) {
            bool le1 = below1[q1].contains(p1);
            bool le2 = below2[q2].contains(p2);
            if (le1 && !le2) return false;
            if (both_ways && le2 && !le1) return false;
        }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> with_pair(std::vector<std::pair<std::size_t, std::size_t>> f,
                                                           std::size_t e1, std::size_t e2)
{
    f.insert(std::lower_bound(f.begin(), f.end(), std::pair{e1, e2}), {e1, e2});
    return f;
}

std::vector<std::pair<std::size_t, std::size_t>> without_pair(std::vector<std::pair<std::size_t, std::size_t>> f,
                                                              std::size_t e1, std::size_t e2)
{
    f.erase(std::remove(f.begin(), f.end(), std::pair{e1, e2}), f.end());
    return f;
}

std::optional<std::size_t> image(const Triple& t, std::size_t e1)
{
    for (auto [p, q] : t.f)
        if (p == e1) return q;
    return std::nullopt;
}

std::optional<std::size_t> preimage(const Triple& t, std::size_t e2)
{
    for (auto [p, q] : t.f)
        if (q == e2) return p;
    return std::nullopt;
}

} // namespace detail

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Equivalent: return "equivalent";
    case Outcome::Distinguished: return "distinguished";
    case Outcome::BoundedEquivalent: return "bounded-equivalent";
    }
    return {};
}

bool is_matching(const ConfStruct& a, const ConfStruct& b, const Triple& t, bool both_ways)
{
    detail::OrderCache ca(a), cb(b);
    return detail::is_matching(ca, cb, t, both_ways);
}

namespace {

using detail::OrderCache;

struct Response {
    std::size_t event;
    std::size_t target;
};

struct Attack {
    int side;
    Direction direction;
    std::size_t event;
    std::vector<Response> responses;
};

class Game {
public:
    Game(const ConfStruct& a, const ConfStruct& b) : a_(a), b_(b), ca_(a), cb_(b) {}

    HhpbResult run()
    {
        explore();
        solve();
        HhpbResult out;
        if (alive_[0]) {
            out.verdict.outcome = Outcome::Equivalent;
            out.witness = winning_region();
        } else {
            out.verdict.outcome = Outcome::Distinguished;
            out.verdict.play = losing_play();
            const Move& last = out.verdict.play.back();
            out.verdict.reason = std::string(last.direction == Direction::Forward ? "forward" : "backward") +
                                 " move " + last.attack + " on structure " + std::to_string(last.side) +
                                 " cannot be answered";
        }
        return out;
    }

private:
    std::size_t intern(const Triple& t)
    {
        auto [it, fresh] = index_.emplace(t, triples_.size());
        if (fresh) {
            triples_.push_back(t);
            queue_.push_back(it->second);
        }
        return it->second;
    }

    std::vector<Attack> attacks_of(const Triple& t)
    {
        std::vector<Attack> out;
        auto valid = [&](const Triple& u) { return detail::is_matching(ca_, cb_, u, false); };
        for (const auto& s1 : config_steps(a_, t.x1)) {
            Attack at{1, Direction::Forward, s1.event, {}};
            for (const auto& s2 : config_steps(b_, t.x2)) {
                if (a_.label(s1.event) != b_.label(s2.event)) continue;
                Triple u{s1.target, s2.target, detail::with_pair(t.f, s1.event, s2.event)};
                if (valid(u)) at.responses.push_back({s2.event, intern(u)});
            }
            out.push_back(std::move(at));
        }
        for (const auto& s2 : config_steps(b_, t.x2)) {
            Attack at{2, Direction::Forward, s2.event, {}};
            for (const auto& s1 : config_steps(a_, t.x1)) {
                if (a_.label(s1.event) != b_.label(s2.event)) continue;
                Triple u{s1.target, s2.target, detail::with_pair(t.f, s1.event, s2.event)};
                if (valid(u)) at.responses.push_back({s1.event, intern(u)});
            }
            out.push_back(std::move(at));
        }
        for (const auto& s1 : config_backsteps(a_, t.x1)) {
            Attack at{1, Direction::Backward, s1.event, {}};
            std::size_t e2 = *detail::image(t, s1.event);
            Triple u{s1.target, t.x2.without(e2), detail::without_pair(t.f, s1.event, e2)};
            if (b_.contains(u.x2) && valid(u)) at.responses.push_back({e2, intern(u)});
            out.push_back(std::move(at));
        }
        for (const auto& s2 : config_backsteps(b_, t.x2)) {
            Attack at{2, Direction::Backward, s2.event, {}};
            std::size_t e1 = *detail::preimage(t, s2.event);
            Triple u{t.x1.without(e1), s2.target, detail::without_pair(t.f, e1, s2.event)};
            if (a_.contains(u.x1) && valid(u)) at.responses.push_back({e1, intern(u)});
            out.push_back(std::move(at));
        }
        return out;
    }

    void explore()
    {
        intern(Triple{});
        while (!queue_.empty()) {
            std::size_t k = queue_.front();
            queue_.pop_front();
            Triple t = triples_[k];
            auto at = attacks_of(t);
            if (attacks_.size() <= k) attacks_.resize(k + 1);
            attacks_[k] = std::move(at);
        }
        attacks_.resize(triples_.size());
    }

    // Greatest fixpoint; rank_ records the round in which a triple was lost.
    void solve()
    {
        alive_.assign(triples_.size(), true);
        rank_.assign(triples_.size(), std::numeric_limits<std::size_t>::max());
        for (std::size_t round = 1;; ++round) {
            std::vector<std::size_t> lost;
            for (std::size_t k = 0; k < triples_.size(); ++k) {
                if (!alive_[k]) continue;
                for (const auto& at : attacks_[k])
                    if (std::none_of(at.responses.begin(), at.responses.end(),
                                     [&](const Response& r) { return alive_[r.target]; })) {
                        lost.push_back(k);
                        break;
                    }
            }
            if (lost.empty()) break;
            for (std::size_t k : lost) {
                alive_[k] = false;
                rank_[k] = round;
            }
        }
    }

    std::vector<Triple> winning_region()
    {
        std::vector<bool> seen(triples_.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::vector<Triple> out;
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            out.push_back(triples_[k]);
            for (const auto& at : attacks_[k])
                for (const auto& r : at.responses)
                    if (alive_[r.target] && !seen[r.target]) {
                        seen[r.target] = true;
                        stack.push_back(r.target);
                    }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string event_id(int side, std::size_t e) const { return (side == 1 ? a_ : b_).event(e).id; }

    std::vector<Move> losing_play()
    {
        std::vector<Move> play;
        for (std::size_t k = 0;;) {
            const Attack* best = nullptr;
            for (const auto& at : attacks_[k])
                if (std::all_of(at.responses.begin(), at.responses.end(),
                                [&](const Response& r) { return rank_[r.target] < rank_[k]; })) {
                    if (!best || at.responses.size() < best->responses.size()) best = &at;
                }
            Move m{best->side, best->direction, (best->side == 1 ? a_ : b_).label(best->event).str(),
                   event_id(best->side, best->event), std::nullopt};
            if (best->responses.empty()) {
                play.push_back(m);
                return play;
            }
            const Response* reply = &best->responses.front();
            for (const auto& r : best->responses)
                if (rank_[r.target] > rank_[reply->target]) reply = &r;
            m.answer = event_id(3 - best->side, reply->event);
            play.push_back(m);
            k = reply->target;
        }
    }

    const ConfStruct& a_;
    const ConfStruct& b_;
    OrderCache ca_, cb_;
    std::map<Triple, std::size_t> index_;
    std::vector<Triple> triples_;
    std::deque<std::size_t> queue_;
    std::vector<std::vector<Attack>> attacks_;
    std::vector<bool> alive_;
    std::vector<std::size_t> rank_;
};

} // namespace

HhpbResult hhpb(const ConfStruct& a, const ConfStruct& b)
{
    return Game(a, b).run();
}

} // namespace rccs
