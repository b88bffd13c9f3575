#include "internal.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rccs {

namespace {

using detail::OrderCache;

// Label preserving bijections between equal-size configurations, filtered by order.
std::vector<std::vector<Triple>> candidates(OrderCache& ca, OrderCache& cb, std::size_t top, bool both_ways)
{
    const ConfStruct& a = ca.structure();
    const ConfStruct& b = cb.structure();
    std::vector<std::vector<Triple>> out(top + 1);
    for (const auto& x1 : a.configs())
        for (const auto& x2 : b.configs()) {
            if (x1.size() != x2.size() || label_multiset(a, x1) != label_multiset(b, x2)) continue;
            auto m1 = x1.members();
            auto m2 = x2.members();
            std::vector<bool> used(m2.size(), false);
            Triple t{x1, x2, {}};
            std::function<void(std::size_t)> extend = [&](std::size_t k) {
                if (k == m1.size()) {
                    Triple u = t;
                    std::sort(u.f.begin(), u.f.end());
                    if (detail::is_matching(ca, cb, u, both_ways)) out[x1.size()].push_back(u);
                    return;
                }
                for (std::size_t j = 0; j < m2.size(); ++j) {
                    if (used[j] || a.label(m1[k]) != b.label(m2[j])) continue;
                    used[j] = true;
                    t.f.push_back({m1[k], m2[j]});
                    extend(k + 1);
                    t.f.pop_back();
                    used[j] = false;
                }
            };
            extend(0);
        }
    return out;
}

Levels compute(const ConfStruct& a, const ConfStruct& b, bool symmetric)
{
    OrderCache ca(a), cb(b);
    std::size_t top = std::max(a.configs().back().size(), b.configs().back().size());
    auto cand = candidates(ca, cb, top, symmetric);

    Levels out;
    out.forward.assign(top + 1, {});
    out.backward.assign(top + 1, {});
    std::vector<std::set<Triple>> f_sets(top + 2);

    auto forward_ok = [&](const ConfStruct& p, const ConfStruct& q, const EventSet& xp, const EventSet& xq,
                          const Triple& t, bool left_moves, std::size_t i) {
        for (const auto& sp : config_steps(p, xp)) {
            bool answered = false;
            for (const auto& sq : config_steps(q, xq)) {
                if (p.label(sp.event) != q.label(sq.event)) continue;
                Triple u = left_moves ? Triple{sp.target, sq.target, detail::with_pair(t.f, sp.event, sq.event)}
                                      : Triple{sq.target, sp.target, detail::with_pair(t.f, sq.event, sp.event)};
                if (f_sets[i + 1].count(u)) {
                    answered = true;
                    break;
                }
            }
            if (!answered) return false;
        }
        return true;
    };

    for (std::size_t i = top + 1; i-- > 0;) {
        for (const auto& t : cand[i]) {
            bool max1 = is_maximal(a, t.x1);
            bool max2 = is_maximal(b, t.x2);
            if (max1 && !max2) continue;
            if (symmetric && max2 && !max1) continue;
            if (!forward_ok(a, b, t.x1, t.x2, t, true, i)) continue;
            if (symmetric && !forward_ok(b, a, t.x2, t.x1, t, false, i)) continue;
            out.forward[i].push_back(t);
            f_sets[i].insert(t);
        }
    }

    std::set<Triple> previous(out.forward[0].begin(), out.forward[0].end());
    out.backward[0] = out.forward[0];
    for (std::size_t i = 1; i <= top; ++i) {
        std::set<Triple> current;
        for (const auto& t : out.forward[i]) {
            bool ok = true;
            for (const auto& s1 : config_backsteps(a, t.x1)) {
                std::size_t e2 = *detail::image(t, s1.event);
                Triple u{s1.target, t.x2.without(e2), detail::without_pair(t.f, s1.event, e2)};
                ok = ok && b.contains(u.x2) && previous.count(u);
            }
            if (symmetric)
                for (const auto& s2 : config_backsteps(b, t.x2)) {
                    std::size_t e1 = *detail::preimage(t, s2.event);
                    Triple u{t.x1.without(e1), s2.target, detail::without_pair(t.f, e1, s2.event)};
                    ok = ok && a.contains(u.x1) && previous.count(u);
                }
            if (ok) {
                out.backward[i].push_back(t);
                current.insert(t);
            }
        }
        previous = std::move(current);
    }
    return out;
}

} // namespace

LevelReport forw_backw_levels(const ConfStruct& a, const ConfStruct& b)
{
    return {compute(a, b, false), compute(a, b, true)};
}

} // namespace rccs
