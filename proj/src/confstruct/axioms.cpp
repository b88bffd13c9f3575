#include "rccs/confstruct.hpp"

#include <map>
#include <set>

namespace rccs {

namespace {

std::vector<EventSet> configs_below(const ConfStruct& c, const EventSet& x)
{
    std::vector<EventSet> out;
    for (const auto& z : c.configs())
        if (z.subset_of(x)) out.push_back(z);
    return out;
}

AxiomResult check_finiteness(const ConfStruct& c)
{
    for (const auto& x : c.configs())
        for (std::size_t e : x.members()) {
            bool found = false;
            for (const auto& z : configs_below(c, x)) found = found || z.contains(e);
            if (!found)
                return {false, {x}, {e}, "no finite configuration below " + format_config(c, x) + " contains " +
                                             c.event(e).id};
        }
    return {};
}

AxiomResult check_coincidence_freeness(const ConfStruct& c)
{
    for (const auto& x : c.configs()) {
        auto below = configs_below(c, x);
        std::map<std::vector<bool>, std::size_t> first_with;
        for (std::size_t e : x.members()) {
            std::vector<bool> pattern;
            for (const auto& z : below) pattern.push_back(z.contains(e));
            auto [it, fresh] = first_with.emplace(pattern, e);
            if (!fresh)
                return {false, {x}, {it->second, e},
                        "events " + c.event(it->second).id + " and " + c.event(e).id + " always occur together in " +
                            format_config(c, x)};
        }
    }
    return {};
}

// Every pairwise compatible family of configurations has its union in C.
class Completeness {
public:
    explicit Completeness(const ConfStruct& c) : c_(c), n_(c.configs().size()), compat_(n_)
    {
        const auto& cs = c.configs();
        for (const auto& w : cs) {
            std::vector<std::size_t> below;
            for (std::size_t k = 0; k < n_; ++k)
                if (cs[k].subset_of(w)) below.push_back(k);
            for (std::size_t i : below)
                for (std::size_t j : below) compat_[i].insert(j);
        }
    }

    AxiomResult run()
    {
        EventSet all;
        for (std::size_t k = 0; k < n_; ++k) all.insert(k);
        AxiomResult r;
        search(EventSet{}, all, r);
        return r;
    }

private:
    bool search(const EventSet& unite, const EventSet& allowed, AxiomResult& r)
    {
        if (!seen_.insert({unite, allowed}).second) return true;
        const auto& cs = c_.configs();
        for (std::size_t j : allowed.members()) {
            EventSet u = unite | cs[j];
            members_.push_back(j);
            if (!c_.contains(u)) {
                r.pass = false;
                for (std::size_t k : members_) r.configs.push_back(cs[k]);
                r.message = "pairwise compatible configurations without their union " + format_config(c_, u);
                return false;
            }
            EventSet next;
            for (std::size_t k : (allowed & compat_[j]).members())
                if (k > j && !cs[k].subset_of(u)) next.insert(k);
            if (!search(u, next, r)) return false;
            members_.pop_back();
        }
        return true;
    }

    const ConfStruct& c_;
    std::size_t n_;
    std::vector<EventSet> compat_;
    std::vector<std::size_t> members_;
    std::set<std::pair<EventSet, EventSet>> seen_;
};

AxiomResult check_stability(const ConfStruct& c)
{
    const auto& cs = c.configs();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (c.contains(cs[i] | cs[j]) && !c.contains(cs[i] & cs[j]))
                return {false, {cs[i], cs[j]}, {},
                        "union of " + format_config(c, cs[i]) + " and " + format_config(c, cs[j]) +
                            " is a configuration but their intersection is not"};
    return {};
}

} // namespace

AxiomReport validate_axioms(const ConfStruct& c)
{
    return {check_finiteness(c), check_coincidence_freeness(c), Completeness(c).run(), check_stability(c)};
}

} // namespace rccs
