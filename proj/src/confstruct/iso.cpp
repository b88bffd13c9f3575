#include "rccs/confstruct.hpp"

#include <algorithm>

namespace rccs {

namespace {

struct Signature {
    std::string label;
    std::vector<std::size_t> config_sizes; // sizes of the configurations containing the event

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const ConfStruct& c)
{
    std::vector<Signature> out(c.event_count());
    for (std::size_t e = 0; e < c.event_count(); ++e) out[e].label = c.label(e).str();
    for (const auto& x : c.configs())
        for (std::size_t e : x.members()) out[e].config_sizes.push_back(x.size());
    for (auto& s : out) std::sort(s.config_sizes.begin(), s.config_sizes.end());
    return out;
}

class IsoSearch {
public:
    IsoSearch(const ConfStruct& a, const ConfStruct& b) : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)) {}

    std::optional<std::map<std::size_t, std::size_t>> run()
    {
        if (a_.configs().size() != b_.configs().size()) return std::nullopt;
        order_ = a_.live_events().members();
        targets_ = b_.live_events().members();
        if (order_.size() != targets_.size()) return std::nullopt;
        {
            std::vector<Signature> x, y;
            for (auto e : order_) x.push_back(sa_[e]);
            for (auto e : targets_) y.push_back(sb_[e]);
            std::sort(x.begin(), x.end());
            std::sort(y.begin(), y.end());
            if (x != y) return std::nullopt;
        }
        // Events of small configurations first so that configurations close early.
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t p, std::size_t q) {
            return sa_[p].config_sizes.front() < sa_[q].config_sizes.front();
        });
        std::vector<std::size_t> position(a_.event_count());
        for (std::size_t k = 0; k < order_.size(); ++k) position[order_[k]] = k;
        closing_.assign(order_.size(), {});
        for (const auto& x : a_.configs()) {
            if (x.empty()) continue;
            std::size_t last = 0;
            for (std::size_t e : x.members()) last = std::max(last, position[e]);
            closing_[last].push_back(x);
        }
        image_.assign(a_.event_count(), 0);
        used_ = EventSet{};
        if (!assign(0)) return std::nullopt;
        std::map<std::size_t, std::size_t> out;
        for (std::size_t e : order_) out[e] = image_[e];
        return out;
    }

private:
    bool assign(std::size_t k)
    {
        if (k == order_.size()) return true;
        std::size_t e = order_[k];
        for (std::size_t f : targets_) {
            if (used_.contains(f) || !(sa_[e] == sb_[f])) continue;
            image_[e] = f;
            used_.insert(f);
            bool ok = true;
            for (const auto& x : closing_[k]) {
                EventSet y;
                for (std::size_t m : x.members()) y.insert(image_[m]);
                if (!b_.contains(y)) {
                    ok = false;
                    break;
                }
            }
            if (ok && assign(k + 1)) return true;
            used_.erase(f);
        }
        return false;
    }

    const ConfStruct& a_;
    const ConfStruct& b_;
    std::vector<Signature> sa_, sb_;
    std::vector<std::size_t> order_, targets_;
    std::vector<std::vector<EventSet>> closing_;
    std::vector<std::size_t> image_;
    EventSet used_;
};

} // namespace

std::optional<std::map<std::size_t, std::size_t>> iso(const ConfStruct& a, const ConfStruct& b)
{
    return IsoSearch(a, b).run();
}

} // namespace rccs
