#include "rccs/confstruct.hpp"

#include "rccs/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>

namespace rccs {

// EventSet

EventSet::EventSet(std::initializer_list<std::size_t> members)
{
    for (std::size_t e : members) insert(e);
}

bool EventSet::contains(std::size_t e) const
{
    std::size_t w = e / 64;
    return w < words_.size() && (words_[w] >> (e % 64)) & 1U;
}

void EventSet::insert(std::size_t e)
{
    std::size_t w = e / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (e % 64);
}

void EventSet::erase(std::size_t e)
{
    std::size_t w = e / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (e % 64));
    trim();
}

EventSet EventSet::with(std::size_t e) const
{
    EventSet s = *this;
    s.insert(e);
    return s;
}

EventSet EventSet::without(std::size_t e) const
{
    EventSet s = *this;
    s.erase(e);
    return s;
}

std::size_t EventSet::size() const
{
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool EventSet::subset_of(const EventSet& other) const
{
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & ~other.words_[k]) return false;
    return true;
}

bool EventSet::intersects(const EventSet& other) const
{
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t k = 0; k < n; ++k)
        if (words_[k] & other.words_[k]) return true;
    return false;
}

std::vector<std::size_t> EventSet::members() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k)
        for (std::uint64_t w = words_[k]; w; w &= w - 1)
            out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    return out;
}

std::size_t EventSet::bound() const
{
    if (words_.empty()) return 0;
    return (words_.size() - 1) * 64 + 64 - static_cast<std::size_t>(std::countl_zero(words_.back()));
}

EventSet EventSet::operator|(const EventSet& o) const
{
    EventSet s;
    s.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t k = 0; k < s.words_.size(); ++k)
        s.words_[k] = (k < words_.size() ? words_[k] : 0) | (k < o.words_.size() ? o.words_[k] : 0);
    return s;
}

EventSet EventSet::operator&(const EventSet& o) const
{
    EventSet s;
    s.words_.resize(std::min(words_.size(), o.words_.size()), 0);
    for (std::size_t k = 0; k < s.words_.size(); ++k) s.words_[k] = words_[k] & o.words_[k];
    s.trim();
    return s;
}

EventSet EventSet::operator-(const EventSet& o) const
{
    EventSet s = *this;
    for (std::size_t k = 0; k < s.words_.size() && k < o.words_.size(); ++k) s.words_[k] &= ~o.words_[k];
    s.trim();
    return s;
}

std::size_t EventSet::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
}

std::strong_ordering operator<=>(const EventSet& a, const EventSet& b)
{
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.words_.size() <=> b.words_.size(); c != 0) return c;
    for (std::size_t k = a.words_.size(); k-- > 0;)
        if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

void EventSet::trim()
{
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

// CsLabel

CsLabel CsLabel::pair(CsLabel left, CsLabel right)
{
    CsLabel l;
    l.kind_ = Kind::Pair;
    l.parts_ = {std::move(left), std::move(right)};
    return l;
}

CsLabel CsLabel::zero()
{
    return CsLabel();
}

const Label& CsLabel::action() const
{
    if (kind_ != Kind::Action) throw std::logic_error("label " + str() + " is not an action");
    return action_;
}

std::string CsLabel::str() const
{
    switch (kind_) {
    case Kind::Action: return action_.str();
    case Kind::Pair: return "(" + parts_[0].str() + "," + parts_[1].str() + ")";
    case Kind::Zero: return "0";
    }
    return {};
}

std::strong_ordering operator<=>(const CsLabel& a, const CsLabel& b)
{
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.action_ <=> b.action_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(),
                                                  b.parts_.end());
}

// ConfStruct

ConfStruct::ConfStruct() : ConfStruct({}, {EventSet{}}) {}

ConfStruct::ConfStruct(std::vector<Event> events, std::vector<EventSet> configs)
    : events_(std::move(events)), configs_(std::move(configs))
{
    std::set<std::string> seen;
    for (const auto& e : events_)
        if (!seen.insert(e.id).second) throw InputError("duplicate event id '" + e.id + "'");
    std::sort(configs_.begin(), configs_.end());
    configs_.erase(std::unique(configs_.begin(), configs_.end()), configs_.end());
    if (configs_.empty() || !configs_.front().empty()) throw InputError("the empty configuration is missing");
    for (const auto& x : configs_)
        if (x.bound() > events_.size()) throw InputError("configuration refers to an unknown event");
    for (std::size_t k = 0; k < configs_.size(); ++k) index_.emplace(configs_[k], k);
}

std::optional<std::size_t> ConfStruct::find_event(const std::string& id) const
{
    for (std::size_t e = 0; e < events_.size(); ++e)
        if (events_[e].id == id) return e;
    return std::nullopt;
}

std::optional<std::size_t> ConfStruct::index_of(const EventSet& x) const
{
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EventSet ConfStruct::live_events() const
{
    EventSet out;
    for (const auto& x : configs_) out = out | x;
    return out;
}

std::size_t event_cap()
{
    if (const char* env = std::getenv("RCCS_EVENT_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 16;
}

std::string format_config(const ConfStruct& c, const EventSet& x)
{
    std::vector<std::string> ids;
    for (std::size_t e : x.members()) ids.push_back(c.event(e).id);
    std::sort(ids.begin(), ids.end());
    std::string out = "{";
    for (std::size_t k = 0; k < ids.size(); ++k) out += (k ? "," : "") + ids[k];
    return out + "}";
}

} // namespace rccs
