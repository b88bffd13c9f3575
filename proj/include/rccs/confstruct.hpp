#pragma once

// Labelled configuration structures (E, C, l).

#include "rccs/event_set.hpp"
#include "rccs/label.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace rccs {

/// Label of an event: an action, a pair produced by a product, or 0 (pending restriction).
class CsLabel {
public:
    enum class Kind { Action, Pair, Zero };

    CsLabel(Label action) : kind_(Kind::Action), action_(std::move(action)) {}
    static CsLabel pair(CsLabel left, CsLabel right);
    static CsLabel zero();

    Kind kind() const { return kind_; }
    bool is_action() const { return kind_ == Kind::Action; }
    bool is_tau() const { return is_action() && action_.is_tau(); }
    /// Requires an action label.
    const Label& action() const;
    const CsLabel& left() const { return parts_.at(0); }
    const CsLabel& right() const { return parts_.at(1); }

    /// "a", "!a", "tau", "(a,!a)" or "0".
    std::string str() const;

    friend bool operator==(const CsLabel&, const CsLabel&) = default;
    friend std::strong_ordering operator<=>(const CsLabel& a, const CsLabel& b);

private:
    CsLabel() : kind_(Kind::Zero), action_(Label::tau()) {}
    Kind kind_;
    Label action_;
    std::vector<CsLabel> parts_;
};

struct Event {
    /// Construction-tree identity, e.g. "e", "1.e", "(e,*)".
    std::string id;
    CsLabel label;
};

/// Finite configuration structure. Configurations are kept sorted by (size, members)
/// and must include the empty set.
class ConfStruct {
public:
    /// The structure with no events and the single configuration {}.
    ConfStruct();
    /// Duplicated configurations are merged. Throws InputError when {} is missing,
    /// an event is out of range or event ids repeat.
    ConfStruct(std::vector<Event> events, std::vector<EventSet> configs);

    std::size_t event_count() const { return events_.size(); }
    const std::vector<Event>& events() const { return events_; }
    const Event& event(std::size_t e) const { return events_.at(e); }
    const CsLabel& label(std::size_t e) const { return events_.at(e).label; }
    std::optional<std::size_t> find_event(const std::string& id) const;

    const std::vector<EventSet>& configs() const { return configs_; }
    bool contains(const EventSet& x) const { return index_.count(x) != 0; }
    /// Position of x in configs(), if present.
    std::optional<std::size_t> index_of(const EventSet& x) const;

    /// Events occurring in some configuration.
    EventSet live_events() const;

private:
    std::vector<Event> events_;
    std::vector<EventSet> configs_;
    std::unordered_map<EventSet, std::size_t, EventSetHash> index_;
};

/// Maximum number of events an operation may produce; RCCS_EVENT_CAP overrides 16.
std::size_t event_cap();

// Operations. Results exceeding event_cap() throw CapacityExceeded.

ConfStruct prefix(const Label& l, const ConfStruct& c);
ConfStruct coproduct(const ConfStruct& a, const ConfStruct& b);

struct Product {
    ConfStruct structure;
    /// Projections to the events of the factors; nullopt is the undefined image.
    std::vector<std::optional<std::size_t>> proj1;
    std::vector<std::optional<std::size_t>> proj2;
};
Product product(const ConfStruct& a, const ConfStruct& b);

ConfStruct relabel(const ConfStruct& c, const std::vector<CsLabel>& labels);
/// Keeps the events of `keep` (renumbered in order) and the configurations inside it.
ConfStruct restrict_events(const ConfStruct& c, const EventSet& keep);
/// Removes the events labelled n or !n.
ConfStruct restrict_name(const ConfStruct& c, const std::string& n);
/// Product, synchronisation relabelling, removal of the 0-labelled events.
ConfStruct parallel(const ConfStruct& a, const ConfStruct& b);
/// The parallel composition together with its projections.
Product parallel_with_projections(const ConfStruct& a, const ConfStruct& b);
/// Drops events that occur in no configuration.
ConfStruct trim(const ConfStruct& c);

// Queries.

/// For every member e of x, the set of events below or equal to e in x.
std::vector<EventSet> causes_in(const ConfStruct& c, const EventSet& x);
bool causes(const ConfStruct& c, const EventSet& x, std::size_t e1, std::size_t e2);
bool immediate_cause(const ConfStruct& c, const EventSet& x, std::size_t e1, std::size_t e2);

/// c \ x: events outside x, configurations y with y u x in c. Event indices are kept.
ConfStruct remove_config(const ConfStruct& c, const EventSet& x);

struct ConfigStep {
    std::size_t event;
    EventSet target;
};
std::vector<ConfigStep> config_steps(const ConfStruct& c, const EventSet& x);
std::vector<ConfigStep> config_backsteps(const ConfStruct& c, const EventSet& x);
std::vector<Label> barbs_at(const ConfStruct& c, const EventSet& x);
bool is_maximal(const ConfStruct& c, const EventSet& x);
/// Maximal and of maximum cardinality.
bool is_top(const ConfStruct& c, const EventSet& x);
std::multiset<std::string> label_multiset(const ConfStruct& c, const EventSet& x);

/// A label preserving bijection between live events carrying the configurations
/// of a onto those of b.
std::optional<std::map<std::size_t, std::size_t>> iso(const ConfStruct& a, const ConfStruct& b);

// Axioms.

struct AxiomResult {
    bool pass = true;
    /// Violating configurations and events, empty on success.
    std::vector<EventSet> configs;
    std::vector<std::size_t> events;
    std::string message;
};

struct AxiomReport {
    AxiomResult finiteness;
    AxiomResult coincidence_freeness;
    AxiomResult finite_completeness;
    AxiomResult stability;

    bool all_pass() const
    {
        return finiteness.pass && coincidence_freeness.pass && finite_completeness.pass && stability.pass;
    }
};

AxiomReport validate_axioms(const ConfStruct& c);

/// "{e1,e2}" using event ids.
std::string format_config(const ConfStruct& c, const EventSet& x);

} // namespace rccs
