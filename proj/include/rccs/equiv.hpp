#pragma once

// Equivalence checkers on configuration structures, CCS terms and RCCS processes.

#include "rccs/confstruct.hpp"
#include "rccs/process.hpp"
#include "rccs/term.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rccs {

enum class Outcome { Equivalent, Distinguished, BoundedEquivalent };
std::string to_string(Outcome o);

/// One round of a losing play: the attacker moves on `side`, the defender answers on
/// the other side or cannot.
struct Move {
    int side = 1;
    Direction direction = Direction::Forward;
    std::string label;
    /// Event id (structures) or state reached (processes).
    std::string attack;
    std::optional<std::string> answer;
};

struct Verdict {
    Outcome outcome = Outcome::Equivalent;
    /// Distinguishing play, empty when equivalent.
    std::vector<Move> play;
    std::string reason;

    bool equivalent() const { return outcome != Outcome::Distinguished; }
};

/// (x1, x2, f) with f a label preserving bijection between x1 and x2 given as sorted pairs.
struct Triple {
    EventSet x1;
    EventSet x2;
    std::vector<std::pair<std::size_t, std::size_t>> f;

    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct HhpbResult {
    Verdict verdict;
    /// Surviving triples reachable from ({}, {}, {}); empty when distinguished.
    std::vector<Triple> witness;
};

/// Hereditary history preserving bisimilarity, by game search from ({}, {}, {}).
HhpbResult hhpb(const ConfStruct& a, const ConfStruct& b);

/// True when f is label preserving and e <= e' in x1 implies f(e) <= f(e') in x2;
/// with `both_ways`, also the converse.
bool is_matching(const ConfStruct& a, const ConfStruct& b, const Triple& t, bool both_ways = false);

struct Levels {
    /// Indexed by cardinality, 0 .. max configuration size.
    std::vector<std::vector<Triple>> forward;
    std::vector<std::vector<Triple>> backward;
};

struct LevelReport {
    /// The families as defined: forward moves of the left structure only.
    Levels one_sided;
    /// Moves of either structure, matchings preserving order both ways.
    Levels symmetric;
};

LevelReport forw_backw_levels(const ConfStruct& a, const ConfStruct& b);

struct BisimResult {
    Verdict verdict;
    /// Related state pairs reachable from the roots; empty when distinguished.
    std::vector<std::pair<std::string, std::string>> witness;
};

/// Barbed bisimulation over tau reductions.
BisimResult ccs_barbed_bisim(const Term& p, const Term& q);
/// Back-and-forth barbed bisimulation: tau forward, tau backward, forward barbs.
BisimResult rccs_bfb_bisim(const Process& r, const Process& s);
/// Back-and-forth barbed bisimulation on configurations from ({}, {}).
BisimResult cs_bfb_barbed_bisim(const ConfStruct& a, const ConfStruct& b);

/// (!l(e1) + c_1) | ... | (!l(en) + c_n) | [] over the events of x, with fresh names
/// c0, c1, ... outside `avoid`. Throws TauEventInConfig.
CcsContext discriminating_context(const ConfStruct& c, const EventSet& x, const std::set<std::string>& avoid);

/// The hole and every P | [] with P built from at most `max_prefixes` prefixes over
/// the names and their complements by prefixing, sum and parallel; one per congruence class.
std::vector<CcsContext> enumerate_contexts(const std::set<std::string>& names, std::size_t max_prefixes);

struct CongruenceResult {
    /// BoundedEquivalent when every context agrees.
    Verdict verdict;
    std::optional<CcsContext> separating;
    std::size_t contexts_checked = 0;
};

/// Back-and-forth barbed bisimulation of C~[origin r] and C~[origin s] for every context.
CongruenceResult bounded_congruence(const Process& r, const Process& s, const std::vector<CcsContext>& contexts);

struct TheoremReport {
    HhpbResult hhpb;
    CongruenceResult congruence;
    bool agree = false;
    bool singly_labelled = true;
};

/// hhpb([[p]], [[q]]) against the bounded congruence of {} |> p and {} |> q under the
/// discriminating contexts of every configuration and the enumerated contexts.
/// Throws NotSinglyLabelled when required.
TheoremReport main_theorem_check(const Term& p, const Term& q, std::size_t depth_bound,
                                 bool require_singly_labelled = true);

} // namespace rccs
