#pragma once

#include "rccs/label.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace rccs {

/// CCS term: nil, guarded n-ary sum, binary parallel, restriction.
/// Immutable; copies share structure.
class Term {
public:
    enum class Kind { Nil, Sum, Parallel, Restrict };
    struct Summand;

    Term();

    static Term nil();
    static Term prefix(Label prefix, Term continuation);
    /// An empty list gives nil. Tau prefixes are rejected.
    static Term sum(std::vector<Summand> summands);
    static Term parallel(Term left, Term right);
    static Term restrict(Term body, std::string name);

    Kind kind() const;
    bool is_nil() const { return kind() == Kind::Nil; }

    const std::vector<Summand>& summands() const;
    const Term& left() const;
    const Term& right() const;
    const Term& body() const;
    const std::string& bound() const;

    /// Structural equality (no congruence).
    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Term::Summand {
    Label prefix;
    Term continuation;

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Total structural order, used for canonical summand sorting.
int compare(const Term& a, const Term& b);

/// A term with exactly one hole.
class CcsContext {
public:
    enum class Kind { Hole, Prefix, Parallel, Restrict };

    static CcsContext hole();
    static CcsContext prefix(Label prefix, CcsContext inner);
    static CcsContext parallel(Term left, CcsContext inner);
    static CcsContext restrict(CcsContext inner, std::string name);

    Kind kind() const;
    const Label& label() const;
    const Term& term() const;
    const std::string& bound() const;
    const CcsContext& inner() const;

    /// True for the hole and for P | C where C is parallel-only.
    bool parallel_only() const;

private:
    struct Node;
    explicit CcsContext(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct CcsStep {
    Label label;
    Term target;
};

std::set<std::string> free_names(const Term& t);
/// Every name occurring in t, free or bound.
std::set<std::string> all_names(const Term& t);

/// All one-step derivatives, without structural duplicates.
std::vector<CcsStep> ccs_step(const Term& t);
std::set<Label> barbs(const Term& t);

/// Verbatim substitution of the hole; free names of t may be captured.
Term fill_context(const CcsContext& c, const Term& t);

/// Replace free occurrences of `from` by `to`. Capture is not checked.
Term rename_free(const Term& t, const std::string& from, const std::string& to);

/// Canonical string: summands sorted, bound names replaced by de Bruijn levels.
std::string canonical_key(const Term& t);
bool term_congruent(const Term& a, const Term& b);

/// Fresh name built from `base` that is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Concrete syntax; parse_term(format_term(t)) == t.
std::string format_term(const Term& t);
std::string format_context(const CcsContext& c);

/// Number of prefixes in t.
std::size_t prefix_count(const Term& t);

} // namespace rccs
