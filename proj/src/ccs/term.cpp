#include "rccs/term.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace rccs {

// Nil is represented by a null node so that default construction is free.
struct Term::Node {
    Kind kind = Kind::Nil;
    std::vector<Summand> summands;
    Term left;
    Term right;
    std::string name;
};

Term::Term() = default;

Term Term::nil() { return Term(); }

Term Term::prefix(Label prefix, Term continuation)
{
    return sum({Summand{std::move(prefix), std::move(continuation)}});
}

Term Term::sum(std::vector<Summand> summands)
{
    if (summands.empty()) return nil();
    for (const auto& s : summands)
        if (s.prefix.is_tau()) throw std::invalid_argument("tau is not a legal prefix");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Sum;
    node->summands = std::move(summands);
    return Term(std::move(node));
}

Term Term::parallel(Term left, Term right)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Parallel;
    node->left = std::move(left);
    node->right = std::move(right);
    return Term(std::move(node));
}

Term Term::restrict(Term body, std::string name)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Restrict;
    node->left = std::move(body);
    node->name = std::move(name);
    return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::Nil; }

const std::vector<Term::Summand>& Term::summands() const
{
    static const std::vector<Summand> none;
    return node_ ? node_->summands : none;
}

const Term& Term::left() const
{
    if (kind() != Kind::Parallel) throw std::logic_error("not a parallel term");
    return node_->left;
}

const Term& Term::right() const
{
    if (kind() != Kind::Parallel) throw std::logic_error("not a parallel term");
    return node_->right;
}

const Term& Term::body() const
{
    if (kind() != Kind::Restrict) throw std::logic_error("not a restriction");
    return node_->left;
}

const std::string& Term::bound() const
{
    if (kind() != Kind::Restrict) throw std::logic_error("not a restriction");
    return node_->name;
}

bool operator==(const Term& a, const Term& b)
{
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Term::Kind::Nil: return true;
    case Term::Kind::Sum: return a.summands() == b.summands();
    case Term::Kind::Parallel: return a.left() == b.left() && a.right() == b.right();
    case Term::Kind::Restrict: return a.bound() == b.bound() && a.body() == b.body();
    }
    return false;
}

int compare(const Term& a, const Term& b)
{
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
    case Term::Kind::Nil: return 0;
    case Term::Kind::Sum: {
        const auto& sa = a.summands();
        const auto& sb = b.summands();
        for (std::size_t i = 0; i < std::min(sa.size(), sb.size()); ++i) {
            if (sa[i].prefix != sb[i].prefix) return sa[i].prefix < sb[i].prefix ? -1 : 1;
            if (int c = compare(sa[i].continuation, sb[i].continuation)) return c;
        }
        if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
        return 0;
    }
    case Term::Kind::Parallel:
        if (int c = compare(a.left(), b.left())) return c;
        return compare(a.right(), b.right());
    case Term::Kind::Restrict:
        if (a.bound() != b.bound()) return a.bound() < b.bound() ? -1 : 1;
        return compare(a.body(), b.body());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Contexts

struct CcsContext::Node {
    Kind kind = Kind::Hole;
    Label label = Label::tau();
    Term term;
    std::string name;
    std::optional<CcsContext> inner;
};

CcsContext CcsContext::hole()
{
    auto node = std::make_shared<Node>();
    return CcsContext(std::move(node));
}

CcsContext CcsContext::prefix(Label prefix, CcsContext inner)
{
    if (prefix.is_tau()) throw std::invalid_argument("tau is not a legal prefix");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Prefix;
    node->label = std::move(prefix);
    node->inner = std::move(inner);
    return CcsContext(std::move(node));
}

CcsContext CcsContext::parallel(Term left, CcsContext inner)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Parallel;
    node->term = std::move(left);
    node->inner = std::move(inner);
    return CcsContext(std::move(node));
}

CcsContext CcsContext::restrict(CcsContext inner, std::string name)
{
    auto node = std::make_shared<Node>();
    node->kind = Kind::Restrict;
    node->name = std::move(name);
    node->inner = std::move(inner);
    return CcsContext(std::move(node));
}

CcsContext::Kind CcsContext::kind() const { return node_->kind; }
const Label& CcsContext::label() const { return node_->label; }
const Term& CcsContext::term() const { return node_->term; }
const std::string& CcsContext::bound() const { return node_->name; }

const CcsContext& CcsContext::inner() const
{
    if (!node_->inner) throw std::logic_error("the hole has no inner context");
    return *node_->inner;
}

bool CcsContext::parallel_only() const
{
    switch (kind()) {
    case Kind::Hole: return true;
    case Kind::Parallel: return inner().parallel_only();
    default: return false;
    }
}

// ---------------------------------------------------------------------------
// Names

namespace {

void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return;
    case Term::Kind::Sum:
        for (const auto& s : t.summands()) {
            if (!bound.count(s.prefix.name())) out.insert(s.prefix.name());
            collect_free(s.continuation, bound, out);
        }
        return;
    case Term::Kind::Parallel:
        collect_free(t.left(), bound, out);
        collect_free(t.right(), bound, out);
        return;
    case Term::Kind::Restrict: {
        bool fresh = bound.insert(t.bound()).second;
        collect_free(t.body(), bound, out);
        if (fresh) bound.erase(t.bound());
        return;
    }
    }
}

void collect_all(const Term& t, std::set<std::string>& out)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return;
    case Term::Kind::Sum:
        for (const auto& s : t.summands()) {
            out.insert(s.prefix.name());
            collect_all(s.continuation, out);
        }
        return;
    case Term::Kind::Parallel:
        collect_all(t.left(), out);
        collect_all(t.right(), out);
        return;
    case Term::Kind::Restrict:
        out.insert(t.bound());
        collect_all(t.body(), out);
        return;
    }
}

} // namespace

std::set<std::string> free_names(const Term& t)
{
    std::set<std::string> bound, out;
    collect_free(t, bound, out);
    return out;
}

std::set<std::string> all_names(const Term& t)
{
    std::set<std::string> out;
    collect_all(t, out);
    return out;
}

Term rename_free(const Term& t, const std::string& from, const std::string& to)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return t;
    case Term::Kind::Sum: {
        std::vector<Term::Summand> out;
        out.reserve(t.summands().size());
        for (const auto& s : t.summands()) {
            Label l = s.prefix.name() == from ? s.prefix.renamed(to) : s.prefix;
            out.push_back({l, rename_free(s.continuation, from, to)});
        }
        return Term::sum(std::move(out));
    }
    case Term::Kind::Parallel:
        return Term::parallel(rename_free(t.left(), from, to), rename_free(t.right(), from, to));
    case Term::Kind::Restrict:
        if (t.bound() == from) return t;
        return Term::restrict(rename_free(t.body(), from, to), t.bound());
    }
    return t;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid)
{
    if (!avoid.count(base)) return base;
    for (std::size_t k = 1;; ++k) {
        std::string candidate = base + std::to_string(k);
        if (!avoid.count(candidate)) return candidate;
    }
}

std::size_t prefix_count(const Term& t)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return 0;
    case Term::Kind::Sum: {
        std::size_t n = 0;
        for (const auto& s : t.summands()) n += 1 + prefix_count(s.continuation);
        return n;
    }
    case Term::Kind::Parallel: return prefix_count(t.left()) + prefix_count(t.right());
    case Term::Kind::Restrict: return prefix_count(t.body());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Semantics

std::vector<CcsStep> ccs_step(const Term& t)
{
    std::vector<CcsStep> out;
    auto add = [&out](Label l, Term target) {
        for (const auto& s : out)
            if (s.label == l && s.target == target) return;
        out.push_back({std::move(l), std::move(target)});
    };

    switch (t.kind()) {
    case Term::Kind::Nil: break;
    case Term::Kind::Sum:
        for (const auto& s : t.summands()) add(s.prefix, s.continuation);
        break;
    case Term::Kind::Parallel: {
        auto ls = ccs_step(t.left());
        auto rs = ccs_step(t.right());
        for (const auto& l : ls) add(l.label, Term::parallel(l.target, t.right()));
        for (const auto& r : rs) add(r.label, Term::parallel(t.left(), r.target));
        for (const auto& l : ls)
            for (const auto& r : rs)
                if (l.label.complements(r.label)) add(Label::tau(), Term::parallel(l.target, r.target));
        break;
    }
    case Term::Kind::Restrict:
        for (const auto& s : ccs_step(t.body()))
            if (s.label.is_tau() || s.label.name() != t.bound())
                add(s.label, Term::restrict(s.target, t.bound()));
        break;
    }
    return out;
}

std::set<Label> barbs(const Term& t)
{
    std::set<Label> out;
    for (const auto& s : ccs_step(t))
        if (!s.label.is_tau()) out.insert(s.label);
    return out;
}

Term fill_context(const CcsContext& c, const Term& t)
{
    switch (c.kind()) {
    case CcsContext::Kind::Hole: return t;
    case CcsContext::Kind::Prefix: return Term::prefix(c.label(), fill_context(c.inner(), t));
    case CcsContext::Kind::Parallel: return Term::parallel(c.term(), fill_context(c.inner(), t));
    case CcsContext::Kind::Restrict: return Term::restrict(fill_context(c.inner(), t), c.bound());
    }
    return t;
}

// ---------------------------------------------------------------------------
// Canonical keys

namespace {

std::string key_of(const Term& t, std::vector<std::string>& scope)
{
    auto name_key = [&scope](const std::string& n) {
        for (std::size_t i = scope.size(); i-- > 0;)
            if (scope[i] == n) return "#" + std::to_string(i);
        return n;
    };
    switch (t.kind()) {
    case Term::Kind::Nil: return "0";
    case Term::Kind::Sum: {
        std::vector<std::string> parts;
        for (const auto& s : t.summands()) {
            std::string l = s.prefix.kind() == LabelKind::Output ? "!" : "";
            parts.push_back(l + name_key(s.prefix.name()) + "." + key_of(s.continuation, scope));
        }
        std::sort(parts.begin(), parts.end());
        std::string out = "[";
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "+" : "") + parts[i];
        return out + "]";
    }
    case Term::Kind::Parallel:
        return "(" + key_of(t.left(), scope) + "|" + key_of(t.right(), scope) + ")";
    case Term::Kind::Restrict: {
        scope.push_back(t.bound());
        std::string inner = key_of(t.body(), scope);
        scope.pop_back();
        return "(" + inner + ")\\#" + std::to_string(scope.size());
    }
    }
    return {};
}

} // namespace

std::string canonical_key(const Term& t)
{
    std::vector<std::string> scope;
    return key_of(t, scope);
}

bool term_congruent(const Term& a, const Term& b) { return canonical_key(a) == canonical_key(b); }

// ---------------------------------------------------------------------------
// Printing
//
// Levels: 0 parallel, 1 restriction, 2 sum, 3 prefix/atom.

namespace {

std::string format_at(const Term& t, int level);

std::string format_summand(const Term::Summand& s)
{
    std::string out = s.prefix.str();
    if (!s.continuation.is_nil()) out += "." + format_at(s.continuation, 3);
    return out;
}

std::string paren_if(bool wrap, std::string s) { return wrap ? "(" + s + ")" : s; }

std::string format_at(const Term& t, int level)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return "0";
    case Term::Kind::Sum: {
        const auto& ss = t.summands();
        if (ss.size() == 1) return format_summand(ss.front());
        std::string out;
        for (std::size_t i = 0; i < ss.size(); ++i) out += (i ? " + " : "") + format_summand(ss[i]);
        return paren_if(level > 2, out);
    }
    case Term::Kind::Parallel:
        return paren_if(level > 0, format_at(t.left(), 0) + " | " + format_at(t.right(), 1));
    case Term::Kind::Restrict:
        return paren_if(level > 1, format_at(t.body(), 1) + " \\ " + t.bound());
    }
    return {};
}

} // namespace

std::string format_term(const Term& t) { return format_at(t, 0); }

std::string format_context(const CcsContext& c)
{
    switch (c.kind()) {
    case CcsContext::Kind::Hole: return "[]";
    case CcsContext::Kind::Prefix: return c.label().str() + ".(" + format_context(c.inner()) + ")";
    case CcsContext::Kind::Parallel:
        return format_at(c.term(), 0) + " | " +
               (c.inner().kind() == CcsContext::Kind::Parallel ? "(" + format_context(c.inner()) + ")"
                                                                : format_context(c.inner()));
    case CcsContext::Kind::Restrict: return "(" + format_context(c.inner()) + ") \\ " + c.bound();
    }
    return {};
}

} // namespace rccs
