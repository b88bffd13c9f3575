#include "rccs/encode.hpp"

#include "rccs/error.hpp"

#include <set>

namespace rccs {

ConfStruct encode_ccs(const Term& t)
{
    switch (t.kind()) {
    case Term::Kind::Nil: return ConfStruct();
    case Term::Kind::Sum: {
        std::optional<ConfStruct> acc;
        for (const auto& s : t.summands()) {
            ConfStruct branch = prefix(s.prefix, encode_ccs(s.continuation));
            acc = acc ? coproduct(*acc, branch) : branch;
        }
        return *acc;
    }
    case Term::Kind::Parallel: return parallel(encode_ccs(t.left()), encode_ccs(t.right()));
    case Term::Kind::Restrict: return trim(restrict_name(encode_ccs(t.body()), t.bound()));
    }
    return ConfStruct();
}

bool is_singly_labelled(const ConfStruct& c)
{
    for (const auto& x : c.configs()) {
        std::set<std::string> seen;
        for (const auto& s : config_steps(c, x))
            if (!seen.insert(c.label(s.event).str()).second) return false;
    }
    return true;
}

bool is_singly_labelled(const Term& t)
{
    return is_singly_labelled(encode_ccs(t));
}

ConfStruct residual(const ConfStruct& c, const EventSet& x)
{
    return remove_config(c, x);
}

Projection projection_context(const CcsContext& c, const Term& p)
{
    switch (c.kind()) {
    case CcsContext::Kind::Hole: {
        Projection out{encode_ccs(p), {}};
        for (std::size_t e = 0; e < out.structure.event_count(); ++e) out.map.push_back(e);
        return out;
    }
    case CcsContext::Kind::Parallel: {
        Projection inner = projection_context(c.inner(), p);
        Product prod = parallel_with_projections(encode_ccs(c.term()), inner.structure);
        Projection out{prod.structure, {}};
        for (const auto& e : prod.proj2) out.map.push_back(e ? inner.map[*e] : std::nullopt);
        return out;
    }
    default: break;
    }
    throw UnsupportedContext("only contexts of the form P | [] are supported, got " + format_context(c));
}

} // namespace rccs
