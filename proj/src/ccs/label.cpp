#include "rccs/label.hpp"

#include <stdexcept>

namespace rccs {

Label Label::input(std::string name) { return Label(LabelKind::Input, std::move(name)); }
Label Label::output(std::string name) { return Label(LabelKind::Output, std::move(name)); }
Label Label::tau() { return Label(LabelKind::Tau, {}); }

Label Label::complement() const
{
    switch (kind_) {
    case LabelKind::Input: return output(name_);
    case LabelKind::Output: return input(name_);
    case LabelKind::Tau: break;
    }
    throw std::logic_error("tau has no complement");
}

bool Label::complements(const Label& other) const
{
    if (is_tau() || other.is_tau()) return false;
    return name_ == other.name_ && kind_ != other.kind_;
}

Label Label::renamed(const std::string& name) const
{
    if (is_tau()) return *this;
    return Label(kind_, name);
}

std::string Label::str() const
{
    switch (kind_) {
    case LabelKind::Input: return name_;
    case LabelKind::Output: return "!" + name_;
    case LabelKind::Tau: break;
    }
    return "tau";
}

} // namespace rccs
