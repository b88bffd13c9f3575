#pragma once

#include <compare>
#include <string>

namespace rccs {

enum class LabelKind { Input, Output, Tau };

/// An action: a name a, a co-name !a, or the silent action tau.
class Label {
public:
    static Label input(std::string name);
    static Label output(std::string name);
    static Label tau();

    LabelKind kind() const { return kind_; }
    /// Empty for tau.
    const std::string& name() const { return name_; }
    bool is_tau() const { return kind_ == LabelKind::Tau; }

    /// Throws std::logic_error on tau.
    Label complement() const;
    bool complements(const Label& other) const;
    Label renamed(const std::string& name) const;

    /// "a", "!a" or "tau".
    std::string str() const;

    friend auto operator<=>(const Label&, const Label&) = default;
    friend bool operator==(const Label&, const Label&) = default;

private:
    Label(LabelKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

    LabelKind kind_ = LabelKind::Tau;
    std::string name_;
};

} // namespace rccs
