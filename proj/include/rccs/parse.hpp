#pragma once

#include "rccs/label.hpp"
#include "rccs/term.hpp"

#include <string_view>

namespace rccs {

/// Parse the concrete CCS grammar. Throws SyntaxError.
Term parse_term(std::string_view text);

/// "a", "!a" or "tau". Throws SyntaxError.
Label parse_label(std::string_view text);

} // namespace rccs
