#pragma once

// JSON and DOT serialisation. All JSON is emitted pretty-printed.

#include "rccs/confstruct.hpp"
#include "rccs/encode.hpp"
#include "rccs/equiv.hpp"
#include "rccs/process.hpp"
#include "rccs/term.hpp"

#include <string>
#include <string_view>

namespace rccs {

/// {"events":[{"id":..,"label":..}],"configs":[[ids sorted],..]}
std::string to_json(const ConfStruct& c);
/// Reads the format above; unknown top-level fields are ignored. Throws InputError.
ConfStruct confstruct_from_json(std::string_view text);

/// The structure plus "at" (sorted event ids) and "id_match" (memory id to event id).
std::string to_json(const Address& a);

std::string to_json(const Term& t);
std::string to_json(const Process& p);
/// Reads the AST emitted for terms and processes. Throws InputError.
Term term_from_json(std::string_view text);
Process process_from_json(std::string_view text);

std::string to_json(const ConfStruct& c, const AxiomReport& r);
std::string to_json(const ConfStruct& a, const ConfStruct& b, const HhpbResult& r);
std::string to_json(const ConfStruct& a, const ConfStruct& b, const LevelReport& r);
std::string to_json(const BisimResult& r);
std::string to_json(const CongruenceResult& r);
std::string to_json(const TheoremReport& r);

/// {"error":"replay","step":k,"message":...}
std::string replay_error_json(std::size_t step, const std::string& message);

/// One node per configuration labelled by its label multiset, one edge per
/// single-event extension labelled by the event's label. `at` is highlighted.
std::string to_dot(const ConfStruct& c, const EventSet* at = nullptr);

} // namespace rccs
