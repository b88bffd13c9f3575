#pragma once

// Shared helpers of the RCCS engine. Not installed.

#include "rccs/process.hpp"

#include <map>
#include <string>
#include <vector>

namespace rccs::detail {

/// A process whose restrictions have all been extruded: `core` contains no
/// restriction anywhere (threads, codes, alternatives), memories are fully
/// distributed and sums are sorted. `bound` lists the binders, outermost first.
struct Flat {
    std::vector<std::string> bound;
    Process core;
};

Flat flatten(const Process& r);
Process assemble(const Flat& f);

Term sort_sums(const Term& t);
Term rename_names(const Term& t, const std::map<std::string, std::string>& m);
Process rename_names(const Process& p, const std::map<std::string, std::string>& m);

/// Threads of a restriction-free process, left to right.
std::vector<Process> threads(const Process& core);

} // namespace rccs::detail

namespace rccs::detail {

/// True when the parallel tree of r merges back to a single empty memory:
/// the shape of ∅ ▷ P up to distribution.
bool at_origin(const Process& r);

} // namespace rccs::detail
