#pragma once

// Shared helpers of the equivalence checkers. Not installed.

#include "rccs/confstruct.hpp"
#include "rccs/equiv.hpp"

#include <unordered_map>

namespace rccs::detail {

/// Memoised causes_in per configuration.
class OrderCache {
public:
    explicit OrderCache(const ConfStruct& c) : c_(c) {}
    const std::vector<EventSet>& below(const EventSet& x);
    const ConfStruct& structure() const { return c_; }

private:
    const ConfStruct& c_;
    std::unordered_map<EventSet, std::vector<EventSet>, EventSetHash> cache_;
};

bool is_matching(OrderCache& a, OrderCache& b, const Triple& t, bool both_ways);

/// f with the pair (e1, e2) added or removed, kept sorted.
std::vector<std::pair<std::size_t, std::size_t>> with_pair(std::vector<std::pair<std::size_t, std::size_t>> f,
                                                           std::size_t e1, std::size_t e2);
std::vector<std::pair<std::size_t, std::size_t>> without_pair(std::vector<std::pair<std::size_t, std::size_t>> f,
                                                              std::size_t e1, std::size_t e2);
std::optional<std::size_t> image(const Triple& t, std::size_t e1);
std::optional<std::size_t> preimage(const Triple& t, std::size_t e2);

} // namespace rccs::detail
