#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace rccs {

/// Finite set of small indices (events of one structure), stored as a bitset.
class EventSet {
public:
    EventSet() = default;
    EventSet(std::initializer_list<std::size_t> members);

    bool contains(std::size_t e) const;
    void insert(std::size_t e);
    void erase(std::size_t e);
    EventSet with(std::size_t e) const;
    EventSet without(std::size_t e) const;

    std::size_t size() const;
    bool empty() const { return words_.empty(); }
    bool subset_of(const EventSet& other) const;
    bool intersects(const EventSet& other) const;
    std::vector<std::size_t> members() const;
    /// Largest member plus one; 0 when empty.
    std::size_t bound() const;

    EventSet operator|(const EventSet& o) const;
    EventSet operator&(const EventSet& o) const;
    EventSet operator-(const EventSet& o) const;

    std::size_t hash() const;

    friend bool operator==(const EventSet&, const EventSet&) = default;
    /// Orders by size first, then by the largest differing member.
    friend std::strong_ordering operator<=>(const EventSet& a, const EventSet& b);

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

struct EventSetHash {
    std::size_t operator()(const EventSet& s) const { return s.hash(); }
};

} // namespace rccs
