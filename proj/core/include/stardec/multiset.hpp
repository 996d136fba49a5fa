#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace stardec {

// Multiset of positive 64-bit integers with exact arithmetic. Stored run-length
// as value -> multiplicity, iterated in descending value order so that top-i
// prefix sums read off the runs directly. Immutable use after construction is
// the norm; the mutating helpers exist for builders.
class IntMultiset {
  public:
    using Runs = std::map<std::int64_t, std::int64_t, std::greater<std::int64_t>>;

    IntMultiset() = default;
    explicit IntMultiset(const std::vector<std::int64_t>& values);

    // value >= 1, mult >= 1; rejects totals that would push sum() past 2^62.
    void add(std::int64_t value, std::int64_t mult = 1);
    // Removes up to mult copies; throws InputError if fewer are present.
    void remove(std::int64_t value, std::int64_t mult = 1);

    std::int64_t multiplicity(std::int64_t value) const;  // nu_x
    std::int64_t size() const { return card_; }           // |M|
    bool empty() const { return card_ == 0; }
    std::int64_t sum() const { return sum_; }              // sigma
    std::int64_t sum_top(std::int64_t i) const;            // sigma_i, 0 <= i <= |M|
    std::int64_t max() const;                              // throws on empty
    std::int64_t min() const;

    IntMultiset plus(const IntMultiset& other) const;      // disjoint union
    IntMultiset minus(const IntMultiset& other) const;     // per-value saturating removal

    const Runs& runs() const { return runs_; }
    std::vector<std::int64_t> expanded() const;            // descending, with multiplicity

    bool operator==(const IntMultiset& other) const { return runs_ == other.runs_; }

  private:
    Runs runs_;
    std::int64_t card_ = 0;
    std::int64_t sum_ = 0;
};

}  // namespace stardec
