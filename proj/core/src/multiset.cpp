#include "stardec/multiset.hpp"

#include <string>

#include "stardec/errors.hpp"

namespace stardec {

namespace {
constexpr std::int64_t kSumCap = std::int64_t{1} << 62;
}

IntMultiset::IntMultiset(const std::vector<std::int64_t>& values) {
    for (auto v : values) add(v);
}

void IntMultiset::add(std::int64_t value, std::int64_t mult) {
    if (value < 1) throw InputError("multiset values must be >= 1, got " + std::to_string(value));
    if (mult < 1) throw InputError("multiset multiplicities must be >= 1, got " + std::to_string(mult));
    if (mult > kSumCap / value || sum_ > kSumCap - value * mult)
        throw InputError("multiset sum would exceed 2^62");
    runs_[value] += mult;
    card_ += mult;
    sum_ += value * mult;
}

void IntMultiset::remove(std::int64_t value, std::int64_t mult) {
    auto it = runs_.find(value);
    if (it == runs_.end() || it->second < mult)
        throw InputError("cannot remove " + std::to_string(mult) + " x " + std::to_string(value) +
                         " from multiset");
    it->second -= mult;
    if (it->second == 0) runs_.erase(it);
    card_ -= mult;
    sum_ -= value * mult;
}

std::int64_t IntMultiset::multiplicity(std::int64_t value) const {
    auto it = runs_.find(value);
    return it == runs_.end() ? 0 : it->second;
}

std::int64_t IntMultiset::sum_top(std::int64_t i) const {
    if (i < 0 || i > card_)
        throw InputError("sum_top index " + std::to_string(i) + " out of [0, " +
                         std::to_string(card_) + "]");
    std::int64_t left = i, acc = 0;
    for (const auto& [value, mult] : runs_) {
        if (left <= 0) break;
        std::int64_t take = left < mult ? left : mult;
        acc += value * take;
        left -= take;
    }
    return acc;
}

std::int64_t IntMultiset::max() const {
    if (empty()) throw InputError("max() of empty multiset");
    return runs_.begin()->first;
}

std::int64_t IntMultiset::min() const {
    if (empty()) throw InputError("min() of empty multiset");
    return runs_.rbegin()->first;
}

IntMultiset IntMultiset::plus(const IntMultiset& other) const {
    IntMultiset out = *this;
    for (const auto& [value, mult] : other.runs_) out.add(value, mult);
    return out;
}

IntMultiset IntMultiset::minus(const IntMultiset& other) const {
    IntMultiset out = *this;
    for (const auto& [value, mult] : other.runs_) {
        std::int64_t have = out.multiplicity(value);
        if (have > 0) out.remove(value, mult < have ? mult : have);
    }
    return out;
}

std::vector<std::int64_t> IntMultiset::expanded() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(card_));
    for (const auto& [value, mult] : runs_)
        for (std::int64_t i = 0; i < mult; ++i) out.push_back(value);
    return out;
}

}  // namespace stardec
