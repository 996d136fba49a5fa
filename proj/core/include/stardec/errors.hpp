#pragma once

#include <stdexcept>
#include <string>

namespace stardec {

// Bad caller input (malformed JSON, violated preconditions). CLI exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// The guaranteed decomposer was handed an instance whose largest star size
// exceeds the bound it can promise to handle. Callers should fall back to
// attempt(). Still caller input, so CLI exit code 2.
struct ThresholdError : InputError {
    explicit ThresholdError(const std::string& msg) : InputError(msg) {}
};

// An exhaustive solver refused because the instance exceeds its caps. Exit code 3.
struct CapError : std::runtime_error {
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A guaranteed-to-hold internal invariant failed; always a bug. Exit code 4.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace stardec
