#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace asmg {

// Base for every domain error raised by the library. `name()` is the stable
// error identifier (e.g. "PrefixSumViolation") printed by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string &detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name))
    {
    }

    const std::string &name() const noexcept { return name_; }

private:
    std::string name_;
};

struct SizeLimitExceeded : Error {
    SizeLimitExceeded(const std::string &what, int n, int limit)
        : Error("SizeLimitExceeded", what + " with n=" + std::to_string(n) + " exceeds the default limit " +
                                         std::to_string(limit) + " (use the override flag)")
    {
    }
};

struct SizeMismatch : Error {
    SizeMismatch(int a, int b)
        : Error("SizeMismatch", "sizes " + std::to_string(a) + " and " + std::to_string(b) + " differ")
    {
    }
};

struct Incomparable : Error {
    Incomparable() : Error("Incomparable", "the first ASM is not below the second in ASM order") {}
};

struct Comparable : Error {
    Comparable() : Error("Comparable", "the first ASM is below the second; no counterexample exists") {}
};

struct NotAnEdge : Error {
    explicit NotAnEdge(const std::string &detail) : Error("NotAnEdge", detail) {}
};

} // namespace asmg
