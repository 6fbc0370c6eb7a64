#pragma once

#include <stdexcept>
#include <string>

namespace mb {

// Caller violated a documented precondition (CLI maps this to exit code 2).
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical invariant failed; always a bug or a false theorem
// (CLI maps this to exit code 3).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw precondition_error(msg);
}

inline void check_invariant(bool cond, const std::string& msg)
{
    if (!cond)
        throw internal_error(msg);
}

} // namespace mb
