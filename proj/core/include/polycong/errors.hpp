#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polycong {

// An enumeration or search would exceed its configured budget.  The message
// names both the required size and the bound that refused it.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what_arg, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what_arg), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// Two independent computation routes for the same quantity disagreed.  This is
// always a bug somewhere, never a recoverable condition.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what_arg) : std::logic_error(what_arg) {}
};

}  // namespace polycong
