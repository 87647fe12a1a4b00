#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hpoly {

// Malformed input text (graph6, edge list, JSON). Carries the byte offset
// of the first offending character where known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A configurable search/enumeration budget was exhausted. Never silently
// truncates a result; callers either raise the budget or give up.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, std::size_t limit)
        : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"),
          limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

}  // namespace hpoly
