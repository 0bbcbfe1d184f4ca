#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

/// Precondition violation: an argument is outside its documented range.
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A requested computation exceeds a configured enumeration or dimension budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was applied to an object in the wrong mode.
class state_error : public std::logic_error {
public:
    explicit state_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace qsc
