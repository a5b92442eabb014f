#pragma once

#include <stdexcept>
#include <string>

namespace teachdim {

// Malformed or out-of-range input (bad index, bad file, inconsistent
// teaching sequence). CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive computation exceeded its configured budget. Carries the
// bound that was hit so callers can report it. CLI maps this to exit code 3.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t bound)
        : std::runtime_error(what + " (budget: " + std::to_string(bound) + ")"), bound_(bound) {}

    std::size_t bound() const { return bound_; }

private:
    std::size_t bound_;
};

// A preference function was used with a class it is not bound to.
class BindingError : public std::logic_error {
public:
    explicit BindingError(const std::string& what) : std::logic_error(what) {}
};

// Operation called outside its mathematical domain (empty version space,
// target not in the version space, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace teachdim
