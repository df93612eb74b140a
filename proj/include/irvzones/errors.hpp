#ifndef IRVZONES_ERRORS_HPP
#define IRVZONES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irvz {

// Input text could not be parsed (tree files, generator specs, config specs).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace irvz

#endif
