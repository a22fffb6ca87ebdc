#ifndef TRACEGEN_ERRORS_HPP
#define TRACEGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tracegen {

/// Malformed or out-of-contract input: unknown letter names, bad graph
/// documents, invalid orderings, empty sample sets.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside the mathematical domain of an operation, typically
/// p at or beyond the critical root of the relevant Mobius polynomial.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Two redundant computations of the same quantity disagreed beyond the
/// stated tolerance; indicates a bug, not bad input.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace tracegen

#endif
