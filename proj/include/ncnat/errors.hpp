#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncnat {

// Malformed textual input (term grammar, bit codes, polynomials, chain files).
// `offset` is the byte position of the first offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A request that would require a stratum beyond the configured magnitude budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(int requested, int limit)
        : std::runtime_error("stratum of magnitude " + std::to_string(requested) +
                             " exceeds the configured budget n_max = " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}

    int requested() const noexcept { return requested_; }
    int limit() const noexcept { return limit_; }

private:
    int requested_;
    int limit_;
};

// A rewrite site that does not address a ((w x) (y z))-shaped subtree.
class SiteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ncnat
