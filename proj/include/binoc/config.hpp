#ifndef BINOC_CONFIG_HPP
#define BINOC_CONFIG_HPP

#include <cstddef>

namespace binoc {

/// Resource caps bounding desk-scale runs.  max_degree may be overridden
/// through the BINOC_MAX_DEGREE environment variable (emergency use only;
/// everything else is flag-driven).
struct Limits {
    std::size_t max_basis = 10000; // Groebner basis element cap
    long max_degree = 64;          // total degree cap for any computed monomial
    int box_growth_rounds = 3;     // witness-box enlargement retries
};

/// Process-wide defaults, after applying the environment override.
const Limits& default_limits();

} // namespace binoc

#endif
