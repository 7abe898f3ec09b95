#ifndef BINOC_TERM_ORDER_HPP
#define BINOC_TERM_ORDER_HPP

#include "binoc/exponent.hpp"

#include <string>
#include <vector>

namespace binoc {

/// A monomial order on N^n: degrevlex, lex, or a two-block elimination
/// order (the listed block compares first, degrevlex within each block).
/// An optional variable permutation reorders priority; perm[k] is the
/// variable index with the k-th highest priority.
class TermOrder {
  public:
    enum class Kind { Degrevlex, Lex, Block };

    static TermOrder degrevlex(std::size_t nvars);
    static TermOrder lex(std::size_t nvars);
    /// Elimination order: variables in `eliminated` dominate the rest.
    static TermOrder elimination(std::size_t nvars, std::vector<std::size_t> eliminated);
    static TermOrder with_permutation(Kind kind, std::vector<std::size_t> perm);

    Kind kind() const { return kind_; }
    std::size_t nvars() const { return perm_.size(); }

    /// negative if a < b, zero if equal, positive if a > b
    int compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }

    /// stable identifier for basis caching
    std::string key() const;

  private:
    Kind kind_ = Kind::Degrevlex;
    std::vector<std::size_t> perm_;  // priority -> variable index
    std::vector<char> in_block1_;    // Block only

    static int degrevlex_cmp(const Exponent& a, const Exponent& b,
                             const std::vector<std::size_t>& vars);
};

} // namespace binoc

#endif
