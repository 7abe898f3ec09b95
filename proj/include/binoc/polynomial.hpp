#ifndef BINOC_POLYNOMIAL_HPP
#define BINOC_POLYNOMIAL_HPP

#include "binoc/exponent.hpp"
#include "binoc/scalar.hpp"
#include "binoc/term_order.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binoc {

struct Term {
    Exponent exp;
    Scalar coef;
};

/// A finite map Exponent -> nonzero Scalar.  Terms are kept sorted in
/// descending canonical degrevlex so that equal polynomials compare and
/// print identically; order-dependent operations scan for the leading
/// term under the requested order.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::size_t nvars, FieldPtr field)
        : nvars_(nvars), field_(std::move(field)) {}

    static Polynomial monomial(std::size_t nvars, const Exponent& e, const Scalar& c);
    static Polynomial binomial(std::size_t nvars, const Exponent& a, const Scalar& ca,
                               const Exponent& b, const Scalar& cb);

    std::size_t nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_binomial() const { return terms_.size() <= 2; }
    std::size_t term_count() const { return terms_.size(); }
    long total_degree() const;

    void add_term(const Exponent& e, const Scalar& c);
    const Scalar* coefficient(const Exponent& e) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial term_multiplied(const Exponent& e, const Scalar& c) const;
    /// divide every exponent by e (caller guarantees divisibility)
    Polynomial exponent_shifted_down(const Exponent& e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    const Term& leading_term(const TermOrder& ord) const;
    /// monic under ord
    Polynomial normalized(const TermOrder& ord) const;

    /// canonical total order on polynomials, for deterministic output
    static bool canonical_less(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::vector<std::string>& var_names) const;

  private:
    std::size_t nvars_ = 0;
    FieldPtr field_ = Field::rationals();
    std::vector<Term> terms_; // descending canonical degrevlex

    void insert_sorted(const Exponent& e, const Scalar& c);
};

} // namespace binoc

#endif
