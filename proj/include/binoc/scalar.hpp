#ifndef BINOC_SCALAR_HPP
#define BINOC_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace binoc {

enum class FieldKind { Rationals, PrimeField, Cyclotomic };

class Scalar;

/// A coefficient field: Q, F_p for an odd-sized prime p < 2^31, or the
/// cyclotomic extension Q(zeta_m) represented modulo the m-th cyclotomic
/// polynomial.  Fields are interned; compare instances by pointer.
class Field : public std::enable_shared_from_this<Field> {
  public:
    static std::shared_ptr<const Field> rationals();
    static std::shared_ptr<const Field> prime(uint32_t p);
    static std::shared_ptr<const Field> cyclotomic(uint32_t m);

    FieldKind kind() const { return kind_; }
    uint32_t characteristic() const { return kind_ == FieldKind::PrimeField ? p_ : 0; }
    uint32_t cyclotomic_order() const { return m_; }

    /// Degree of Phi_m for cyclotomic fields, 1 otherwise.
    std::size_t extension_degree() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_integer(long n) const;
    Scalar from_rational(const mpq_class& q) const;

    /// A primitive m-th root of unity, if this field contains one.
    std::optional<Scalar> root_of_unity(uint32_t m) const;

    /// Some d-th root of c in this field, if one exists here.
    std::optional<Scalar> nth_root(const Scalar& c, uint32_t d) const;

    std::string describe() const;

  private:
    friend class Scalar;
    Field() = default;

    FieldKind kind_ = FieldKind::Rationals;
    uint32_t p_ = 0;
    uint32_t m_ = 0;
    std::vector<mpq_class> phi_; // monic Phi_m coefficients, degree ascending

    uint64_t fp_generator() const; // cached-on-demand generator of F_p^*
    mutable uint64_t gen_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

/// An exact field element.  All arithmetic is exact and total on nonzero
/// divisors; mixing scalars from different fields is a logic error.
class Scalar {
  public:
    Scalar() = default; // rational zero
    explicit Scalar(FieldPtr f);

    const FieldPtr& field() const { return field_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total deterministic order (used only for canonical sorting).
    bool less(const Scalar& o) const;

    std::string to_string() const;

  private:
    friend class Field;
    using Value = std::variant<mpq_class, uint64_t, std::vector<mpq_class>>;

    FieldPtr field_ = Field::rationals();
    Value v_ = mpq_class(0);

    static void check_same(const Scalar& a, const Scalar& b);
};

} // namespace binoc

#endif
