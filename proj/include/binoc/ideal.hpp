#ifndef BINOC_IDEAL_HPP
#define BINOC_IDEAL_HPP

#include "binoc/config.hpp"
#include "binoc/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace binoc {

/// An ideal of k[x_1..x_n] given by generators, with a per-order cache of
/// reduced Groebner bases.  Values are immutable after construction; the
/// cache fills behind an internal lock, so Ideal values may be shared
/// freely across threads.
class Ideal {
  public:
    Ideal() = default;
    Ideal(std::size_t nvars, FieldPtr field, std::vector<Polynomial> gens,
          Limits limits = default_limits());

    std::size_t nvars() const { return nvars_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const Limits& limits() const { return limits_; }
    /// all generators have at most two terms
    bool is_binomial() const { return binomial_; }
    bool is_zero_ideal() const;

    TermOrder default_order() const { return TermOrder::degrevlex(nvars_); }

    /// reduced Groebner basis under ord (cached)
    const std::vector<Polynomial>& reduced_basis(const TermOrder& ord) const;
    const std::vector<Polynomial>& reduced_basis() const;

    Polynomial normal_form(const Polynomial& f, const TermOrder& ord) const;
    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;
    bool contains_one() const;
    /// true if some monomial lies in the ideal
    bool contains_monomial() const;

    Ideal with_extra_generators(std::vector<Polynomial> extra) const;

    static bool equal(const Ideal& a, const Ideal& b);
    static Ideal sum(const Ideal& a, const Ideal& b);
    static Ideal intersect(const Ideal& a, const Ideal& b);
    static Ideal intersect_many(std::size_t nvars, FieldPtr field,
                                const std::vector<Ideal>& ideals);
    /// (I : f), f nonzero
    static Ideal colon(const Ideal& a, const Polynomial& f);
    /// (I : m^infty) for the monomial m = prod x_i^{e_i}, e = exps
    static Ideal saturate(const Ideal& a, const Exponent& m);
    /// saturation at the product of the given variables
    static Ideal saturate_vars(const Ideal& a, const std::vector<std::size_t>& vars);
    /// generators of I mapped into a ring with extra trailing variables
    static Ideal extend_ring(const Ideal& a, std::size_t new_nvars);
    /// drop trailing/selected variables not occurring in the generators
    static Ideal restrict_ring(const Ideal& a, const std::vector<std::size_t>& keep);
    /// I ∩ k[x_i : i in keep], by elimination
    static Ideal eliminate(const Ideal& a, const std::vector<std::size_t>& keep);

  private:
    std::size_t nvars_ = 0;
    FieldPtr field_ = Field::rationals();
    std::vector<Polynomial> gens_;
    bool binomial_ = true;
    Limits limits_;

    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::vector<Polynomial>> bases;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

    std::vector<Polynomial> compute_reduced_basis(const TermOrder& ord) const;
};

/// The unique remainder of f on division by the reduced basis of I.
Polynomial normal_form(const Polynomial& f, const Ideal& I, const TermOrder& ord);

/// Remainder on division by an explicit basis (not necessarily Groebner).
Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& ord);

} // namespace binoc

#endif
