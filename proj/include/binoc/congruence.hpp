#ifndef BINOC_CONGRUENCE_HPP
#define BINOC_CONGRUENCE_HPP

#include "binoc/ideal.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace binoc {

/// A monoid prime of N^n: the subset P of variable indices generating
/// m_P = <x_i : i in P>.  Variables outside P become units after
/// localization.  All 2^n subsets are monoid primes, including the empty one.
struct MonoidPrime {
    std::size_t nvars = 0;
    std::vector<std::size_t> vars; // sorted indices in P

    static MonoidPrime of(std::size_t nvars, std::vector<std::size_t> vars);
    static MonoidPrime full(std::size_t nvars);
    static MonoidPrime empty(std::size_t nvars);

    bool contains(std::size_t v) const;
    std::vector<std::size_t> units() const; // complement
    bool is_empty() const { return vars.empty(); }
    bool is_full() const { return vars.size() == nvars; }

    bool operator==(const MonoidPrime& o) const {
        return nvars == o.nvars && vars == o.vars;
    }
    bool operator<(const MonoidPrime& o) const { return vars < o.vars; }

    std::string to_string(const std::vector<std::string>& names) const;
};

/// Identifier of a congruence class: Nil, or the canonical representative
/// exponent.  For ideal-backed congruences the representative is the
/// standard monomial of the class under the localized reduced basis.
struct ClassId {
    bool nil = true;
    Exponent rep;

    static ClassId nil_class() { return ClassId{}; }
    static ClassId of(Exponent e) { return ClassId{false, std::move(e)}; }

    bool operator==(const ClassId& o) const {
        return nil == o.nil && (nil || rep == o.rep);
    }
    bool operator!=(const ClassId& o) const { return !(*this == o); }
    bool operator<(const ClassId& o) const {
        if (nil != o.nil) return nil && !o.nil;
        if (nil) return false;
        return rep < o.rep;
    }
};

enum class GreensRelation { Below, Above, Equivalent, Incomparable };

enum class WitnessKind { Witness, Key, Essential, Protected, Cogenerator };

/// A witness class together with the aides certifying it.
struct WitnessRecord {
    Exponent w;          // class representative
    MonoidPrime prime;
    WitnessKind kind = WitnessKind::Witness;
    /// per generator of P: aide class representatives (nil aide recorded
    /// as the nil ClassId)
    std::map<std::size_t, std::vector<ClassId>> aides;
    std::optional<ClassId> key_aide;
};

struct CongruencePredicates {
    bool is_primary = false;
    bool is_mesoprimary = false;
    bool is_coprincipal = false;
    bool is_soccular = false;
};

/// Abstract congruence on N^n materialized over a box.  Two backings:
/// ideal-induced (exact, box used only to bound enumerations) and
/// table-backed (derived congruences such as collapses and components).
class Congruence {
  public:
    virtual ~Congruence() = default;

    const MonoidPrime& prime() const { return prime_; }
    std::size_t nvars() const { return prime_.nvars; }
    /// enumeration region; witness searches and candidate scans stay here
    const Box& probe_box() const { return probe_box_; }
    /// class lookups are valid at least on this (larger) region
    const Box& eval_box() const { return eval_box_; }

    virtual ClassId class_of(const Exponent& q) const = 0;
    bool is_nil(const Exponent& q) const { return class_of(q).nil; }

    /// Green's preorder on non-nil classes: a "below" b iff b lies in the
    /// ideal generated by a inside the localized quotient.
    virtual bool greens_below(const ClassId& a, const ClassId& b) const = 0;
    GreensRelation greens_compare(const ClassId& a, const ClassId& b) const;

    /// distinct non-nil classes with representatives inside the probe box,
    /// deterministically ordered by representative
    const std::vector<ClassId>& box_classes() const;

    /// G_P-orbit identifier of a class (connected component of the
    /// unit-translation graph over the probe box); canonical orbit
    /// representative returned.
    ClassId orbit_representative(const ClassId& c) const;

  protected:
    MonoidPrime prime_;
    Box probe_box_;
    Box eval_box_;

  private:
    mutable std::mutex enum_mutex_;
    mutable std::optional<std::vector<ClassId>> classes_;
    mutable std::map<ClassId, ClassId> orbit_rep_;
    void ensure_orbits() const;
};

/// The congruence ~_I localized along P, backed by the saturated ideal
/// I_P \cap k[x].  Class representatives are standard monomials; class
/// lookups reduce modulo the cached basis, so they work at any exponent.
class IdealCongruence : public Congruence {
  public:
    IdealCongruence(Ideal original, MonoidPrime P, Ideal localized, Box box);

    const Ideal& original_ideal() const { return original_; }
    const Ideal& localized_ideal() const { return localized_; }

    ClassId class_of(const Exponent& q) const override;
    bool greens_below(const ClassId& a, const ClassId& b) const override;

    /// true when the standard monomials are bounded in every P-direction;
    /// unbounded_dir reports a failing direction otherwise
    bool p_cofinite() const { return cofinite_; }
    std::size_t unbounded_direction() const { return unbounded_dir_; }
    void require_cofinite() const;

    /// least N with m_P^N contained in I_P, when every P-variable is
    /// nilpotent modulo I_P
    std::optional<long> nilpotency_order() const;

  private:
    Ideal original_;
    Ideal localized_;
    bool cofinite_ = true;
    std::size_t unbounded_dir_ = 0;

    mutable std::mutex memo_mutex_;
    mutable std::map<Exponent, ClassId> class_memo_;
    mutable std::map<std::pair<Exponent, Exponent>, bool> greens_memo_;

    bool greens_below_exact(const Exponent& a, const Exponent& b) const;
};

/// A congruence materialized as an explicit partition of the eval box.
class TableCongruence : public Congruence {
  public:
    TableCongruence(MonoidPrime P, Box probe, Box eval);

    /// assign q to the class labeled by `rep` (callers must cover the
    /// whole eval box before lookups; finalize() canonicalizes labels)
    void set_class(const Exponent& q, const ClassId& c);
    void finalize();

    ClassId class_of(const Exponent& q) const override;
    bool greens_below(const ClassId& a, const ClassId& b) const override;

    /// partition refinement order: true if every class of `coarse`
    /// is a union of classes of this congruence, over the probe box
    bool refines(const Congruence& coarse) const;
    bool same_partition(const Congruence& other) const;

  private:
    std::map<Exponent, ClassId> table_;
    mutable std::mutex memo_mutex_;
    mutable std::map<std::pair<Exponent, Exponent>, bool> greens_memo_;
};

using CongruencePtr = std::shared_ptr<const Congruence>;

/// Localize I along P: saturate at the units, derive the search box from
/// the reduced-basis staircase, and wrap the induced congruence.
std::shared_ptr<IdealCongruence> localize(const Ideal& I, const MonoidPrime& P,
                                          int box_margin = 0);

/// Witness enumeration over the probe box (classes deduplicated).
std::vector<WitnessRecord> witnesses(const Congruence& view, WitnessKind kind);
std::vector<ClassId> cogenerators(const Congruence& view);
CongruencePredicates congruence_predicates(const Congruence& view);

/// A prime congruence descriptor: the pair (P, K_q^P).  Lattices compare
/// by Hermite-normal-form basis.
struct PrimeCongruenceDescriptor {
    MonoidPrime prime;
    std::vector<std::vector<long>> lattice_hnf; // rows, coordinates = units of P
    bool operator==(const PrimeCongruenceDescriptor& o) const {
        return prime == o.prime && lattice_hnf == o.lattice_hnf;
    }
};

PrimeCongruenceDescriptor prime_congruence(const Ideal& I, const MonoidPrime& P,
                                           const Exponent& q);

/// Coprincipal component congruence of `view` cogenerated at the witness
/// class w (Def of the component congruence, quotient reading).
std::shared_ptr<TableCongruence> coprincipal_component_congruence(const Congruence& view,
                                                                  const ClassId& w);

/// Essential witnesses of I at P: key witnesses together with classes that
/// carry a socle element with no support strictly Green's-below them.
std::vector<WitnessRecord> essential_witnesses(const Ideal& I, const MonoidPrime& P);

/// All monoid primes of N^n in deterministic order.
std::vector<MonoidPrime> all_monoid_primes(std::size_t nvars);

} // namespace binoc

#endif
