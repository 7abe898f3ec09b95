#include "binoc/congruence.hpp"

#include "binoc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>

namespace binoc {

// ---- MonoidPrime -------------------------------------------------------

MonoidPrime MonoidPrime::of(std::size_t nvars, std::vector<std::size_t> vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    MonoidPrime p;
    p.nvars = nvars;
    p.vars = std::move(vars);
    return p;
}

MonoidPrime MonoidPrime::full(std::size_t nvars) {
    std::vector<std::size_t> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = i;
    return of(nvars, std::move(v));
}

MonoidPrime MonoidPrime::empty(std::size_t nvars) { return of(nvars, {}); }

bool MonoidPrime::contains(std::size_t v) const {
    return std::binary_search(vars.begin(), vars.end(), v);
}

std::vector<std::size_t> MonoidPrime::units() const {
    std::vector<std::size_t> u;
    for (std::size_t i = 0; i < nvars; ++i)
        if (!contains(i)) u.push_back(i);
    return u;
}

std::string MonoidPrime::to_string(const std::vector<std::string>& names) const {
    std::string s = "{";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += names[vars[i]];
    }
    return s + "}";
}

std::vector<MonoidPrime> all_monoid_primes(std::size_t nvars) {
    std::vector<MonoidPrime> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << nvars); ++mask) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < nvars; ++i)
            if (mask & (std::size_t(1) << i)) vars.push_back(i);
        out.push_back(MonoidPrime::of(nvars, std::move(vars)));
    }
    std::sort(out.begin(), out.end(), [](const MonoidPrime& a, const MonoidPrime& b) {
        if (a.vars.size() != b.vars.size()) return a.vars.size() > b.vars.size();
        return a.vars < b.vars;
    });
    return out;
}

// ---- Congruence base ---------------------------------------------------

GreensRelation Congruence::greens_compare(const ClassId& a, const ClassId& b) const {
    bool ab = greens_below(a, b), ba = greens_below(b, a);
    if (ab && ba) return GreensRelation::Equivalent;
    if (ab) return GreensRelation::Below;
    if (ba) return GreensRelation::Above;
    return GreensRelation::Incomparable;
}

const std::vector<ClassId>& Congruence::box_classes() const {
    std::lock_guard<std::mutex> lock(enum_mutex_);
    if (!classes_) {
        std::set<ClassId> seen;
        for (const Exponent& q : probe_box_.points()) {
            ClassId c = class_of(q);
            if (!c.nil) seen.insert(c);
        }
        classes_ = std::vector<ClassId>(seen.begin(), seen.end());
    }
    return *classes_;
}

namespace {
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};
} // namespace

void Congruence::ensure_orbits() const {
    const auto& classes = box_classes();
    std::lock_guard<std::mutex> lock(enum_mutex_);
    if (!orbit_rep_.empty() || classes.empty()) return;
    std::map<ClassId, std::size_t> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;
    UnionFind uf(classes.size());
    auto units = prime_.units();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j : units) {
            Exponent up = classes[i].rep + Exponent::unit(nvars(), j);
            if (eval_box_.contains(up)) {
                ClassId c = class_of(up);
                auto it = index.find(c);
                if (it != index.end()) uf.unite(i, it->second);
            }
            if (classes[i].rep[j] > 0) {
                Exponent dn = classes[i].rep - Exponent::unit(nvars(), j);
                ClassId c = class_of(dn);
                auto it = index.find(c);
                if (it != index.end()) uf.unite(i, it->second);
            }
        }
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
        orbit_rep_[classes[i]] = classes[uf.find(i)];
}

ClassId Congruence::orbit_representative(const ClassId& c) const {
    if (c.nil) return c;
    ensure_orbits();
    std::lock_guard<std::mutex> lock(enum_mutex_);
    auto it = orbit_rep_.find(c);
    return it == orbit_rep_.end() ? c : it->second;
}

// ---- IdealCongruence ---------------------------------------------------

IdealCongruence::IdealCongruence(Ideal original, MonoidPrime P, Ideal localized, Box box)
    : original_(std::move(original)), localized_(std::move(localized)) {
    prime_ = std::move(P);
    probe_box_ = box;
    eval_box_ = box.grown(8 + 2 * *std::max_element(box.hi.begin(), box.hi.end()));
    if (!localized_.is_binomial())
        throw make_error(ErrorCode::ConfigError,
                         "congruences require binomial ideals");

    // cofiniteness in the P-directions: a standard-monomial tower
    // x^c * x_i^inf exists iff no staircase lead divides it
    const auto& basis = localized_.reduced_basis();
    std::vector<Exponent> leads;
    for (const auto& g : basis) leads.push_back(g.leading_term(default_order(localized_)).exp);
    for (std::size_t i : prime_.vars) {
        Box sub;
        sub.hi.assign(nvars(), 0);
        for (const Exponent& l : leads)
            for (std::size_t j = 0; j < nvars(); ++j)
                if (j != i) sub.hi[j] = std::max(sub.hi[j], l[j]);
        bool unbounded = false;
        for (const Exponent& c : sub.points()) {
            bool tower_free = true;
            for (const Exponent& l : leads) {
                bool divides_tail = true;
                for (std::size_t j = 0; j < nvars(); ++j)
                    if (j != i && l[j] > c[j]) divides_tail = false;
                if (divides_tail) {
                    tower_free = false;
                    break;
                }
            }
            if (tower_free) {
                unbounded = true;
                break;
            }
        }
        if (unbounded) {
            cofinite_ = false;
            unbounded_dir_ = i;
            break;
        }
    }
}

TermOrder default_order(const Ideal& I); // fwd (defined below)

TermOrder default_order(const Ideal& I) { return I.default_order(); }

void IdealCongruence::require_cofinite() const {
    if (!cofinite_)
        throw make_error(ErrorCode::NotPCofinite,
                         "fiber has infinitely many standard monomials in direction " +
                             std::to_string(unbounded_dir_),
                         (long)unbounded_dir_);
}

ClassId IdealCongruence::class_of(const Exponent& q) const {
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = class_memo_.find(q);
        if (it != class_memo_.end()) return it->second;
    }
    Polynomial m = Polynomial::monomial(nvars(), q, localized_.field()->one());
    Polynomial nf = localized_.normal_form(m);
    ClassId c;
    if (nf.is_zero()) {
        c = ClassId::nil_class();
    } else {
        assert(nf.term_count() == 1);
        c = ClassId::of(nf.terms()[0].exp);
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    class_memo_.emplace(q, c);
    return c;
}

bool IdealCongruence::greens_below_exact(const Exponent& a, const Exponent& b) const {
    // b in <a> inside the localized quotient:
    // t^b in saturate(I_P + <t^a>, units)
    Ideal with_a = localized_.with_extra_generators(
        {Polynomial::monomial(nvars(), a, localized_.field()->one())});
    Ideal sat = Ideal::saturate_vars(with_a, prime_.units());
    return sat.contains(Polynomial::monomial(nvars(), b, localized_.field()->one()));
}

bool IdealCongruence::greens_below(const ClassId& a, const ClassId& b) const {
    if (a.nil || b.nil) return false;
    auto key = std::make_pair(a.rep, b.rep);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = greens_memo_.find(key);
        if (it != greens_memo_.end()) return it->second;
    }
    bool r = greens_below_exact(a.rep, b.rep);
    std::lock_guard<std::mutex> lock(memo_mutex_);
    greens_memo_.emplace(key, r);
    return r;
}

std::optional<long> IdealCongruence::nilpotency_order() const {
    if (prime_.is_empty()) return 0;
    const FieldPtr& k = localized_.field();
    long total = 0;
    for (std::size_t i : prime_.vars) {
        Ideal sat = Ideal::saturate_vars(localized_, {i});
        if (!sat.contains_one()) return std::nullopt; // x_i not nilpotent
        long ni = 1;
        while (true) {
            Exponent e(nvars());
            e[i] = (int32_t)ni;
            if (localized_.contains(Polynomial::monomial(nvars(), e, k->one()))) break;
            ++ni;
            if (ni > localized_.limits().max_degree)
                throw make_error(ErrorCode::ResourceLimit, "nilpotency order exceeds cap");
        }
        total += ni;
    }
    // least N with every P-supported degree-N monomial in I_P
    for (long N = 1; N <= total; ++N) {
        bool all_in = true;
        std::function<bool(std::size_t, long, Exponent&)> rec =
            [&](std::size_t idx, long remaining, Exponent& e) -> bool {
            if (idx + 1 == prime_.vars.size()) {
                e[prime_.vars[idx]] = (int32_t)remaining;
                bool in = localized_.contains(
                    Polynomial::monomial(nvars(), e, k->one()));
                e[prime_.vars[idx]] = 0;
                return in;
            }
            for (long v = 0; v <= remaining; ++v) {
                e[prime_.vars[idx]] = (int32_t)v;
                bool ok = rec(idx + 1, remaining - v, e);
                e[prime_.vars[idx]] = 0;
                if (!ok) return false;
            }
            return true;
        };
        Exponent e(nvars());
        if (!rec(0, N, e)) all_in = false;
        if (all_in) return N;
    }
    return total;
}

std::shared_ptr<IdealCongruence> localize(const Ideal& I, const MonoidPrime& P,
                                          int box_margin) {
    Ideal IP = Ideal::saturate_vars(I, P.units());
    Box box;
    box.hi.assign(I.nvars(), 2);
    for (const Polynomial& g : IP.reduced_basis())
        for (const Term& t : g.terms())
            for (std::size_t i = 0; i < I.nvars(); ++i)
                box.hi[i] = std::max(box.hi[i], t.exp[i] + 1);
    if (box_margin) box = box.grown(box_margin);
    return std::make_shared<IdealCongruence>(I, P, IP, box);
}

// ---- TableCongruence ---------------------------------------------------

TableCongruence::TableCongruence(MonoidPrime P, Box probe, Box eval) {
    prime_ = std::move(P);
    probe_box_ = std::move(probe);
    eval_box_ = std::move(eval);
}

void TableCongruence::set_class(const Exponent& q, const ClassId& c) {
    table_[q] = c;
}

void TableCongruence::finalize() {
    // canonical labels: lexicographically smallest member of each bucket
    std::map<ClassId, Exponent> canon;
    for (const auto& [q, c] : table_) {
        if (c.nil) continue;
        auto it = canon.find(c);
        if (it == canon.end() || q < it->second) canon.insert_or_assign(c, q);
    }
    for (auto& [q, c] : table_)
        if (!c.nil) c = ClassId::of(canon.at(c));
}

ClassId TableCongruence::class_of(const Exponent& q) const {
    auto it = table_.find(q);
    if (it == table_.end())
        throw make_error(ErrorCode::BoundExceeded,
                         "class lookup outside materialized box at " + q.to_string());
    return it->second;
}

bool TableCongruence::greens_below(const ClassId& a, const ClassId& b) const {
    if (a.nil || b.nil) return false;
    auto key = std::make_pair(a.rep, b.rep);
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = greens_memo_.find(key);
        if (it != greens_memo_.end()) return it->second;
    }
    // BFS over the class graph: +e_i for all i, -e_j for units
    auto units = prime_.units();
    std::set<ClassId> visited{a};
    std::deque<ClassId> work{a};
    bool found = (a == b);
    while (!work.empty() && !found) {
        ClassId cur = work.front();
        work.pop_front();
        // collect members of cur in the eval box (reps may sit anywhere)
        for (const auto& [q, c] : table_) {
            if (c != cur) continue;
            for (std::size_t v = 0; v < nvars(); ++v) {
                std::vector<Exponent> nexts;
                Exponent up = q + Exponent::unit(nvars(), v);
                if (eval_box_.contains(up)) nexts.push_back(up);
                if (!prime_.contains(v) && q[v] > 0)
                    nexts.push_back(q - Exponent::unit(nvars(), v));
                for (const Exponent& nx : nexts) {
                    ClassId c2 = class_of(nx);
                    if (c2.nil || visited.count(c2)) continue;
                    visited.insert(c2);
                    work.push_back(c2);
                    if (c2 == b) found = true;
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    greens_memo_.emplace(key, found);
    return found;
}

bool TableCongruence::refines(const Congruence& coarse) const {
    auto points = probe_box_.points();
    std::map<ClassId, ClassId> image;
    for (const Exponent& q : points) {
        ClassId mine = class_of(q);
        if (mine.nil) continue;
        ClassId theirs = coarse.class_of(q);
        auto it = image.find(mine);
        if (it == image.end())
            image.emplace(mine, theirs);
        else if (it->second != theirs)
            return false;
    }
    return true;
}

bool TableCongruence::same_partition(const Congruence& other) const {
    auto points = probe_box_.points();
    std::map<ClassId, ClassId> fwd, bwd;
    for (const Exponent& q : points) {
        ClassId a = class_of(q), b = other.class_of(q);
        if (a.nil != b.nil) return false;
        if (a.nil) continue;
        auto f = fwd.find(a);
        if (f == fwd.end()) fwd.emplace(a, b);
        else if (f->second != b) return false;
        auto g = bwd.find(b);
        if (g == bwd.end()) bwd.emplace(b, a);
        else if (g->second != a) return false;
    }
    return true;
}

// ---- witnesses ---------------------------------------------------------

namespace {

bool strictly_below(const Congruence& view, const ClassId& a, const ClassId& b) {
    return view.greens_below(a, b) && !view.greens_below(b, a);
}

} // namespace

std::vector<WitnessRecord> witnesses(const Congruence& view, WitnessKind kind) {
    std::vector<WitnessRecord> out;
    const MonoidPrime& P = view.prime();
    if (P.is_empty()) {
        // every element is vacuously a key witness; one orbit suffices
        ClassId c = view.class_of(Exponent(view.nvars()));
        if (!c.nil) {
            WitnessRecord r;
            r.w = c.rep;
            r.prime = P;
            r.kind = kind;
            r.key_aide = ClassId::nil_class();
            out.push_back(std::move(r));
        }
        return out;
    }

    const auto& classes = view.box_classes();
    for (const ClassId& w : classes) {
        WitnessRecord rec;
        rec.w = w.rep;
        rec.prime = P;
        bool is_witness = true;
        std::vector<std::set<ClassId>> aide_sets;
        for (std::size_t i : P.vars) {
            ClassId wi = view.class_of(w.rep + Exponent::unit(view.nvars(), i));
            std::set<ClassId> aides;
            // nil aide: valid whenever w + e_i is nil
            if (wi.nil) aides.insert(ClassId::nil_class());
            for (const ClassId& q : classes) {
                if (q == w) continue;
                ClassId qi = view.class_of(q.rep + Exponent::unit(view.nvars(), i));
                if (qi != wi) continue;
                if (strictly_below(view, q, w)) continue; // q must be maximal in {q,w}
                aides.insert(q);
            }
            if (aides.empty()) {
                is_witness = false;
                break;
            }
            rec.aides[i] = std::vector<ClassId>(aides.begin(), aides.end());
            aide_sets.push_back(std::move(aides));
        }
        if (!is_witness) continue;
        // key aide: one aide serving every generator
        std::set<ClassId> common = aide_sets.front();
        for (std::size_t s = 1; s < aide_sets.size(); ++s) {
            std::set<ClassId> inter;
            std::set_intersection(common.begin(), common.end(), aide_sets[s].begin(),
                                  aide_sets[s].end(), std::inserter(inter, inter.begin()));
            common = std::move(inter);
        }
        bool is_key = !common.empty();
        if (kind == WitnessKind::Key && !is_key) continue;
        rec.kind = is_key ? WitnessKind::Key : WitnessKind::Witness;
        if (is_key) rec.key_aide = *common.begin();
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<ClassId> cogenerators(const Congruence& view) {
    std::vector<ClassId> out;
    const MonoidPrime& P = view.prime();
    if (P.is_empty()) {
        ClassId c = view.class_of(Exponent(view.nvars()));
        if (!c.nil) out.push_back(c);
        return out;
    }
    auto keys = witnesses(view, WitnessKind::Key);
    std::set<ClassId> key_classes;
    for (const auto& r : keys) key_classes.insert(view.class_of(r.w));
    for (const ClassId& c : view.box_classes()) {
        bool dead_end = true;
        for (std::size_t i : P.vars)
            if (!view.class_of(c.rep + Exponent::unit(view.nvars(), i)).nil) {
                dead_end = false;
                break;
            }
        if (dead_end && key_classes.count(c)) out.push_back(c);
    }
    return out;
}

CongruencePredicates congruence_predicates(const Congruence& view) {
    CongruencePredicates p;
    const MonoidPrime& P = view.prime();
    const auto& classes = view.box_classes();
    auto units = P.units();
    std::size_t n = view.nvars();

    // primary: every P-variable nilpotent, units cancellative
    bool nilpotent = true;
    if (const auto* iv = dynamic_cast<const IdealCongruence*>(&view)) {
        for (std::size_t i : P.vars) {
            Ideal sat = Ideal::saturate_vars(iv->localized_ideal(), {i});
            if (!sat.contains_one()) {
                nilpotent = false;
                break;
            }
        }
    } else {
        for (std::size_t i : P.vars) {
            Exponent e(n);
            e[i] = view.eval_box().hi[i];
            if (!view.class_of(e).nil) {
                nilpotent = false;
                break;
            }
        }
    }
    bool cancellative = true;
    for (std::size_t j : units) {
        Exponent ej = Exponent::unit(n, j);
        for (std::size_t a = 0; a < classes.size() && cancellative; ++a)
            for (std::size_t b = a + 1; b < classes.size() && cancellative; ++b) {
                ClassId ca = view.class_of(classes[a].rep + ej);
                ClassId cb = view.class_of(classes[b].rep + ej);
                if (!ca.nil && ca == cb) cancellative = false;
            }
    }
    p.is_primary = nilpotent && cancellative;

    // mesoprimary: partly cancellative quotient
    bool partly = true;
    if (p.is_primary) {
        std::vector<Exponent> unit_points;
        for (const Exponent& q : view.probe_box().points()) {
            bool unit_supported = true;
            for (std::size_t i : P.vars)
                if (q[i]) unit_supported = false;
            if (unit_supported) unit_points.push_back(q);
        }
        for (const ClassId& q : classes) {
            if (!partly) break;
            for (std::size_t a = 0; a < unit_points.size() && partly; ++a)
                for (std::size_t b = a + 1; b < unit_points.size() && partly; ++b) {
                    ClassId qa = view.class_of(q.rep + unit_points[a]);
                    ClassId qb = view.class_of(q.rep + unit_points[b]);
                    if (qa.nil || qa != qb) continue;
                    if (view.class_of(unit_points[a]) != view.class_of(unit_points[b]))
                        partly = false;
                }
        }
    }
    p.is_mesoprimary = p.is_primary && partly;

    // coprincipal: all cogenerators Green's-equivalent
    if (p.is_mesoprimary) {
        auto cogens = cogenerators(view);
        bool all_equiv = !cogens.empty();
        for (std::size_t i = 1; i < cogens.size(); ++i)
            if (view.greens_compare(cogens[0], cogens[i]) != GreensRelation::Equivalent)
                all_equiv = false;
        p.is_coprincipal = all_equiv;
    }

    // soccular: all key witnesses Green's-equivalent (to the cogenerator)
    auto keys = witnesses(view, WitnessKind::Key);
    bool socc = true;
    for (std::size_t i = 0; i + 1 < keys.size(); ++i)
        if (view.greens_compare(view.class_of(keys[i].w), view.class_of(keys[i + 1].w)) !=
            GreensRelation::Equivalent)
            socc = false;
    p.is_soccular = socc;
    return p;
}

// ---- coprincipal component congruence ----------------------------------

std::shared_ptr<TableCongruence> coprincipal_component_congruence(const Congruence& view,
                                                                  const ClassId& w) {
    if (w.nil) throw make_error(ErrorCode::NilClass, "component at a nil class");
    std::size_t n = view.nvars();
    Box probe = view.probe_box();
    Box eval = probe.doubled();
    if (!view.eval_box().contains(Exponent(n) + [&] {
            Exponent e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = eval.hi[i];
            return e;
        }()))
        eval = view.eval_box(); // clamp to what the backing view can answer

    auto out = std::make_shared<TableCongruence>(view.prime(), probe, eval);

    // initial labels: survivors keep their view class, the rest become nil
    std::map<ClassId, std::size_t> index;
    std::vector<ClassId> survivors;
    for (const Exponent& q : eval.points()) {
        ClassId c = view.class_of(q);
        bool survives = !c.nil && view.greens_below(c, w);
        if (survives && !index.count(c)) {
            index[c] = survivors.size();
            survivors.push_back(c);
        }
        out->set_class(q, survives ? c : ClassId::nil_class());
    }

    // unit-translate joins: a,b in one orbit with a+c ~ b+c ~ w for one c
    UnionFind uf(survivors.size() + 1);
    const std::size_t NIL = survivors.size();
    auto units = view.prime().units();
    if (!units.empty()) {
        for (std::size_t a = 0; a < survivors.size(); ++a)
            for (std::size_t b = a + 1; b < survivors.size(); ++b) {
                if (view.orbit_representative(survivors[a]) !=
                    view.orbit_representative(survivors[b]))
                    continue;
                for (const Exponent& c : probe.points()) {
                    Exponent qa = survivors[a].rep + c, qb = survivors[b].rep + c;
                    if (!view.eval_box().contains(qa) || !view.eval_box().contains(qb))
                        continue;
                    if (view.class_of(qa) == w && view.class_of(qb) == w) {
                        uf.unite(a, b);
                        break;
                    }
                }
            }
    }

    // congruence closure over the eval box
    auto points = eval.points();
    auto label_of = [&](const Exponent& q) -> std::size_t {
        ClassId c = out->class_of(q);
        return c.nil ? NIL : uf.find(index.at(c));
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < points.size(); ++a)
            for (std::size_t b = a + 1; b < points.size(); ++b) {
                if (label_of(points[a]) != label_of(points[b])) continue;
                for (std::size_t v = 0; v < n; ++v) {
                    Exponent pa = points[a] + Exponent::unit(n, v);
                    Exponent pb = points[b] + Exponent::unit(n, v);
                    if (!eval.contains(pa) || !eval.contains(pb)) continue;
                    std::size_t la = label_of(pa), lb = label_of(pb);
                    if (la != lb) {
                        if (la == NIL || lb == NIL) {
                            // joining with nil absorbs the class into nil
                            std::size_t live = la == NIL ? lb : la;
                            for (const Exponent& q : points)
                                if (label_of(q) == live)
                                    out->set_class(q, ClassId::nil_class());
                        } else {
                            uf.unite(la, lb);
                        }
                        changed = true;
                    }
                }
            }
    }

    // write back the union-find roots as labels
    for (const Exponent& q : points) {
        ClassId c = out->class_of(q);
        if (c.nil) continue;
        out->set_class(q, survivors[uf.find(index.at(c))]);
    }
    out->finalize();
    return out;
}

} // namespace binoc
