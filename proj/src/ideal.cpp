#include "binoc/ideal.hpp"

#include "binoc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <set>

namespace binoc {

const Limits& default_limits() {
    static Limits limits = [] {
        Limits l;
        if (const char* env = std::getenv("BINOC_MAX_DEGREE")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) l.max_degree = v;
        }
        return l;
    }();
    return limits;
}

Ideal::Ideal(std::size_t nvars, FieldPtr field, std::vector<Polynomial> gens, Limits limits)
    : nvars_(nvars), field_(std::move(field)), limits_(limits) {
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        binomial_ = binomial_ && g.is_binomial();
        gens_.push_back(std::move(g));
    }
}

bool Ideal::is_zero_ideal() const { return gens_.empty(); }

Polynomial reduce_by(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const TermOrder& ord) {
    Polynomial rem(f.nvars(), f.field());
    Polynomial cur = f;
    while (!cur.is_zero()) {
        const Term& lt = cur.leading_term(ord);
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            const Term& gl = g.leading_term(ord);
            if (gl.exp.divides(lt.exp)) {
                Scalar c = lt.coef / gl.coef;
                cur = cur - g.term_multiplied(lt.exp - gl.exp, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(lt.exp, lt.coef);
            cur = cur - Polynomial::monomial(cur.nvars(), lt.exp, lt.coef);
        }
    }
    return rem;
}

namespace {

struct Pair {
    std::size_t i, j;
    Exponent lcm;
    long deg;
};

bool pair_less(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Buchberger, normal selection strategy, Gebauer-Moller pair elimination.
std::vector<Polynomial> buchberger(std::vector<Polynomial> basis, const TermOrder& ord,
                                   const Limits& limits) {
    auto degree_check = [&](const Polynomial& p) {
        if (p.total_degree() > limits.max_degree)
            throw make_error(ErrorCode::ResourceLimit,
                             "total degree cap exceeded during basis computation",
                             limits.max_degree);
    };

    // drop zeros, normalize
    std::vector<Polynomial> gb;
    for (auto& g : basis) {
        if (g.is_zero()) continue;
        degree_check(g);
        gb.push_back(g.normalized(ord));
    }

    std::vector<Pair> queue;
    auto lead = [&](std::size_t i) -> const Exponent& {
        return gb[i].leading_term(ord).exp;
    };

    auto add_pairs_for = [&](std::size_t t) {
        // Gebauer-Moller update when adding gb[t]
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            Exponent l = Exponent::lcm(lead(i), lead(t));
            fresh.push_back(Pair{i, t, l, l.total_degree()});
        }
        // M criterion: drop (i,t) when another (j,t) has lcm strictly dividing
        std::vector<char> keep(fresh.size(), 1);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || !keep[a] || !keep[b]) continue;
                if (fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(fresh[a].lcm))
                    keep[a] = 0;
            }
        // F criterion: among equal lcms keep one
        for (std::size_t a = 0; a < fresh.size(); ++a)
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (keep[a] && keep[b] && fresh[a].lcm == fresh[b].lcm) keep[b] = 0;
        // B criterion: coprime leads reduce to zero
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a] && Exponent::coprime(lead(fresh[a].i), lead(t))) keep[a] = 0;
        // prune old pairs via the chain criterion with the new element
        std::vector<Pair> kept_old;
        for (const Pair& p : queue) {
            Exponent l = Exponent::lcm(lead(p.i), lead(p.j));
            if (lead(t).divides(l) && Exponent::lcm(lead(p.i), lead(t)) != l &&
                Exponent::lcm(lead(p.j), lead(t)) != l)
                continue;
            kept_old.push_back(p);
        }
        queue = std::move(kept_old);
        for (std::size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) queue.push_back(fresh[a]);
    };

    for (std::size_t t = 1; t < gb.size(); ++t) add_pairs_for(t);

    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *best;
        queue.erase(best);

        const Polynomial &f = gb[p.i], &g = gb[p.j];
        const Term &lf = f.leading_term(ord), &lg = g.leading_term(ord);
        Polynomial s = f.term_multiplied(p.lcm - lf.exp, lf.coef.inverse()) -
                       g.term_multiplied(p.lcm - lg.exp, lg.coef.inverse());
        Polynomial r = reduce_by(s, gb, ord);
        if (r.is_zero()) continue;
        degree_check(r);
        gb.push_back(r.normalized(ord));
        if (gb.size() > limits.max_basis)
            throw make_error(ErrorCode::ResourceLimit, "basis size cap exceeded",
                             (long)limits.max_basis);
        add_pairs_for(gb.size() - 1);
    }
    return gb;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gb, const TermOrder& ord) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<char> alive(gb.size(), 1);
    for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j || !alive[i] || !alive[j]) continue;
            const Exponent &li = gb[i].leading_term(ord).exp,
                           &lj = gb[j].leading_term(ord).exp;
            if (lj.divides(li) && (li != lj || j < i)) alive[i] = 0;
        }
    std::vector<Polynomial> min;
    for (std::size_t i = 0; i < gb.size(); ++i)
        if (alive[i]) min.push_back(gb[i]);

    // tail-reduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < min.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < min.size(); ++j)
                if (j != i) others.push_back(min[j]);
            Polynomial r = reduce_by(min[i], others, ord);
            if (r.is_zero()) {
                min.erase(min.begin() + i);
                changed = true;
                break;
            }
            r = r.normalized(ord);
            if (r != min[i]) {
                min[i] = r;
                changed = true;
            }
        }
    }
    std::sort(min.begin(), min.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_term(ord).exp, b.leading_term(ord).exp) < 0;
    });
    return min;
}

} // namespace

std::vector<Polynomial> Ideal::compute_reduced_basis(const TermOrder& ord) const {
    return reduce_basis(buchberger(gens_, ord, limits_), ord);
}

const std::vector<Polynomial>& Ideal::reduced_basis(const TermOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto key = ord.key();
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return it->second;
    auto gb = compute_reduced_basis(ord);
    return cache_->bases.emplace(key, std::move(gb)).first->second;
}

const std::vector<Polynomial>& Ideal::reduced_basis() const {
    return reduced_basis(default_order());
}

Polynomial Ideal::normal_form(const Polynomial& f, const TermOrder& ord) const {
    return reduce_by(f, reduced_basis(ord), ord);
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
    return normal_form(f, default_order());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains_one() const {
    if (gens_.empty()) return false;
    Polynomial one = Polynomial::monomial(nvars_, Exponent(nvars_), field_->one());
    return contains(one);
}

bool Ideal::contains_monomial() const {
    // I contains a monomial iff saturating at all variables yields <1>
    std::vector<std::size_t> all(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) all[i] = i;
    return saturate_vars(*this, all).contains_one();
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, const TermOrder& ord) {
    return I.normal_form(f, ord);
}

Ideal Ideal::with_extra_generators(std::vector<Polynomial> extra) const {
    std::vector<Polynomial> gens = gens_;
    for (auto& g : extra) gens.push_back(std::move(g));
    return Ideal(nvars_, field_, std::move(gens), limits_);
}

bool Ideal::equal(const Ideal& a, const Ideal& b) {
    const auto& ga = a.reduced_basis();
    const auto& gb = b.reduced_basis();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

Ideal Ideal::sum(const Ideal& a, const Ideal& b) {
    return a.with_extra_generators(b.generators());
}

Ideal Ideal::extend_ring(const Ideal& a, std::size_t new_nvars) {
    assert(new_nvars >= a.nvars_);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.gens_) {
        Polynomial h(new_nvars, a.field_);
        for (const Term& t : g.terms()) {
            Exponent e(new_nvars);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = t.exp[i];
            h.add_term(e, t.coef);
        }
        gens.push_back(std::move(h));
    }
    return Ideal(new_nvars, a.field_, std::move(gens), a.limits_);
}

Ideal Ideal::restrict_ring(const Ideal& a, const std::vector<std::size_t>& keep) {
    std::vector<Polynomial> gens;
    for (const Polynomial& g : a.gens_) {
        Polynomial h(keep.size(), a.field_);
        for (const Term& t : g.terms()) {
            Exponent e(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) e[i] = t.exp[keep[i]];
            h.add_term(e, t.coef);
        }
        gens.push_back(std::move(h));
    }
    return Ideal(keep.size(), a.field_, std::move(gens), a.limits_);
}

Ideal Ideal::eliminate(const Ideal& a, const std::vector<std::size_t>& keep) {
    std::vector<char> keep_flag(a.nvars_, 0);
    for (std::size_t v : keep) keep_flag[v] = 1;
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < a.nvars_; ++i)
        if (!keep_flag[i]) drop.push_back(i);
    TermOrder ord = TermOrder::elimination(a.nvars_, drop);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : a.reduced_basis(ord)) {
        bool pure = true;
        for (const Term& t : g.terms())
            for (std::size_t v : drop)
                if (t.exp[v]) pure = false;
        if (pure) kept.push_back(g);
    }
    Ideal full(a.nvars_, a.field_, std::move(kept), a.limits_);
    return restrict_ring(full, keep);
}

Ideal Ideal::intersect(const Ideal& a, const Ideal& b) {
    assert(a.nvars_ == b.nvars_);
    // auxiliary variable t: I \cap J = (t I + (1-t) J) \cap k[x]
    std::size_t n = a.nvars_;
    Ideal ae = extend_ring(a, n + 1), be = extend_ring(b, n + 1);
    Exponent te = Exponent::unit(n + 1, n);
    Scalar one = a.field_->one();
    Polynomial t = Polynomial::monomial(n + 1, te, one);
    Polynomial one_minus_t =
        Polynomial::binomial(n + 1, Exponent(n + 1), one, te, -one);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : ae.generators()) gens.push_back(t * g);
    for (const Polynomial& g : be.generators()) gens.push_back(one_minus_t * g);
    Ideal aux(n + 1, a.field_, std::move(gens), a.limits_);
    std::vector<std::size_t> keep(n);
    for (std::size_t i = 0; i < n; ++i) keep[i] = i;
    Ideal result = eliminate(aux, keep);
    // re-present over the original ring (keeps caches fresh)
    return Ideal(n, a.field_, result.generators(), a.limits_);
}

Ideal Ideal::intersect_many(std::size_t nvars, FieldPtr field,
                            const std::vector<Ideal>& ideals) {
    if (ideals.empty()) {
        Polynomial one = Polynomial::monomial(nvars, Exponent(nvars), field->one());
        return Ideal(nvars, field, {one});
    }
    Ideal acc = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
    return acc;
}

Ideal Ideal::colon(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) throw make_error(ErrorCode::ConfigError, "colon by zero");
    Ideal fid(a.nvars_, a.field_, {f}, a.limits_);
    Ideal inter = intersect(a, fid);
    TermOrder ord = a.default_order();
    std::vector<Polynomial> gens;
    for (const Polynomial& g : inter.generators()) {
        // g is a multiple of f; divide exactly
        Polynomial q(a.nvars_, a.field_);
        Polynomial cur = g;
        const Term& lf = f.leading_term(ord);
        while (!cur.is_zero()) {
            const Term& lc = cur.leading_term(ord);
            assert(lf.exp.divides(lc.exp));
            Scalar c = lc.coef / lf.coef;
            Exponent sh = lc.exp - lf.exp;
            q.add_term(sh, c);
            cur = cur - f.term_multiplied(sh, c);
        }
        gens.push_back(std::move(q));
    }
    return Ideal(a.nvars_, a.field_, std::move(gens), a.limits_);
}

Ideal Ideal::saturate(const Ideal& a, const Exponent& m) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) vars.push_back(i);
    return saturate_vars(a, vars);
}

Ideal Ideal::saturate_vars(const Ideal& a, const std::vector<std::size_t>& vars) {
    // variable-by-variable colon chain; keeps intermediate ideals binomial
    Ideal cur = a;
    for (std::size_t v : vars) {
        Polynomial xv =
            Polynomial::monomial(a.nvars_, Exponent::unit(a.nvars_, v), a.field_->one());
        while (true) {
            Ideal next = colon(cur, xv);
            if (equal(next, cur)) break;
            cur = next;
        }
    }
    return cur;
}

} // namespace binoc
