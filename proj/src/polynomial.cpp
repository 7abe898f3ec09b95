#include "binoc/polynomial.hpp"

#include "binoc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace binoc {

namespace {
// fixed canonical order for term storage
int canonical_cmp(const Exponent& a, const Exponent& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        int32_t d = a[i] - b[i];
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}
} // namespace

std::string Exponent::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

std::vector<Exponent> Box::points() const {
    std::vector<Exponent> out;
    Exponent cur(hi.size());
    while (true) {
        out.push_back(cur);
        std::size_t i = hi.size();
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                ++cur[i];
                for (std::size_t j = i + 1; j < hi.size(); ++j) cur[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (hi.empty()) return out;
    }
}

Polynomial Polynomial::monomial(std::size_t nvars, const Exponent& e, const Scalar& c) {
    Polynomial p(nvars, c.field());
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::binomial(std::size_t nvars, const Exponent& a, const Scalar& ca,
                                const Exponent& b, const Scalar& cb) {
    Polynomial p(nvars, ca.field());
    p.add_term(a, ca);
    p.add_term(b, cb);
    return p;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const Term& t : terms_) d = std::max(d, t.exp.total_degree());
    return d;
}

void Polynomial::insert_sorted(const Exponent& e, const Scalar& c) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& x) {
                                   return canonical_cmp(t.exp, x) > 0;
                               });
    if (it != terms_.end() && it->exp == e) {
        Scalar s = it->coef + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->coef = s;
    } else if (!c.is_zero()) {
        terms_.insert(it, Term{e, c});
    }
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    assert(e.size() == nvars_);
    insert_sorted(e, c);
}

const Scalar* Polynomial::coefficient(const Exponent& e) const {
    for (const Term& t : terms_)
        if (t.exp == e) return &t.coef;
    return nullptr;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const Term& t : o.terms_) r.insert_sorted(t.exp, t.coef);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(nvars_, field_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coef = t.coef * c;
    return r;
}

Polynomial Polynomial::term_multiplied(const Exponent& e, const Scalar& c) const {
    Polynomial r(nvars_, field_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.exp + e, t.coef * c});
    // adding a constant exponent preserves the canonical order
    return r;
}

Polynomial Polynomial::exponent_shifted_down(const Exponent& e) const {
    Polynomial r(nvars_, field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        assert(e.divides(t.exp));
        r.terms_.push_back(Term{t.exp - e, t.coef});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_, field_);
    for (const Term& t : terms_)
        for (const Term& u : o.terms_) r.insert_sorted(t.exp + u.exp, t.coef * u.coef);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

const Term& Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) throw make_error(ErrorCode::ConfigError, "leading term of 0");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.compare(terms_[i].exp, terms_[best].exp) > 0) best = i;
    return terms_[best];
}

Polynomial Polynomial::normalized(const TermOrder& ord) const {
    if (terms_.empty()) return *this;
    return scaled(leading_term(ord).coef.inverse());
}

bool Polynomial::canonical_less(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = canonical_cmp(a.terms_[i].exp, b.terms_[i].exp);
        if (c) return c < 0;
        if (a.terms_[i].coef != b.terms_[i].coef)
            return a.terms_[i].coef.less(b.terms_[i].coef);
    }
    return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        std::string c = t.coef.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mag = neg ? c.substr(1) : c;
        bool any_var = !t.exp.is_zero();
        bool coef_is_one = (mag == "1");
        bool printed = false;
        if (!coef_is_one || !any_var) {
            bool needs_parens = mag.find('+') != std::string::npos ||
                                mag.find("*") != std::string::npos;
            if (needs_parens) os << "(" << mag << ")";
            else os << mag;
            printed = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.exp[i] == 0) continue;
            if (printed) os << "*";
            os << var_names[i];
            if (t.exp[i] != 1) os << "^" << t.exp[i];
            printed = true;
        }
        first = false;
    }
    return os.str();
}

} // namespace binoc
