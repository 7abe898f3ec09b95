#include "binoc/scalar.hpp"

#include "binoc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace binoc {

namespace {

std::mutex g_intern_mutex;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
    // extended euclid; p prime, a != 0
    long long t = 0, nt = 1, r = (long long)p, nr = (long long)(a % p);
    while (nr) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += (long long)p;
    return (uint64_t)t;
}

std::vector<uint64_t> factor_trial(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Baby-step giant-step discrete log of a to base g in F_p^*.
std::optional<uint64_t> discrete_log(uint64_t g, uint64_t a, uint64_t p) {
    uint64_t n = p - 1;
    uint64_t m = 1;
    while (m * m < n) ++m;
    std::map<uint64_t, uint64_t> table;
    uint64_t cur = 1;
    for (uint64_t j = 0; j < m; ++j) {
        table.emplace(cur, j);
        cur = mulmod(cur, g, p);
    }
    uint64_t step = powmod(invmod(g, p), m, p);
    cur = a % p;
    for (uint64_t i = 0; i <= m; ++i) {
        auto it = table.find(cur);
        if (it != table.end()) return (i * m + it->second) % n;
        cur = mulmod(cur, step, p);
    }
    return std::nullopt;
}

// ---- Q[x] helpers for the cyclotomic representation -----------------

using QPoly = std::vector<mpq_class>; // ascending coefficients

void qp_trim(QPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

// euclidean division, divisor monic or general (exact field coefficients)
void qp_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
    q.assign(a.size(), mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qp_trim(a);
    }
    qp_trim(q);
    r = a;
}

QPoly qp_mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qp_divmod(a, b, q, r);
    return r;
}

// extended euclid: returns (g, s) with s*a = g mod b, g nonzero constant when coprime
void qp_ext_gcd(QPoly a, QPoly b, QPoly& g, QPoly& s) {
    QPoly s0{mpq_class(1)}, s1{};
    while (!b.empty()) {
        QPoly q, r;
        qp_divmod(a, b, q, r);
        QPoly qs = qp_mul(q, s1);
        QPoly ns(std::max(s0.size(), qs.size()), mpq_class(0));
        for (std::size_t i = 0; i < s0.size(); ++i) ns[i] += s0[i];
        for (std::size_t i = 0; i < qs.size(); ++i) ns[i] -= qs[i];
        qp_trim(ns);
        a = b;
        b = r;
        s0 = s1;
        s1 = ns;
    }
    g = a;
    s = s0;
}

QPoly cyclotomic_poly(uint32_t m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    QPoly num(m + 1, mpq_class(0));
    num[0] = -1;
    num[m] = 1;
    for (uint32_t d = 1; d < m; ++d) {
        if (m % d) continue;
        QPoly phid = cyclotomic_poly(d);
        QPoly q, r;
        qp_divmod(num, phid, q, r);
        assert(r.empty());
        num = q;
    }
    return num;
}

} // namespace

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::BoundExceeded: return "BoundExceeded";
        case ErrorCode::NotPCofinite: return "NotPCofinite";
        case ErrorCode::NilClass: return "NilClass";
        case ErrorCode::NotCoprincipal: return "NotCoprincipal";
        case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
        case ErrorCode::FieldExtensionRequired: return "FieldExtensionRequired";
        case ErrorCode::BadCharacteristic: return "BadCharacteristic";
        case ErrorCode::UnsupportedUnitRank: return "UnsupportedUnitRank";
        case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

// ---- Field -----------------------------------------------------------

std::shared_ptr<const Field> Field::rationals() {
    static std::shared_ptr<const Field> q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = FieldKind::Rationals;
        return f;
    }();
    return q;
}

std::shared_ptr<const Field> Field::prime(uint32_t p) {
    if (p < 2 || p >= (1u << 31))
        throw make_error(ErrorCode::ConfigError, "prime field characteristic out of range");
    for (uint32_t d = 2; (uint64_t)d * d <= p; ++d)
        if (p % d == 0) throw make_error(ErrorCode::ConfigError, "characteristic is not prime");
    static std::map<uint32_t, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::PrimeField;
    f->p_ = p;
    cache[p] = f;
    return f;
}

std::shared_ptr<const Field> Field::cyclotomic(uint32_t m) {
    if (m < 2) return rationals();
    static std::map<uint32_t, std::shared_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(g_intern_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Cyclotomic;
    f->m_ = m;
    f->phi_ = cyclotomic_poly(m);
    cache[m] = f;
    return f;
}

std::size_t Field::extension_degree() const {
    return kind_ == FieldKind::Cyclotomic ? phi_.size() - 1 : 1;
}

Scalar Field::zero() const { return from_integer(0); }
Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long n) const {
    Scalar s(shared_from_this());
    switch (kind_) {
        case FieldKind::Rationals: s.v_ = mpq_class(n); break;
        case FieldKind::PrimeField: {
            long long r = (long long)n % (long long)p_;
            if (r < 0) r += p_;
            s.v_ = (uint64_t)r;
            break;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> v;
            if (n != 0) v.push_back(mpq_class(n));
            s.v_ = std::move(v);
            break;
        }
    }
    return s;
}

Scalar Field::from_rational(const mpq_class& q) const {
    Scalar s(shared_from_this());
    switch (kind_) {
        case FieldKind::Rationals: s.v_ = q; break;
        case FieldKind::PrimeField: {
            mpz_class num = q.get_num() % p_;
            if (num < 0) num += p_;
            mpz_class den = q.get_den() % p_;
            uint64_t n = num.get_ui(), d = den.get_ui();
            if (d == 0) throw make_error(ErrorCode::BadCharacteristic, "denominator divisible by p");
            s.v_ = mulmod(n, invmod(d, p_), p_);
            break;
        }
        case FieldKind::Cyclotomic: {
            std::vector<mpq_class> v;
            if (q != 0) v.push_back(q);
            s.v_ = std::move(v);
            break;
        }
    }
    return s;
}

uint64_t Field::fp_generator() const {
    if (gen_) return gen_;
    uint64_t n = p_ - 1;
    auto fs = factor_trial(n);
    for (uint64_t g = 2; g < p_; ++g) {
        bool ok = true;
        for (uint64_t q : fs)
            if (powmod(g, n / q, p_) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = g;
            return g;
        }
    }
    throw make_error(ErrorCode::ConfigError, "no generator found");
}

std::optional<Scalar> Field::root_of_unity(uint32_t m) const {
    if (m <= 1) return one();
    switch (kind_) {
        case FieldKind::Rationals:
            if (m == 2) return from_integer(-1);
            return std::nullopt;
        case FieldKind::PrimeField: {
            if ((p_ - 1) % m != 0) return std::nullopt;
            uint64_t z = powmod(fp_generator(), (p_ - 1) / m, p_);
            Scalar s(shared_from_this());
            s.v_ = z;
            return s;
        }
        case FieldKind::Cyclotomic: {
            if (m == 2) return from_integer(-1);
            if (m_ % m != 0) {
                // zeta_m = -zeta_{2m'} for odd m'... keep to divisors only
                if (m % 2 == 0 || (2u * m) > m_ || m_ % (2 * m) != 0) return std::nullopt;
            }
            uint32_t e = m_ % m == 0 ? m_ / m : 0;
            Scalar s(shared_from_this());
            std::vector<mpq_class> x{mpq_class(0), mpq_class(1)};
            Scalar zeta(shared_from_this());
            zeta.v_ = x;
            if (e) return zeta.pow(e);
            // m odd, 2m | m_: zeta_m = -zeta_{m_}^{m_/(2m)} squared trick; fall back
            return -zeta.pow(m_ / (2 * m));
        }
    }
    return std::nullopt;
}

std::optional<Scalar> Field::nth_root(const Scalar& c, uint32_t d) const {
    if (d == 0) throw make_error(ErrorCode::ConfigError, "0th root");
    if (d == 1 || c.is_zero() || c.is_one()) return c;
    switch (kind_) {
        case FieldKind::PrimeField: {
            uint64_t a = std::get<uint64_t>(c.v_);
            uint64_t g = fp_generator();
            auto t = discrete_log(g, a, p_);
            if (!t) return std::nullopt;
            uint64_t n = p_ - 1;
            uint64_t gg = std::gcd((uint64_t)d, n);
            if (*t % gg != 0) return std::nullopt;
            // solve d*s = t (mod n)
            uint64_t dn = d / gg, tn = *t / gg, nn = n / gg;
            uint64_t s = mulmod(tn % nn, invmod(dn % nn, nn), nn);
            Scalar r(shared_from_this());
            r.v_ = powmod(g, s, p_);
            return r;
        }
        case FieldKind::Rationals: {
            const mpq_class& q = std::get<mpq_class>(c.v_);
            mpq_class target = q;
            bool neg = target < 0;
            if (neg && d % 2 == 0) return std::nullopt;
            if (neg) target = -target;
            mpz_class num = target.get_num(), den = target.get_den();
            mpz_class rn, rd;
            if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), d)) return std::nullopt;
            if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), d)) return std::nullopt;
            mpq_class root(rn, rd);
            root.canonicalize();
            if (neg) root = -root;
            return from_rational(root);
        }
        case FieldKind::Cyclotomic: {
            // supported when the root is (+/-) a power of zeta; search the
            // finite group {+/- zeta^j} directly
            std::vector<mpq_class> x{mpq_class(0), mpq_class(1)};
            Scalar zeta(shared_from_this());
            zeta.v_ = x;
            for (uint32_t sgn = 0; sgn < 2; ++sgn)
                for (uint32_t j = 0; j < m_; ++j) {
                    Scalar r = sgn ? -zeta.pow(j) : zeta.pow(j);
                    if (r.pow(d) == c) return r;
                }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string Field::describe() const {
    switch (kind_) {
        case FieldKind::Rationals: return "QQ";
        case FieldKind::PrimeField: return "F" + std::to_string(p_);
        case FieldKind::Cyclotomic: return "QQ(zeta" + std::to_string(m_) + ")";
    }
    return "?";
}

// ---- Scalar ----------------------------------------------------------

Scalar::Scalar(FieldPtr f) : field_(std::move(f)) {
    switch (field_->kind()) {
        case FieldKind::Rationals: v_ = mpq_class(0); break;
        case FieldKind::PrimeField: v_ = (uint64_t)0; break;
        case FieldKind::Cyclotomic: v_ = std::vector<mpq_class>{}; break;
    }
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (a.field_.get() != b.field_.get())
        throw make_error(ErrorCode::ConfigError, "mixed coefficient fields");
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 0;
        case FieldKind::PrimeField: return std::get<uint64_t>(v_) == 0;
        case FieldKind::Cyclotomic: return std::get<std::vector<mpq_class>>(v_).empty();
    }
    return false;
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: return std::get<mpq_class>(v_) == 1;
        case FieldKind::PrimeField: return std::get<uint64_t>(v_) == 1;
        case FieldKind::Cyclotomic: {
            const auto& v = std::get<std::vector<mpq_class>>(v_);
            return v.size() == 1 && v[0] == 1;
        }
    }
    return false;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    switch (field_->kind()) {
        case FieldKind::Rationals: r.v_ = -std::get<mpq_class>(v_); break;
        case FieldKind::PrimeField: {
            uint64_t a = std::get<uint64_t>(v_);
            r.v_ = a ? field_->characteristic() - a : 0;
            break;
        }
        case FieldKind::Cyclotomic: {
            auto v = std::get<std::vector<mpq_class>>(v_);
            for (auto& c : v) c = -c;
            r.v_ = std::move(v);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(*this, o);
    Scalar r(field_);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_);
            break;
        case FieldKind::PrimeField:
            r.v_ = (std::get<uint64_t>(v_) + std::get<uint64_t>(o.v_)) % field_->characteristic();
            break;
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(v_);
            const auto& b = std::get<std::vector<mpq_class>>(o.v_);
            std::vector<mpq_class> v(std::max(a.size(), b.size()), mpq_class(0));
            for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
            for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
            qp_trim(v);
            r.v_ = std::move(v);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(*this, o);
    Scalar r(field_);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_);
            break;
        case FieldKind::PrimeField:
            r.v_ = mulmod(std::get<uint64_t>(v_), std::get<uint64_t>(o.v_), field_->characteristic());
            break;
        case FieldKind::Cyclotomic: {
            auto prod = qp_mul(std::get<std::vector<mpq_class>>(v_),
                               std::get<std::vector<mpq_class>>(o.v_));
            r.v_ = qp_mod(prod, field_->phi_);
            break;
        }
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw make_error(ErrorCode::ConfigError, "inverse of zero");
    Scalar r(field_);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            r.v_ = mpq_class(1) / std::get<mpq_class>(v_);
            break;
        case FieldKind::PrimeField:
            r.v_ = invmod(std::get<uint64_t>(v_), field_->characteristic());
            break;
        case FieldKind::Cyclotomic: {
            // s*a = g (mod Phi), g constant since Phi is irreducible over Q
            QPoly g, s;
            qp_ext_gcd(std::get<std::vector<mpq_class>>(v_), field_->phi_, g, s);
            if (g.size() != 1)
                throw make_error(ErrorCode::ConfigError, "non-invertible cyclotomic element");
            for (auto& c : s) c /= g[0];
            r.v_ = qp_mod(s, field_->phi_);
            break;
        }
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this, acc = field_->one();
    unsigned long k = (unsigned long)e;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(*this, o);
    return v_ == o.v_;
}

bool Scalar::less(const Scalar& o) const {
    check_same(*this, o);
    switch (field_->kind()) {
        case FieldKind::Rationals:
            return std::get<mpq_class>(v_) < std::get<mpq_class>(o.v_);
        case FieldKind::PrimeField:
            return std::get<uint64_t>(v_) < std::get<uint64_t>(o.v_);
        case FieldKind::Cyclotomic: {
            const auto& a = std::get<std::vector<mpq_class>>(v_);
            const auto& b = std::get<std::vector<mpq_class>>(o.v_);
            if (a.size() != b.size()) return a.size() < b.size();
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        }
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (field_->kind()) {
        case FieldKind::Rationals: {
            std::ostringstream os;
            os << std::get<mpq_class>(v_);
            return os.str();
        }
        case FieldKind::PrimeField:
            return std::to_string(std::get<uint64_t>(v_));
        case FieldKind::Cyclotomic: {
            const auto& v = std::get<std::vector<mpq_class>>(v_);
            if (v.empty()) return "0";
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                if (!first) os << "+";
                os << v[i];
                if (i >= 1) os << "*zeta" << (i > 1 ? "^" + std::to_string(i) : "");
                first = false;
            }
            return os.str();
        }
    }
    return "?";
}

} // namespace binoc
