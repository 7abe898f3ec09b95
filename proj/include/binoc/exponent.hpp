#ifndef BINOC_EXPONENT_HPP
#define BINOC_EXPONENT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace binoc {

/// An element of N^n (componentwise addition).  Negative entries appear
/// only transiently inside localized unit-translation bookkeeping.
class Exponent {
  public:
    Exponent() = default;
    explicit Exponent(std::size_t n) : e_(n, 0) {}
    Exponent(std::initializer_list<int32_t> init) : e_(init) {}

    std::size_t size() const { return e_.size(); }
    int32_t operator[](std::size_t i) const { return e_[i]; }
    int32_t& operator[](std::size_t i) { return e_[i]; }

    Exponent operator+(const Exponent& o) const {
        Exponent r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Exponent operator-(const Exponent& o) const {
        Exponent r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    bool operator==(const Exponent& o) const { return e_ == o.e_; }
    bool operator!=(const Exponent& o) const { return e_ != o.e_; }
    /// lexicographic; the deterministic tie-break order used everywhere
    bool operator<(const Exponent& o) const { return e_ < o.e_; }

    bool is_zero() const {
        for (int32_t v : e_) if (v) return false;
        return true;
    }
    bool nonnegative() const {
        for (int32_t v : e_) if (v < 0) return false;
        return true;
    }
    bool divides(const Exponent& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    long total_degree() const {
        long d = 0;
        for (int32_t v : e_) d += v;
        return d;
    }

    static Exponent unit(std::size_t n, std::size_t i) {
        Exponent r(n);
        r.e_[i] = 1;
        return r;
    }
    static Exponent lcm(const Exponent& a, const Exponent& b) {
        Exponent r = a;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
        return r;
    }
    static bool coprime(const Exponent& a, const Exponent& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a.e_[i] > 0 && b.e_[i] > 0) return false;
        return true;
    }

    std::string to_string() const;

  private:
    std::vector<int32_t> e_;
};

/// Componentwise inclusive bounds of a search region in N^n.
struct Box {
    std::vector<int32_t> hi;

    std::size_t size() const { return hi.size(); }
    bool contains(const Exponent& e) const {
        for (std::size_t i = 0; i < hi.size(); ++i)
            if (e[i] < 0 || e[i] > hi[i]) return false;
        return true;
    }
    /// All lattice points of the box in lexicographic order.
    std::vector<Exponent> points() const;

    Box grown(int32_t amount) const {
        Box b = *this;
        for (auto& v : b.hi) v += amount;
        return b;
    }
    Box doubled() const {
        Box b = *this;
        for (auto& v : b.hi) v *= 2;
        return b;
    }
};

} // namespace binoc

#endif
