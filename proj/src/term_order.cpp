#include "binoc/term_order.hpp"

#include <algorithm>
#include <numeric>

namespace binoc {

TermOrder TermOrder::degrevlex(std::size_t nvars) {
    TermOrder t;
    t.kind_ = Kind::Degrevlex;
    t.perm_.resize(nvars);
    std::iota(t.perm_.begin(), t.perm_.end(), 0);
    return t;
}

TermOrder TermOrder::lex(std::size_t nvars) {
    TermOrder t = degrevlex(nvars);
    t.kind_ = Kind::Lex;
    return t;
}

TermOrder TermOrder::elimination(std::size_t nvars, std::vector<std::size_t> eliminated) {
    TermOrder t = degrevlex(nvars);
    t.kind_ = Kind::Block;
    t.in_block1_.assign(nvars, 0);
    for (std::size_t v : eliminated) t.in_block1_[v] = 1;
    return t;
}

TermOrder TermOrder::with_permutation(Kind kind, std::vector<std::size_t> perm) {
    TermOrder t;
    t.kind_ = kind;
    t.perm_ = std::move(perm);
    return t;
}

int TermOrder::degrevlex_cmp(const Exponent& a, const Exponent& b,
                             const std::vector<std::size_t>& vars) {
    long da = 0, db = 0;
    for (std::size_t v : vars) {
        da += a[v];
        db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    // revlex tie-break: larger = last (lowest priority) differing variable
    // has the smaller exponent
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        int32_t d = a[*it] - b[*it];
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

int TermOrder::compare(const Exponent& a, const Exponent& b) const {
    switch (kind_) {
        case Kind::Lex:
            for (std::size_t v : perm_) {
                int32_t d = a[v] - b[v];
                if (d) return d > 0 ? 1 : -1;
            }
            return 0;
        case Kind::Degrevlex:
            return degrevlex_cmp(a, b, perm_);
        case Kind::Block: {
            std::vector<std::size_t> b1, b2;
            for (std::size_t v : perm_)
                (in_block1_[v] ? b1 : b2).push_back(v);
            if (int c = degrevlex_cmp(a, b, b1)) return c;
            return degrevlex_cmp(a, b, b2);
        }
    }
    return 0;
}

std::string TermOrder::key() const {
    std::string k;
    switch (kind_) {
        case Kind::Degrevlex: k = "drl"; break;
        case Kind::Lex: k = "lex"; break;
        case Kind::Block: k = "blk"; break;
    }
    for (std::size_t v : perm_) k += "." + std::to_string(v);
    if (kind_ == Kind::Block) {
        k += "|";
        for (char c : in_block1_) k += c ? '1' : '0';
    }
    return k;
}

} // namespace binoc
