#pragma once

#include <cstdint>
#include <vector>

namespace hyperarr {

// Exponent vector of a power product. The length is fixed by the enclosing
// ring; all comparisons assume equal length.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<uint32_t> exps) : exps_(std::move(exps)) {}
    static Monomial one(size_t nvars) { return Monomial(std::vector<uint32_t>(nvars, 0)); }

    size_t nvars() const { return exps_.size(); }
    uint32_t exp(size_t i) const { return exps_[i]; }
    const std::vector<uint32_t>& exps() const { return exps_; }

    uint32_t degree() const {
        uint32_t d = 0;
        for (uint32_t e : exps_) d += e;
        return d;
    }
    bool is_one() const {
        for (uint32_t e : exps_)
            if (e) return false;
        return true;
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        std::vector<uint32_t> e(a.exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
        return Monomial(std::move(e));
    }
    // Requires d.divides(*this).
    Monomial quotient(const Monomial& d) const {
        std::vector<uint32_t> e(exps_);
        for (size_t i = 0; i < e.size(); ++i) e[i] -= d.exps_[i];
        return Monomial(std::move(e));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<uint32_t> e(a.exps_);
        for (size_t i = 0; i < e.size(); ++i)
            if (b.exps_[i] > e[i]) e[i] = b.exps_[i];
        return Monomial(std::move(e));
    }
    static Monomial gcd(const Monomial& a, const Monomial& b) {
        std::vector<uint32_t> e(a.exps_);
        for (size_t i = 0; i < e.size(); ++i)
            if (b.exps_[i] < e[i]) e[i] = b.exps_[i];
        return Monomial(std::move(e));
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] && b.exps_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }

private:
    std::vector<uint32_t> exps_;
};

// Degree-reverse-lexicographic comparison: <0 if a < b, 0 if equal, >0 if a > b.
// Ties at equal total degree go to the monomial with the smaller exponent in
// the last variable where they differ.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.nvars(); i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

// Map comparator putting the leading monomial first.
struct DegRevLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_cmp(a, b) > 0; }
};

}  // namespace hyperarr
