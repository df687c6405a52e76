#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "trias/errors.hpp"

namespace trias {

// The field of rationals. Elements are kept canonical by mpq_class:
// lowest terms, positive denominator.
struct QField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long n) const { return Elem(n); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const;

    // Accepts "n" or "n/d" with optional sign, e.g. "-2/5".
    Elem parse(const std::string& s) const;
    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "q"; }
};

// Prime field F_p, p prime and p > 3 (and < 2^31 so products fit in int64).
// Elements are always reduced to [0, p).
class PField {
  public:
    using Elem = std::int64_t;

    explicit PField(std::int64_t p);

    std::int64_t modulus() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_long(long n) const {
        Elem r = static_cast<Elem>(n) % p_;
        return r < 0 ? r + p_ : r;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p_; }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem parse(const std::string& s) const;
    std::string to_string(const Elem& a) const { return std::to_string(a); }
    std::string name() const { return "p:" + std::to_string(p_); }

  private:
    std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace trias
