#include "trias/fields.hpp"

#include <cstdlib>

namespace trias {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

QField::Elem QField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in Q");
    return Elem(1) / a;
}

QField::Elem QField::div(const Elem& a, const Elem& b) const {
    if (is_zero(b)) throw std::domain_error("division by zero in Q");
    return a / b;
}

QField::Elem QField::parse(const std::string& s) const {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (sgn(q.get_den()) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

PField::PField(std::int64_t p) : p_(p) {
    if (p <= 3 || p >= (std::int64_t(1) << 31) || !is_prime(p))
        throw std::invalid_argument("field modulus must be a prime > 3 and < 2^31, got " +
                                    std::to_string(p));
}

PField::Elem PField::inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid: find t with a*t = 1 (mod p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return from_long(t);
}

PField::Elem PField::parse(const std::string& s) const {
    auto parse_int = [&](const std::string& part) -> Elem {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(part, &pos, 10);
        } catch (const std::exception&) {
            throw ParseError("bad integer literal '" + part + "'");
        }
        if (pos != part.size()) throw ParseError("bad integer literal '" + part + "'");
        return from_long(static_cast<long>(v));
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return parse_int(s);
    Elem num = parse_int(s.substr(0, slash));
    Elem den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return div(num, den);
}

}  // namespace trias
