#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fpq {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Prime field F_p with elements stored as reduced residues in [0, p).
/// All arithmetic is exact; there is no tolerance anywhere in this module.
struct PrimeField {
    long long p = 2;

    using Elem = long long;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }

    Elem norm(long long x) const {
        x %= p;
        if (x < 0) x += p;
        return x;
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return norm(a - b); }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("PrimeField: modulus not prime?");
        return norm(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long x) const { return norm(x); }
    Elem from_rat(const Rat& r) const {
        Elem num = norm(mpz_fdiv_ui(r.get_num().get_mpz_t(), (unsigned long)p));
        Elem den = norm(mpz_fdiv_ui(r.get_den().get_mpz_t(), (unsigned long)p));
        if (den == 0)
            throw std::domain_error("PrimeField: denominator divisible by p");
        return div(num, den);
    }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;
};

/// Arbitrary-precision rationals, used for cross-checks and path-algebra
/// structure constants.
struct RationalField {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return Rat(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    Elem from_int(long long x) const { return Rat((long)x); }
    Elem from_rat(const Rat& r) const { return r; }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const { return true; }

private:
    static const Rat& inv_guard(const Rat& b) {
        if (b == 0) throw std::domain_error("RationalField: division by zero");
        return b;
    }
};

}  // namespace fpq
