#include "delsarte/prime_field.hpp"

#include "delsarte/integer.hpp"

#include <stdexcept>

namespace delsarte {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

long pow_mod(long b, long e, long q) {
    long r = 1 % q;
    b %= q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        ps.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

long find_primitive_root(long q) {
    if (!is_prime(q)) throw std::invalid_argument("find_primitive_root: q is not prime");
    if (q == 2) return 1;
    std::vector<long> ps = prime_factors(q - 1);
    for (long g = 2; g < q; ++g) {
        bool ok = true;
        for (long p : ps)
            if (pow_mod(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive_root: none found");
}

PrimeField::PrimeField(long q) : q_(q), g_(find_primitive_root(q)), dlog_(q, 0) {
    long v = 1;
    for (long k = 0; k < q_ - 1; ++k) {
        dlog_[v] = k;
        v = v * g_ % q_;
    }
}

long euler_phi(long n) {
    long r = n;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        r -= r / d;
        while (n % d == 0) n /= d;
    }
    if (n > 1) r -= r / n;
    return r;
}

long multiplicative_order(long a, long n) {
    a = mod_reduce(a, n);
    if (gcd_long(a, n) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
    long v = a % n, o = 1;
    while (v != 1 % n) {
        v = v * a % n;
        ++o;
    }
    return o;
}

}  // namespace delsarte
