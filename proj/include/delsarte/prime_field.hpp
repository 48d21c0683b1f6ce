#pragma once

#include <vector>

namespace delsarte {

bool is_prime(long n);

// smallest positive primitive root mod q (q prime); 1 for q = 2
long find_primitive_root(long q);

// F_q with a discrete-log table base the smallest primitive root.
// Built once, read-only afterwards.
class PrimeField {
public:
    explicit PrimeField(long q);

    long q() const { return q_; }
    long generator() const { return g_; }

    // x in 1..q-1; g^dlog(x) == x (mod q)
    long dlog(long x) const { return dlog_[x]; }

private:
    long q_, g_;
    std::vector<long> dlog_;
};

long euler_phi(long n);
long multiplicative_order(long a, long n);  // requires gcd(a, n) = 1

}  // namespace delsarte
