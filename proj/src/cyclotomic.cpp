#include "delsarte/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace delsarte {

namespace {

// remainder of a by monic b, both ascending; a is consumed
std::vector<Integer> poly_rem_monic(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        Integer lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) a[shift + i] -= lead * b[i];
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// exact quotient of a by monic b, both ascending
std::vector<Integer> poly_div_monic_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("poly_div_monic_exact: degree underflow");
    std::vector<Integer> q(a.size() - db);
    while (a.size() > db) {
        Integer lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        q[shift] = lead;
        if (lead != 0)
            for (std::size_t i = 0; i < db; ++i) a[shift + i] -= lead * b[i];
        a.pop_back();
    }
    for (const Integer& r : a)
        if (r != 0) throw std::logic_error("poly_div_monic_exact: division not exact");
    return q;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
    // x^m - 1
    std::vector<Integer> p(m + 1);
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = poly_div_monic_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return p;
}

CyclotomicInt::CyclotomicInt(long m) : m_(m), c_(m) {
    if (m < 1) throw std::invalid_argument("CyclotomicInt: conductor must be >= 1");
}

CyclotomicInt CyclotomicInt::from_integer(long m, Integer n) {
    CyclotomicInt x(m);
    x.c_[0] = std::move(n);
    return x;
}

CyclotomicInt CyclotomicInt::zeta_power(long m, long k) {
    CyclotomicInt x(m);
    x.c_[mod_reduce(k, m)] = 1;
    return x;
}

CyclotomicInt CyclotomicInt::from_counts(long m, std::vector<Integer> counts) {
    if (static_cast<long>(counts.size()) != m)
        throw std::invalid_argument("from_counts: need exactly m coefficients");
    CyclotomicInt x(m);
    x.c_ = std::move(counts);
    return x;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
    CyclotomicInt r(m_);
    for (long i = 0; i < m_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
    CyclotomicInt r(m_);
    for (long i = 0; i < m_; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
    if (m_ != o.m_) throw std::invalid_argument("cyclotomic conductor mismatch");
    CyclotomicInt r(m_);
    for (long i = 0; i < m_; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < m_; ++j) {
            if (o.c_[j] == 0) continue;
            long k = i + j;
            if (k >= m_) k -= m_;
            r.c_[k] += c_[i] * o.c_[j];
        }
    }
    return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r(m_);
    for (long i = 0; i < m_; ++i) r.c_[i] = -c_[i];
    return r;
}

CyclotomicInt CyclotomicInt::conj(long k) const {
    k = mod_reduce(k, m_);
    if (gcd_long(k, m_) != 1) throw std::invalid_argument("conj: k must be a unit mod m");
    CyclotomicInt r(m_);
    for (long i = 0; i < m_; ++i) r.c_[(i * k) % m_] += c_[i];
    return r;
}

std::vector<Integer> CyclotomicInt::reduced() const {
    return poly_rem_monic(c_, cyclotomic_polynomial(m_));
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
    if (m_ != o.m_) return false;
    return (*this - o).reduced().empty();
}

std::optional<Integer> CyclotomicInt::as_rational_integer() const {
    std::vector<Integer> r = reduced();
    if (r.empty()) return Integer(0);
    if (r.size() == 1) return r[0];
    return std::nullopt;
}

std::string CyclotomicInt::to_string() const {
    std::vector<Integer> r = reduced();
    if (r.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (!first) os << (r[i] > 0 ? " + " : " - ");
        else if (r[i] < 0) os << "-";
        Integer a = abs(r[i]);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace delsarte
