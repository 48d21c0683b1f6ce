#include "delsarte/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace delsarte {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), e_(rows_ * cols_) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        std::size_t j = 0;
        for (long v : r) e_[i * cols_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Integer& s) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * s;
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Integer det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square input");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // Bareiss: division is exact
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

Integer minor_det(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = m.rows();
    IntMatrix sub(n - 1, n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == skip_col) continue;
            sub.at(r, c++) = m.at(i, j);
        }
        ++r;
    }
    return det(sub);
}

}  // namespace

IntMatrix adjugate(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("adjugate: non-square input");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer c = minor_det(m, j, i);  // transposed cofactor
            adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a.at(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            Integer f = a.at(i, c), g = a.at(r, c);
            for (std::size_t j = c; j < cols; ++j) a.at(i, j) = a.at(i, j) * g - f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

namespace {

// column op on A: col_j -= q * col_k, mirrored into V (V <- V*E) and
// V^-1 (row_k += q * row_j).
struct SmithWork {
    IntMatrix a, v, v_inv;

    void col_sub(std::size_t j, std::size_t k, const Integer& q) {
        for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, k);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, j) -= q * v.at(i, k);
        for (std::size_t i = 0; i < v_inv.cols(); ++i) v_inv.at(k, i) += q * v_inv.at(j, i);
    }
    void col_swap(std::size_t j, std::size_t k) {
        a.swap_cols(j, k);
        v.swap_cols(j, k);
        v_inv.swap_rows(j, k);
    }
    void col_negate(std::size_t j) {
        for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, j) = -a.at(i, j);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, j) = -v.at(i, j);
        for (std::size_t i = 0; i < v_inv.cols(); ++i) v_inv.at(j, i) = -v_inv.at(j, i);
    }
    void row_sub(std::size_t i, std::size_t k, const Integer& q) {
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= q * a.at(k, j);
    }
};

}  // namespace

SmithForm smith_form(const IntMatrix& input) {
    const std::size_t rows = input.rows(), cols = input.cols();
    SmithWork w{input, IntMatrix::identity(cols), IntMatrix::identity(cols)};
    const std::size_t nd = std::min(rows, cols);

    for (std::size_t t = 0; t < nd; ++t) {
        // find a pivot of least absolute value in the remaining block
        std::size_t pi = t, pj = t;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Integer& x = w.a.at(i, j);
                if (x != 0 && (best == 0 || abs(x) < best)) {
                    best = abs(x);
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        if (pi != t) w.a.swap_rows(t, pi);
        if (pj != t) w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.a.at(i, t) == 0) continue;
                Integer q = w.a.at(i, t) / w.a.at(t, t);
                if (q != 0) w.row_sub(i, t, q);
                if (w.a.at(i, t) != 0) {
                    w.a.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.a.at(t, j) == 0) continue;
                Integer q = w.a.at(t, j) / w.a.at(t, t);
                if (q != 0) w.col_sub(j, t, q);
                if (w.a.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        if (w.a.at(t, t) < 0) w.col_negate(t);
    }

    // enforce the divisibility chain d_t | d_{t+1}
    for (std::size_t t = 0; t + 1 < nd; ++t) {
        for (std::size_t s = t + 1; s < nd; ++s) {
            if (w.a.at(t, t) == 0 || w.a.at(s, s) % w.a.at(t, t) == 0) continue;
            // fold d_s into position t: col_t += col_s, then re-eliminate the 2x2 block
            w.col_sub(t, s, Integer(-1));
            for (;;) {
                bool clean = true;
                if (w.a.at(s, t) != 0) {
                    Integer q = w.a.at(s, t) / w.a.at(t, t);
                    if (q != 0) w.row_sub(s, t, q);
                    if (w.a.at(s, t) != 0) {
                        w.a.swap_rows(t, s);
                        clean = false;
                    }
                }
                if (w.a.at(t, s) != 0) {
                    Integer q = w.a.at(t, s) / w.a.at(t, t);
                    if (q != 0) w.col_sub(s, t, q);
                    if (w.a.at(t, s) != 0) {
                        w.col_swap(t, s);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (w.a.at(t, t) < 0) w.col_negate(t);
            if (w.a.at(s, s) < 0) w.col_negate(s);
        }
    }

    SmithForm out{std::vector<Integer>(nd), std::move(w.v), std::move(w.v_inv)};
    for (std::size_t t = 0; t < nd; ++t) out.diag[t] = w.a.at(t, t);
    return out;
}

std::vector<std::vector<long>> SubgroupModM::elements() const {
    std::vector<std::vector<long>> out;
    std::size_t total = 1;
    for (long d : orders) total *= static_cast<std::size_t>(d);
    out.reserve(total);
    visit([&](const std::vector<long>& cur) { out.push_back(cur); });
    return out;
}

SubgroupModM row_span_mod(const IntMatrix& a, long m) {
    if (m < 1) throw std::invalid_argument("row_span_mod: m must be >= 1");
    const std::size_t n = a.cols();
    // stack [A ; m*I]: its row lattice L satisfies L/mZ^n = the subgroup
    IntMatrix stacked(a.rows() + n, n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = mod_reduce(to_long_checked(a.at(i, j) % m), m);
    for (std::size_t j = 0; j < n; ++j) stacked.at(a.rows() + j, j) = m;

    SmithForm sf = smith_form(stacked);
    SubgroupModM g;
    g.m = m;
    g.dim = n;
    // L = sum_i d_i * (row i of V^-1); generator of L/mZ^n has order m/d_i
    for (std::size_t i = 0; i < sf.diag.size(); ++i) {
        long d = to_long_checked(sf.diag[i]);
        if (d == 0 || m % d != 0) throw std::logic_error("row_span_mod: invariant factor does not divide m");
        long ord = m / d;
        if (ord == 1) continue;
        std::vector<long> gen(n);
        for (std::size_t j = 0; j < n; ++j)
            gen[j] = mod_reduce(to_long_checked((sf.diag[i] * sf.v_inv.at(i, j)) % m), m);
        g.generators.push_back(std::move(gen));
        g.orders.push_back(ord);
    }
    // d_i ascending divisibility means orders m/d_i descend; reverse to ascend
    std::reverse(g.generators.begin(), g.generators.end());
    std::reverse(g.orders.begin(), g.orders.end());
    return g;
}

SubgroupModM kernel_mod(const IntMatrix& a, long m) {
    if (m < 1) throw std::invalid_argument("kernel_mod: m must be >= 1");
    const std::size_t n = a.cols();
    SmithForm sf = smith_form(a);
    SubgroupModM g;
    g.m = m;
    g.dim = n;
    // with UAV = D and y = V^-1 x the condition is d_i y_i == 0 mod m,
    // so y_i ranges over multiples of m/gcd(d_i, m)
    for (std::size_t i = 0; i < n; ++i) {
        Integer d = i < sf.diag.size() ? sf.diag[i] : Integer(0);
        long ord = d == 0 ? m : to_long_checked(gcd(d, Integer(m)));
        if (ord == 1) continue;
        long step = m / ord;
        std::vector<long> gen(n);
        for (std::size_t j = 0; j < n; ++j)
            gen[j] = mod_reduce(to_long_checked((Integer(step) * sf.v.at(j, i)) % m), m);
        g.generators.push_back(std::move(gen));
        g.orders.push_back(ord);
    }
    // d_i ascending implies gcd(d_i, m) ascending, so orders already form
    // an ascending divisibility chain (zero invariant factors give order m)
    return g;
}

}  // namespace delsarte
