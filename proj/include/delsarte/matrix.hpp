#pragma once

#include "delsarte/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace delsarte {

// Dense matrix of exact integers. Dimensions are fixed at construction.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Integer& s) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Integer> e_;
};

// exact determinant, fraction-free (Bareiss) elimination; throws on non-square input
Integer det(const IntMatrix& m);

// adjugate via cofactors: m * adjugate(m) == det(m) * I; throws on non-square input
IntMatrix adjugate(const IntMatrix& m);

// rank over Q, fraction-free elimination
std::size_t rank(const IntMatrix& m);

// Smith normal form U*A*V = diag(d1,...) with d1 | d2 | ...; U, V unimodular.
// Only V and V^-1 are tracked (enough for row-span and kernel subgroups).
struct SmithForm {
    std::vector<Integer> diag;  // length min(rows, cols), nonnegative, divisibility chain
    IntMatrix v;                // cols x cols
    IntMatrix v_inv;
};
SmithForm smith_form(const IntMatrix& a);

// A subgroup of (Z/m)^n in invariant-factor form: the listed generators have
// the listed orders and the subgroup is their direct sum, so iterating
// k_i in [0, orders[i]) hits every element exactly once.
struct SubgroupModM {
    long m = 1;
    std::size_t dim = 0;
    std::vector<std::vector<long>> generators;
    std::vector<long> orders;  // ascending divisibility: orders[i] | orders[i+1]

    Integer order() const {
        Integer o = 1;
        for (long d : orders) o *= d;
        return o;
    }
    // all elements, each exactly once
    std::vector<std::vector<long>> elements() const;
    // visit all elements without materializing them
    template <typename F>
    void visit(F&& f) const {
        std::vector<long> counter(orders.size(), 0);
        std::vector<long> cur(dim, 0);
        for (;;) {
            f(cur);
            std::size_t i = 0;
            for (; i < orders.size(); ++i) {
                ++counter[i];
                for (std::size_t k = 0; k < dim; ++k)
                    cur[k] = (cur[k] + generators[i][k]) % m;
                if (counter[i] < orders[i]) break;
                counter[i] = 0;
            }
            if (i == orders.size()) break;
        }
    }
};

// cyclic decomposition of the subgroup of (Z/m)^cols generated by the rows of m
SubgroupModM row_span_mod(const IntMatrix& a, long m);

// cyclic decomposition of {x in (Z/m)^cols : a*x == 0 mod m}
SubgroupModM kernel_mod(const IntMatrix& a, long m);

}  // namespace delsarte
