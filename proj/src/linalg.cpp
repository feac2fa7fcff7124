#include "cralg/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cralg {

namespace {

// Below this many row*column updates the parallel fan-out is pure overhead.
constexpr long kParallelThreshold = 4096;

template <class F>
int find_pivot(const Mat<F>& m, int col, int from_row) {
    for (int r = from_row; r < m.rows; ++r)
        if (!scalar_is_zero(m.at(r, col))) return r;
    return -1;
}

template <class F>
void swap_rows(Mat<F>& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

template <class F>
void eliminate_row(Mat<F>& m, int target, int pivot_row, int pivot_col) {
    F factor = m.at(target, pivot_col);
    if (scalar_is_zero(factor)) return;
    for (int c = pivot_col; c < m.cols; ++c) m.at(target, c) -= factor * m.at(pivot_row, c);
}

}  // namespace

template <class F>
RrefInfo rref(Mat<F>& m) {
    RrefInfo info;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = find_pivot(m, col, row);
        if (p < 0) continue;
        swap_rows(m, p, row);
        F inv = F(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;

        long work = static_cast<long>(m.rows) * (m.cols - col);
        if (work >= kParallelThreshold) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
            for (int r = 0; r < m.rows; ++r) {
                if (r != row) eliminate_row(m, r, row, col);
            }
        } else {
            for (int r = 0; r < m.rows; ++r) {
                if (r != row) eliminate_row(m, r, row, col);
            }
        }
        info.pivot_cols.push_back(col);
        ++row;
    }
    info.rank = row;
    return info;
}

namespace reference {

template <class F>
RrefInfo rref_serial(Mat<F>& m) {
    RrefInfo info;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r) {
            if (!scalar_is_zero(m.at(r, col))) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(p, c), m.at(row, c));
        F inv = F(1) / m.at(row, col);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            F factor = m.at(r, col);
            if (scalar_is_zero(factor)) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        info.pivot_cols.push_back(col);
        ++row;
    }
    info.rank = row;
    return info;
}

int bareiss_rank(const RatMat& m) {
    // Clear denominators row by row, then run fraction-free elimination on
    // the integer matrix. Column pivoting with row swaps only.
    int rows = m.rows, cols = m.cols;
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < cols; ++c) lcm = ::lcm(lcm, m.at(r, c).get_den());
        for (int c = 0; c < cols; ++c) {
            mpq_class scaled = m.at(r, c) * Rational(lcm);
            z[r][c] = scaled.get_num();
        }
    }
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r) {
            if (z[r][col] != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(z[p], z[row]);
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class num = z[row][col] * z[r][c] - z[r][col] * z[row][c];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                z[r][c] = q;
            }
            z[r][col] = 0;
        }
        prev = z[row][col];
        ++row;
    }
    return row;
}

}  // namespace reference

template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
    RrefInfo info = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : info.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<F>> basis;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols, F());
        v[free_col] = F(1);
        for (int r = 0; r < info.rank; ++r) {
            int pc = info.pivot_cols[r];
            v[pc] = -m.at(r, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<std::vector<F>> solve(Mat<F> a, const std::vector<F>& b) {
    Mat<F> aug(a.rows, a.cols + 1);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols) = b[r];
    }
    RrefInfo info = rref(aug);
    if (!info.pivot_cols.empty() && info.pivot_cols.back() == a.cols) return std::nullopt;
    std::vector<F> x(a.cols, F());
    for (int r = 0; r < info.rank; ++r) x[info.pivot_cols[r]] = aug.at(r, a.cols);
    return x;
}

template <class F>
bool in_span(const std::vector<std::vector<F>>& basis, const std::vector<F>& v) {
    if (basis.empty()) {
        for (const F& x : v)
            if (!scalar_is_zero(x)) return false;
        return true;
    }
    size_t dim = basis[0].size();
    Mat<F> a(static_cast<int>(dim), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < dim; ++i) a.at(static_cast<int>(i), static_cast<int>(j)) = basis[j][i];
    return solve(std::move(a), v).has_value();
}

template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b) {
    for (const auto& v : a)
        if (!in_span(b, v)) return false;
    for (const auto& v : b)
        if (!in_span(a, v)) return false;
    return true;
}

std::vector<Rational> primitive_scale(const std::vector<Rational>& v) {
    mpz_class den_lcm = 1;
    for (const Rational& q : v) den_lcm = lcm(den_lcm, q.get_den());
    mpz_class num_gcd = 0;
    for (const Rational& q : v) {
        mpq_class scaled = q * Rational(den_lcm);
        num_gcd = gcd(num_gcd, scaled.get_num());
    }
    if (num_gcd == 0) return v;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (factor < 0) factor = -factor;
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const Rational& q : v) out.push_back(q * factor);
    for (const Rational& q : out) {
        if (q != 0) {
            if (q < 0)
                for (Rational& x : out) x = -x;
            break;
        }
    }
    return out;
}

template RrefInfo rref<Rational>(Mat<Rational>&);
template RrefInfo rref<GQ>(Mat<GQ>&);
template std::vector<std::vector<Rational>> nullspace<Rational>(Mat<Rational>);
template std::vector<std::vector<GQ>> nullspace<GQ>(Mat<GQ>);
template std::optional<std::vector<Rational>> solve<Rational>(Mat<Rational>, const std::vector<Rational>&);
template std::optional<std::vector<GQ>> solve<GQ>(Mat<GQ>, const std::vector<GQ>&);
template bool in_span<Rational>(const std::vector<std::vector<Rational>>&, const std::vector<Rational>&);
template bool in_span<GQ>(const std::vector<std::vector<GQ>>&, const std::vector<GQ>&);
template bool same_span<Rational>(const std::vector<std::vector<Rational>>&,
                                  const std::vector<std::vector<Rational>>&);
template bool same_span<GQ>(const std::vector<std::vector<GQ>>&, const std::vector<std::vector<GQ>>&);

namespace reference {
template RrefInfo rref_serial<Rational>(Mat<Rational>&);
template RrefInfo rref_serial<GQ>(Mat<GQ>&);
}  // namespace reference

}  // namespace cralg
