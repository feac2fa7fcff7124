#pragma once

#include <optional>
#include <vector>

#include "cralg/rational.hpp"

namespace cralg {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const GQ& x) { return x.is_zero(); }

// Dense row-major matrix over an exact field (Rational or GaussianRational).
template <class F>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F()) {}

    F& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const F& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

using RatMat = Mat<Rational>;
using GQMat = Mat<GQ>;

struct RrefInfo {
    std::vector<int> pivot_cols;  // ascending
    int rank = 0;
};

// In-place reduced row echelon form. Pivot selection is by column order and
// lowest row index, so the result is canonical. Row updates within each
// elimination step are independent and run under OpenMP; exact arithmetic
// makes the parallel and serial results identical.
template <class F>
RrefInfo rref(Mat<F>& m);

namespace reference {

// Plain-loop serial RREF with the same pivot rule; kept as the reference
// implementation the parallel kernel is tested and benchmarked against.
template <class F>
RrefInfo rref_serial(Mat<F>& m);

// Rank by Bareiss fraction-free elimination on the cleared-denominator
// integer matrix. Independent of the RREF path; used as the rank oracle.
int bareiss_rank(const RatMat& m);

}  // namespace reference

// Canonical nullspace basis from the RREF: one vector per free column, with a
// unit entry in the free position. Deterministic for fixed column order.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m);

// One exact solution of A x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(Mat<F> a, const std::vector<F>& b);

template <class F>
int rank_of(Mat<F> m) {
    return rref(m).rank;
}

// Is v in the rational span of the given vectors?
template <class F>
bool in_span(const std::vector<std::vector<F>>& basis, const std::vector<F>& v);

// Do the two families span the same subspace?
template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b);

// Scale to a primitive integer vector with positive leading entry (pretty,
// deterministic rendering of rational basis vectors).
std::vector<Rational> primitive_scale(const std::vector<Rational>& v);

extern template RrefInfo rref<Rational>(Mat<Rational>&);
extern template RrefInfo rref<GQ>(Mat<GQ>&);
extern template std::vector<std::vector<Rational>> nullspace<Rational>(Mat<Rational>);
extern template std::vector<std::vector<GQ>> nullspace<GQ>(Mat<GQ>);
extern template std::optional<std::vector<Rational>> solve<Rational>(Mat<Rational>, const std::vector<Rational>&);
extern template std::optional<std::vector<GQ>> solve<GQ>(Mat<GQ>, const std::vector<GQ>&);
extern template bool in_span<Rational>(const std::vector<std::vector<Rational>>&, const std::vector<Rational>&);
extern template bool in_span<GQ>(const std::vector<std::vector<GQ>>&, const std::vector<GQ>&);
extern template bool same_span<Rational>(const std::vector<std::vector<Rational>>&,
                                         const std::vector<std::vector<Rational>>&);
extern template bool same_span<GQ>(const std::vector<std::vector<GQ>>&, const std::vector<std::vector<GQ>>&);

namespace reference {
extern template RrefInfo rref_serial<Rational>(Mat<Rational>&);
extern template RrefInfo rref_serial<GQ>(Mat<GQ>&);
}  // namespace reference

}  // namespace cralg
