#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cralg/rational.hpp"

namespace cralg {

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

// A finite-dimensional commutative associative unital real algebra, given by
// structure constants e_i * e_j = sum_k c[i][j][k] e_k over a fixed basis.
// Basis index 0 is always the unit and carries the label "1". Immutable after
// construction; construction runs the full axiom check.
class AlgebraSpec {
  public:
    static AlgebraPtr make(int dim, std::vector<std::string> labels,
                           std::vector<Rational> structure_constants,
                           std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }

    const Rational& c(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }

    bool same_structure(const AlgebraSpec& other) const;

  private:
    AlgebraSpec() = default;
    void validate() const;

    int dim_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Rational> c_;
};

// Named presets: reals, complex_as_real, dual, split, truncated_poly(m),
// product_of_reals(m).
AlgebraPtr preset_reals();
AlgebraPtr preset_complex_as_real();
AlgebraPtr preset_dual();
AlgebraPtr preset_split();
AlgebraPtr preset_truncated_poly(int m);
AlgebraPtr preset_product_of_reals(int m);

// Resolves "dual", "truncated_poly(3)", "reals^4", ... Throws UnknownPreset /
// InvalidParam.
AlgebraPtr preset_algebra(const std::string& name);

// Componentwise product algebra. Basis: unit (1,1) first, then the non-unit
// basis of a, then the full basis of b, relabeled with prefixes.
AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b);

// Tensor product over the reals. Basis e_i (x) f_j at flat index i*dim(b)+j.
AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);

struct AlgebraElement {
    AlgebraPtr algebra;
    std::vector<Rational> coeffs;

    AlgebraElement(AlgebraPtr alg, std::vector<Rational> co);
};

struct ComplexAlgebraElement {
    AlgebraPtr algebra;
    std::vector<GQ> coeffs;

    ComplexAlgebraElement(AlgebraPtr alg, std::vector<GQ> co);

    static ComplexAlgebraElement zero(const AlgebraPtr& alg);
    static ComplexAlgebraElement one(const AlgebraPtr& alg);
    static ComplexAlgebraElement basis(const AlgebraPtr& alg, int index);
    static ComplexAlgebraElement from_real(const AlgebraElement& x);

    bool is_zero() const;

    friend bool operator==(const ComplexAlgebraElement& a, const ComplexAlgebraElement& b) {
        return a.coeffs == b.coeffs && a.algebra->same_structure(*b.algebra);
    }
};

ComplexAlgebraElement add(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y);
ComplexAlgebraElement sub(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y);
ComplexAlgebraElement multiply(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y);
ComplexAlgebraElement scale(const GQ& s, const ComplexAlgebraElement& x);

ComplexAlgebraElement conjugate(const ComplexAlgebraElement& x);
AlgebraElement re_part(const ComplexAlgebraElement& x);
AlgebraElement im_part(const ComplexAlgebraElement& x);

// Regular representation: the matrix of multiplication by x in the basis,
// column j = coefficients of x * e_j.
GQMat regular_representation(const ComplexAlgebraElement& x);

bool is_invertible(const ComplexAlgebraElement& x);
ComplexAlgebraElement invert(const ComplexAlgebraElement& x);  // throws NotInvertible

struct NilpotencyResult {
    bool nilpotent = false;
    int index = 0;  // smallest m with x^m = 0 when nilpotent
};
NilpotencyResult is_nilpotent(const ComplexAlgebraElement& x);

// Max-row-sum norm of the regular representation; submultiplicative.
// Diagnostic only.
Rational operator_norm_bound(const AlgebraElement& x);

// True when every non-unit basis element is nilpotent (the detected-local
// case where non-invertible and nilpotent coincide elementwise).
bool all_nonunit_basis_nilpotent(const AlgebraPtr& alg);

std::string element_to_string(const ComplexAlgebraElement& x);

}  // namespace cralg
