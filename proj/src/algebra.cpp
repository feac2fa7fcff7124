#include "cralg/algebra.hpp"

#include <sstream>

#include "cralg/error.hpp"
#include "cralg/linalg.hpp"

namespace cralg {

namespace {

void check_same_algebra(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y) {
    if (x.algebra == y.algebra) return;
    if (!x.algebra->same_structure(*y.algebra))
        raise("AlgebraMismatch", "operands belong to different algebras ('" + x.algebra->name() +
                                     "' vs '" + y.algebra->name() + "')");
}

std::vector<Rational> zero_constants(int dim) {
    return std::vector<Rational>(static_cast<size_t>(dim) * dim * dim, Rational(0));
}

size_t cidx(int dim, int i, int j, int k) {
    return (static_cast<size_t>(i) * dim + j) * dim + k;
}

}  // namespace

AlgebraPtr AlgebraSpec::make(int dim, std::vector<std::string> labels,
                             std::vector<Rational> structure_constants, std::string name) {
    if (dim < 1) raise("InvalidParam", "algebra dimension must be >= 1");
    if (static_cast<int>(labels.size()) != dim)
        raise("InvalidParam", "expected " + std::to_string(dim) + " basis labels");
    if (structure_constants.size() != static_cast<size_t>(dim) * dim * dim)
        raise("InvalidParam", "structure constant array has wrong size");
    if (labels[0] != "1") raise("InvalidParam", "the first basis label must be \"1\" (the unit)");
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (labels[i] == labels[j]) raise("InvalidParam", "duplicate basis label '" + labels[i] + "'");

    auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->dim_ = dim;
    spec->name_ = std::move(name);
    spec->labels_ = std::move(labels);
    spec->c_ = std::move(structure_constants);
    spec->validate();
    return spec;
}

void AlgebraSpec::validate() const {
    int l = dim_;
    // unit axiom: 1 * e_j = e_j
    for (int j = 0; j < l; ++j)
        for (int k = 0; k < l; ++k) {
            Rational expect = (j == k) ? 1 : 0;
            if (c(0, j, k) != expect)
                raise("AxiomViolation",
                      "unit axiom fails at 1*" + labels_[j] + " (component " + labels_[k] + ")");
        }
    // commutativity: c[i][j][k] == c[j][i][k]
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                if (c(i, j, k) != c(j, i, k))
                    raise("AxiomViolation", "commutativity fails at " + labels_[i] + "*" + labels_[j] +
                                                " (component " + labels_[k] + ")");
    // associativity: (e_i e_j) e_p == e_i (e_j e_p)
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int p = 0; p < l; ++p)
                for (int k = 0; k < l; ++k) {
                    Rational lhs(0), rhs(0);
                    for (int m = 0; m < l; ++m) {
                        lhs += c(i, j, m) * c(m, p, k);
                        rhs += c(j, p, m) * c(i, m, k);
                    }
                    if (lhs != rhs)
                        raise("AxiomViolation", "associativity fails at (" + labels_[i] + "*" + labels_[j] +
                                                    ")*" + labels_[p] + " (component " + labels_[k] + ")");
                }
}

bool AlgebraSpec::same_structure(const AlgebraSpec& other) const {
    return dim_ == other.dim_ && labels_ == other.labels_ && c_ == other.c_;
}

AlgebraPtr preset_reals() {
    return AlgebraSpec::make(1, {"1"}, {Rational(1)}, "reals");
}

AlgebraPtr preset_complex_as_real() {
    auto c = zero_constants(2);
    c[cidx(2, 0, 0, 0)] = 1;
    c[cidx(2, 0, 1, 1)] = 1;
    c[cidx(2, 1, 0, 1)] = 1;
    c[cidx(2, 1, 1, 0)] = -1;  // e^2 = -1
    return AlgebraSpec::make(2, {"1", "e"}, std::move(c), "complex_as_real");
}

AlgebraPtr preset_dual() {
    auto c = zero_constants(2);
    c[cidx(2, 0, 0, 0)] = 1;
    c[cidx(2, 0, 1, 1)] = 1;
    c[cidx(2, 1, 0, 1)] = 1;
    // n^2 = 0
    return AlgebraSpec::make(2, {"1", "n"}, std::move(c), "dual");
}

AlgebraPtr preset_product_of_reals(int m) {
    if (m < 1) raise("InvalidParam", "product_of_reals needs m >= 1");
    // Basis: unit (1,...,1), then the coordinate idempotents p_1..p_{m-1}.
    // p_a p_a = p_a, p_a p_b = 0 (a != b), 1 p_a = p_a.
    auto c = zero_constants(m);
    for (int j = 0; j < m; ++j) c[cidx(m, 0, j, j)] = 1;
    for (int a = 1; a < m; ++a) {
        c[cidx(m, a, 0, a)] = 1;
        c[cidx(m, a, a, a)] = 1;
    }
    std::vector<std::string> labels = {"1"};
    for (int a = 1; a < m; ++a) labels.push_back("p" + std::to_string(a));
    return AlgebraSpec::make(m, std::move(labels), std::move(c),
                             "reals^" + std::to_string(m));
}

AlgebraPtr preset_split() {
    auto c = zero_constants(2);
    c[cidx(2, 0, 0, 0)] = 1;
    c[cidx(2, 0, 1, 1)] = 1;
    c[cidx(2, 1, 0, 1)] = 1;
    c[cidx(2, 1, 1, 1)] = 1;  // p^2 = p, the coordinate idempotent of R (+) R
    return AlgebraSpec::make(2, {"1", "p"}, std::move(c), "split");
}

AlgebraPtr preset_truncated_poly(int m) {
    if (m < 1) raise("InvalidParam", "truncated_poly needs m >= 1");
    auto c = zero_constants(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i + j < m) c[cidx(m, i, j, i + j)] = 1;
    std::vector<std::string> labels = {"1"};
    for (int i = 1; i < m; ++i) labels.push_back(i == 1 ? "t" : "t" + std::to_string(i));
    return AlgebraSpec::make(m, std::move(labels), std::move(c),
                             "truncated_poly(" + std::to_string(m) + ")");
}

AlgebraPtr preset_algebra(const std::string& name) {
    if (name == "reals") return preset_reals();
    if (name == "complex_as_real") return preset_complex_as_real();
    if (name == "dual") return preset_dual();
    if (name == "split") return preset_split();
    auto paren = [&](const std::string& head) -> int {
        std::string prefix = head + "(";
        if (name.rfind(prefix, 0) != 0 || name.back() != ')') return -1;
        std::string arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        try {
            size_t pos = 0;
            int m = std::stoi(arg, &pos);
            if (pos != arg.size()) return -1;
            return m;
        } catch (...) {
            return -1;
        }
    };
    if (name.rfind("truncated_poly", 0) == 0) {
        int m = paren("truncated_poly");
        if (m == -1) raise("InvalidParam", "bad parameter in '" + name + "'");
        return preset_truncated_poly(m);
    }
    if (name.rfind("reals^", 0) == 0) {
        try {
            int m = std::stoi(name.substr(6));
            return preset_product_of_reals(m);
        } catch (const CralgError&) {
            throw;
        } catch (...) {
            raise("InvalidParam", "bad parameter in '" + name + "'");
        }
    }
    raise("UnknownPreset", "no algebra preset named '" + name + "'");
}

AlgebraPtr direct_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
    int la = a->dim(), lb = b->dim();
    int dim = la + lb;
    // Basis of A (+) B with the unit first:
    //   E_0 = (1,1); E_i = (a_i, 0) for i = 1..la-1; F_j = (0, b_j) for j = 0..lb-1.
    // Products, using (a_0, 0) = E_0 - F_0:
    //   E_i E_j = sum_k cA[i][j][k] (a_k, 0),  E_i F_j = 0,  F_i F_j = sum cB.
    auto c = zero_constants(dim);
    auto E = [&](int i) { return i; };           // i in 0..la-1, E(0) is the unit slot
    auto F = [&](int j) { return la + j; };      // j in 0..lb-1
    // unit rows
    for (int j = 0; j < dim; ++j) c[cidx(dim, 0, j, j)] = 1;
    for (int j = 0; j < dim; ++j) c[cidx(dim, j, 0, j)] = 1;
    // E_i * E_j, i,j >= 1: coefficient of (a_0,0) redistributes to E_0 - F_0
    for (int i = 1; i < la; ++i)
        for (int j = 1; j < la; ++j) {
            for (int k = 0; k < la; ++k) {
                const Rational& co = a->c(i, j, k);
                if (co == 0) continue;
                if (k == 0) {
                    c[cidx(dim, E(i), E(j), 0)] += co;
                    c[cidx(dim, E(i), E(j), F(0))] -= co;
                } else {
                    c[cidx(dim, E(i), E(j), E(k))] += co;
                }
            }
        }
    // F_i * F_j
    for (int i = 0; i < lb; ++i)
        for (int j = 0; j < lb; ++j) {
            if (i == 0 && j == 0) {
                c[cidx(dim, F(0), F(0), F(0))] = 1;  // (0,1)^2 = (0,1)
                continue;
            }
            if (i == 0 || j == 0) {
                // (0,1) * (0,b_j) = (0,b_j)
                int jj = (i == 0) ? j : i;
                c[cidx(dim, F(i), F(j), F(jj))] = 1;
                continue;
            }
            for (int k = 0; k < lb; ++k) {
                const Rational& co = b->c(i, j, k);
                if (co != 0) c[cidx(dim, F(i), F(j), F(k))] = co;
            }
        }
    // E_i * F_j = 0 for i >= 1 (already zero).

    std::vector<std::string> labels = {"1"};
    for (int i = 1; i < la; ++i) labels.push_back("a." + a->label(i));
    for (int j = 0; j < lb; ++j) labels.push_back("b." + b->label(j));
    return AlgebraSpec::make(dim, std::move(labels), std::move(c),
                             a->name() + "(+)" + b->name());
}

AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    int la = a->dim(), lb = b->dim();
    int dim = la * lb;
    auto flat = [&](int i, int j) { return i * lb + j; };
    auto c = zero_constants(dim);
    for (int i1 = 0; i1 < la; ++i1)
        for (int j1 = 0; j1 < lb; ++j1)
            for (int i2 = 0; i2 < la; ++i2)
                for (int j2 = 0; j2 < lb; ++j2)
                    for (int k1 = 0; k1 < la; ++k1)
                        for (int k2 = 0; k2 < lb; ++k2) {
                            Rational co = a->c(i1, i2, k1) * b->c(j1, j2, k2);
                            if (co != 0) c[cidx(dim, flat(i1, j1), flat(i2, j2), flat(k1, k2))] += co;
                        }
    std::vector<std::string> labels;
    for (int i = 0; i < la; ++i)
        for (int j = 0; j < lb; ++j) {
            if (i == 0 && j == 0)
                labels.push_back("1");
            else if (i == 0)
                labels.push_back("1x" + b->label(j));
            else if (j == 0)
                labels.push_back(a->label(i) + "x1");
            else
                labels.push_back(a->label(i) + "x" + b->label(j));
        }
    return AlgebraSpec::make(dim, std::move(labels), std::move(c), a->name() + "(x)" + b->name());
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<Rational> co)
    : algebra(std::move(alg)), coeffs(std::move(co)) {
    if (static_cast<int>(coeffs.size()) != algebra->dim())
        raise("InvalidParam", "element coefficient vector has wrong length");
}

ComplexAlgebraElement::ComplexAlgebraElement(AlgebraPtr alg, std::vector<GQ> co)
    : algebra(std::move(alg)), coeffs(std::move(co)) {
    if (static_cast<int>(coeffs.size()) != algebra->dim())
        raise("InvalidParam", "element coefficient vector has wrong length");
}

ComplexAlgebraElement ComplexAlgebraElement::zero(const AlgebraPtr& alg) {
    return ComplexAlgebraElement(alg, std::vector<GQ>(alg->dim(), GQ()));
}

ComplexAlgebraElement ComplexAlgebraElement::one(const AlgebraPtr& alg) {
    return basis(alg, 0);
}

ComplexAlgebraElement ComplexAlgebraElement::basis(const AlgebraPtr& alg, int index) {
    std::vector<GQ> co(alg->dim(), GQ());
    co[index] = GQ(1);
    return ComplexAlgebraElement(alg, std::move(co));
}

ComplexAlgebraElement ComplexAlgebraElement::from_real(const AlgebraElement& x) {
    std::vector<GQ> co;
    co.reserve(x.coeffs.size());
    for (const Rational& q : x.coeffs) co.emplace_back(q);
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

bool ComplexAlgebraElement::is_zero() const {
    for (const GQ& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

ComplexAlgebraElement add(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y) {
    check_same_algebra(x, y);
    std::vector<GQ> co = x.coeffs;
    for (size_t i = 0; i < co.size(); ++i) co[i] += y.coeffs[i];
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

ComplexAlgebraElement sub(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y) {
    check_same_algebra(x, y);
    std::vector<GQ> co = x.coeffs;
    for (size_t i = 0; i < co.size(); ++i) co[i] -= y.coeffs[i];
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

ComplexAlgebraElement multiply(const ComplexAlgebraElement& x, const ComplexAlgebraElement& y) {
    check_same_algebra(x, y);
    int l = x.algebra->dim();
    std::vector<GQ> co(l, GQ());
    for (int i = 0; i < l; ++i) {
        if (x.coeffs[i].is_zero()) continue;
        for (int j = 0; j < l; ++j) {
            if (y.coeffs[j].is_zero()) continue;
            GQ prod = x.coeffs[i] * y.coeffs[j];
            for (int k = 0; k < l; ++k) {
                const Rational& s = x.algebra->c(i, j, k);
                if (s != 0) co[k] += prod * GQ(s);
            }
        }
    }
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

ComplexAlgebraElement scale(const GQ& s, const ComplexAlgebraElement& x) {
    std::vector<GQ> co = x.coeffs;
    for (GQ& c : co) c *= s;
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

ComplexAlgebraElement conjugate(const ComplexAlgebraElement& x) {
    std::vector<GQ> co = x.coeffs;
    for (GQ& c : co) c = c.conj();
    return ComplexAlgebraElement(x.algebra, std::move(co));
}

AlgebraElement re_part(const ComplexAlgebraElement& x) {
    std::vector<Rational> co;
    co.reserve(x.coeffs.size());
    for (const GQ& c : x.coeffs) co.push_back(c.re);
    return AlgebraElement(x.algebra, std::move(co));
}

AlgebraElement im_part(const ComplexAlgebraElement& x) {
    std::vector<Rational> co;
    co.reserve(x.coeffs.size());
    for (const GQ& c : x.coeffs) co.push_back(c.im);
    return AlgebraElement(x.algebra, std::move(co));
}

GQMat regular_representation(const ComplexAlgebraElement& x) {
    int l = x.algebra->dim();
    GQMat m(l, l);
    for (int j = 0; j < l; ++j) {
        ComplexAlgebraElement col = multiply(x, ComplexAlgebraElement::basis(x.algebra, j));
        for (int k = 0; k < l; ++k) m.at(k, j) = col.coeffs[k];
    }
    return m;
}

bool is_invertible(const ComplexAlgebraElement& x) {
    GQMat m = regular_representation(x);
    return rank_of(std::move(m)) == x.algebra->dim();
}

ComplexAlgebraElement invert(const ComplexAlgebraElement& x) {
    int l = x.algebra->dim();
    GQMat m = regular_representation(x);
    std::vector<GQ> e0(l, GQ());
    e0[0] = GQ(1);
    auto sol = solve(std::move(m), e0);
    if (!sol) raise("NotInvertible", "element " + element_to_string(x) + " is not invertible");
    return ComplexAlgebraElement(x.algebra, std::move(*sol));
}

NilpotencyResult is_nilpotent(const ComplexAlgebraElement& x) {
    if (x.is_zero()) return {true, 1};
    ComplexAlgebraElement power = x;
    for (int m = 2; m <= x.algebra->dim() + 1; ++m) {
        power = multiply(power, x);
        if (power.is_zero()) return {true, m};
    }
    return {false, 0};
}

Rational operator_norm_bound(const AlgebraElement& x) {
    GQMat m = regular_representation(ComplexAlgebraElement::from_real(x));
    Rational best(0);
    for (int r = 0; r < m.rows; ++r) {
        Rational row_sum(0);
        for (int c = 0; c < m.cols; ++c) row_sum += rat_abs(m.at(r, c).re);
        if (row_sum > best) best = row_sum;
    }
    return best;
}

bool all_nonunit_basis_nilpotent(const AlgebraPtr& alg) {
    for (int i = 1; i < alg->dim(); ++i)
        if (!is_nilpotent(ComplexAlgebraElement::basis(alg, i)).nilpotent) return false;
    return true;
}

std::string element_to_string(const ComplexAlgebraElement& x) {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        const std::string& lab = x.algebra->label(static_cast<int>(i));
        if (i == 0)
            out << gq_to_string(x.coeffs[i]);
        else if (x.coeffs[i].is_one())
            out << lab;
        else
            out << gq_to_string(x.coeffs[i]) << "*" << lab;
    }
    if (first) return "0";
    return out.str();
}

}  // namespace cralg
