#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "zonotopal/mat.hpp"
#include "zonotopal/matroid.hpp" // HilbertFunction

namespace zono {

/// Monomials of a fixed degree in a fixed number of variables, in
/// graded-lexicographic order (largest exponent on the first variable
/// first).  The order is fixed once and deterministic across runs.
class MonoBasis {
  public:
    MonoBasis(std::size_t nvars, std::size_t degree);

    std::size_t size() const { return exps_.size(); }
    std::size_t nvars() const { return nvars_; }
    std::size_t degree() const { return degree_; }
    const std::vector<int>& exponents(std::size_t i) const { return exps_[i]; }
    std::size_t index_of(const std::vector<int>& e) const;

  private:
    std::size_t nvars_, degree_;
    std::vector<std::vector<int>> exps_;
    std::map<std::vector<int>, std::size_t> index_;
};

/// dim Sym^d of an nvars-dimensional space.
std::size_t sym_dim(std::size_t nvars, std::size_t degree);

/// Graded subspace of a polynomial ring: one RREF coefficient matrix per
/// degree, contiguous from 0.
struct GradedSubspace {
    std::size_t nvars = 0;
    std::vector<Mat> slices;

    HilbertFunction dims() const {
        HilbertFunction h;
        for (const Mat& s : slices) h.push_back(static_cast<long long>(s.rows()));
        return h;
    }
    /// Largest degree with a nonzero slice, or -1 if none.
    int top() const {
        for (int d = static_cast<int>(slices.size()) - 1; d >= 0; --d)
            if (slices[static_cast<std::size_t>(d)].rows() > 0) return d;
        return -1;
    }
};

/// Matrix of f -> alpha^p . f from degree-d to degree-(d-p) monomial
/// coordinates, where alpha = sum a_i d/dx_i acts by plain partial
/// differentiation (no factorial normalization).  Throws DegreeUnderflow
/// if p > d.
Mat pow_op_matrix(const std::vector<Rat>& alpha, std::size_t p, std::size_t d);

/// Degree-d slice (RREF) of the homogeneous ideal generated by the given
/// (degree, coefficient vector) generators.
Mat ideal_degree_piece(const std::vector<std::pair<std::size_t, std::vector<Rat>>>& generators,
                       std::size_t d, std::size_t nvars);

/// Degree-d slice (RREF) of the joint kernel of alpha^p operators;
/// constraints with p > d are vacuous and skipped.
Mat annihilator_degree(const std::vector<std::pair<std::vector<Rat>, std::size_t>>& constraints,
                       std::size_t d, std::size_t nvars);

// --- polynomial plumbing shared by the algebra modules ---

/// Multiply a degree-d coefficient vector by the linear form with the given
/// coefficients; result is in degree d+1 coordinates.
std::vector<Rat> poly_mul_linear(const std::vector<Rat>& v, std::size_t d,
                                 const std::vector<Rat>& linear, std::size_t nvars);

/// Expanded product of linear forms (degree = number of factors).
std::vector<Rat> product_of_linears(const std::vector<std::vector<Rat>>& linears,
                                    std::size_t nvars);

/// Matrix of the degree-d symmetric power of a linear map given by A
/// (columns are images of the degree-1 basis vectors), acting on monomial
/// coordinates.
Mat sym_power_matrix(const Mat& a, std::size_t d);

/// Subtract multiples of the RREF rows of `space` so v vanishes on its pivot
/// coordinates; v is modified in place.
void reduce_mod_rref(const Mat& space, const std::vector<std::size_t>& pivots,
                     std::vector<Rat>& v);

} // namespace zono
