#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/rat.hpp"

namespace zono {

/// Dense rational matrix, row-major.  Values are immutable in spirit: every
/// operation returns a fresh matrix.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw Error("entry count does not match shape");
    }

    /// Builds from nested integer lists; handy in tests and fixtures.
    static Mat from_int_rows(const std::vector<std::vector<long>>& rows);
    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

    std::vector<Rat> row(std::size_t i) const {
        return {e_.begin() + static_cast<long>(i * cols_), e_.begin() + static_cast<long>((i + 1) * cols_)};
    }

    Mat transpose() const;
    Mat operator*(const Mat& other) const;
    bool is_zero() const;

    /// Vertical concatenation; both operands must have the same column count.
    static Mat vstack(const Mat& top, const Mat& bottom);

    /// New matrix consisting of the selected columns, in the given order.
    Mat select_columns(const std::vector<std::size_t>& cols) const;
    Mat select_rows(const std::vector<std::size_t>& idx) const;

    void append_row(const std::vector<Rat>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error("row length mismatch");
        e_.insert(e_.end(), r.begin(), r.end());
        ++rows_;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

/// Reduced row echelon form together with the (strictly increasing) pivot
/// column indices.  The RREF of a matrix is unique, so it doubles as a
/// canonical form for row spaces.
struct Rref {
    Mat mat;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

/// Basis of the right null space {x : m x = 0}, one vector per row, with the
/// rows themselves in RREF.  Row count is cols(m) - rank(m).
Mat kernel_basis(const Mat& m);

/// True iff a and b span the same row space (RREF comparison after dropping
/// zero rows).  Requires equal column counts.
bool row_space_equal(const Mat& a, const Mat& b);

/// RREF with zero rows removed: the canonical basis of the row space.
Mat row_space_basis(const Mat& m);

/// True iff v lies in the row space of basis (basis need not be in RREF).
bool row_space_contains(const Mat& basis, const std::vector<Rat>& v);

} // namespace zono
