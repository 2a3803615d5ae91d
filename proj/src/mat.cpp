#include "zonotopal/mat.hpp"

#include <sstream>

namespace zono {

Mat Mat::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw Error("shape mismatch in matrix product");
    Mat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat& b = other.at(k, j);
                if (!b.is_zero()) p.at(i, j) += a * b;
            }
        }
    return p;
}

bool Mat::is_zero() const {
    for (const Rat& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw Error("vstack column mismatch");
    Mat m = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i) m.append_row(bottom.row(i));
    return m;
}

Mat Mat::select_columns(const std::vector<std::size_t>& cols) const {
    Mat m(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= cols_) throw Error("column index out of range");
            m.at(i, j) = at(i, cols[j]);
        }
    return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << "]\n";
    }
    return os.str();
}

Rref rref(const Mat& m) {
    Mat a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        Rat inv = a.at(lead, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat kernel_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    Mat basis(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols());
        v[f] = Rat(1);
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
        basis.append_row(v);
    }
    // Re-reduce so the returned rows are themselves in RREF.
    Rref rb = rref(basis);
    return rb.mat.select_rows([&] {
        std::vector<std::size_t> idx(rb.rank());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        return idx;
    }());
}

Mat row_space_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<std::size_t> idx(r.rank());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return r.mat.select_rows(idx);
}

bool row_space_equal(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw Error("row_space_equal: column count mismatch");
    return row_space_basis(a) == row_space_basis(b);
}

bool row_space_contains(const Mat& basis, const std::vector<Rat>& v) {
    if (v.size() != basis.cols()) throw Error("row_space_contains: length mismatch");
    Mat stacked = basis;
    stacked.append_row(v);
    return rank(stacked) == rank(basis);
}

} // namespace zono
