#include "zonotopal/apolarity.hpp"

#include <functional>

#include "zonotopal/errors.hpp"

namespace zono {

MonoBasis::MonoBasis(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {
    std::vector<int> cur(nvars, 0);
    // Descending lex: put as much as possible on the earliest variables.
    std::function<void(std::size_t, int)> gen = [&](std::size_t var, int remaining) {
        if (var + 1 == nvars_) {
            cur[var] = remaining;
            exps_.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            gen(var + 1, remaining - e);
        }
    };
    if (nvars_ == 0) {
        if (degree_ == 0) exps_.push_back({});
    } else {
        gen(0, static_cast<int>(degree_));
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) index_[exps_[i]] = i;
}

std::size_t MonoBasis::index_of(const std::vector<int>& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error("monomial not in basis");
    return it->second;
}

std::size_t sym_dim(std::size_t nvars, std::size_t degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    // C(degree + nvars - 1, nvars - 1)
    unsigned long long num = 1, den = 1;
    for (std::size_t i = 1; i < nvars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return static_cast<std::size_t>(num / den);
}

Mat pow_op_matrix(const std::vector<Rat>& alpha, std::size_t p, std::size_t d) {
    if (p > d) throw DegreeUnderflow("operator power exceeds the polynomial degree");
    std::size_t nvars = alpha.size();
    MonoBasis src(nvars, d), dst(nvars, d - p);
    Mat m(dst.size(), src.size());

    Rat p_factorial = factorial(static_cast<unsigned>(p));

    // alpha^p = sum_{|k|=p} p!/k! * alpha^k * d^k; each d^k contributes the
    // falling factorial of the source exponents.
    for (std::size_t j = 0; j < src.size(); ++j) {
        const std::vector<int>& u = src.exponents(j);
        std::vector<int> k(nvars, 0);
        std::function<void(std::size_t, int)> walk = [&](std::size_t var, int remaining) {
            if (var == nvars) {
                if (remaining != 0) return;
                Rat coeff = p_factorial;
                std::vector<int> target = u;
                for (std::size_t i = 0; i < nvars; ++i) {
                    if (k[i] == 0) continue;
                    if (alpha[i].is_zero()) return;
                    coeff /= factorial(static_cast<unsigned>(k[i]));
                    coeff *= alpha[i].pow(static_cast<unsigned>(k[i]));
                    for (int t = 0; t < k[i]; ++t) coeff *= Rat(u[i] - t);
                    target[i] -= k[i];
                }
                if (coeff.is_zero()) return;
                m.at(dst.index_of(target), j) += coeff;
                return;
            }
            int cap = std::min(remaining, u[var]);
            for (int e = 0; e <= cap; ++e) {
                k[var] = e;
                walk(var + 1, remaining - e);
            }
            k[var] = 0;
        };
        walk(0, static_cast<int>(p));
    }
    return m;
}

Mat ideal_degree_piece(const std::vector<std::pair<std::size_t, std::vector<Rat>>>& generators,
                       std::size_t d, std::size_t nvars) {
    MonoBasis target(nvars, d);
    Mat rows(0, target.size());
    for (const auto& [dg, g] : generators) {
        if (dg > d) continue;
        MonoBasis gen_basis(nvars, dg);
        if (g.size() != gen_basis.size()) throw Error("generator length does not match its degree");
        MonoBasis mult(nvars, d - dg);
        for (std::size_t mi = 0; mi < mult.size(); ++mi) {
            const std::vector<int>& me = mult.exponents(mi);
            std::vector<Rat> prod(target.size());
            for (std::size_t gi = 0; gi < gen_basis.size(); ++gi) {
                if (g[gi].is_zero()) continue;
                std::vector<int> e = gen_basis.exponents(gi);
                for (std::size_t v = 0; v < nvars; ++v) e[v] += me[v];
                prod[target.index_of(e)] += g[gi];
            }
            rows.append_row(prod);
        }
    }
    return row_space_basis(rows);
}

Mat annihilator_degree(const std::vector<std::pair<std::vector<Rat>, std::size_t>>& constraints,
                       std::size_t d, std::size_t nvars) {
    Mat stacked(0, sym_dim(nvars, d));
    for (const auto& [alpha, p] : constraints) {
        if (alpha.size() != nvars) throw Error("constraint arity mismatch");
        if (p > d) continue; // maps into negative degree: vacuous
        stacked = Mat::vstack(stacked, pow_op_matrix(alpha, p, d));
    }
    if (stacked.rows() == 0) return Mat::identity(sym_dim(nvars, d));
    return kernel_basis(stacked);
}

std::vector<Rat> poly_mul_linear(const std::vector<Rat>& v, std::size_t d,
                                 const std::vector<Rat>& linear, std::size_t nvars) {
    MonoBasis src(nvars, d), dst(nvars, d + 1);
    if (v.size() != src.size() || linear.size() != nvars) throw Error("shape mismatch");
    std::vector<Rat> out(dst.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t var = 0; var < nvars; ++var) {
            if (linear[var].is_zero()) continue;
            std::vector<int> e = src.exponents(i);
            ++e[var];
            out[dst.index_of(e)] += v[i] * linear[var];
        }
    }
    return out;
}

std::vector<Rat> product_of_linears(const std::vector<std::vector<Rat>>& linears,
                                    std::size_t nvars) {
    std::vector<Rat> acc = {Rat(1)};
    std::size_t d = 0;
    for (const auto& lin : linears) {
        acc = poly_mul_linear(acc, d, lin, nvars);
        ++d;
    }
    return acc;
}

Mat sym_power_matrix(const Mat& a, std::size_t d) {
    std::size_t nvars = a.rows();
    if (a.cols() != nvars) throw Error("sym_power_matrix needs a square matrix");
    MonoBasis basis(nvars, d);
    Mat m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::vector<int>& e = basis.exponents(j);
        std::vector<Rat> acc = {Rat(1)};
        std::size_t deg = 0;
        for (std::size_t var = 0; var < nvars; ++var) {
            std::vector<Rat> image(nvars);
            for (std::size_t i = 0; i < nvars; ++i) image[i] = a.at(i, var);
            for (int t = 0; t < e[var]; ++t) {
                acc = poly_mul_linear(acc, deg, image, nvars);
                ++deg;
            }
        }
        for (std::size_t i = 0; i < basis.size(); ++i) m.at(i, j) = acc[i];
    }
    return m;
}

void reduce_mod_rref(const Mat& space, const std::vector<std::size_t>& pivots,
                     std::vector<Rat>& v) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Rat c = v[pivots[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * space.at(i, j);
    }
}

} // namespace zono
