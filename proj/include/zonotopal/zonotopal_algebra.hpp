#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonotopal/apolarity.hpp"
#include "zonotopal/linear_space.hpp"
#include "zonotopal/matroid.hpp"

namespace zono {

/// First-nonzero column of each row; exact for matrices stored in RREF.
std::vector<std::size_t> rref_pivots(const Mat& m);

/// Coordinates of a row-space vector v with respect to the stored RREF row
/// basis (read off the pivot columns).  Assumes v is in the row space.
std::vector<Rat> l_coordinates(const LinearSpace& a, const std::vector<Rat>& v);

/// Macaulay inverse system C_{A,k}: per-degree RREF bases of the joint
/// kernel of alpha^{m(alpha)+k+1} over the elementary vectors, computed
/// degree by degree until the first zero slice (with a hard safety cap).
/// Coordinates are with respect to the dual of the stored row basis.
/// Throws KOutOfRange unless -(rho+1) <= k <= 0.
GradedSubspace inverse_system(const LinearSpace& a, int k);

/// Dims of the inverse-system slices (equivalently of R_{A,k}).
HilbertFunction hilbert(const LinearSpace& a, int k);

struct TotalCheckLine {
    std::string name;
    long long lhs = 0, rhs = 0;
    bool pass = false;
};

struct TotalChecks {
    std::vector<TotalCheckLine> lines;
    bool pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/// Total-dimension cross-checks: internal total vs |mu(empty, E)| of the
/// dual matroid (0 when the dual has loops), central total vs number of
/// bases, external total vs number of spanning sets of the dual matroid.
TotalChecks total_checks(const LinearSpace& a);

struct AuditReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    int k = 0;
};

/// Draws random nonzero alpha in L (integer combinations of the row basis,
/// deterministic for a fixed seed) and checks that alpha^{m(alpha)+k+1}
/// kills every stored basis element of inverse_system(a, k).  Throws
/// AuditFailure with the violating (alpha, f, degree) on failure.
AuditReport random_alpha_audit(const LinearSpace& a, int k, std::size_t trials,
                               std::uint64_t seed);

struct DeformedInternal {
    HilbertFunction q_dims;    // dims of Q_-^d in Sym V*, d = 0..d_max
    HilbertFunction expected;  // convolution of P_- dims with Sym(L_perp) dims
    bool pass = false;
};

/// Dims of the deformed internal system Q_-(A) in Sym V* through degree
/// d_max, with the free-module convolution check.  Throws CostGuard if
/// d_max > 8.
DeformedInternal deformed_internal(const LinearSpace& a, std::size_t d_max);

} // namespace zono
