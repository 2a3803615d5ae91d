#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/linear_space.hpp"
#include "zonotopal/mat.hpp"

namespace zono {

/// Nonnegative-degree integer sequence; h-vectors and Hilbert functions.
using HilbertFunction = std::vector<long long>;

std::string hf_str(const HilbertFunction& h);
long long hf_total(const HilbertFunction& h);

/// Lattice of flats with Mobius values mu(F, E).
struct FlatLattice {
    std::vector<std::uint32_t> flats;                 // sorted ascending as masks
    std::map<std::uint32_t, long long> mobius_to_top; // flat -> mu(F, E)
};

struct SubsetCounts {
    long long bases = 0;
    long long independent = 0;
    long long spanning = 0;
};

/// Bivariate integer polynomial, sparse in (deg_x, deg_y).
class TuttePoly {
  public:
    std::map<std::pair<int, int>, long long> coeffs;

    TuttePoly& operator+=(const TuttePoly& o);
    TuttePoly shifted_x() const; // multiply by x
    TuttePoly shifted_y() const; // multiply by y
    long long eval(long long x, long long y) const;
    std::string str() const;
    bool operator==(const TuttePoly& o) const { return coeffs == o.coeffs; }
};

/// Matroid of the columns of a realizing matrix.  The rank function is the
/// column rank of the corresponding submatrix; results are memoized.
class Matroid {
  public:
    Matroid(std::vector<std::string> ground, Mat realization);

    std::size_t n() const { return ground_.size(); }
    std::size_t rank() const { return rank_of(full_mask()); }
    const std::vector<std::string>& ground() const { return ground_; }

    std::size_t rank_of(std::uint32_t subset) const;
    std::uint32_t closure(std::uint32_t subset) const;
    bool is_loop(std::size_t e) const { return rank_of(1u << e) == 0; }
    bool loopless() const;
    std::uint32_t full_mask() const { return n() == 32 ? ~0u : (1u << n()) - 1u; }

    /// Minimal dependent sets, complete, sorted by increasing index sequence.
    std::vector<std::uint32_t> circuits() const;

    /// All flats with Mobius values to the top.
    FlatLattice flats() const;

    /// Exhaustive subset counts (bases, independent, spanning).
    /// Throws GroundTooLarge past the enumeration guard.
    SubsetCounts counts() const;

    /// Tutte polynomial by deletion-contraction on the rank oracle.
    TuttePoly tutte() const;

    /// h-vector of the broken circuit complex for the given total order of
    /// the ground set (order[k] = index of the k-th smallest element).
    /// Throws LoopPresent on matroids with loops.
    HilbertFunction broken_circuit_h_vector(const std::vector<std::size_t>& order) const;

    /// h-vector of the independence complex.  Loops are allowed: they simply
    /// never occur in a face.
    HilbertFunction independence_h_vector() const;

  private:
    std::vector<std::string> ground_;
    Mat realization_; // r x n; columns realize the matroid
    mutable std::map<std::uint32_t, std::size_t> rank_memo_;
    mutable std::mutex memo_lock_;

    void guard(std::size_t limit) const;
    HilbertFunction h_from_f(const std::vector<long long>& f, std::size_t d) const;
};

/// Matroid M_A of a linear space: ranks are column ranks of the stored basis.
Matroid matroid_of(const LinearSpace& a);

/// Enumeration guard (default 24); override with env ZONOTOPAL_MAX_N.
std::size_t enumeration_guard();

} // namespace zono
