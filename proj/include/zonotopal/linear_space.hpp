#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zonotopal/mat.hpp"

namespace zono {

/// A coordinatized linear space: an ordered ground set E of labels together
/// with a full-row-rank rational matrix (stored in RREF) whose row space is
/// the subspace L of F^E.  The e-th coordinate functional restricted to the
/// row space plays the role of chi_e.
class LinearSpace {
  public:
    /// Throws RankDeficient if the rows are dependent, ParseError on
    /// duplicate labels or shape mismatch.
    static LinearSpace make(std::vector<std::string> labels, const Mat& rows);

    const std::vector<std::string>& labels() const { return labels_; }
    const Mat& basis() const { return basis_; }

    std::size_t n() const { return labels_.size(); }
    std::size_t rank() const { return basis_.rows(); }

    /// Index of a label in E; throws UnknownLabel.
    std::size_t label_index(const std::string& label) const;

    /// Labels for a set of indices, in index order.
    std::vector<std::string> labels_for(const std::vector<std::size_t>& idx) const;

  private:
    LinearSpace(std::vector<std::string> labels, Mat basis);
    std::vector<std::string> labels_;
    Mat basis_; // r x n, RREF
};

/// A nonzero row-space vector of minimal support, normalized so its first
/// nonzero coordinate (in label order) is 1.  Its support is a circuit of
/// the Gale dual's matroid; m is the support size.
struct ElementaryVector {
    std::vector<Rat> coeffs;          // length n
    std::vector<std::size_t> support; // sorted indices into E
    std::uint32_t support_mask = 0;
    std::size_t m() const { return support.size(); }
};

/// Same labels; basis spans the null space of a's basis.  Involutive on row
/// spaces.  A zero-dimensional L yields the full identity row space.
LinearSpace gale_dual(const LinearSpace& a);

/// Restriction to the coordinates in s (indices into E, any order, no
/// duplicates required).  Labels keep their induced order; the row space is
/// the coordinate projection of L.
LinearSpace localization(const LinearSpace& a, const std::vector<std::size_t>& s);
LinearSpace localization_labels(const LinearSpace& a, const std::vector<std::string>& s);

/// Ground set E \ s; row space = vectors of L vanishing on s, restricted.
LinearSpace contraction(const LinearSpace& a, const std::vector<std::size_t>& s);
LinearSpace contraction_labels(const LinearSpace& a, const std::vector<std::string>& s);

/// All elementary vectors, duplicate-free, sorted by support
/// (lexicographically as increasing index sequences).  Empty when L = 0.
std::vector<ElementaryVector> elementary_vectors(const LinearSpace& a);

/// Minimum support size of a nonzero vector of L; throws EmptyL if rank 0.
std::size_t rho(const LinearSpace& a);

struct GraphEdge {
    std::string tail, head, label;
};

enum class GraphMode { graphical, cographical };

/// Cographical mode: L = the cycle space of the (connected) graph, one
/// coordinate per edge, cycles oriented by the edge directions.  Graphical
/// mode: the Gale dual of that (the cut space).  Loops contribute their own
/// one-edge cycles.  Throws DisconnectedGraph.
LinearSpace from_graph(const std::vector<GraphEdge>& edges, GraphMode mode);

} // namespace zono
