#ifndef PRAAG_HOMOLOGY_HPP
#define PRAAG_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "praag/simplicial.hpp"

namespace praag {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix; small dimensions only.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);
bool is_zero(const IntMatrix& x);

struct SmithResult {
  std::vector<BigInt> divisors;  // nonzero diagonal, each dividing the next
  int rank = 0;
};

/// Diagonalization over the integers; pivoting by minimal absolute value.
SmithResult smith_normal_form(IntMatrix m);

/// Boundary matrices of a simplicial complex, dimensions 0..max_dim, with
/// one extra boundary map into the top recorded dimension so that ranks at
/// max_dim come out right.
struct ChainComplex {
  std::vector<std::vector<VertexSet>> bases;  // bases[k]: sorted k-faces
  std::vector<IntMatrix> boundaries;          // boundaries[k]: C_k -> C_{k-1}; [0] empty
  /// ∂_{max_dim+1} when the complex has larger dimension, else empty.
  IntMatrix extra_boundary;
};

ChainComplex chain_complex(const SimplicialComplex& k, int max_dim,
                           long long simplex_limit = 200000);

struct HomologyProfile {
  std::vector<long long> betti;                  // unreduced, dims 0..max_dim
  std::vector<std::vector<long long>> torsion;   // elementary divisors > 1 per dim
  long long euler = 0;                           // from the full f-vector
  std::vector<long long> betti_reduced() const;  // betti with b0 lowered by 1
};

HomologyProfile homology(const SimplicialComplex& k, int max_dim,
                         long long simplex_limit = 200000);

// --- collapsibility certificates ------------------------------------------

/// One elementary collapse in a 1-complex: a leaf vertex (free face) and
/// its unique incident edge (coface).
struct CollapseStep {
  std::string free_vertex;
  std::pair<std::string, std::string> coface_edge;
};

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
};

/// Leaf collapses reducing a tree to exactly the a-b geodesic.
CollapseCertificate collapse_tree_to_path(const SimplicialComplex& tree,
                                          const std::string& a,
                                          const std::string& b);

/// Replays a certificate against the tree; true iff every step removes a
/// genuine free face and the terminal complex equals `target`.
bool replay_collapse(const SimplicialComplex& tree,
                     const CollapseCertificate& cert,
                     const SimplicialComplex& target);

// --- bounded simple-connectivity check -------------------------------------

enum class Pi1Verdict { proven_trivial, unknown };

/// Edge-path-group presentation from a spanning tree, then bounded Tietze
/// simplification. Never claims triviality when H_1 is nonzero.
Pi1Verdict bounded_pi1_trivial(const SimplicialComplex& k, long long budget);

}  // namespace praag

#endif
