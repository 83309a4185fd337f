#ifndef PRAAG_SIMPLICIAL_HPP
#define PRAAG_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace praag {

/// Simplices are bitmasks over a complex's vertex order. Everything in scope
/// is desk-sized, so 64 vertices is a hard (checked) cap.
using VertexSet = std::uint64_t;

int popcount(VertexSet s);
std::vector<int> set_bits(VertexSet s);

/// Finite simple graph: ordered string-labeled vertices, undirected edges,
/// with the orientation (tail, head) of each edge remembered as given.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertices);

  void add_vertex(const std::string& label);
  /// Rejects loops, duplicate edges and undeclared endpoints.
  void add_edge(const std::string& tail, const std::string& head);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  bool has_vertex(const std::string& label) const;
  int index_of(const std::string& label) const;  // fails on unknown label

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  bool has_edge(const std::string& a, const std::string& b) const;
  VertexSet neighbors(int v) const { return adj_[v]; }

  /// Graph with the listed edges removed (endpoints kept).
  SimpleGraph without_edges(const std::vector<std::pair<int, int>>& del) const;

  /// Length of the shortest cycle; nullopt for forests.
  std::optional<int> girth() const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> edges_;  // (tail, head)
  std::vector<VertexSet> adj_;
};

/// Shortest cycle length of an undirected multigraph given as an edge list;
/// loops count 1, parallel pairs count 2. nullopt when acyclic.
std::optional<int> multigraph_girth(int n_vertices,
                                    const std::vector<std::pair<int, int>>& edges);

/// Finite abstract simplicial complex on string-labeled vertices, stored as
/// an antichain of maximal faces; membership by subset query. All declared
/// vertices are faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex on_vertices(std::vector<std::string> labels);
  static SimplicialComplex from_maximal(
      std::vector<std::string> labels,
      const std::vector<std::vector<std::string>>& maximal_faces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  bool has_vertex(const std::string& label) const;
  int index_of(const std::string& label) const;

  VertexSet mask_of(const std::vector<std::string>& verts) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  bool contains(VertexSet simplex) const;
  bool contains(const std::vector<std::string>& verts) const;

  const std::vector<VertexSet>& maximal_faces() const { return maximal_; }
  /// All k-dimensional faces, sorted by mask value.
  std::vector<VertexSet> faces_of_dim(int k) const;
  /// Counts (f_0, f_1, ..., f_dim); empty complex gives {}.
  std::vector<long long> f_vector() const;
  int dimension() const;  // -1 when no vertices
  long long total_face_count() const;

  SimpleGraph one_skeleton() const;
  /// Full subcomplex induced on the given vertices.
  SimplicialComplex induced(const std::vector<std::string>& verts) const;
  /// link(sigma) = { tau : tau ∪ sigma is a face, tau ∩ sigma empty }.
  SimplicialComplex link_of(const std::vector<std::string>& simplex) const;

  void insert_face(VertexSet s);  // keeps the antichain compressed

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<VertexSet> maximal_;
};

SimplicialComplex flag_complex(const SimpleGraph& g);
bool is_flag(const SimplicialComplex& k);

/// True iff every ambient face spanned by sub's vertices lies in sub.
/// Fails when sub uses labels unknown to the ambient complex.
bool is_full(const SimplicialComplex& sub, const SimplicialComplex& ambient);

/// Vertex label sets must be disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Union by shared labels; the inputs must agree on shared faces implicitly
/// (no check beyond label identity — callers verify flagness afterwards).
SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::map<std::string, std::string>& m);

/// Label-for-label equality of vertex sets and face sets.
bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b);

/// Equality after applying the caller's relabeling map to `a`.
bool isomorphic_under(const SimplicialComplex& a, const SimplicialComplex& b,
                      const std::map<std::string, std::string>& m);

// --- signed vertices and the sphere construction -------------------------

struct SignedVertex {
  std::string base;
  char sign = '+';  // '+' or '-'
};

std::string signed_label(const std::string& base, char sign);
SignedVertex split_signed(const std::string& label);

/// S(K): vertices v+ and v- for each vertex of K; every face sigma of K
/// contributes the face A+ ∪ B- for each partition sigma = A ⊔ B.
SimplicialComplex sphere(const SimplicialComplex& k);

/// A map of complexes given on vertices; simpliciality is checkable.
struct VertexMap {
  const SimplicialComplex* domain = nullptr;
  const SimplicialComplex* codomain = nullptr;
  std::map<std::string, std::string> images;

  std::string apply(const std::string& v) const;
  VertexSet apply(VertexSet s) const;  // domain mask -> codomain mask
};

bool is_simplicial(const VertexMap& f);
SimplicialComplex image_complex(const VertexMap& f);

/// fold_P on S(K): v^± ↦ v^+ when v ∈ P, else v^-. Simplicial idempotent
/// retraction of S(K) onto an embedded copy of K.
VertexMap fold_map(const SimplicialComplex& k, const SimplicialComplex& sphere_k,
                   const std::vector<std::string>& P);

}  // namespace praag

#endif
