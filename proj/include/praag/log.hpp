#ifndef PRAAG_LOG_HPP
#define PRAAG_LOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "praag/simplicial.hpp"
#include "praag/words.hpp"

namespace praag {

/// One edge of a labeled oriented graph. Loops are allowed (a commutator
/// relator [label, v] is an edge with tail == head == v).
struct LogEdge {
  int tail = 0, head = 0, label = 0;  // vertex indices
};

/// LOG presentation (Psi, lambda): each edge e yields the length-4 relator
/// (lambda e)(head e)(lambda e)^-1 (tail e)^-1, and a kernel generator x_e
/// (the square's diagonal) with (tail e) x_e = (lambda e).
class LogPresentation {
 public:
  LogPresentation() = default;
  explicit LogPresentation(std::vector<std::string> vertices);

  void add_edge(const std::string& tail, const std::string& head,
                const std::string& label);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_labels() const { return vertices_; }
  const std::string& vertex(int i) const { return vertices_[i]; }
  int index_of(const std::string& label) const;
  bool has_vertex(const std::string& label) const;
  const std::vector<LogEdge>& edges() const { return edges_; }

  /// Name of the kernel generator attached to edge e ("x<e>").
  std::string kernel_letter(int e) const { return "x" + std::to_string(e); }

  Word relator(int e) const;  // the boundary word, length 4

 private:
  std::vector<std::string> vertices_;
  std::vector<LogEdge> edges_;
};

/// Corner of a relator square, naming which vertex of the square the link
/// edge comes from.
enum class SquareCorner { top, bottom, side_head, side_tail };

/// Vertex link of the presentation complex: signed vertices v+ / v-, four
/// edges per relator square. Kept as a multigraph; gluing could a priori
/// create parallels and they must be detected, not assumed away.
struct LinkGraph {
  int base_count = 0;  // signed vertex id = 2*base + (sign == '-')
  struct Edge {
    int u = 0, v = 0;
    int square = 0;
    SquareCorner corner = SquareCorner::top;
  };
  std::vector<Edge> edges;

  static int id(int base, char sign) { return 2 * base + (sign == '-' ? 1 : 0); }
  int vertex_count() const { return 2 * base_count; }

  std::optional<int> girth() const;
  /// Edges of the descending (all +) / ascending (all -) subgraph, as
  /// base-vertex pairs.
  std::vector<std::pair<int, int>> descending_edges() const;
  std::vector<std::pair<int, int>> ascending_edges() const;
  /// Distance between signed vertices in the whole link; -1 if unreachable.
  int distance(int signed_u, int signed_v) const;
  bool has_edge_between(int signed_u, int signed_v) const;
};

enum class Curvature { fail, npc, npc_hyperbolic };
std::string to_string(Curvature c);

LinkGraph vertex_link(const LogPresentation& p);
Curvature classify_curvature(const LinkGraph& l);

/// (descending link is a tree, ascending link is a tree); tree means
/// connected and acyclic on the full signed vertex set of that sign.
std::pair<bool, bool> asc_desc_are_trees(const LinkGraph& l);

/// Presentation of S_d: vertices {s, a0..ad}; a loop at a0 labeled s and a
/// chain edge a0 -> a_i labeled a_{i+1} for each i < d.
LogPresentation preset_poly(int d);

/// The shipped girth-5 presentation with hyperbolic kernel distortion:
/// canonical first output of search_exp_log(6), vertex names t, a1..a5,
/// distinguished pair (a1, a3), fan anchors (t, a5).
const LogPresentation& preset_exp();

struct ExpValidation {
  bool valid = false;
  std::optional<int> girth;
  bool desc_tree = false, asc_tree = false;
  bool quadruple_independent = false;
  int dist_src_pm = -1, dist_dst_pm = -1, dist_src_dst = -1;
  std::vector<std::string> failures;
};

/// Checks the constraints a hyperbolic perturbing presentation must satisfy
/// for the pair (src, dst): girth 5, twin trees, independence of
/// {src+-, dst+-}, and the three distance-2 conditions.
ExpValidation validate_exp_log(const LogPresentation& p, const std::string& src,
                               const std::string& dst);

struct ExpSearchResult {
  LogPresentation log;  // canonical names t, a1..a5, ...
  std::string src, dst;
};

/// Deterministic pruned search over LOGs with num_vertices vertices and
/// num_vertices - 1 edges (forced by the twin tree conditions). Returns the
/// lexicographically least valid presentation, canonically renamed, or
/// nullopt when the space is exhausted.
std::optional<ExpSearchResult> search_exp_log(int num_vertices);

std::string emit_group_presentation(const LogPresentation& p);
LogPresentation log_from_presentation_text(const std::string& text);

}  // namespace praag

#endif
