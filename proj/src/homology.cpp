#include "praag/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "praag/error.hpp"
#include "praag/presentation.hpp"

namespace praag {

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) fail(errc::internal, "matmul shape mismatch");
  IntMatrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

bool is_zero(const IntMatrix& x) {
  for (const auto& v : x.a)
    if (v != 0) return false;
  return true;
}

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  int t = 0;
  const int bound = std::min(m.rows, m.cols);
  while (t < bound) {
    // minimal nonzero |entry| in the remaining block
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        const BigInt v = abs(m.at(r, c));
        if (v != 0 && (pr < 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // block is zero
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

    bool clean = true;
    for (int r = t + 1; r < m.rows && clean; ++r) {
      const BigInt q = m.at(r, t) / m.at(t, t);
      if (q != 0)
        for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
      if (m.at(r, t) != 0) clean = false;
    }
    if (clean)
      for (int c = t + 1; c < m.cols && clean; ++c) {
        const BigInt q = m.at(t, c) / m.at(t, t);
        if (q != 0)
          for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
        if (m.at(t, c) != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainder appeared; repick pivot

    // enforce divisibility of the rest of the block by the pivot
    bool divides = true;
    for (int r = t + 1; r < m.rows && divides; ++r)
      for (int c = t + 1; c < m.cols && divides; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
          divides = false;
        }
    if (!divides) continue;

    if (m.at(t, t) < 0)
      for (int c = t; c < m.cols; ++c) m.at(t, c) = -m.at(t, c);
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.divisors.push_back(m.at(i, i));
  return res;
}

ChainComplex chain_complex(const SimplicialComplex& k, int max_dim,
                           long long simplex_limit) {
  if (max_dim < 0) fail(errc::invalid_argument, "max_dim must be >= 0");
  ChainComplex cc;
  long long total = 0;
  for (int d = 0; d <= max_dim + 1; ++d) {
    auto faces = k.faces_of_dim(d);
    total += static_cast<long long>(faces.size());
    if (total > simplex_limit)
      fail(errc::invalid_argument, "complex exceeds configured simplex-count limit");
    if (d <= max_dim)
      cc.bases.push_back(faces);
    else if (!faces.empty()) {
      // remember ∂_{max_dim+1} so ranks at the top recorded dim are exact
      std::map<VertexSet, int> idx;
      for (int i = 0; i < static_cast<int>(cc.bases[max_dim].size()); ++i)
        idx[cc.bases[max_dim][i]] = i;
      IntMatrix b(static_cast<int>(cc.bases[max_dim].size()),
                  static_cast<int>(faces.size()));
      for (int j = 0; j < static_cast<int>(faces.size()); ++j) {
        const auto bits = set_bits(faces[j]);
        for (int i = 0; i < static_cast<int>(bits.size()); ++i) {
          const VertexSet face = faces[j] & ~(VertexSet{1} << bits[i]);
          b.at(idx.at(face), j) = (i % 2 == 0) ? 1 : -1;
        }
      }
      cc.extra_boundary = b;
    }
  }
  cc.boundaries.resize(cc.bases.size());
  for (int d = 1; d < static_cast<int>(cc.bases.size()); ++d) {
    std::map<VertexSet, int> idx;
    for (int i = 0; i < static_cast<int>(cc.bases[d - 1].size()); ++i)
      idx[cc.bases[d - 1][i]] = i;
    IntMatrix b(static_cast<int>(cc.bases[d - 1].size()),
                static_cast<int>(cc.bases[d].size()));
    for (int j = 0; j < static_cast<int>(cc.bases[d].size()); ++j) {
      const auto bits = set_bits(cc.bases[d][j]);
      for (int i = 0; i < static_cast<int>(bits.size()); ++i) {
        const VertexSet face = cc.bases[d][j] & ~(VertexSet{1} << bits[i]);
        b.at(idx.at(face), j) = (i % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundaries[d] = b;
  }
  // ∂∂ = 0 on every constructed complex
  for (int d = 2; d < static_cast<int>(cc.boundaries.size()); ++d)
    if (!is_zero(matmul(cc.boundaries[d - 1], cc.boundaries[d])))
      fail(errc::internal, "boundary composition is nonzero");
  if (cc.extra_boundary.rows > 0 && cc.bases.size() >= 2) {
    if (!is_zero(matmul(cc.boundaries.back(), cc.extra_boundary)))
      fail(errc::internal, "boundary composition is nonzero");
  }
  return cc;
}

std::vector<long long> HomologyProfile::betti_reduced() const {
  auto out = betti;
  if (!out.empty() && out[0] > 0) out[0] -= 1;
  return out;
}

HomologyProfile homology(const SimplicialComplex& k, int max_dim,
                         long long simplex_limit) {
  const ChainComplex cc = chain_complex(k, max_dim, simplex_limit);
  const int dims = static_cast<int>(cc.bases.size());
  std::vector<long long> rank(dims + 1, 0);
  std::vector<std::vector<long long>> tors(dims);
  for (int d = 1; d < dims; ++d) {
    const SmithResult s = smith_normal_form(cc.boundaries[d]);
    rank[d] = s.rank;
    for (const BigInt& v : s.divisors)
      if (v > 1) tors[d - 1].push_back(v.convert_to<long long>());
  }
  if (cc.extra_boundary.rows > 0) {
    const SmithResult s = smith_normal_form(cc.extra_boundary);
    rank[dims] = s.rank;
    for (const BigInt& v : s.divisors)
      if (v > 1) tors[dims - 1].push_back(v.convert_to<long long>());
  }
  HomologyProfile prof;
  prof.torsion = tors;
  for (int d = 0; d < dims; ++d) {
    const long long n = static_cast<long long>(cc.bases[d].size());
    prof.betti.push_back(n - rank[d] - rank[d + 1]);
  }
  const auto f = k.f_vector();
  for (int d = 0; d < static_cast<int>(f.size()); ++d)
    prof.euler += (d % 2 == 0) ? f[d] : -f[d];
  if (max_dim >= k.dimension()) {
    long long chi = 0;
    for (int d = 0; d < dims; ++d)
      chi += (d % 2 == 0) ? prof.betti[d] : -prof.betti[d];
    if (chi != prof.euler)
      fail(errc::internal, "Euler characteristic disagrees with Betti numbers");
  }
  return prof;
}

// --- collapses --------------------------------------------------------------

namespace {

void require_tree(const SimplicialComplex& t) {
  if (t.dimension() > 1) fail(errc::invalid_argument, "not a 1-complex");
  const auto edges = t.faces_of_dim(1);
  if (static_cast<long long>(edges.size()) != t.vertex_count() - 1)
    fail(errc::invalid_argument, "not a tree");
  if (t.one_skeleton().girth().has_value())
    fail(errc::invalid_argument, "not a tree");
  // edge count + acyclic forces connectivity
}

}  // namespace

CollapseCertificate collapse_tree_to_path(const SimplicialComplex& tree,
                                          const std::string& a,
                                          const std::string& b) {
  require_tree(tree);
  tree.index_of(a);
  tree.index_of(b);

  // geodesic via BFS
  SimpleGraph g = tree.one_skeleton();
  const int n = g.vertex_count();
  const int src = g.index_of(a), dst = g.index_of(b);
  std::vector<int> prev(n, -1);
  std::deque<int> q{src};
  std::vector<bool> seen(n, false);
  seen[src] = true;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    for (int y : set_bits(g.neighbors(x)))
      if (!seen[y]) {
        seen[y] = true;
        prev[y] = x;
        q.push_back(y);
      }
  }
  std::set<int> on_path;
  for (int v = dst; v != -1; v = prev[v]) on_path.insert(v);
  if (!on_path.count(src)) fail(errc::internal, "tree is disconnected");

  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  CollapseCertificate cert;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 0; v < n; ++v) {
      if (on_path.count(v) || adj[v].size() != 1) continue;
      const int u = *adj[v].begin();
      cert.steps.push_back({g.label(v), {g.label(v), g.label(u)}});
      adj[u].erase(v);
      adj[v].clear();
      progress = true;
    }
  }
  return cert;
}

bool replay_collapse(const SimplicialComplex& tree,
                     const CollapseCertificate& cert,
                     const SimplicialComplex& target) {
  std::set<std::string> verts(tree.vertex_labels().begin(),
                              tree.vertex_labels().end());
  std::set<std::vector<std::string>> edges;
  for (VertexSet e : tree.faces_of_dim(1)) {
    auto ls = tree.labels_of(e);
    std::sort(ls.begin(), ls.end());
    edges.insert(ls);
  }
  for (const auto& step : cert.steps) {
    if (!verts.count(step.free_vertex)) return false;
    std::vector<std::string> e{step.coface_edge.first, step.coface_edge.second};
    std::sort(e.begin(), e.end());
    if (!edges.count(e)) return false;
    // freeness: exactly one incident edge
    int incident = 0;
    for (const auto& f : edges)
      if (f[0] == step.free_vertex || f[1] == step.free_vertex) ++incident;
    if (incident != 1) return false;
    if (e[0] != step.free_vertex && e[1] != step.free_vertex) return false;
    edges.erase(e);
    verts.erase(step.free_vertex);
  }
  std::set<std::string> tverts(target.vertex_labels().begin(),
                               target.vertex_labels().end());
  if (verts != tverts) return false;
  std::set<std::vector<std::string>> tedges;
  for (VertexSet e : target.faces_of_dim(1)) {
    auto ls = target.labels_of(e);
    std::sort(ls.begin(), ls.end());
    tedges.insert(ls);
  }
  return edges == tedges;
}

// --- bounded pi_1 ------------------------------------------------------------

Pi1Verdict bounded_pi1_trivial(const SimplicialComplex& k, long long budget) {
  const SimpleGraph g = k.one_skeleton();
  const int n = g.vertex_count();
  if (n == 0) fail(errc::invalid_argument, "empty complex");
  // connectivity
  {
    std::vector<bool> seen(n, false);
    std::deque<int> q{0};
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : set_bits(g.neighbors(x)))
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          q.push_back(y);
        }
    }
    if (reached != n) fail(errc::invalid_argument, "complex is not connected");
  }
  // homology guard: H1 must vanish (rank and torsion)
  {
    const HomologyProfile h = homology(k, std::min(2, std::max(1, k.dimension())));
    if (h.betti.size() > 1 && h.betti[1] != 0) return Pi1Verdict::unknown;
    if (h.torsion.size() > 1 && !h.torsion[1].empty()) return Pi1Verdict::unknown;
  }

  // spanning tree by BFS
  std::set<std::pair<int, int>> tree_edges;
  {
    std::vector<bool> seen(n, false);
    std::deque<int> q{0};
    seen[0] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (int y : set_bits(g.neighbors(x)))
        if (!seen[y]) {
          seen[y] = true;
          tree_edges.insert(std::minmax(x, y));
          q.push_back(y);
        }
    }
  }
  Presentation p;
  std::map<std::pair<int, int>, int> gen_of;  // oriented (u<v) -> generator id
  for (VertexSet e : k.faces_of_dim(1)) {
    const auto b = set_bits(e);
    const auto key = std::minmax(b[0], b[1]);
    if (tree_edges.count(key)) continue;
    gen_of[key] = static_cast<int>(p.generators.size());
    p.generators.push_back("e_" + k.label(key.first) + "_" + k.label(key.second));
  }
  auto letter = [&](int u, int v) -> std::vector<int> {
    const auto key = std::minmax(u, v);
    auto it = gen_of.find(key);
    if (it == gen_of.end()) return {};
    const int id = it->second + 1;
    return {u < v ? id : -id};
  };
  for (VertexSet t : k.faces_of_dim(2)) {
    const auto b = set_bits(t);  // b0 < b1 < b2
    std::vector<int> rel;
    for (int l : letter(b[0], b[1])) rel.push_back(l);
    for (int l : letter(b[1], b[2])) rel.push_back(l);
    for (int l : letter(b[2], b[0])) rel.push_back(l);
    if (!rel.empty()) p.relators.push_back(rel);
  }
  return tietze_trivialize(p, budget) == TietzeOutcome::trivial
             ? Pi1Verdict::proven_trivial
             : Pi1Verdict::unknown;
}

}  // namespace praag
