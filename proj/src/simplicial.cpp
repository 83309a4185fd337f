#include "praag/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "praag/error.hpp"

namespace praag {

namespace {
constexpr int kMaxVertices = 64;
}

int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> set_bits(VertexSet s) {
  std::vector<int> out;
  while (s) {
    const int b = std::countr_zero(s);
    out.push_back(b);
    s &= s - 1;
  }
  return out;
}

// --- SimpleGraph ----------------------------------------------------------

SimpleGraph::SimpleGraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) add_vertex(v);
}

void SimpleGraph::add_vertex(const std::string& label) {
  if (index_.count(label)) fail(errc::invalid_argument, "duplicate vertex: " + label);
  if (vertex_count() >= kMaxVertices)
    fail(errc::invalid_argument, "vertex cap (64) exceeded");
  index_[label] = vertex_count();
  labels_.push_back(label);
  adj_.push_back(0);
}

void SimpleGraph::add_edge(const std::string& tail, const std::string& head) {
  const int t = index_of(tail), h = index_of(head);
  if (t == h) fail(errc::invalid_argument, "loop edge rejected: " + tail);
  if (adjacent(t, h))
    fail(errc::invalid_argument, "parallel edge rejected: " + tail + "," + head);
  edges_.emplace_back(t, h);
  adj_[t] |= VertexSet{1} << h;
  adj_[h] |= VertexSet{1} << t;
}

bool SimpleGraph::has_vertex(const std::string& label) const {
  return index_.count(label) != 0;
}

int SimpleGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(errc::invalid_argument, "unknown vertex: " + label);
  return it->second;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return (adj_[u] >> v) & 1;
}

bool SimpleGraph::has_edge(const std::string& a, const std::string& b) const {
  return adjacent(index_of(a), index_of(b));
}

SimpleGraph SimpleGraph::without_edges(
    const std::vector<std::pair<int, int>>& del) const {
  SimpleGraph g(labels_);
  auto deleted = [&](int t, int h) {
    for (auto [a, b] : del)
      if ((a == t && b == h) || (a == h && b == t)) return true;
    return false;
  };
  for (auto [t, h] : edges_)
    if (!deleted(t, h)) g.add_edge(labels_[t], labels_[h]);
  return g;
}

std::optional<int> SimpleGraph::girth() const {
  return multigraph_girth(vertex_count(), edges_);
}

std::optional<int> multigraph_girth(int n,
                                    const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges)
    if (u == v) return 1;
  {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      auto key = std::minmax(u, v);
      if (!seen.insert({key.first, key.second}).second) return 2;
    }
  }
  // Simple graph now; BFS from every vertex, never reusing the arrival edge.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].first].emplace_back(edges[i].second, i);
    adj[edges[i].second].emplace_back(edges[i].first, i);
  }
  int best = -1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), via(n, -1);
    std::deque<int> q;
    dist[s] = 0;
    q.push_back(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      for (auto [y, e] : adj[x]) {
        if (e == via[x]) continue;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          q.push_back(y);
        } else {
          const int cyc = dist[x] + dist[y] + 1;
          if (best < 0 || cyc < best) best = cyc;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

// --- SimplicialComplex ----------------------------------------------------

SimplicialComplex SimplicialComplex::on_vertices(std::vector<std::string> labels) {
  SimplicialComplex k;
  for (auto& l : labels) {
    if (k.index_.count(l)) fail(errc::invalid_argument, "duplicate vertex: " + l);
    if (k.vertex_count() >= kMaxVertices)
      fail(errc::invalid_argument, "vertex cap (64) exceeded");
    k.index_[l] = k.vertex_count();
    k.labels_.push_back(l);
  }
  for (int v = 0; v < k.vertex_count(); ++v) k.insert_face(VertexSet{1} << v);
  return k;
}

SimplicialComplex SimplicialComplex::from_maximal(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& maximal_faces) {
  SimplicialComplex k = on_vertices(std::move(labels));
  for (const auto& f : maximal_faces) k.insert_face(k.mask_of(f));
  return k;
}

bool SimplicialComplex::has_vertex(const std::string& label) const {
  return index_.count(label) != 0;
}

int SimplicialComplex::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) fail(errc::invalid_argument, "unknown vertex: " + label);
  return it->second;
}

VertexSet SimplicialComplex::mask_of(const std::vector<std::string>& verts) const {
  VertexSet s = 0;
  for (const auto& v : verts) s |= VertexSet{1} << index_of(v);
  return s;
}

std::vector<std::string> SimplicialComplex::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (int b : set_bits(s)) out.push_back(labels_[b]);
  return out;
}

bool SimplicialComplex::contains(VertexSet simplex) const {
  if (simplex == 0) return true;
  for (VertexSet m : maximal_)
    if ((simplex & ~m) == 0) return true;
  return false;
}

bool SimplicialComplex::contains(const std::vector<std::string>& verts) const {
  for (const auto& v : verts)
    if (!has_vertex(v)) return false;
  return contains(mask_of(verts));
}

void SimplicialComplex::insert_face(VertexSet s) {
  if (s == 0) return;
  for (VertexSet m : maximal_)
    if ((s & ~m) == 0) return;  // already present
  maximal_.erase(std::remove_if(maximal_.begin(), maximal_.end(),
                                [s](VertexSet m) { return (m & ~s) == 0; }),
                 maximal_.end());
  maximal_.push_back(s);
  std::sort(maximal_.begin(), maximal_.end());
}

std::vector<VertexSet> SimplicialComplex::faces_of_dim(int k) const {
  std::set<VertexSet> out;
  const int size = k + 1;
  for (VertexSet m : maximal_) {
    const auto bits = set_bits(m);
    const int n = static_cast<int>(bits.size());
    if (n < size) continue;
    // enumerate size-subsets of bits
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s = 0;
      for (int i : idx) s |= VertexSet{1} << bits[i];
      out.insert(s);
      int p = size - 1;
      while (p >= 0 && idx[p] == n - size + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int i = p + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (int k = 0; k <= dimension(); ++k)
    f.push_back(static_cast<long long>(faces_of_dim(k).size()));
  return f;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (VertexSet m : maximal_) d = std::max(d, popcount(m) - 1);
  return d;
}

long long SimplicialComplex::total_face_count() const {
  long long total = 0;
  for (long long f : f_vector()) total += f;
  return total;
}

SimpleGraph SimplicialComplex::one_skeleton() const {
  SimpleGraph g(labels_);
  for (VertexSet e : faces_of_dim(1)) {
    const auto b = set_bits(e);
    g.add_edge(labels_[b[0]], labels_[b[1]]);
  }
  return g;
}

SimplicialComplex SimplicialComplex::induced(
    const std::vector<std::string>& verts) const {
  VertexSet keep = mask_of(verts);
  SimplicialComplex out = on_vertices(verts);
  for (VertexSet m : maximal_) {
    const VertexSet r = m & keep;
    if (!r) continue;
    std::vector<std::string> ls = labels_of(r);
    out.insert_face(out.mask_of(ls));
  }
  return out;
}

SimplicialComplex SimplicialComplex::link_of(
    const std::vector<std::string>& simplex) const {
  const VertexSet sig = mask_of(simplex);
  if (!contains(sig)) fail(errc::invalid_argument, "link of a non-face requested");
  std::vector<std::string> verts;
  for (int v = 0; v < vertex_count(); ++v) {
    const VertexSet vb = VertexSet{1} << v;
    if ((vb & sig) == 0 && contains(vb | sig)) verts.push_back(labels_[v]);
  }
  SimplicialComplex out = on_vertices(verts);
  for (VertexSet m : maximal_) {
    if ((sig & ~m) != 0) continue;
    out.insert_face(out.mask_of(labels_of(m & ~sig)));
  }
  return out;
}

// --- free functions -------------------------------------------------------

SimplicialComplex flag_complex(const SimpleGraph& g) {
  SimplicialComplex k = SimplicialComplex::on_vertices(g.vertex_labels());
  // Bron–Kerbosch with pivoting; records maximal cliques.
  const int n = g.vertex_count();
  VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
  std::vector<VertexSet> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v);

  struct Rec {
    const std::vector<VertexSet>& nb;
    SimplicialComplex& k;
    void run(VertexSet r, VertexSet p, VertexSet x) {
      if (!p && !x) {
        if (r) k.insert_face(r);
        return;
      }
      // pivot: vertex of p|x with most neighbors in p
      int pivot = -1, best = -1;
      for (int u : set_bits(p | x)) {
        const int c = popcount(p & nb[u]);
        if (c > best) best = c, pivot = u;
      }
      for (int v : set_bits(p & ~nb[pivot])) {
        const VertexSet vb = VertexSet{1} << v;
        run(r | vb, p & nb[v], x & nb[v]);
        p &= ~vb;
        x |= vb;
      }
    }
  } rec{nb, k};
  if (n > 0) rec.run(0, all, 0);
  return k;
}

bool is_flag(const SimplicialComplex& k) {
  const SimplicialComplex f = flag_complex(k.one_skeleton());
  return same_complex(f, k);
}

bool is_full(const SimplicialComplex& sub, const SimplicialComplex& ambient) {
  VertexSet subset = 0;
  for (const auto& l : sub.vertex_labels()) {
    if (!ambient.has_vertex(l))
      fail(errc::invalid_argument, "subcomplex vertex not in ambient complex: " + l,
           "{\"invariant\":\"vertex-mismatch\",\"vertex\":\"" + l + "\"}");
    subset |= VertexSet{1} << ambient.index_of(l);
  }
  for (VertexSet m : ambient.maximal_faces()) {
    const VertexSet r = m & subset;
    if (!r) continue;
    if (!sub.contains(sub.mask_of(ambient.labels_of(r)))) return false;
  }
  return true;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::string> labels = a.vertex_labels();
  for (const auto& l : b.vertex_labels()) {
    if (a.has_vertex(l))
      fail(errc::invalid_argument, "join label collision: " + l);
    labels.push_back(l);
  }
  SimplicialComplex out = SimplicialComplex::on_vertices(labels);
  const auto& ma = a.maximal_faces();
  const auto& mb = b.maximal_faces();
  if (ma.empty() || mb.empty()) {
    for (VertexSet m : ma) out.insert_face(out.mask_of(a.labels_of(m)));
    for (VertexSet m : mb) out.insert_face(out.mask_of(b.labels_of(m)));
    return out;
  }
  for (VertexSet sa : ma)
    for (VertexSet sb : mb) {
      auto ls = a.labels_of(sa);
      for (auto& l : b.labels_of(sb)) ls.push_back(l);
      out.insert_face(out.mask_of(ls));
    }
  return out;
}

SimplicialComplex complex_union(const SimplicialComplex& a,
                                const SimplicialComplex& b) {
  std::vector<std::string> labels = a.vertex_labels();
  for (const auto& l : b.vertex_labels())
    if (!a.has_vertex(l)) labels.push_back(l);
  SimplicialComplex out = SimplicialComplex::on_vertices(labels);
  for (VertexSet m : a.maximal_faces()) out.insert_face(out.mask_of(a.labels_of(m)));
  for (VertexSet m : b.maximal_faces()) out.insert_face(out.mask_of(b.labels_of(m)));
  return out;
}

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::map<std::string, std::string>& m) {
  auto ren = [&](const std::string& l) {
    auto it = m.find(l);
    return it == m.end() ? l : it->second;
  };
  std::vector<std::string> labels;
  for (const auto& l : k.vertex_labels()) labels.push_back(ren(l));
  {
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size())
      fail(errc::invalid_argument, "relabeling is not injective");
  }
  SimplicialComplex out = SimplicialComplex::on_vertices(labels);
  for (VertexSet f : k.maximal_faces()) {
    std::vector<std::string> ls;
    for (auto& l : k.labels_of(f)) ls.push_back(ren(l));
    out.insert_face(out.mask_of(ls));
  }
  return out;
}

bool same_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto key = [](const SimplicialComplex& k) {
    std::set<std::string> verts(k.vertex_labels().begin(), k.vertex_labels().end());
    std::set<std::vector<std::string>> faces;
    for (VertexSet m : k.maximal_faces()) {
      auto ls = k.labels_of(m);
      std::sort(ls.begin(), ls.end());
      faces.insert(ls);
    }
    return std::make_pair(verts, faces);
  };
  return key(a) == key(b);
}

bool isomorphic_under(const SimplicialComplex& a, const SimplicialComplex& b,
                      const std::map<std::string, std::string>& m) {
  return same_complex(relabel(a, m), b);
}

// --- sphere construction --------------------------------------------------

std::string signed_label(const std::string& base, char sign) {
  return base + sign;
}

SignedVertex split_signed(const std::string& label) {
  if (label.empty() || (label.back() != '+' && label.back() != '-'))
    fail(errc::invalid_argument, "not a signed vertex label: " + label);
  return {label.substr(0, label.size() - 1), label.back()};
}

SimplicialComplex sphere(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  for (const auto& v : k.vertex_labels()) {
    labels.push_back(signed_label(v, '+'));
    labels.push_back(signed_label(v, '-'));
  }
  SimplicialComplex out = SimplicialComplex::on_vertices(labels);
  for (VertexSet m : k.maximal_faces()) {
    const auto bits = set_bits(m);
    const int n = static_cast<int>(bits.size());
    for (VertexSet part = 0; part < (VertexSet{1} << n); ++part) {
      std::vector<std::string> face;
      for (int i = 0; i < n; ++i)
        face.push_back(signed_label(k.label(bits[i]), ((part >> i) & 1) ? '-' : '+'));
      out.insert_face(out.mask_of(face));
    }
  }
  return out;
}

// --- vertex maps ----------------------------------------------------------

std::string VertexMap::apply(const std::string& v) const {
  auto it = images.find(v);
  if (it == images.end()) fail(errc::invalid_argument, "vertex not in map domain: " + v);
  return it->second;
}

VertexSet VertexMap::apply(VertexSet s) const {
  VertexSet out = 0;
  for (int b : set_bits(s))
    out |= VertexSet{1} << codomain->index_of(apply(domain->label(b)));
  return out;
}

bool is_simplicial(const VertexMap& f) {
  for (VertexSet m : f.domain->maximal_faces())
    if (!f.codomain->contains(f.apply(m))) return false;
  return true;
}

SimplicialComplex image_complex(const VertexMap& f) {
  std::set<std::string> verts;
  for (const auto& v : f.domain->vertex_labels()) verts.insert(f.apply(v));
  SimplicialComplex out =
      SimplicialComplex::on_vertices({verts.begin(), verts.end()});
  for (VertexSet m : f.domain->maximal_faces())
    out.insert_face(out.mask_of(f.codomain->labels_of(f.apply(m))));
  return out;
}

VertexMap fold_map(const SimplicialComplex& k, const SimplicialComplex& sphere_k,
                   const std::vector<std::string>& P) {
  std::set<std::string> pset;
  for (const auto& v : P) {
    k.index_of(v);  // unknown-label check
    pset.insert(v);
  }
  VertexMap f;
  f.domain = &sphere_k;
  f.codomain = &sphere_k;
  for (const auto& v : k.vertex_labels()) {
    const char target = pset.count(v) ? '+' : '-';
    f.images[signed_label(v, '+')] = signed_label(v, target);
    f.images[signed_label(v, '-')] = signed_label(v, target);
  }
  return f;
}

}  // namespace praag
