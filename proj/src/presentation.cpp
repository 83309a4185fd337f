#include "praag/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "praag/error.hpp"

namespace praag {

Word Presentation::relator_word(std::size_t i) const {
  Word w;
  for (int l : relators[i])
    w.push_back({generators[std::abs(l) - 1], l > 0 ? 1 : -1});
  return w;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "generators:";
  for (const auto& g : p.generators) out << ' ' << g;
  out << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out << render_word(p.relator_word(i)) << '\n';
  return out.str();
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  if (!std::getline(in, line) || line.rfind("generators:", 0) != 0)
    fail(errc::io, "presentation text must start with a generators: line");
  {
    std::istringstream gl(line.substr(std::string("generators:").size()));
    std::string g;
    while (gl >> g) p.generators.push_back(g);
  }
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(p.generators.size()); ++i)
    idx[p.generators[i]] = i;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<int> rel;
    for (const Letter& l : parse_word(line)) {
      auto it = idx.find(l.gen);
      if (it == idx.end()) fail(errc::io, "relator uses unknown generator: " + l.gen);
      rel.push_back(l.exp * (it->second + 1));
    }
    p.relators.push_back(std::move(rel));
  }
  return p;
}

namespace {

std::vector<int> reduce_free(std::vector<int> w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<int> reduce_cyclic(std::vector<int> w) {
  w = reduce_free(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = reduce_free(std::move(w));
  }
  return w;
}

std::vector<int> invert(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

// Replaces every occurrence of generator g (positive index) by `by`.
std::vector<int> substitute(const std::vector<int>& w, int g,
                            const std::vector<int>& by) {
  std::vector<int> out;
  const std::vector<int> by_inv = invert(by);
  for (int l : w) {
    if (l == g)
      out.insert(out.end(), by.begin(), by.end());
    else if (l == -g)
      out.insert(out.end(), by_inv.begin(), by_inv.end());
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

TietzeOutcome tietze_trivialize(Presentation p, long long budget) {
  std::vector<std::vector<int>> rels = p.relators;
  std::vector<bool> alive(p.generators.size(), true);
  long long live = static_cast<long long>(p.generators.size());

  for (long long pass = 0; pass < budget; ++pass) {
    for (auto& r : rels) r = reduce_cyclic(std::move(r));
    rels.erase(std::remove_if(rels.begin(), rels.end(),
                              [](const std::vector<int>& r) { return r.empty(); }),
               rels.end());
    if (live == 0) return TietzeOutcome::trivial;

    // Pick the shortest relator in which some generator appears exactly once.
    int best_rel = -1, best_gen = 0;
    for (int i = 0; i < static_cast<int>(rels.size()); ++i) {
      const auto& r = rels[i];
      if (best_rel >= 0 && r.size() >= rels[best_rel].size()) continue;
      for (int l : r) {
        int count = 0;
        for (int m : r)
          if (std::abs(m) == std::abs(l)) ++count;
        if (count == 1) {
          best_rel = i;
          best_gen = std::abs(l);
          break;
        }
      }
    }
    if (best_rel < 0) return TietzeOutcome::unknown;  // no applicable move

    // Solve r = u g^e v = 1 for g and substitute everywhere else.
    std::vector<int> r = rels[best_rel];
    int pos = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
      if (std::abs(r[i]) == best_gen) pos = i;
    // cyclically rotate so g^e is first: r = g^e v u, so g^e = (v u)^-1
    std::rotate(r.begin(), r.begin() + pos, r.end());
    std::vector<int> rest(r.begin() + 1, r.end());
    std::vector<int> value = invert(rest);          // g^e == value
    if (r[0] < 0) value = invert(value);            // g == value
    rels.erase(rels.begin() + best_rel);
    for (auto& w : rels) w = substitute(w, best_gen, value);
    alive[best_gen - 1] = false;
    --live;
  }
  return TietzeOutcome::unknown;
}

}  // namespace praag
