#include "praag/fan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>

#include "praag/error.hpp"
#include "praag/growth.hpp"

namespace praag {

namespace {

struct StepInfo {
  std::uint8_t edge;
  std::int8_t sign;
};

/// Precomputed tree paths and per-cell rim letters for one direction.
struct FanEngine {
  const LogPresentation& log;
  FanDirection dir;
  int k;
  // rim letters of a cell by (edge, sign<0): enter/exit vertex index
  std::vector<std::array<int, 2>> enter_of, exit_of;
  std::vector<std::vector<std::vector<StepInfo>>> path;  // [p][q]

  FanEngine(const LogPresentation& p, FanDirection d)
      : log(p), dir(d), k(p.vertex_count()) {
    const LinkGraph l = vertex_link(p);
    {
      const auto g = l.girth();
      if (g.has_value() && *g < 4)
        fail(errc::invalid_argument, "fan undefined: link girth below 4");
      const auto [dt, at] = asc_desc_are_trees(l);
      if (!dt || !at)
        fail(errc::invalid_argument, "fan undefined: twin links are not trees");
    }
    enter_of.assign(p.edge_count(), {0, 0});
    exit_of.assign(p.edge_count(), {0, 0});
    std::map<std::pair<int, int>, StepInfo> step;  // ordered tree step -> cell
    for (int e = 0; e < p.edge_count(); ++e) {
      const LogEdge& ed = p.edges()[e];
      if (dir == FanDirection::descending) {
        // walking lambda+ -> head+ reads (tail)^-1 (lambda); reversed flips
        step[{ed.label, ed.head}] = {static_cast<std::uint8_t>(e), 1};
        step[{ed.head, ed.label}] = {static_cast<std::uint8_t>(e), -1};
        enter_of[e] = {ed.tail, ed.label};
        exit_of[e] = {ed.label, ed.tail};
      } else {
        // walking lambda- -> tail- reads (head)(lambda)^-1; reversed flips
        step[{ed.label, ed.tail}] = {static_cast<std::uint8_t>(e), -1};
        step[{ed.tail, ed.label}] = {static_cast<std::uint8_t>(e), 1};
        enter_of[e] = {ed.label, ed.head};
        exit_of[e] = {ed.head, ed.label};
      }
    }
    // BFS tree paths between all ordered pairs
    std::vector<std::vector<int>> adj(k);
    const auto tree_edges = dir == FanDirection::descending ? l.descending_edges()
                                                            : l.ascending_edges();
    for (auto [u, v] : tree_edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    path.assign(k, std::vector<std::vector<StepInfo>>(k));
    for (int s = 0; s < k; ++s) {
      std::vector<int> prev(k, -1);
      std::deque<int> q{s};
      std::vector<bool> seen(k, false);
      seen[s] = true;
      while (!q.empty()) {
        const int x = q.front();
        q.pop_front();
        for (int y : adj[x])
          if (!seen[y]) {
            seen[y] = true;
            prev[y] = x;
            q.push_back(y);
          }
      }
      for (int t = 0; t < k; ++t) {
        if (t == s || !seen[t]) continue;
        std::vector<int> rev;
        for (int x = t; x != s; x = prev[x]) rev.push_back(x);
        std::vector<StepInfo>& out = path[s][t];
        int at = s;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
          out.push_back(step.at({at, *it}));
          at = *it;
        }
      }
    }
  }

  int enter(RimCell c) const { return enter_of[c.edge][c.sign < 0]; }
  int exit(RimCell c) const { return exit_of[c.edge][c.sign < 0]; }
};

std::vector<int> word_base_indices(const LogPresentation& p, const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Letter& l : w) out.push_back(p.index_of(l.gen));
  return out;
}

Word power_word(const std::string& gen, long long n, int exp) {
  Word w;
  for (long long i = 0; i < n; ++i) w.push_back({gen, exp});
  return w;
}

}  // namespace

Fan build_fan(const LogPresentation& p, const Word& u, const Word& v,
              FanDirection dir, FanOptions opt) {
  if (u.size() != v.size())
    fail(errc::invalid_argument, "fan anchors must have equal length");
  if (dir == FanDirection::descending && !(is_positive(u) && is_positive(v)))
    fail(errc::invalid_argument, "descending fans take positive words");
  if (dir == FanDirection::ascending && !(is_negative(u) && is_negative(v)))
    fail(errc::invalid_argument, "ascending fans take negative words");

  const FanEngine eng(p, dir);
  const std::vector<int> ub = word_base_indices(p, u);
  const std::vector<int> vb = word_base_indices(p, v);
  const int n = static_cast<int>(u.size());

  Fan f;
  f.direction = dir;
  f.height = n;
  f.u = u;
  f.v = v;

  std::vector<RimCell> cur, next;
  for (int m = 1; m <= n; ++m) {
    const int a = ub[n - m], b = vb[n - m];
    next.clear();
    next.reserve(cur.size() * 2 + 8);
    auto append_valley = [&](int pfrom, int qto, bool boundary) {
      if (pfrom == qto) {
        if (boundary) return;
        fail(errc::internal, "interior valley with equal letters (link girth bug)");
      }
      for (const StepInfo s : eng.path[pfrom][qto]) {
        if (!next.empty() && next.back().edge == s.edge && next.back().sign == -s.sign)
          fail(errc::internal, "edge-rim cancellation (reduced-rim invariant broke)");
        next.push_back({s.edge, s.sign});
      }
    };
    if (cur.empty()) {
      append_valley(a, b, true);
    } else {
      append_valley(a, eng.enter(cur.front()), true);
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        append_valley(eng.exit(cur[i]), eng.enter(cur[i + 1]), false);
      append_valley(eng.exit(cur.back()), b, true);
    }
    const long long added = static_cast<long long>(next.size());
    f.layer_erim.push_back(added);
    f.area += added;
    if (f.area > opt.max_area)
      fail(errc::invalid_argument, "fan exceeds the configured area budget");
    if (opt.keep_cells)
      for (const RimCell c : next) f.cells.emplace_back(m, c);
    std::swap(cur, next);
  }
  if (opt.keep_rim) f.rim = std::move(cur);
  return f;
}

Word fan_vrim(const LogPresentation& p, const Fan& f) {
  const FanEngine eng(p, f.direction);
  Word w;
  w.reserve(2 * f.rim.size());
  for (const RimCell c : f.rim) {
    const std::string& en = p.vertex(eng.enter(c));
    const std::string& ex = p.vertex(eng.exit(c));
    if (f.direction == FanDirection::descending) {
      w.push_back({en, -1});
      w.push_back({ex, 1});
    } else {
      w.push_back({en, 1});
      w.push_back({ex, -1});
    }
  }
  return w;
}

Word fan_erim(const LogPresentation& p, const Fan& f) {
  Word w;
  w.reserve(f.rim.size());
  for (const RimCell c : f.rim) w.push_back({p.kernel_letter(c.edge), c.sign});
  return w;
}

long long max_simple_fan_length(const LogPresentation& p, FanDirection dir) {
  const LinkGraph l = vertex_link(p);
  const auto tree_edges = dir == FanDirection::descending ? l.descending_edges()
                                                          : l.ascending_edges();
  const int k = p.vertex_count();
  std::vector<std::vector<int>> adj(k);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  long long best = 0;
  for (int s = 0; s < k; ++s) {
    std::vector<int> dist(k, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const int x = q.front();
      q.pop_front();
      best = std::max(best, static_cast<long long>(dist[x]));
      for (int y : adj[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
  }
  return best;
}

// --- tables -------------------------------------------------------------------

long long RimTablePoly::value(int i, int j, long long n) const {
  if (i == j) return 0;
  if (n == 0) return 0;
  return f[i][j][static_cast<std::size_t>(n)];
}

RimTablePoly rim_table_poly(int d, int max_n) {
  if (d < 1 || max_n < 0) fail(errc::invalid_argument, "need d >= 1 and max_n >= 0");
  const LogPresentation p = preset_poly(d);
  RimTablePoly t;
  t.d = d;
  t.max_n = max_n;
  t.f.assign(d + 1, std::vector<std::vector<long long>>(d + 1));
  FanOptions opt;
  opt.keep_rim = false;
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) {
      const std::string ai = "a" + std::to_string(i), aj = "a" + std::to_string(j);
      const Fan fan = build_fan(p, power_word(ai, max_n, 1), power_word(aj, max_n, 1),
                                FanDirection::descending, opt);
      std::vector<long long> col{0};  // n = 0
      col.insert(col.end(), fan.layer_erim.begin(), fan.layer_erim.end());
      t.f[i][j] = std::move(col);
    }
  // recursion audit: f_{i,j}(n) = f_{i,j-1}(n) + f_{0,j}(n-1) + 1
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (long long n = 1; n <= max_n; ++n) {
        const long long lhs = t.value(i, j, n);
        const long long rhs = t.value(i, j - 1, n) + t.value(0, j, n - 1) + 1;
        if (lhs != rhs)
          fail(errc::validation,
               "rim recursion mismatch at (i,j,n)=(" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(n) + ")");
      }
  return t;
}

BigInt closed_form_f(int i, int j, long long n) {
  if (!(0 <= i && i < j)) fail(errc::invalid_argument, "need 0 <= i < j");
  if (n < 0) fail(errc::invalid_argument, "need n >= 0");
  auto binom = [](BigInt top, long long k) {
    if (k < 0) return BigInt(0);
    BigInt r = 1;
    for (long long x = 1; x <= k; ++x) r = r * (top - (k - x)) / x;
    return r;
  };
  BigInt total = 0;
  for (int k = i + 1; k <= j; ++k) total += binom(BigInt(n) + k - 1, k);
  return total;
}

long long RimTableAscending::value_letters(int p, int q, long long n) const {
  if (p == q) return 0;
  if (n == 0) return 0;
  if (p > q) std::swap(p, q);
  return f[p][q][static_cast<std::size_t>(n)];
}

long long RimTableAscending::value_a(int i, int k, long long n) const {
  return value_letters(1 + i, 1 + k, n);
}

long long RimTableAscending::value_s(int i, long long n) const {
  return value_letters(0, 1 + i, n);
}

RimTableAscending rim_table_ascending(int d, int max_n) {
  if (d < 1 || max_n < 0) fail(errc::invalid_argument, "need d >= 1 and max_n >= 0");
  const LogPresentation p = preset_poly(d);
  std::vector<std::string> letters{"s"};
  for (int i = 0; i <= d; ++i) letters.push_back("a" + std::to_string(i));
  const int L = static_cast<int>(letters.size());

  RimTableAscending t;
  t.d = d;
  t.max_n = max_n;
  t.f.assign(L, std::vector<std::vector<long long>>(L));
  FanOptions opt;
  opt.keep_rim = false;
  for (int a = 0; a < L; ++a)
    for (int b = a + 1; b < L; ++b) {
      const Fan fan = build_fan(p, power_word(letters[a], max_n, -1),
                                power_word(letters[b], max_n, -1),
                                FanDirection::ascending, opt);
      std::vector<long long> col{0};
      col.insert(col.end(), fan.layer_erim.begin(), fan.layer_erim.end());
      t.f[a][b] = std::move(col);
    }

  auto hard = [&](bool ok, const std::string& what) {
    if (!ok) fail(errc::validation, "ascending rim audit failed: " + what);
  };
  for (long long n = 0; n <= max_n; ++n) {
    hard(t.value_s(0, n) == n, "f_s0(n) = n");
    hard(t.value_a(0, 1, n) == n, "f_01(n) = n");
    for (int i = 0; i <= d; ++i)
      hard(t.value_s(i, n) == n + t.value_a(0, i, n), "f_si(n) = n + f_0i(n)");
  }
  for (int i = 1; i < d; ++i)
    for (long long n = 1; n <= max_n; ++n)
      hard(t.value_a(0, i + 1, n) == 1 + t.value_a(i, i + 1, n - 1),
           "f_{0,i+1}(n) = 1 + f_{i,i+1}(n-1)");
  for (int i = 1; i <= d; ++i)
    for (int k = i + 1; k <= d; ++k) {
      hard(max_n < 1 || t.value_a(i, k, 1) == 2, "f_ik(1) = 2");
      for (long long n = 1; n <= max_n; ++n) {
        const long long lhs = t.value_a(i, k, n);
        const long long rhs =
            2 + t.value_a(i - 1, i, n - 1) + t.value_a(k - 1, k, n - 1);
        if (lhs != rhs)
          t.recursion2_discrepancies.push_back(
              "(i,k,n)=(" + std::to_string(i) + "," + std::to_string(k) + "," +
              std::to_string(n) + "): constructed " + std::to_string(lhs) +
              " vs recursion " + std::to_string(rhs));
      }
    }
  return t;
}

// --- exponential growth --------------------------------------------------------

namespace {

std::vector<std::string> exp_core_failures(const LogPresentation& p,
                                           const std::string& src,
                                           const std::string& dst) {
  std::vector<std::string> out;
  const LinkGraph l = vertex_link(p);
  const auto g = l.girth();
  if (g.has_value() && *g < 4) out.push_back("girth below 4");
  const auto [dt, at] = asc_desc_are_trees(l);
  if (!dt) out.push_back("descending link is not a tree");
  if (!at) out.push_back("ascending link is not a tree");
  const int si = p.index_of(src), di = p.index_of(dst);
  const int quad[4] = {LinkGraph::id(si, '+'), LinkGraph::id(si, '-'),
                       LinkGraph::id(di, '+'), LinkGraph::id(di, '-')};
  bool indep = true;
  for (int i = 0; i < 4 && indep; ++i)
    for (int j = i + 1; j < 4 && indep; ++j)
      if (l.has_edge_between(quad[i], quad[j])) indep = false;
  if (!indep) out.push_back("quadruple not independent");
  if (l.distance(quad[0], quad[1]) != 2) out.push_back("dist(src+,src-) != 2");
  if (l.distance(quad[2], quad[3]) != 2) out.push_back("dist(dst+,dst-) != 2");
  if (l.distance(quad[0], quad[2]) != 2) out.push_back("dist(src+,dst+) != 2");
  return out;
}

}  // namespace

ExpGrowthReport measure_exp_growth(const LogPresentation& p, const std::string& src,
                                   const std::string& dst, int max_n) {
  if (max_n < 4) fail(errc::invalid_argument, "max_n too small for a growth fit");
  {
    const auto failures = exp_core_failures(p, src, dst);
    if (!failures.empty())
      fail(errc::invalid_argument,
           "presentation unsuitable for growth measurement: " + failures.front());
  }
  FanOptions opt;
  opt.keep_rim = false;
  const Fan fan = build_fan(p, power_word(src, max_n, 1), power_word(dst, max_n, 1),
                            FanDirection::descending, opt);
  ExpGrowthReport rep;
  rep.erim = fan.layer_erim;
  long long running = 0;
  for (long long k : fan.layer_erim) {
    running += k;
    rep.areas.push_back(running);
  }
  for (std::size_t i = 1; i < rep.erim.size(); ++i)
    if (rep.erim[i] < rep.erim[i - 1])
      fail(errc::internal, "non-monotone rim growth (construction bug)");

  rep.simple_fan_bound = max_simple_fan_length(p, FanDirection::descending);
  rep.erim_within_Cn = true;
  rep.area_within_Cn1 = true;
  BigInt cpow = 1;
  for (int n = 1; n <= max_n; ++n) {
    cpow *= rep.simple_fan_bound;  // C^n
    if (BigInt(rep.erim[n - 1]) > cpow) rep.erim_within_Cn = false;
    if (BigInt(rep.areas[n - 1]) > cpow * rep.simple_fan_bound)
      rep.area_within_Cn1 = false;
  }

  std::vector<double> xs, ys;
  for (int n = max_n / 2 + 1; n <= max_n; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::log(static_cast<double>(rep.erim[n - 1])));
  }
  const LinearFit fit = least_squares(xs, ys);
  rep.lambda = std::exp(fit.slope);
  rep.r2 = fit.r2;
  return rep;
}

// --- pushing --------------------------------------------------------------------

bool PushContext::is_log_pair(const std::string& a, const std::string& b) const {
  return log != nullptr && log->has_vertex(a) && log->has_vertex(b);
}

bool PushContext::is_flat_pair(const std::string& a, const std::string& b) const {
  for (const auto& [x, y] : commuting)
    if ((x == a && y == b) || (x == b && y == a)) return true;
  return false;
}

Word push_edge(const PushContext& ctx, const std::string& a, const std::string& b,
               long long H) {
  if (H == 0) return {};
  if (ctx.is_log_pair(a, b)) {
    const FanDirection dir =
        H > 0 ? FanDirection::descending : FanDirection::ascending;
    const int exp = H > 0 ? 1 : -1;
    const long long n = H > 0 ? H : -H;
    const Fan f =
        build_fan(*ctx.log, power_word(a, n, exp), power_word(b, n, exp), dir);
    return fan_erim(*ctx.log, f);
  }
  if (ctx.is_flat_pair(a, b)) {
    Word w;
    const long long n = H > 0 ? H : -H;
    for (long long i = 0; i < n; ++i) w.push_back({a + "/" + b, H > 0 ? 1 : -1});
    return w;
  }
  fail(errc::invalid_argument,
       "pair is not adjacent in the relevant link: " + a + "," + b);
}

long long pushed_cell_area(const PushContext& ctx, const std::string& a,
                           const std::string& b, long long H) {
  if (H == 0) return 0;
  const long long n = H > 0 ? H : -H;
  if (ctx.is_log_pair(a, b)) {
    const FanDirection dir =
        H > 0 ? FanDirection::descending : FanDirection::ascending;
    const int exp = H > 0 ? 1 : -1;
    FanOptions opt;
    opt.keep_rim = false;
    const Fan f =
        build_fan(*ctx.log, power_word(a, n, exp), power_word(b, n, exp), dir, opt);
    return f.area;
  }
  if (ctx.is_flat_pair(a, b)) return n * n;
  fail(errc::invalid_argument,
       "pair is not adjacent in the relevant link: " + a + "," + b);
}

}  // namespace praag
