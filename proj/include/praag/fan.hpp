#ifndef PRAAG_FAN_HPP
#define PRAAG_FAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "praag/homology.hpp"  // BigInt
#include "praag/log.hpp"
#include "praag/words.hpp"

namespace praag {

enum class FanDirection { descending, ascending };

/// One relator square of a fan rim, as (edge, orientation). The square's
/// rim letters and kernel letter are recovered from the presentation.
struct RimCell {
  std::uint8_t edge = 0;
  std::int8_t sign = 1;
};

struct FanOptions {
  bool keep_rim = true;    // retain the final (level-0) rim
  bool keep_cells = false; // retain every cell with its level
  long long max_area = 100'000'000;
};

/// Canonical disk diagram between two monotone words of equal length.
/// layer_erim[m-1] is the edge-rim length of the height-m sub-fan; area is
/// their sum. Construction verifies reduced rims (level injectivity) and
/// fails on any interior cancellation.
struct Fan {
  FanDirection direction = FanDirection::descending;
  int height = 0;
  Word u, v;
  long long area = 0;
  std::vector<long long> layer_erim;
  std::vector<RimCell> rim;                       // if kept
  std::vector<std::pair<int, RimCell>> cells;     // (level, cell) if kept

  long long erim_length() const {
    return layer_erim.empty() ? 0 : layer_erim.back();
  }
  long long vrim_length() const { return 2 * erim_length(); }
};

/// Requires girth(link) >= 4, both twin links trees, and u, v of equal
/// length, positive (descending) or negative (ascending).
Fan build_fan(const LogPresentation& p, const Word& u, const Word& v,
              FanDirection dir, FanOptions opt = {});

Word fan_vrim(const LogPresentation& p, const Fan& f);
Word fan_erim(const LogPresentation& p, const Fan& f);

/// Longest height-one fan, i.e. the diameter of the relevant link tree.
long long max_simple_fan_length(const LogPresentation& p, FanDirection dir);

// --- rim-length tables -------------------------------------------------------

/// Descending rim lengths f[i][j](n) for the poly preset, built by explicit
/// fan construction and audited against the recursion
/// f_{i,j}(n) = f_{i,j-1}(n) + f_{0,j}(n-1) + 1 with f_{i,i} = 0 and
/// f_{i,j}(0) = 0; disagreement is a hard failure.
struct RimTablePoly {
  int d = 0, max_n = 0;
  std::vector<std::vector<std::vector<long long>>> f;  // f[i][j][n], i < j

  long long value(int i, int j, long long n) const;
};

RimTablePoly rim_table_poly(int d, int max_n);

/// Sum over k in (i, j] of binomial(n+k-1, n-1), exact.
BigInt closed_form_f(int i, int j, long long n);

/// Ascending rim lengths for the poly preset over the letters s, a0..ad,
/// audited against f_{s,0}(n) = n, f_{0,1}(n) = n, f_{i,k}(1) = 2,
/// f_{s,i}(n) = n + f_{0,i}(n) and the chain recursion
/// f_{0,i+1}(n) = 1 + f_{i,i+1}(n-1) (hard failures). The two-sided
/// recursion f_{i,k}(n) = 2 + f_{i-1,i}(n-1) + f_{k-1,k}(n-1) is recorded
/// as a discrepancy list with the constructed table as arbiter.
struct RimTableAscending {
  int d = 0, max_n = 0;
  // letters indexed 0 = s, 1 + i = a_i
  std::vector<std::vector<std::vector<long long>>> f;  // f[p][q][n], p < q
  std::vector<std::string> recursion2_discrepancies;

  long long value_letters(int p, int q, long long n) const;  // letter indices
  long long value_a(int i, int k, long long n) const;        // a_i vs a_k
  long long value_s(int i, long long n) const;               // s vs a_i
};

RimTableAscending rim_table_ascending(int d, int max_n);

// --- exponential growth measurement -----------------------------------------

struct ExpGrowthReport {
  std::vector<long long> erim;   // erim[n-1] = |erim(Fan(src^n, dst^n))|
  std::vector<long long> areas;  // running areas of the height-n sub-fans
  double lambda = 0.0;           // fitted base, top-half log-linear fit
  double r2 = 0.0;
  long long simple_fan_bound = 0;  // C
  bool erim_within_Cn = false;     // erim(n) <= C^n for all measured n
  bool area_within_Cn1 = false;    // area(n) <= C^{n+1} for all measured n
};

/// Preconditions: twin tree links, girth >= 4, the quadruple
/// {src+-, dst+-} independent and the three distance-2 conditions (the
/// attainable core of validate_exp_log; girth five is impossible alongside
/// twin trees and is checked separately by validate_exp_log).
ExpGrowthReport measure_exp_growth(const LogPresentation& p,
                                   const std::string& src,
                                   const std::string& dst, int max_n);

// --- pushing ------------------------------------------------------------------

/// Pushing context: the perturbing presentation plus the flat (commuting)
/// generator pairs of the ambient complex.
struct PushContext {
  const LogPresentation* log = nullptr;
  std::vector<std::pair<std::string, std::string>> commuting;

  bool is_log_pair(const std::string& a, const std::string& b) const;
  bool is_flat_pair(const std::string& a, const std::string& b) const;
};

/// Level-0 edge path of a pushed link 1-cell at height H. LOG pairs push to
/// the fan edge-rim (descending for H > 0, ascending for H < 0); flat pairs
/// to a geodesic of |H| diagonal letters "a/b" (meaning a·b^-1).
Word push_edge(const PushContext& ctx, const std::string& a,
               const std::string& b, long long H);

/// Exact area of the pushed image of a link 2-cell over the pair (a, b) at
/// height H: the fan area for perturbing pairs, |H|^2 for flat ones.
long long pushed_cell_area(const PushContext& ctx, const std::string& a,
                           const std::string& b, long long H);

}  // namespace praag

#endif
