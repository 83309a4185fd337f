#ifndef PRAAG_PRESENTATION_HPP
#define PRAAG_PRESENTATION_HPP

#include <string>
#include <vector>

#include "praag/words.hpp"

namespace praag {

/// Finite group presentation. Relator letters are stored as ±(index+1)
/// into `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;

  Word relator_word(std::size_t i) const;
};

/// Text format: first line "generators: g1 g2 ...", then one relator per
/// line as a word over the generators.
std::string render_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

enum class TietzeOutcome { trivial, unknown };

/// Runs at most `budget` elimination passes (relator-driven generator
/// eliminations plus free/cyclic reduction). Returns trivial only if the
/// presentation reduces to <| |>.
TietzeOutcome tietze_trivialize(Presentation p, long long budget);

}  // namespace praag

#endif
