#ifndef PRAAG_WORDS_HPP
#define PRAAG_WORDS_HPP

#include <string>
#include <vector>

namespace praag {

/// One letter of a group word: a named generator with exponent +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1

  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

using Word = std::vector<Letter>;

/// Parses "a b^-1 c^3" into single-exponent letters (powers are expanded).
Word parse_word(const std::string& text);

/// Renders with run-length powers, e.g. "a^3 b^-2"; empty word renders "1".
std::string render_word(const Word& w);

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

bool is_reduced(const Word& w);
bool is_positive(const Word& w);  // all exponents +1
bool is_negative(const Word& w);  // all exponents -1

/// Exponent sum under the character sending every generator to 1.
long long word_height(const Word& w);

}  // namespace praag

#endif
