#include "praag/words.hpp"

#include <cstdlib>
#include <sstream>

#include "praag/error.hpp"

namespace praag {

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" && out.empty() && !(in >> tok)) return out;  // literal identity
    std::string gen = tok;
    long long power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      gen = tok.substr(0, caret);
      const std::string exp = tok.substr(caret + 1);
      char* end = nullptr;
      power = std::strtoll(exp.c_str(), &end, 10);
      if (gen.empty() || end == exp.c_str() || *end != '\0')
        fail(errc::invalid_argument, "malformed word token: " + tok);
    }
    if (gen.empty()) fail(errc::invalid_argument, "malformed word token: " + tok);
    const int sign = power < 0 ? -1 : 1;
    for (long long i = 0; i < (power < 0 ? -power : power); ++i)
      out.push_back({gen, sign});
  }
  return out;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long long run = static_cast<long long>(j - i) * w[i].exp;
    if (!first) out << ' ';
    first = false;
    out << w[i].gen;
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i].gen == w[i - 1].gen && w[i].exp == -w[i - 1].exp) return false;
  return true;
}

bool is_positive(const Word& w) {
  for (const auto& l : w)
    if (l.exp != 1) return false;
  return true;
}

bool is_negative(const Word& w) {
  for (const auto& l : w)
    if (l.exp != -1) return false;
  return true;
}

long long word_height(const Word& w) {
  long long h = 0;
  for (const auto& l : w) h += l.exp;
  return h;
}

}  // namespace praag
