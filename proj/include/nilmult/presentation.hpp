#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilmult/errors.hpp"

namespace nilmult {

// One letter of a free-group word: generator index and a sign in {+1, -1}.
struct Letter {
  int gen;
  int sign;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word over the generators of a presentation. Relators are
// words that equal the identity.
struct Word {
  std::vector<Letter> letters;
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

Word free_reduce(std::vector<Letter> letters);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
// u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
Word power(const Word& w, long e);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // Set by catalog constructions, never by the parser.
  std::optional<long> prime_hint;
};

// Text format: '#' starts a comment, the first significant line is
// "gens <name>+", every following line is "rel <word>".
//   word := atom+
//   atom := name | name^int | (word)[^int] | [word, word][^int]
// Errors carry 1-based line and column positions.
Presentation parse_presentation(const std::string& text);

}  // namespace nilmult
