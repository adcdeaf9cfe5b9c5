#include "nilmult/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace nilmult {

Word free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word{std::move(out)};
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return Word{std::move(out)};
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters;
  all.insert(all.end(), v.letters.begin(), v.letters.end());
  return free_reduce(std::move(all));
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(invert(u), invert(v)), concat(u, v));
}

Word power(const Word& w, long e) {
  Word base = e < 0 ? invert(w) : w;
  long n = e < 0 ? -e : e;
  Word acc;
  for (long i = 0; i < n; ++i) acc = concat(acc, base);
  return acc;
}

namespace {

// Letters are expanded relator-side, so huge exponents are a resource
// problem, not a correctness one. Refuse early.
constexpr long kMaxExponent = 1000000;

struct Tok {
  enum Kind { Name, Number, Caret, LParen, RParen, LBrack, RBrack, Comma, End };
  Kind kind;
  std::string text;
  long value = 0;
  int col = 0;
};

class LineParser {
 public:
  LineParser(const std::string& line, int lineno,
             const std::map<std::string, int>& gens)
      : line_(line), lineno_(lineno), gens_(gens) {
    tokenize();
  }

  Word parse_word_line() {
    Word w = parse_word();
    expect_end();
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) const {
    throw ParseError(msg, lineno_, col);
  }

  void tokenize() {
    size_t i = 0;
    while (i < line_.size()) {
      char c = line_[i];
      int col = static_cast<int>(i) + 1;
      if (c == ' ' || c == '\t') {
        ++i;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        size_t j = i + 1;
        while (j < line_.size() &&
               std::isalnum(static_cast<unsigned char>(line_[j])))
          ++j;
        toks_.push_back({Tok::Name, line_.substr(i, j - i), 0, col});
        i = j;
        continue;
      }
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i + (c == '-' ? 1 : 0);
        size_t digits = j;
        while (j < line_.size() &&
               std::isdigit(static_cast<unsigned char>(line_[j])))
          ++j;
        if (j == digits) fail("expected digits after '-'", col);
        std::string text = line_.substr(i, j - i);
        long v = 0;
        try {
          v = std::stol(text);
        } catch (const std::out_of_range&) {
          fail("exponent out of range", col);
        }
        toks_.push_back({Tok::Number, text, v, col});
        i = j;
        continue;
      }
      Tok::Kind k;
      switch (c) {
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        case '[': k = Tok::LBrack; break;
        case ']': k = Tok::RBrack; break;
        case ',': k = Tok::Comma; break;
        default: fail(std::string("unexpected character '") + c + "'", col);
      }
      toks_.push_back({k, std::string(1, c), 0, col});
      ++i;
    }
    toks_.push_back({Tok::End, "", 0, static_cast<int>(line_.size()) + 1});
  }

  const Tok& peek() const { return toks_[pos_]; }
  const Tok& take() { return toks_[pos_++]; }

  bool at_word_boundary() const {
    Tok::Kind k = peek().kind;
    return k == Tok::End || k == Tok::RParen || k == Tok::RBrack ||
           k == Tok::Comma;
  }

  Word parse_word() {
    if (at_word_boundary()) fail("empty word", peek().col);
    Word acc;
    while (!at_word_boundary()) acc = concat(acc, parse_atom());
    return acc;
  }

  Word parse_atom() {
    const Tok& t = take();
    Word base;
    switch (t.kind) {
      case Tok::Name: {
        auto it = gens_.find(t.text);
        if (it == gens_.end())
          fail("unknown generator '" + t.text + "'", t.col);
        base.letters.push_back({it->second, +1});
        break;
      }
      case Tok::LParen: {
        base = parse_word();
        if (peek().kind != Tok::RParen) fail("expected ')'", peek().col);
        take();
        break;
      }
      case Tok::LBrack: {
        Word u = parse_word();
        if (peek().kind != Tok::Comma) fail("expected ','", peek().col);
        take();
        Word v = parse_word();
        if (peek().kind != Tok::RBrack) fail("expected ']'", peek().col);
        take();
        base = commutator(u, v);
        break;
      }
      default:
        fail("unexpected token '" + t.text + "'", t.col);
    }
    if (peek().kind == Tok::Caret) {
      take();
      const Tok& e = take();
      if (e.kind != Tok::Number) fail("expected exponent", e.col);
      if (e.value == 0) fail("zero exponent", e.col);
      if (e.value > kMaxExponent || e.value < -kMaxExponent)
        fail("exponent out of range", e.col);
      base = power(base, e.value);
    }
    return base;
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      fail("unexpected token '" + peek().text + "'", peek().col);
  }

  const std::string& line_;
  int lineno_;
  const std::map<std::string, int>& gens_;
  std::vector<Tok> toks_;
  size_t pos_ = 0;
};

bool is_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c);
  });
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::map<std::string, int> index;
  bool have_gens = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    int kwcol = static_cast<int>(line.find(keyword)) + 1;

    if (keyword == "gens") {
      if (have_gens) throw ParseError("duplicate gens line", lineno, kwcol);
      std::string name;
      while (ls >> name) {
        if (!is_name(name))
          throw ParseError("invalid generator name '" + name + "'", lineno,
                           static_cast<int>(line.find(name)) + 1);
        if (index.count(name))
          throw ParseError("duplicate generator '" + name + "'", lineno,
                           static_cast<int>(line.rfind(name)) + 1);
        index[name] = static_cast<int>(p.generators.size());
        p.generators.push_back(name);
      }
      if (p.generators.empty())
        throw ParseError("gens line lists no generators", lineno, kwcol);
      have_gens = true;
      continue;
    }
    if (keyword == "rel") {
      if (!have_gens)
        throw ParseError("rel before gens line", lineno, kwcol);
      std::string rest = line.substr(line.find("rel") + 3);
      // Column offsets inside the word are relative to the full line.
      std::string padded(line.find("rel") + 3, ' ');
      padded += rest;
      LineParser lp(padded, lineno, index);
      p.relators.push_back(lp.parse_word_line());
      continue;
    }
    throw ParseError("expected 'gens' or 'rel', found '" + keyword + "'",
                     lineno, kwcol);
  }
  if (!have_gens) throw ParseError("missing gens line", lineno + 1, 1);
  return p;
}

}  // namespace nilmult
