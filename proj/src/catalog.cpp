#include "nilmult/catalog.hpp"

#include <algorithm>
#include <map>

#include "nilmult/errors.hpp"
#include "nilmult/formulas.hpp"
#include "nilmult/magnus.hpp"

namespace nilmult {

namespace {

bool small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string power_str(long p, long e) {
  Int v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return v.get_str();
}

// assembles presentation text so catalog relators go through the one parser
struct PresBuilder {
  std::vector<std::string> gens;
  std::vector<std::string> rels;

  Presentation finish(long p) const {
    std::string text = "gens";
    for (const std::string& g : gens) text += " " + g;
    text += "\n";
    for (const std::string& r : rels) text += "rel " + r + "\n";
    Presentation pres = parse_presentation(text);
    pres.prime_hint = p;
    return pres;
  }
};

AbelianGroup elementary(long p, long rank) {
  return AbelianGroup{std::vector<Int>(static_cast<size_t>(rank), Int(p)), 0};
}

long parse_long(const std::string& v, const std::string& key) {
  try {
    size_t used = 0;
    long out = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument("");
    return out;
  } catch (const std::exception&) {
    throw ParseError("value of '" + key + "' is not an integer", 1, 1);
  }
}

std::map<std::string, std::string> split_params(const std::string& body) {
  std::map<std::string, std::string> out;
  size_t i = 0;
  while (i < body.size()) {
    size_t eq = body.find('=', i);
    if (eq == std::string::npos)
      throw ParseError("expected key=value in family spec", 1,
                       static_cast<int>(i) + 1);
    std::string key = body.substr(i, eq - i);
    int depth = 0;
    size_t j = eq + 1;
    for (; j < body.size(); ++j) {
      if (body[j] == '(') ++depth;
      if (body[j] == ')') --depth;
      if (body[j] == ',' && depth == 0) break;
    }
    if (depth != 0)
      throw ParseError("unbalanced parentheses in family spec", 1,
                       static_cast<int>(eq) + 2);
    std::string val = body.substr(eq + 1, j - eq - 1);
    if (key.empty() || val.empty())
      throw ParseError("empty key or value in family spec", 1,
                       static_cast<int>(i) + 1);
    if (!out.emplace(key, val).second)
      throw ParseError("duplicate key '" + key + "' in family spec", 1,
                       static_cast<int>(i) + 1);
    i = j + (j < body.size() ? 1 : 0);
  }
  return out;
}

void expect_keys(const std::map<std::string, std::string>& params,
                 const std::vector<std::string>& keys) {
  for (const auto& [k, v] : params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      throw ParseError("unknown key '" + k + "' for this family", 1, 1);
  for (const std::string& k : keys)
    if (!params.count(k))
      throw ParseError("missing key '" + k + "'", 1, 1);
}

long parse_prime(const std::map<std::string, std::string>& params) {
  long p = parse_long(params.at("p"), "p");
  if (!small_prime(p)) throw ParseError("p must be a prime", 1, 1);
  return p;
}

// declared data shared by every extraspecial kind of one rank
void fill_extraspecial_common(CatalogEntry& e, long p, long m) {
  e.p = p;
  e.n = static_cast<int>(2 * m + 1);
  e.nil_class = 2;
  e.abelianization = elementary(p, 2 * m);
  e.central_order = p;
}

CatalogEntry build_extraspecial(const FamilySpec& spec) {
  const long p = spec.p, m = spec.m;
  if (m < 1) throw UnsupportedError("extraspecial rank below 1");
  if (2 * m > kMaxGenerators)
    throw UnsupportedError("extraspecial rank needs more than " +
                           std::to_string(kMaxGenerators) + " generators");
  const bool odd = p != 2;
  if (odd && spec.kind != "exp_p" && spec.kind != "exp_p2")
    throw UnsupportedError("odd primes take kind exp_p or exp_p2");
  if (!odd && spec.kind != "dihedral" && spec.kind != "quaternion")
    throw UnsupportedError("p = 2 takes kind dihedral or quaternion");

  CatalogEntry e;
  e.spec = spec;
  fill_extraspecial_common(e, p, m);
  e.options.class_hint = 2;

  PresBuilder pb;
  if (m == 1) {
    pb.gens = {"a", "b"};
    e.central_word = commutator(Word{{{0, 1}}}, Word{{{1, 1}}});
    if (spec.kind == "exp_p") {
      pb.rels = {"a^" + std::to_string(p), "b^" + std::to_string(p),
                 "[a,b]^" + std::to_string(p), "[[a,b],a]", "[[a,b],b]"};
      e.family_tag = "E1xEA";
      e.predicted_multiplier = elementary(p, 5);
    } else if (spec.kind == "exp_p2") {
      pb.rels = {"a^" + std::to_string(p * p), "b^" + std::to_string(p),
                 "[a,b]a^" + std::to_string(p)};
      e.family_tag = "HmxEA";
      e.predicted_multiplier = elementary(p, 2);
    } else if (spec.kind == "dihedral") {
      pb.rels = {"a^4", "b^2", "[a,b]a^2"};
      e.family_tag = "D8xEA";
      e.predicted_multiplier = AbelianGroup{{2, 4}, 0};
    } else {
      pb.rels = {"a^4", "b^2 a^-2", "[a,b]a^2"};
      e.family_tag = "HmxEA";
      e.predicted_multiplier = AbelianGroup{{2, 2}, 0};
    }
  } else {
    for (long i = 1; i <= m; ++i) {
      pb.gens.push_back("a" + std::to_string(i));
      pb.gens.push_back("b" + std::to_string(i));
    }
    e.central_word = commutator(Word{{{0, 1}}}, Word{{{1, 1}}});
    const std::string z = "[a1,b1]";
    for (long i = 2; i <= m; ++i)
      pb.rels.push_back("[a" + std::to_string(i) + ",b" + std::to_string(i) +
                        "](" + z + ")^-1");
    for (long i = 1; i <= m; ++i)
      for (long j = i + 1; j <= m; ++j) {
        const std::string ai = "a" + std::to_string(i),
                          bi = "b" + std::to_string(i),
                          aj = "a" + std::to_string(j),
                          bj = "b" + std::to_string(j);
        pb.rels.push_back("[" + ai + "," + aj + "]");
        pb.rels.push_back("[" + bi + "," + bj + "]");
        pb.rels.push_back("[" + ai + "," + bj + "]");
        pb.rels.push_back("[" + aj + "," + bi + "]");
      }
    for (const std::string& g : pb.gens)
      pb.rels.push_back("[" + z + "," + g + "]");
    const std::string ps = std::to_string(p);
    std::vector<std::string> powers;
    for (const std::string& g : pb.gens) powers.push_back(g + "^" + ps);
    // same convention as m = 1: the power relators end in the commutator
    if (spec.kind == "exp_p2") {
      powers[0] = "a1^" + ps + z;
    } else if (spec.kind == "quaternion") {
      powers[0] = "a1^2" + z;
      powers[1] = "b1^2" + z;
    }
    pb.rels.insert(pb.rels.end(), powers.begin(), powers.end());
    e.family_tag = "HmxEA";
    e.predicted_multiplier = extraspecial_multiplier(p, m);
  }
  e.predicted_exponent = order_exponent(*e.predicted_multiplier, p);
  e.presentation = pb.finish(p);
  return e;
}

CatalogEntry build_cpz(const FamilySpec& spec) {
  const long p = spec.p;
  if (spec.m != 1)
    throw UnsupportedError("only the rank-1 amalgam is in the catalog");
  const bool odd = p != 2;
  if (odd && spec.kind != "exp_p" && spec.kind != "exp_p2")
    throw UnsupportedError("odd primes take kind exp_p or exp_p2");
  if (!odd && spec.kind != "dihedral" && spec.kind != "quaternion")
    throw UnsupportedError("p = 2 takes kind dihedral or quaternion");

  CatalogEntry e;
  e.spec = spec;
  e.p = p;
  e.n = 4;
  e.nil_class = 2;
  e.options.class_hint = 2;
  e.abelianization = elementary(p, 3);
  e.family_tag = "HmZp2xEA";
  e.predicted_exponent = cubic_base(4);
  e.central_word = Word{{{2, 1}}};  // the generator c
  e.central_order = Int(p) * p;

  const std::string ps = std::to_string(p);
  const std::string p2 = std::to_string(p * p);
  PresBuilder pb;
  pb.gens = {"a", "b", "c"};
  if (spec.kind == "exp_p") {
    pb.rels = {"a^" + ps,          "b^" + ps, "c^" + p2,
               "[a,b]c^-" + ps, "[a,c]",   "[b,c]"};
  } else if (spec.kind == "exp_p2") {
    pb.rels = {"a^" + p2,       "b^" + ps,       "c^" + p2,
               "[a,b]c^-" + ps, "a^" + ps + "c^-" + ps,
               "[a,c]",         "[b,c]"};
  } else if (spec.kind == "dihedral") {
    pb.rels = {"a^2", "b^2", "c^4", "[a,b]c^-2", "[a,c]", "[b,c]"};
  } else {
    pb.rels = {"a^4",      "b^2 a^-2", "[a,b]a^2", "c^4",
               "a^2 c^-2", "[a,c]",    "[b,c]"};
  }
  e.presentation = pb.finish(p);
  return e;
}

CatalogEntry build_xea(const FamilySpec& spec) {
  if (spec.rank < 1) throw UnsupportedError("tail count below 1");
  CatalogEntry base = build_family(spec.base);
  const long p = base.p.get_si();
  const int base_d = static_cast<int>(base.presentation.generators.size());
  if (base_d + spec.rank > kMaxGenerators)
    throw UnsupportedError("base plus tails needs more than " +
                           std::to_string(kMaxGenerators) + " generators");

  CatalogEntry e;
  e.spec = spec;
  e.spec.base = print_family(base.spec);  // canonical nested text
  e.p = base.p;
  e.n = base.n + static_cast<int>(spec.rank);
  e.nil_class = base.nil_class;
  e.options.class_hint = base.nil_class;
  e.family_tag = base.family_tag;
  e.central_word = base.central_word;
  e.central_order = base.central_order;

  PresBuilder pb;
  pb.gens = base.presentation.generators;
  for (const Word& w : base.presentation.relators) {
    // regenerate base relator text from letters
    std::string r;
    for (const Letter& l : w.letters)
      r += pb.gens[l.gen] + (l.sign < 0 ? "^-1 " : " ");
    pb.rels.push_back(r);
  }
  for (long i = 0; i < spec.rank; ++i) {
    std::string t = "t" + std::to_string(base_d + i + 1);
    pb.rels.push_back(t + "^" + std::to_string(p));
    for (const std::string& g : pb.gens)
      pb.rels.push_back("[" + t + "," + g + "]");
    pb.gens.push_back(t);
  }
  e.presentation = pb.finish(p);

  // fold the tails through the direct-product formula one at a time
  AbelianGroup ab = base.abelianization;
  const AbelianGroup zp = elementary(p, 1);
  std::optional<AbelianGroup> mult = base.predicted_multiplier;
  long exp = base.predicted_exponent;
  for (long i = 0; i < spec.rank; ++i) {
    if (mult) mult = product_multiplier(*mult, ab, {}, zp);
    exp += order_exponent(tensor(tensor(ab, ab), zp), p) +
           order_exponent(tensor(tensor(ab, zp), zp), p);
    ab = direct_sum(ab, zp);
  }
  e.abelianization = ab;
  e.predicted_multiplier = mult;
  e.predicted_exponent = exp;
  if (mult && order_exponent(*mult, e.p) != exp)
    throw InternalError("prediction bookkeeping out of sync");
  return e;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  FamilySpec s;
  const size_t colon = text.find(':');
  s.family = text.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) params = split_params(text.substr(colon + 1));

  if (s.family == "d8" || s.family == "q8") {
    expect_keys(params, {});
    s.p = 2;
    return s;
  }
  if (s.family == "cyclic") {
    expect_keys(params, {"p", "m"});
    s.p = parse_prime(params);
    s.m = parse_long(params.at("m"), "m");
    if (s.m < 1) throw ParseError("m must be at least 1", 1, 1);
    return s;
  }
  if (s.family == "elem_abelian") {
    expect_keys(params, {"p", "rank"});
    s.p = parse_prime(params);
    s.rank = parse_long(params.at("rank"), "rank");
    if (s.rank < 1) throw ParseError("rank must be at least 1", 1, 1);
    return s;
  }
  if (s.family == "abelian") {
    expect_keys(params, {"p", "type"});
    s.p = parse_prime(params);
    const std::string& t = params.at("type");
    size_t i = 0;
    while (i <= t.size()) {
      size_t dot = std::min(t.find('.', i), t.size());
      s.type.push_back(parse_long(t.substr(i, dot - i), "type"));
      if (s.type.back() < 1) throw ParseError("type parts start at 1", 1, 1);
      i = dot + 1;
    }
    std::sort(s.type.begin(), s.type.end());
    return s;
  }
  if (s.family == "extraspecial") {
    expect_keys(params, {"p", "m", "kind"});
    s.p = parse_prime(params);
    s.m = parse_long(params.at("m"), "m");
    s.kind = params.at("kind");
    return s;
  }
  if (s.family == "cpz") {
    expect_keys(params, {"p", "m", "kind"});
    s.p = parse_prime(params);
    s.m = parse_long(params.at("m"), "m");
    s.kind = params.at("kind");
    return s;
  }
  if (s.family == "xEA") {
    expect_keys(params, {"base", "k"});
    std::string b = params.at("base");
    if (b.size() < 2 || b.front() != '(' || b.back() != ')')
      throw ParseError("base must be parenthesized", 1, 1);
    s.base = b.substr(1, b.size() - 2);
    s.rank = parse_long(params.at("k"), "k");
    if (s.rank < 1) throw ParseError("k must be at least 1", 1, 1);
    return s;
  }
  throw ParseError("unknown family '" + s.family + "'", 1, 1);
}

std::string print_family(const FamilySpec& s) {
  if (s.family == "d8" || s.family == "q8") return s.family;
  if (s.family == "cyclic")
    return "cyclic:p=" + std::to_string(s.p) + ",m=" + std::to_string(s.m);
  if (s.family == "elem_abelian")
    return "elem_abelian:p=" + std::to_string(s.p) +
           ",rank=" + std::to_string(s.rank);
  if (s.family == "abelian") {
    std::string t;
    for (size_t i = 0; i < s.type.size(); ++i)
      t += (i ? "." : "") + std::to_string(s.type[i]);
    return "abelian:p=" + std::to_string(s.p) + ",type=" + t;
  }
  if (s.family == "extraspecial" || s.family == "cpz")
    return s.family + ":p=" + std::to_string(s.p) +
           ",m=" + std::to_string(s.m) + ",kind=" + s.kind;
  if (s.family == "xEA")
    return "xEA:base=(" + s.base + "),k=" + std::to_string(s.rank);
  throw InternalError("printing an unknown family");
}

CatalogEntry build_family(const FamilySpec& spec) {
  if (spec.family == "d8" || spec.family == "q8") {
    FamilySpec alias;
    alias.family = "extraspecial";
    alias.p = 2;
    alias.m = 1;
    alias.kind = spec.family == "d8" ? "dihedral" : "quaternion";
    CatalogEntry e = build_extraspecial(alias);
    e.spec = spec;
    return e;
  }
  if (spec.family == "cyclic" || spec.family == "elem_abelian" ||
      spec.family == "abelian") {
    std::vector<long> type = spec.type;
    if (spec.family == "cyclic") type.assign(1, spec.m);
    if (spec.family == "elem_abelian")
      type.assign(static_cast<size_t>(spec.rank), 1);
    if (static_cast<int>(type.size()) > kMaxGenerators)
      throw UnsupportedError("more than " + std::to_string(kMaxGenerators) +
                             " cyclic factors");
    CatalogEntry e;
    e.spec = spec;
    e.p = spec.p;
    e.n = 0;
    for (long m : type) e.n += static_cast<int>(m);
    e.nil_class = 1;
    e.options.class_hint = 1;
    std::vector<Int> divs;
    for (long m : type) divs.push_back(Int(power_str(spec.p, m)));
    e.abelianization = AbelianGroup{divs, 0};
    e.predicted_multiplier = abelian_multiplier(e.abelianization);
    e.predicted_exponent = order_exponent(*e.predicted_multiplier, e.p);
    PresBuilder pb;
    for (size_t i = 0; i < type.size(); ++i)
      pb.gens.push_back("g" + std::to_string(i + 1));
    for (size_t i = 0; i < type.size(); ++i)
      pb.rels.push_back(pb.gens[i] + "^" + power_str(spec.p, type[i]));
    for (size_t i = 0; i < type.size(); ++i)
      for (size_t j = i + 1; j < type.size(); ++j)
        pb.rels.push_back("[" + pb.gens[i] + "," + pb.gens[j] + "]");
    e.presentation = pb.finish(spec.p);
    return e;
  }
  if (spec.family == "extraspecial") return build_extraspecial(spec);
  if (spec.family == "cpz") return build_cpz(spec);
  if (spec.family == "xEA") return build_xea(spec);
  throw InternalError("building an unknown family");
}

CatalogEntry build_family(const std::string& text) {
  return build_family(parse_family(text));
}

namespace {

void partitions_into(long n, long min_part, std::vector<long>& cur,
                     std::vector<std::vector<long>>& out) {
  for (long part = min_part; part <= n; ++part) {
    cur.push_back(part);
    if (part == n) {
      const bool all_ones = std::all_of(cur.begin(), cur.end(),
                                        [](long x) { return x == 1; });
      if (cur.size() >= 2 && !all_ones) out.push_back(cur);
    } else {
      partitions_into(n - part, part, cur, out);
    }
    cur.pop_back();
  }
}

std::vector<FamilySpec> order_p3_extraspecials(long p) {
  std::vector<FamilySpec> out;
  if (p == 2) {
    out.push_back(parse_family("d8"));
    out.push_back(parse_family("q8"));
  } else {
    const std::string ps = std::to_string(p);
    out.push_back(parse_family("extraspecial:p=" + ps + ",m=1,kind=exp_p"));
    out.push_back(parse_family("extraspecial:p=" + ps + ",m=1,kind=exp_p2"));
  }
  return out;
}

}  // namespace

std::vector<FamilySpec> sweep(const std::vector<long>& primes, int max_n) {
  std::vector<FamilySpec> out;
  for (long p : primes) {
    if (!small_prime(p)) throw UnsupportedError("sweep prime is not prime");
    const std::string ps = std::to_string(p);
    const auto kinds = p == 2
                           ? std::vector<std::string>{"dihedral", "quaternion"}
                           : std::vector<std::string>{"exp_p", "exp_p2"};
    for (int n = 1; n <= max_n; ++n) {
      std::vector<FamilySpec> chunk;
      chunk.push_back(
          parse_family("cyclic:p=" + ps + ",m=" + std::to_string(n)));
      if (n >= 2)
        chunk.push_back(
            parse_family("elem_abelian:p=" + ps + ",rank=" + std::to_string(n)));
      std::vector<std::vector<long>> parts;
      std::vector<long> cur;
      partitions_into(n, 1, cur, parts);
      for (const auto& t : parts) {
        std::string type;
        for (size_t i = 0; i < t.size(); ++i)
          type += (i ? "." : "") + std::to_string(t[i]);
        chunk.push_back(parse_family("abelian:p=" + ps + ",type=" + type));
      }
      if (n % 2 == 1 && n >= 3 && n <= 7)
        for (const std::string& kind : kinds) {
          if (n == 3 && p == 2) continue;  // spelled d8 / q8 below
          chunk.push_back(parse_family("extraspecial:p=" + ps + ",m=" +
                                       std::to_string((n - 1) / 2) +
                                       ",kind=" + kind));
        }
      if (n == 3 && p == 2) {
        chunk.push_back(parse_family("d8"));
        chunk.push_back(parse_family("q8"));
      }
      if (n == 4)
        for (const std::string& kind : kinds)
          chunk.push_back(parse_family("cpz:p=" + ps + ",m=1,kind=" + kind));
      // composites with an elementary abelian tail
      for (int base_n = 3; base_n < n; ++base_n) {
        const int k = n - base_n;
        std::vector<FamilySpec> bases;
        if (base_n == 3)
          bases = order_p3_extraspecials(p);
        if (base_n == 5)
          for (const std::string& kind : kinds)
            bases.push_back(parse_family("extraspecial:p=" + ps +
                                         ",m=2,kind=" + kind));
        if (base_n == 4)
          for (const std::string& kind : kinds)
            bases.push_back(parse_family("cpz:p=" + ps + ",m=1,kind=" + kind));
        for (const FamilySpec& b : bases) {
          const long base_d = b.family == "cpz" ? 3 : 2 * std::max(b.m, 1L);
          if (base_d + k > kMaxGenerators) continue;
          chunk.push_back(parse_family("xEA:base=(" + print_family(b) +
                                       "),k=" + std::to_string(k)));
        }
      }
      std::sort(chunk.begin(), chunk.end(),
                [](const FamilySpec& a, const FamilySpec& b) {
                  return std::make_pair(a.family, print_family(a)) <
                         std::make_pair(b.family, print_family(b));
                });
      out.insert(out.end(), chunk.begin(), chunk.end());
    }
  }
  return out;
}

}  // namespace nilmult
