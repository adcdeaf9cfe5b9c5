#include "nilmult/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nilmult/catalog.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/formulas.hpp"
#include "nilmult/verify.hpp"

namespace nilmult {

namespace {

using Json = nlohmann::ordered_json;

// JSON has no big integers; everything we emit fits in long, and anything
// that would not is a bug worth hearing about.
long json_int(const Int& v) {
  if (!v.fits_slong_p()) throw InternalError("value too large for output");
  return v.get_si();
}

Json divisors_json(const AbelianGroup& g) {
  Json a = Json::array();
  for (const Int& d : g.divisors) a.push_back(json_int(d));
  return a;
}

std::string pow_str(const Int& p, long e) {
  return p.get_str() + "^" + std::to_string(e);
}

std::string display_family(const std::string& tag) {
  if (tag == "E1xEA")
    return "extraspecial of exponent p (order p^3) x elementary abelian";
  if (tag == "D8xEA") return "D8 x elementary abelian";
  if (tag == "HmxEA") return "extraspecial x elementary abelian";
  if (tag == "HmZp2xEA")
    return "extraspecial amalgamated with Z(p^2) over the center, "
           "x elementary abelian";
  return tag;
}

struct LoadedGroup {
  std::string name;        // spec text or file path, for the headline
  std::string family_tag;  // construction tag when catalog-built
  MultiplierReport report;
};

LoadedGroup load_group(const RunConfig& cfg) {
  if (cfg.catalog_spec.empty() == cfg.file.empty())
    throw ParseError("need exactly one of --catalog and --file", 1, 1);
  LoadedGroup out;
  AnalyzeOptions opt;
  Presentation pres;
  if (!cfg.catalog_spec.empty()) {
    CatalogEntry e = build_family(cfg.catalog_spec);
    out.name = cfg.catalog_spec;
    out.family_tag = e.family_tag;
    pres = e.presentation;
    opt = e.options;
  } else {
    std::ifstream in(cfg.file);
    if (!in) throw ParseError("cannot read '" + cfg.file + "'", 1, 1);
    std::ostringstream text;
    text << in.rdbuf();
    pres = parse_presentation(text.str());
    out.name = cfg.file;
  }
  opt.c_nil = cfg.c_nil;
  if (cfg.class_hint) opt.class_hint = cfg.class_hint;
  out.report = analyze(pres, opt);
  return out;
}

RunResult cmd_compute(const RunConfig& cfg) {
  LoadedGroup g = load_group(cfg);
  const MultiplierReport& r = g.report;
  std::vector<std::string> notes;
  if (r.c_nil == 2 && !r.s2)
    notes.push_back("abelian group: the defect s2 is undefined");

  if (cfg.json) {
    Json j;
    j["schema"] = 1;
    j["prime"] = json_int(r.prime);
    j["n"] = r.n;
    j["class"] = r.nil_class;
    j["m"] = r.derived_exponent;
    j["abelianization"] = divisors_json(r.abelianization);
    j["c_nil"] = r.c_nil;
    j["multiplier"] = divisors_json(r.multiplier);
    j["mult_exponent"] = r.mult_exponent;
    j["s2"] = r.s2 ? Json(*r.s2) : Json(nullptr);
    j["family"] = g.family_tag;
    j["notes"] = notes;
    return {0, j.dump(2) + "\n"};
  }

  std::string out = "M" + std::to_string(r.c_nil) + "(" + g.name + ") = " +
                    r.multiplier.str() + " (order " +
                    pow_str(r.prime, r.mult_exponent) + ")";
  if (r.s2) out += ", s2 = " + std::to_string(*r.s2);
  out += "\n";
  out += "prime: " + r.prime.get_str() + "\n";
  out += "order: " + pow_str(r.prime, r.n) + "\n";
  out += "class: " + std::to_string(r.nil_class) + "\n";
  out += "abelianization: " + r.abelianization.str() + "\n";
  out += "derived order: " + pow_str(r.prime, r.derived_exponent) + "\n";
  if (!g.family_tag.empty()) out += "family: " + g.family_tag + "\n";
  for (const std::string& n : notes) out += "note: " + n + "\n";
  return {0, out};
}

RunResult cmd_classify(const RunConfig& cfg) {
  RunConfig sub = cfg;
  sub.c_nil = 2;  // the defect lives in the degree-2 multiplier
  LoadedGroup g = load_group(sub);
  const MultiplierReport& r = g.report;
  if (!r.s2)
    return {6,
            "abelian group: the classification concerns non-abelian groups\n"};
  Classification c = classify(r.prime, r.n, r.mult_exponent);

  std::string kind;
  switch (c.kind) {
    case ClassKind::Classified: kind = "classified"; break;
    case ClassKind::Impossible: kind = "impossible"; break;
    case ClassKind::BoundViolation: kind = "bound violation"; break;
    case ClassKind::BeyondDefect3: kind = "beyond defect 3"; break;
  }

  if (cfg.json) {
    Json j;
    j["schema"] = 1;
    j["prime"] = json_int(r.prime);
    j["n"] = r.n;
    j["mult_exponent"] = r.mult_exponent;
    j["s2"] = c.s2 ? Json(*c.s2) : Json(nullptr);
    j["kind"] = kind;
    j["families"] = c.families;
    j["note"] = c.note;
    int code = 0;
    if (c.kind == ClassKind::Impossible ||
        c.kind == ClassKind::BoundViolation)
      code = 5;
    return {code, j.dump(2) + "\n"};
  }

  std::string out;
  if (c.kind == ClassKind::Impossible) {
    out += "COUNTEREXAMPLE: no group attains this defect; " + g.name +
           " contradicts the classification\n";
  } else if (c.kind == ClassKind::BoundViolation) {
    out += "COUNTEREXAMPLE: multiplier exponent above the proven ceiling\n";
  }
  if (c.s2) out += "s2 = " + std::to_string(*c.s2) + "\n";
  out += "multiplier order: " + pow_str(r.prime, r.mult_exponent) + "\n";
  if (c.kind == ClassKind::Classified) {
    std::string fams;
    for (const std::string& f : c.families) {
      if (!fams.empty()) fams += "; ";
      fams += f + " (" + display_family(f) + ")";
    }
    out += "families: " + fams + "\n";
  } else if (c.kind == ClassKind::BeyondDefect3) {
    out += "families: outside the classified defect range\n";
  }
  if (!c.note.empty()) out += "note: " + c.note + "\n";
  const bool counter = c.kind == ClassKind::Impossible ||
                       c.kind == ClassKind::BoundViolation;
  return {counter ? 5 : 0, out};
}

RunResult cmd_catalog(const RunConfig& cfg) {
  std::vector<FamilySpec> specs = sweep(cfg.primes, cfg.max_n);
  if (cfg.json) {
    Json rows = Json::array();
    for (const FamilySpec& s : specs) {
      CatalogEntry e = build_family(s);
      Json j;
      j["spec"] = print_family(s);
      j["prime"] = json_int(e.p);
      j["n"] = e.n;
      j["class"] = e.nil_class;
      j["abelianization"] = divisors_json(e.abelianization);
      j["family"] = e.family_tag;
      rows.push_back(j);
    }
    Json top;
    top["schema"] = 1;
    top["groups"] = rows;
    return {0, top.dump(2) + "\n"};
  }
  std::string out;
  for (const FamilySpec& s : specs) {
    CatalogEntry e = build_family(s);
    std::string text = print_family(s);
    text.resize(std::max<size_t>(text.size(), 48), ' ');
    out += text + " p=" + e.p.get_str() + " n=" + std::to_string(e.n) +
           " class=" + std::to_string(e.nil_class) +
           (e.family_tag.empty() ? "" : " family=" + e.family_tag) + "\n";
  }
  return {0, out};
}

RunResult cmd_verify(const RunConfig& cfg) {
  std::vector<CheckResult> rows = run_checks(cfg.only);
  int failures = 0;
  for (const CheckResult& r : rows) failures += !r.pass;

  if (cfg.json) {
    Json arr = Json::array();
    for (const CheckResult& r : rows) {
      Json j;
      j["group"] = r.group;
      j["name"] = r.name;
      j["expected"] = r.expected;
      j["computed"] = r.computed;
      j["pass"] = r.pass;
      arr.push_back(j);
    }
    Json top;
    top["schema"] = 1;
    top["checks"] = arr;
    top["failures"] = failures;
    return {failures ? 1 : 0, top.dump(2) + "\n"};
  }

  std::string out;
  for (const CheckResult& r : rows) {
    std::string name = "[" + r.group + "] " + r.name;
    name.resize(std::max<size_t>(name.size(), 64), ' ');
    out += std::string(r.pass ? "PASS " : "FAIL ") + name + " computed: " +
           r.computed + " | expected: " + r.expected + "\n";
  }
  out += "checks: " + std::to_string(rows.size()) +
         ", failures: " + std::to_string(failures) + "\n";
  return {failures ? 1 : 0, out};
}

RunResult cmd_bounds(const RunConfig& cfg) {
  const long n = cfg.bound_n, m = cfg.bound_m;
  if (m < 1 || n <= m)
    throw UnsupportedError("bounds need n > m >= 1");
  std::vector<std::pair<std::string, long>> rows;
  rows.emplace_back("derived-size-bound", exponent_bound(n, m));
  if (m == 2)
    rows.emplace_back("order-p2-derived-ceiling", order_p2_derived_ceiling(n));
  if (m >= 3)
    rows.emplace_back("large-derived-ceiling", large_derived_ceiling(n));
  rows.emplace_back("nonabelian-base-bound", cubic_base(n) + 3);

  if (cfg.json) {
    Json j;
    j["schema"] = 1;
    j["n"] = n;
    j["m"] = m;
    Json b;
    for (const auto& [tag, value] : rows) b[tag] = value;
    j["bounds"] = b;
    return {0, j.dump(2) + "\n"};
  }
  std::string out;
  for (const auto& [tag, value] : rows)
    out += tag + ": " + std::to_string(value) + "\n";
  return {0, out};
}

bool small_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RunResult cmd_table(const RunConfig& cfg) {
  const long p = cfg.table_p, n = cfg.table_n;
  if (!small_prime(p)) throw UnsupportedError("the table needs a prime p");
  if (n < 3) throw UnsupportedError("the table needs n >= 3");
  const long top = cubic_base(n) + 3;

  Json rows = Json::array();
  std::string text;
  for (long e = top; e >= top - 3; --e) {
    Classification c = classify(Int(p), n, e);
    std::string kind, fams;
    switch (c.kind) {
      case ClassKind::Classified: kind = "classified"; break;
      case ClassKind::Impossible: kind = "impossible"; break;
      case ClassKind::BoundViolation: kind = "bound violation"; break;
      case ClassKind::BeyondDefect3: kind = "beyond defect 3"; break;
    }
    for (const std::string& f : c.families)
      fams += (fams.empty() ? "" : ", ") + f;
    if (cfg.json) {
      Json j;
      j["e"] = e;
      j["s2"] = c.s2 ? Json(*c.s2) : Json(nullptr);
      j["kind"] = kind;
      j["families"] = c.families;
      j["note"] = c.note;
      rows.push_back(j);
    } else {
      text += "e = " + std::to_string(e) +
              "  s2 = " + (c.s2 ? std::to_string(*c.s2) : std::string("-")) +
              "  " + kind;
      if (!fams.empty()) text += "  [" + fams + "]";
      if (!c.note.empty()) text += "  (" + c.note + ")";
      text += "\n";
    }
  }
  if (cfg.json) {
    Json j;
    j["schema"] = 1;
    j["prime"] = p;
    j["n"] = n;
    j["rows"] = rows;
    return {0, j.dump(2) + "\n"};
  }
  return {0, text};
}

}  // namespace

RunResult run_command(const RunConfig& cfg) {
  try {
    if (cfg.command == "compute") return cmd_compute(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "catalog") return cmd_catalog(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    if (cfg.command == "bounds") return cmd_bounds(cfg);
    if (cfg.command == "table") return cmd_table(cfg);
    throw UnsupportedError("unknown command '" + cfg.command + "'");
  } catch (const ParseError& e) {
    return {2, std::string("parse error: ") + e.what() + "\n"};
  } catch (const UnsupportedError& e) {
    return {3, std::string("unsupported: ") + e.what() + "\n"};
  } catch (const InternalError& e) {
    return {4, std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace nilmult
