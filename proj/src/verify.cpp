#include "nilmult/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>

#include "nilmult/catalog.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/formulas.hpp"
#include "nilmult/magnus.hpp"

namespace nilmult {

namespace {

using clock_type = std::chrono::steady_clock;

struct Timer {
  clock_type::time_point t0 = clock_type::now();
  double stop() const {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
  }
};

// Analyses shared between groups (the sweep revisits everything) are run
// once per run_checks call; a row's time only covers its fresh work.
struct Ctx {
  std::map<std::string, CatalogEntry> entries;
  std::map<std::string, MultiplierReport> reports;

  const CatalogEntry& entry(const std::string& text) {
    auto it = entries.find(text);
    if (it == entries.end())
      it = entries.emplace(text, build_family(text)).first;
    return it->second;
  }

  const MultiplierReport& report(const std::string& text) {
    auto it = reports.find(text);
    if (it == reports.end()) {
      const CatalogEntry& e = entry(text);
      it = reports.emplace(text, analyze(e.presentation, e.options)).first;
    }
    return it->second;
  }

  // the entry's group modulo its designated central cyclic subgroup
  const MultiplierReport& quotient_report(const std::string& text) {
    const std::string key = text + " /center";
    auto it = reports.find(key);
    if (it == reports.end()) {
      const CatalogEntry& e = entry(text);
      Presentation quo = e.presentation;
      quo.relators.push_back(*e.central_word);
      it = reports.emplace(key, analyze(quo, e.options)).first;
    }
    return it->second;
  }
};

using Rows = std::vector<CheckResult>;

void value_row(Rows& out, const std::string& group, const std::string& name,
               const std::string& expected, const std::string& computed,
               double seconds) {
  out.push_back({group, name, expected, computed, expected == computed,
                 seconds});
}

void bound_row(Rows& out, const std::string& group, const std::string& name,
               long limit, long value, double seconds) {
  out.push_back({group, name, "e <= " + std::to_string(limit),
                 "e = " + std::to_string(value), value <= limit, seconds});
}

AbelianGroup elementary(long p, long rank) {
  return AbelianGroup{std::vector<Int>(static_cast<size_t>(rank), Int(p)), 0};
}

std::string mult_s2(const MultiplierReport& r) {
  return r.multiplier.str() + ", s2 = " +
         (r.s2 ? std::to_string(*r.s2) : std::string("-"));
}

void g_extraspecial(Ctx& ctx, Rows& out) {
  const struct {
    const char* spec;
    long p, rank5;  // multiplier is p-elementary of this rank when >= 0
    const char* mult;
    int s2;
  } rows[] = {
      {"d8", 2, -1, "Z2 x Z4", 2},
      {"q8", 2, 2, "", 3},
      {"extraspecial:p=3,m=1,kind=exp_p", 3, 5, "", 0},
      {"extraspecial:p=3,m=1,kind=exp_p2", 3, 2, "", 3},
      {"extraspecial:p=5,m=1,kind=exp_p", 5, 5, "", 0},
      {"extraspecial:p=5,m=1,kind=exp_p2", 5, 2, "", 3},
  };
  for (const auto& row : rows) {
    Timer t;
    const MultiplierReport& r = ctx.report(row.spec);
    const std::string want =
        (row.rank5 >= 0 ? elementary(row.p, row.rank5).str()
                        : std::string(row.mult)) +
        ", s2 = " + std::to_string(row.s2);
    value_row(out, "extraspecial", row.spec, want, mult_s2(r), t.stop());
  }
}

void g_extraspecial_large(Ctx& ctx, Rows& out) {
  for (const char* spec : {"extraspecial:p=2,m=2,kind=dihedral",
                           "extraspecial:p=2,m=2,kind=quaternion"}) {
    Timer t;
    const MultiplierReport& r = ctx.report(spec);
    value_row(out, "extraspecial-large", spec,
              elementary(2, 20).str() + ", e = 20",
              r.multiplier.str() + ", e = " + std::to_string(r.mult_exponent),
              t.stop());
  }
}

void g_elementary_abelian(Ctx& ctx, Rows& out) {
  const long witt[] = {0, 0, 2, 8, 20};  // (r^3 - r) / 3
  for (long p : {2L, 3L})
    for (long r = 1; r <= 4; ++r) {
      Timer t;
      const std::string spec =
          "elem_abelian:p=" + std::to_string(p) + ",rank=" + std::to_string(r);
      const MultiplierReport& rep = ctx.report(spec);
      value_row(out, "elementary-abelian", spec,
                elementary(p, witt[r]).str() + ", e = " +
                    std::to_string(witt[r]),
                rep.multiplier.str() + ", e = " +
                    std::to_string(rep.mult_exponent),
                t.stop());
    }
}

void g_direct_product(Ctx& ctx, Rows& out) {
  const struct {
    const char* spec;
    int e;
  } rows[] = {
      {"xEA:base=(extraspecial:p=3,m=1,kind=exp_p),k=1", 11},
      {"xEA:base=(d8),k=1", 9},
      {"xEA:base=(q8),k=1", 8},
      {"xEA:base=(extraspecial:p=3,m=1,kind=exp_p2),k=1", 8},
  };
  for (const auto& row : rows) {
    Timer t;
    const MultiplierReport& r = ctx.report(row.spec);
    value_row(out, "direct-product", row.spec, "e = " + std::to_string(row.e),
              "e = " + std::to_string(r.mult_exponent), t.stop());
  }
}

void g_central_product(Ctx& ctx, Rows& out) {
  for (const char* spec :
       {"cpz:p=2,m=1,kind=dihedral", "cpz:p=2,m=1,kind=quaternion",
        "cpz:p=3,m=1,kind=exp_p", "cpz:p=3,m=1,kind=exp_p2"}) {
    Timer t;
    const MultiplierReport& r = ctx.report(spec);
    value_row(out, "central-product", spec, "e = 8",
              "e = " + std::to_string(r.mult_exponent), t.stop());
  }
}

void g_central_product_deep(Ctx& ctx, Rows& out) {
  Timer t;
  const char* spec = "xEA:base=(cpz:p=2,m=1,kind=dihedral),k=1";
  const MultiplierReport& r = ctx.report(spec);
  value_row(out, "central-product-deep", spec, "e = 20",
            "e = " + std::to_string(r.mult_exponent), t.stop());
}

// the product formula applied to a computed base report must reproduce the
// computed multiplier of base x Z_p, structure and all
void g_product_formula(Ctx& ctx, Rows& out) {
  for (const FamilySpec& base : sweep({2, 3}, 3)) {
    Timer t;
    const std::string base_text = print_family(base);
    const MultiplierReport& rb = ctx.report(base_text);
    const MultiplierReport& rp =
        ctx.report("xEA:base=(" + base_text + "),k=1");
    AbelianGroup predicted = product_multiplier(
        rb.multiplier, rb.abelianization, {}, elementary(base.p, 1));
    value_row(out, "product-formula", base_text, predicted.str(),
              rp.multiplier.str(), t.stop());
  }
}

void g_sweep(Ctx& ctx, Rows& out) {
  for (const FamilySpec& spec : sweep({2, 3}, 4)) {
    Timer t;
    const std::string text = print_family(spec);
    const CatalogEntry& e = ctx.entry(text);
    const MultiplierReport& r = ctx.report(text);
    if (e.family_tag.empty()) {
      // abelian: the closed form is the expectation
      value_row(out, "sweep", text,
                e.predicted_multiplier->str() + ", e = " +
                    std::to_string(e.predicted_exponent),
                r.multiplier.str() + ", e = " +
                    std::to_string(r.mult_exponent),
                t.stop());
      continue;
    }
    Classification c = classify(r.prime, r.n, r.mult_exponent);
    std::string kind;
    switch (c.kind) {
      case ClassKind::Classified: kind = "classified"; break;
      case ClassKind::Impossible: kind = "impossible"; break;
      case ClassKind::BoundViolation: kind = "bound violation"; break;
      case ClassKind::BeyondDefect3: kind = "beyond defect 3"; break;
    }
    std::string families;
    for (const std::string& f : c.families)
      families += (families.empty() ? "" : ", ") + f;
    const bool ok =
        c.kind == ClassKind::Classified && c.s2 &&
        (*c.s2 == 0 || *c.s2 == 2 || *c.s2 == 3) &&
        std::count(c.families.begin(), c.families.end(), e.family_tag) == 1;
    out.push_back({"sweep", text,
                   "s2 in {0,2,3} with family " + e.family_tag,
                   kind + ", s2 = " +
                       (c.s2 ? std::to_string(*c.s2) : std::string("-")) +
                       ", families = [" + families + "]",
                   ok, t.stop()});
  }
}

void g_bounds(Ctx& ctx, Rows& out) {
  for (const FamilySpec& spec : sweep({2, 3}, 4)) {
    const std::string text = print_family(spec);
    const CatalogEntry& e = ctx.entry(text);
    if (e.family_tag.empty()) continue;
    Timer t;
    const MultiplierReport& r = ctx.report(text);
    const long n = r.n, m = r.derived_exponent, ee = r.mult_exponent;
    bound_row(out, "bounds", text + " derived-size-bound",
              exponent_bound(n, m), ee, t.stop());
    bound_row(out, "bounds", text + " nonabelian-base-bound",
              cubic_base(n) + 3, ee, 0);
    if (m == 2)
      bound_row(out, "bounds", text + " order-p2-derived-ceiling",
                order_p2_derived_ceiling(n), ee, 0);
    if (m >= 3)
      bound_row(out, "bounds", text + " large-derived-ceiling",
                large_derived_ceiling(n), ee, 0);
    if (e.central_word) {
      Timer tq;
      const MultiplierReport& rq = ctx.quotient_report(text);
      AbelianGroup b{{e.central_order}, 0};
      const long rhs =
          rq.mult_exponent +
          order_exponent(tensor(tensor(b, rq.abelianization),
                                r.abelianization),
                         r.prime);
      bound_row(out, "bounds", text + " cyclic-central-quotient", rhs, ee,
                tq.stop());
    }
  }
}

long local_det(const IntMatrix& m, std::vector<int> cols, int row) {
  // cofactor expansion; matrices here are at most 6x6
  if (cols.empty()) return 1;
  Int acc = 0;
  for (size_t k = 0; k < cols.size(); ++k) {
    if (m.at(row, cols[k]) == 0) continue;
    std::vector<int> rest = cols;
    rest.erase(rest.begin() + static_cast<long>(k));
    Int sub = local_det(m, rest, row + 1);
    acc += (k % 2 ? -1 : 1) * m.at(row, cols[k]) * sub;
  }
  return acc.get_si();
}

long det(const IntMatrix& m) {
  std::vector<int> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(j);
  return local_det(m, cols, 0);
}

void g_infrastructure(Ctx& ctx, Rows& out) {
  // Smith form on random matrices: transforms unimodular, product
  // diagonal, diagonal nonnegative with each entry dividing the next
  {
    Timer t;
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    int ok = 0;
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix a(dim(rng), dim(rng));
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) = val(rng);
      SmithResult s = smith_normal_form(a);
      bool good = std::abs(det(s.u)) == 1 && std::abs(det(s.v)) == 1;
      IntMatrix prod = s.u * a * s.v;
      for (int i = 0; good && i < prod.rows(); ++i)
        for (int j = 0; good && j < prod.cols(); ++j)
          if (prod.at(i, j) != s.d.at(i, j) || (i != j && prod.at(i, j) != 0))
            good = false;
      for (int i = 0; good && i < std::min(prod.rows(), prod.cols()); ++i) {
        if (s.d.at(i, i) < 0) good = false;
        if (i && s.d.at(i - 1, i - 1) != 0 &&
            !mpz_divisible_p(s.d.at(i, i).get_mpz_t(),
                             s.d.at(i - 1, i - 1).get_mpz_t()))
          good = false;
        if (i && s.d.at(i - 1, i - 1) == 0 && s.d.at(i, i) != 0) good = false;
      }
      ok += good;
    }
    value_row(out, "infrastructure", "smith-form random matrices", "200/200",
              std::to_string(ok) + "/200", t.stop());
  }

  // group-image roundtrips: extract then rebuild is the identity
  std::mt19937 rng(7);
  for (int d = 1; d <= 4; ++d)
    for (int K = 1; K <= 5; ++K) {
      Timer t;
      LyndonBasis basis = lyndon_basis(d, K);
      std::uniform_int_distribution<int> gen(0, d - 1), ex(-4, 4);
      int ok = 0;
      for (int trial = 0; trial < 100; ++trial) {
        GroupElement g = one(d, K);
        for (int i = 0; i < 12; ++i)
          g = mul(g, pow(embed_generator(gen(rng), d, K), ex(rng)));
        ok += rebuild(extract_exponents(g, basis), basis) == g;
      }
      value_row(out, "infrastructure",
                "magnus-roundtrip d=" + std::to_string(d) +
                    " K=" + std::to_string(K),
                "100/100", std::to_string(ok) + "/100", t.stop());
    }

  // Lyndon word counts: basis vs necklace formula vs brute enumeration
  for (int d = 1; d <= 4; ++d) {
    Timer t;
    LyndonBasis basis = lyndon_basis(d, 5);
    std::string want, got;
    for (int w = 1; w <= 5; ++w) {
      static const std::map<int, std::vector<std::pair<int, int>>> mobius = {
          {1, {{1, 1}}},
          {2, {{1, 1}, {2, -1}}},
          {3, {{1, 1}, {3, -1}}},
          {4, {{1, 1}, {2, -1}, {4, 0}}},
          {5, {{1, 1}, {5, -1}}}};
      long necklaces = 0;
      for (auto [e, mu] : mobius.at(w)) {
        long pw = 1;
        for (int i = 0; i < w / e; ++i) pw *= d;
        necklaces += mu * pw;
      }
      necklaces /= w;

      long brute = 0;
      std::vector<int> word(static_cast<size_t>(w), 0);
      while (true) {
        bool lyndon = true;
        for (int r = 1; lyndon && r < w; ++r) {
          std::vector<int> rot(word.begin() + r, word.end());
          rot.insert(rot.end(), word.begin(), word.begin() + r);
          lyndon = word < rot;
        }
        brute += lyndon;
        int i = w - 1;
        while (i >= 0 && word[i] == d - 1) word[i--] = 0;
        if (i < 0) break;
        ++word[i];
      }

      long in_basis = 0;
      for (int i = 0; i < basis.size(); ++i) in_basis += basis.weight(i) == w;
      want += (w > 1 ? "," : "") + std::to_string(necklaces);
      got += (w > 1 ? "," : "") + std::to_string(in_basis) +
             (in_basis == brute ? "" : "(brute!)");
    }
    value_row(out, "infrastructure",
              "lyndon-counts d=" + std::to_string(d) + " w=1..5", want, got,
              t.stop());
  }

  // the abelianization's multiplier order divides the group's
  for (const FamilySpec& spec : sweep({2, 3}, 4)) {
    Timer t;
    const std::string text = print_family(spec);
    const MultiplierReport& r = ctx.report(text);
    const long ab_e =
        order_exponent(abelian_multiplier(r.abelianization), r.prime);
    out.push_back({"infrastructure", text + " abelianization-divisibility",
                   "e >= " + std::to_string(ab_e),
                   "e = " + std::to_string(r.mult_exponent),
                   r.mult_exponent >= ab_e, t.stop()});
  }
}

using Group = std::function<void(Ctx&, Rows&)>;

const std::vector<std::pair<std::string, Group>>& registry() {
  static const std::vector<std::pair<std::string, Group>> reg = {
      {"extraspecial", g_extraspecial},
      {"extraspecial-large", g_extraspecial_large},
      {"elementary-abelian", g_elementary_abelian},
      {"direct-product", g_direct_product},
      {"central-product", g_central_product},
      {"central-product-deep", g_central_product_deep},
      {"product-formula", g_product_formula},
      {"sweep", g_sweep},
      {"bounds", g_bounds},
      {"infrastructure", g_infrastructure},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& check_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_checks(const std::string& only) {
  Ctx ctx;
  Rows out;
  bool found = only.empty();
  for (const auto& [name, fn] : registry()) {
    if (!only.empty() && name != only) continue;
    found = true;
    fn(ctx, out);
  }
  if (!found) throw UnsupportedError("unknown check group '" + only + "'");
  return out;
}

}  // namespace nilmult
