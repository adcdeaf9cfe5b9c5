#include "nilmult/subgroup.hpp"

#include "nilmult/errors.hpp"

namespace nilmult {

namespace {

constexpr long kMutationBudget = 1000000;

}  // namespace

SubgroupTable::SubgroupTable(const LyndonBasis* basis)
    : basis_(basis), entries_(basis->size()) {}

const GroupElement& SubgroupTable::entry(int i) const {
  if (!filled(i)) throw InternalError("reading an empty table slot");
  return entries_[i]->g;
}

const Int& SubgroupTable::lead_coeff(int i) const {
  if (!filled(i)) throw InternalError("reading an empty table slot");
  return entries_[i]->coeff;
}

std::vector<int> SubgroupTable::filled_slots() const {
  std::vector<int> out;
  for (int i = 0; i < slots(); ++i)
    if (filled(i)) out.push_back(i);
  return out;
}

bool SubgroupTable::insert(GroupElement g) {
  bool changed = false;
  while (true) {
    if (++mutations_ > kMutationBudget)
      throw InternalError("table mutation budget exhausted");
    auto t = leading_term(g);
    if (!t) break;
    const int lead = basis_->index_of_rank(t->rank);
    if (lead < 0)
      throw InternalError("leading monomial is not a basis word");
    Int a = t->coeff;
    if (!filled(lead)) {
      if (a < 0) {
        g = inv(g);
        a = -a;
      }
      entries_[lead] = Entry{std::move(g), std::move(a)};
      changed = true;
      break;
    }
    const Int& e = entries_[lead]->coeff;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t());
    g = mul(pow(entries_[lead]->g, -q), g);
    if (r != 0) {
      // Euclid step: the smaller positive leading coefficient takes the slot
      std::swap(entries_[lead]->g, g);
      entries_[lead]->coeff = r;
      changed = true;
    }
  }
  if (changed) certified_ = false;
  return changed;
}

GroupElement SubgroupTable::residual(GroupElement g) const {
  while (true) {
    auto t = leading_term(g);
    if (!t) return g;
    const int lead = basis_->index_of_rank(t->rank);
    if (lead < 0)
      throw InternalError("leading monomial is not a basis word");
    if (!filled(lead)) return g;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t->coeff.get_mpz_t(),
                entries_[lead]->coeff.get_mpz_t());
    if (q != 0) g = mul(pow(entries_[lead]->g, -q), g);
    if (r != 0) return g;
  }
}

bool SubgroupTable::contains(const GroupElement& g) const {
  if (!certified_)
    throw InternalError("membership asked of an uncertified table");
  return !leading_term(residual(g)).has_value();
}

std::optional<Int> SubgroupTable::quotient_order() const {
  if (!certified_)
    throw InternalError("index asked of an uncertified table");
  Int n = 1;
  for (int i = 0; i < slots(); ++i) {
    if (!filled(i)) return std::nullopt;
    n *= entries_[i]->coeff;
  }
  return n;
}

void SubgroupTable::canonicalize() {
  const std::vector<int> live = filled_slots();
  for (size_t a = 0; a < live.size(); ++a) {
    for (size_t b = a + 1; b < live.size(); ++b) {
      const int j = live[b];
      // right multiplication shifts coordinate j without touching earlier
      // ones, so sweeping j upward keeps previous reductions intact
      std::vector<Int> v = extract_exponents(entries_[live[a]]->g, *basis_);
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), v[j].get_mpz_t(),
                 entries_[j]->coeff.get_mpz_t());
      if (q != 0)
        entries_[live[a]]->g =
            mul(entries_[live[a]]->g, pow(entries_[j]->g, -q));
    }
  }
}

SubgroupTable normal_closure(const std::vector<GroupElement>& gens,
                             const std::vector<GroupElement>& ambient,
                             const LyndonBasis& basis) {
  SubgroupTable t(&basis);
  for (const GroupElement& g : gens) t.insert(g);
  std::vector<GroupElement> ambient_inv;
  ambient_inv.reserve(ambient.size());
  for (const GroupElement& x : ambient) ambient_inv.push_back(inv(x));
  // sift every entry's commutators with the ambient generators until a full
  // pass changes nothing; at that point the sifted subgroup is closed under
  // conjugation in both directions
  while (true) {
    bool dirty = false;
    for (int i = 0; i < t.slots(); ++i) {
      if (!t.filled(i)) continue;
      const GroupElement e = t.entry(i);
      for (size_t k = 0; k < ambient.size(); ++k) {
        if (t.insert(comm(e, ambient[k]))) dirty = true;
        if (t.insert(comm(e, ambient_inv[k]))) dirty = true;
      }
    }
    if (!dirty) break;
  }
  t.mark_certified();
  return t;
}

SubgroupTable commutator_with_ambient(
    const SubgroupTable& t, const std::vector<GroupElement>& ambient) {
  if (!t.certified())
    throw InternalError("commutator subgroup of an uncertified table");
  std::vector<GroupElement> seeds;
  for (int i : t.filled_slots())
    for (const GroupElement& x : ambient) seeds.push_back(comm(t.entry(i), x));
  return normal_closure(seeds, ambient, t.basis());
}

SubgroupTable tail_intersection(const SubgroupTable& t, int min_weight) {
  if (!t.certified())
    throw InternalError("tail of an uncertified table");
  SubgroupTable out(&t.basis());
  for (int i : t.filled_slots())
    if (t.basis().weight(i) >= min_weight) out.insert(t.entry(i));
  // inherited: the kept entries already reduce each other's commutators
  out.mark_certified();
  return out;
}

AbelianGroup abelian_section(const SubgroupTable& a, const SubgroupTable& b,
                             int min_weight) {
  if (&a.basis() != &b.basis())
    throw InternalError("section of tables over different bases");
  const LyndonBasis& basis = a.basis();
  if (2 * min_weight <= basis.K())
    throw InternalError("section layer is not abelian at this truncation");

  const std::vector<int> rows_a = a.filled_slots();
  for (int i : rows_a)
    if (basis.weight(i) < min_weight)
      throw InternalError("section numerator reaches below the layer");

  std::vector<std::vector<Int>> gen_coords;
  gen_coords.reserve(rows_a.size());
  for (int i : rows_a)
    gen_coords.push_back(extract_exponents(a.entry(i), basis));

  std::vector<std::vector<Int>> rel;
  for (int i : b.filled_slots()) {
    if (basis.weight(i) < min_weight)
      throw InternalError("section denominator reaches below the layer");
    std::vector<Int> v = extract_exponents(b.entry(i), basis);
    std::vector<Int> row(rows_a.size());
    for (size_t k = 0; k < rows_a.size(); ++k) {
      const int lead = rows_a[k];
      const Int& pivot = gen_coords[k][lead];
      if (!mpz_divisible_p(v[lead].get_mpz_t(), pivot.get_mpz_t()))
        throw InternalError("section denominator escapes the numerator");
      row[k] = v[lead] / pivot;
      if (row[k] != 0)
        for (int j = 0; j < basis.size(); ++j)
          v[j] -= row[k] * gen_coords[k][j];
    }
    for (const Int& c : v)
      if (c != 0)
        throw InternalError("section denominator escapes the numerator");
    rel.push_back(std::move(row));
  }

  IntMatrix m(rel.size(), rows_a.size());
  for (size_t r = 0; r < rel.size(); ++r)
    for (size_t c = 0; c < rows_a.size(); ++c) m.at(r, c) = rel[r][c];
  return cokernel_invariants(m, static_cast<int>(rows_a.size()));
}

}  // namespace nilmult
