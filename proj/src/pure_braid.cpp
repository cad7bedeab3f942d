#include "braids/pure_braid.hpp"

#include <numeric>

#include "braids/errors.hpp"

#include <json.hpp>

namespace braids {

long long AbelianVector::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

BraidWord generator_A(int n, int i, int j) {
  if (!(1 <= i && i < j && j <= n)) throw DomainError("generator_A needs 1 <= i < j <= n");
  BraidWord w(n);
  for (int k = j - 1; k >= i + 1; --k) w.push(k, +1);
  w.push(i, +1);
  w.push(i, +1);
  for (int k = i + 1; k <= j - 1; ++k) w.push(k, -1);
  return w;
}

bool is_pure(const BraidWord& w) { return theta(w).is_identity(); }

AbelianVector abelianize(const BraidWord& w) {
  validate(w);
  if (!is_pure(w)) throw DomainError("abelianize requires a pure braid");
  AbelianVector out;
  out.n = w.n;
  // strand_at[p] = strand currently occupying position p (0-based).
  std::vector<int> strand_at(w.n);
  std::iota(strand_at.begin(), strand_at.end(), 0);
  std::map<std::pair<int, int>, long long> crossings;
  for (const auto& l : w.letters) {
    int a = strand_at[l.index - 1];
    int b = strand_at[l.index];
    if (a > b) std::swap(a, b);
    crossings[{a + 1, b + 1}] += l.sign;
    std::swap(strand_at[l.index - 1], strand_at[l.index]);
  }
  for (const auto& [pair, total] : crossings) {
    if (total % 2 != 0) throw Error("odd signed crossing total on a pure braid");
    if (total != 0) out.entries[pair] = total / 2;
  }
  return out;
}

AbelianVector abelian_add(const AbelianVector& a, const AbelianVector& b) {
  if (a.n != b.n) throw ArityError("adding abelian vectors with different strand counts");
  AbelianVector out = a;
  for (const auto& [pair, v] : b.entries) {
    out.entries[pair] += v;
    if (out.entries[pair] == 0) out.entries.erase(pair);
  }
  return out;
}

VertexClass classify_vertex(const CanonicalBraid& u) {
  AbelianVector v = abelianize(to_word(u));
  if (v.entries.size() != 1 || v.entries.begin()->second != 1)
    throw NotAVertexError("abelianization is not a unit basis vector: " + abelian_to_json(v));
  auto [i, j] = v.entries.begin()->first;
  return VertexClass{i, j};
}

BraidWord conjugation_table_rhs(int n, int r, int i, int j) {
  if (!(1 <= i && i < j && j <= n) || !(1 <= r && r <= n - 1))
    throw DomainError("conjugation table indices out of range");
  if (r == j) {
    return generator_A(n, i, j + 1);
  } else if (r == j - 1 && j - 1 > i) {
    BraidWord c = generator_A(n, j - 1, j);
    return concat(concat(c, generator_A(n, i, j - 1)), invert(c));
  } else if (j - 1 > i && i == r) {
    return generator_A(n, i + 1, j);
  } else if (r == i - 1) {
    BraidWord c = generator_A(n, i, j);
    return concat(concat(invert(c), generator_A(n, i - 1, j)), c);
  }
  return generator_A(n, i, j);
}

bool check_conjugation_identity(int n, int r, int i, int j) {
  BraidWord lhs = conjugate(sigma(n, r), generator_A(n, i, j));
  return braid_equals(lhs, conjugation_table_rhs(n, r, i, j));
}

std::string abelian_to_json(const AbelianVector& v) {
  nlohmann::json out = nlohmann::json::object();
  for (int i = 1; i <= v.n; ++i)
    for (int j = i + 1; j <= v.n; ++j) {
      std::string key = j <= 9 ? std::to_string(i) + std::to_string(j)
                               : std::to_string(i) + "," + std::to_string(j);
      out[key] = v.at(i, j);
    }
  return out.dump();
}

}  // namespace braids
