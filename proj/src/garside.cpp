#include "braids/garside.hpp"

#include <algorithm>
#include <set>

#include "braids/errors.hpp"

namespace braids {

namespace {

// Starting set of a permutation braid: indices i with A = s_i . A'.
// Under the position->strand convention these are the descents of the
// inverse permutation; the finishing set is the descents of the permutation
// itself.
std::vector<int> starting_set(const Permutation& p) { return p.inverse().descents(); }
std::vector<int> finishing_set(const Permutation& p) { return p.descents(); }

// Conjugation by Delta, an involution on permutation braids.
Permutation tau(const Permutation& p) {
  int n = p.n();
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = n - 1 - p.apply0(n - 1 - k);
  return Permutation(std::move(img));
}

// Make every adjacent pair left-weighted by shifting crossings leftward,
// then absorb leading Delta factors and drop trailing identities.  A move
// at pair k can only disturb pairs k-1 and k+1, so the sweep steps back one
// pair after a move and advances otherwise.
void left_weight(CanonicalBraid& c) {
  auto& f = c.factors;
  size_t k = 0;
  while (k + 1 < f.size()) {
    bool moved = false;
    for (;;) {
      std::vector<int> fin = finishing_set(f[k]);
      std::vector<int> start = starting_set(f[k + 1]);
      int move = 0;
      for (int i : start) {
        if (!std::binary_search(fin.begin(), fin.end(), i)) {
          move = i;
          break;
        }
      }
      if (move == 0) break;
      Permutation t = Permutation::transposition(c.n, move);
      f[k] = compose(f[k], t);
      f[k + 1] = compose(t, f[k + 1]);
      moved = true;
    }
    if (moved && k > 0)
      --k;
    else
      ++k;
  }
  size_t lead = 0;
  while (lead < f.size() && f[lead].is_delta()) ++lead;
  c.inf += static_cast<long long>(lead);
  f.erase(f.begin(), f.begin() + lead);
  while (!f.empty() && f.back().is_identity()) f.pop_back();
}

int key_field_width(int n) {
  int w = 1;
  for (int v = n; v >= 10; v /= 10) ++w;
  return w;
}

}  // namespace

CanonicalBraid normal_form(const BraidWord& w) {
  validate(w);
  CanonicalBraid c;
  c.n = w.n;
  Permutation omega = Permutation::delta(w.n);
  // s_i^{-1} = Delta^{-1} (Delta s_i^{-1}); every Delta^{-1} passes to the
  // far left, so a factor is conjugated by tau once per negative letter
  // after it, and tau is an involution.
  long long negatives = 0;
  for (const auto& l : w.letters)
    if (l.sign < 0) ++negatives;
  c.inf = -negatives;
  long long negatives_after = negatives;
  for (const auto& l : w.letters) {
    Permutation t = Permutation::transposition(w.n, l.index);
    Permutation factor = l.sign > 0 ? t : (--negatives_after, compose(omega, t));
    c.factors.push_back(negatives_after % 2 != 0 ? tau(factor) : factor);
  }
  left_weight(c);
  return c;
}

bool braid_equals(const BraidWord& w1, const BraidWord& w2) {
  if (w1.n != w2.n) throw ArityError("comparing words with different strand counts");
  return normal_form(w1) == normal_form(w2);
}

CanonicalBraid nf_identity(int n) {
  CanonicalBraid c;
  c.n = n;
  return c;
}

CanonicalBraid nf_multiply(const CanonicalBraid& a, const CanonicalBraid& b) {
  if (a.n != b.n) throw ArityError("multiplying canonical braids with different strand counts");
  CanonicalBraid c;
  c.n = a.n;
  c.inf = a.inf + b.inf;
  c.factors = a.factors;
  // a.factors Delta^{b.inf} = Delta^{b.inf} tau^{b.inf}(a.factors)
  if (b.inf % 2 != 0)
    for (auto& f : c.factors) f = tau(f);
  c.factors.insert(c.factors.end(), b.factors.begin(), b.factors.end());
  left_weight(c);
  return c;
}

CanonicalBraid nf_invert(const CanonicalBraid& a) {
  return normal_form(invert(to_word(a)));
}

BraidWord permutation_braid_word(int n, const Permutation& p) {
  BraidWord w(n);
  Permutation cur = p;
  for (;;) {
    std::vector<int> start = starting_set(cur);
    if (start.empty()) break;
    int i = start.front();
    w.push(i, +1);
    cur = compose(Permutation::transposition(n, i), cur);
  }
  return w;
}

BraidWord to_word(const CanonicalBraid& c) {
  BraidWord delta_word = permutation_braid_word(c.n, Permutation::delta(c.n));
  BraidWord w(c.n);
  if (c.inf >= 0) {
    for (long long r = 0; r < c.inf; ++r) w = concat(w, delta_word);
  } else {
    BraidWord delta_inv = invert(delta_word);
    for (long long r = 0; r < -c.inf; ++r) w = concat(w, delta_inv);
  }
  for (const auto& f : c.factors) w = concat(w, permutation_braid_word(c.n, f));
  return w;
}

long long degree(const CanonicalBraid& c) {
  long long d = c.inf * (static_cast<long long>(c.n) * (c.n - 1) / 2);
  for (const auto& f : c.factors) d += f.inversions();
  return d;
}

Permutation theta(const CanonicalBraid& c) {
  Permutation p = Permutation::identity(c.n);
  if (c.inf % 2 != 0) p = Permutation::delta(c.n);
  for (const auto& f : c.factors) p = compose(p, f);
  return p;
}

std::string canonical_key(const CanonicalBraid& c) {
  int width = key_field_width(c.n);
  std::string key = std::to_string(c.n) + "|" + std::to_string(c.inf);
  for (const auto& f : c.factors) {
    key += '|';
    for (int v : f.images1()) {
      std::string d = std::to_string(v);
      key.append(width - d.size(), '0');
      key += d;
    }
  }
  return key;
}

CanonicalBraid parse_canonical_key(const std::string& key) {
  std::vector<std::string> fields;
  size_t pos = 0;
  while (pos <= key.size()) {
    size_t bar = key.find('|', pos);
    if (bar == std::string::npos) {
      fields.push_back(key.substr(pos));
      break;
    }
    fields.push_back(key.substr(pos, bar - pos));
    pos = bar + 1;
  }
  if (fields.size() < 2) throw WordError("malformed canonical key: " + key);
  CanonicalBraid c;
  try {
    c.n = std::stoi(fields[0]);
    c.inf = std::stoll(fields[1]);
  } catch (const std::exception&) {
    throw WordError("malformed canonical key: " + key);
  }
  if (c.n < 1) throw WordError("malformed canonical key: " + key);
  int width = key_field_width(c.n);
  for (size_t fi = 2; fi < fields.size(); ++fi) {
    const std::string& fld = fields[fi];
    if (static_cast<int>(fld.size()) != width * c.n)
      throw WordError("malformed canonical key factor: " + key);
    std::vector<int> img(c.n);
    for (int k = 0; k < c.n; ++k) {
      int v = 0;
      for (int d = 0; d < width; ++d) {
        char ch = fld[k * width + d];
        if (ch < '0' || ch > '9') throw WordError("malformed canonical key factor: " + key);
        v = v * 10 + (ch - '0');
      }
      if (v < 1 || v > c.n) throw WordError("malformed canonical key factor: " + key);
      img[k] = v - 1;
    }
    try {
      c.factors.emplace_back(std::move(img));
    } catch (const DomainError&) {
      throw WordError("malformed canonical key factor: " + key);
    }
  }
  return c;
}

bool is_left_weighted(const CanonicalBraid& c) {
  for (const auto& f : c.factors)
    if (f.is_identity() || f.is_delta()) return false;
  for (size_t k = 0; k + 1 < c.factors.size(); ++k) {
    std::vector<int> fin = finishing_set(c.factors[k]);
    for (int i : starting_set(c.factors[k + 1]))
      if (!std::binary_search(fin.begin(), fin.end(), i)) return false;
  }
  return true;
}

}  // namespace braids
