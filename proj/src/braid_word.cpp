#include "braids/braid_word.hpp"

#include <algorithm>

#include "braids/errors.hpp"

namespace braids {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> ls) : n(strands), letters(std::move(ls)) {
  validate(*this);
}

void BraidWord::push(int index, int sign) {
  letters.push_back({index, sign});
}

void validate(const BraidWord& w) {
  if (w.n < 1) throw WordError("strand count must be >= 1");
  for (const auto& l : w.letters) {
    if (l.index < 1 || l.index > w.n - 1)
      throw WordError("generator index " + std::to_string(l.index) + " out of range for n=" +
                      std::to_string(w.n));
    if (l.sign != 1 && l.sign != -1) throw WordError("letter sign must be +1 or -1");
  }
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ArityError("concatenating words with different strand counts");
  BraidWord out(a.n);
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord out(w.n);
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& w) {
  return concat(concat(a, w), invert(a));
}

BraidWord power(const BraidWord& w, int k) {
  BraidWord base = k >= 0 ? w : invert(w);
  BraidWord out(w.n);
  for (int r = 0; r < std::abs(k); ++r) out = concat(out, base);
  return out;
}

Permutation theta(const BraidWord& w) {
  validate(w);
  Permutation p = Permutation::identity(w.n);
  for (const auto& l : w.letters) p = compose(p, Permutation::transposition(w.n, l.index));
  return p;
}

long long degree(const BraidWord& w) {
  long long d = 0;
  for (const auto& l : w.letters) d += l.sign;
  return d;
}

BraidWord sigma(int n, int i, int sign) {
  BraidWord w(n);
  w.push(i, sign);
  validate(w);
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? "s" : "S") + std::to_string(l.index);
  }
  return out;
}

}  // namespace braids
