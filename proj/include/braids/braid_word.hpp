#ifndef BRAIDS_BRAID_WORD_HPP
#define BRAIDS_BRAID_WORD_HPP

#include <string>
#include <vector>

#include "braids/permutation.hpp"

namespace braids {

/// One Artin generator occurrence: s_index^sign with sign in {+1,-1}.
struct BraidLetter {
  int index = 1;
  int sign = +1;
  bool operator==(const BraidLetter&) const = default;
};

/// Word in the Artin generators of the braid group on n strands.
/// The empty word is the identity; letter indices lie in [1, n-1].
struct BraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  BraidWord() = default;
  explicit BraidWord(int strands) : n(strands) {}
  BraidWord(int strands, std::vector<BraidLetter> ls);

  void push(int index, int sign);
  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
};

void validate(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
/// Reversed sequence with flipped signs.
BraidWord invert(const BraidWord& w);
/// a w a^{-1}.
BraidWord conjugate(const BraidWord& a, const BraidWord& w);
BraidWord power(const BraidWord& w, int k);

/// Image under the epimorphism to Sym_n; letter signs are irrelevant.
Permutation theta(const BraidWord& w);
/// Exponent sum; the homomorphism with deg(s_i) = 1.
long long degree(const BraidWord& w);

/// Single generator s_i^sign as a word, convenience.
BraidWord sigma(int n, int i, int sign = +1);

std::string to_string(const BraidWord& w);

}  // namespace braids

#endif
