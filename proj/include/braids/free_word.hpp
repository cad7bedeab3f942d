#ifndef BRAIDS_FREE_WORD_HPP
#define BRAIDS_FREE_WORD_HPP

#include <string>
#include <vector>

namespace braids {

/// Freely reduced word in F(x_1..x_rank).  Letters are nonzero ints,
/// +g for x_g and -g for x_g^{-1}; no adjacent cancelling pair is stored.
struct FreeWord {
  int rank = 0;
  std::vector<int> letters;

  FreeWord() = default;
  explicit FreeWord(int r) : rank(r) {}
  FreeWord(int r, std::vector<int> ls);

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  bool operator==(const FreeWord&) const = default;
  bool operator<(const FreeWord& o) const { return letters < o.letters; }
};

/// Append one letter with free cancellation.
void push_reduced(std::vector<int>& letters, int letter);

FreeWord free_mul(const FreeWord& a, const FreeWord& b);
FreeWord free_inverse(const FreeWord& a);
FreeWord free_conjugate(const FreeWord& g, const FreeWord& w);  // g w g^{-1}
FreeWord free_pow(const FreeWord& a, int k);
FreeWord free_generator(int rank, int g, int sign = +1);

/// Exponent sum, the degree homomorphism with deg(x_g) = 1.
long long free_degree(const FreeWord& w);

/// Key string: 'a'+g-1 for x_g, uppercase for the inverse ("aB" = x1 x2^{-1}).
/// Requires rank <= 26.
std::string free_key(const FreeWord& w);
FreeWord parse_free_key(int rank, const std::string& key);

std::string to_string(const FreeWord& w);

}  // namespace braids

#endif
