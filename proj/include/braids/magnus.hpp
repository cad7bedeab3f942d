#ifndef BRAIDS_MAGNUS_HPP
#define BRAIDS_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braids/free_word.hpp"
#include "braids/group_ring.hpp"

namespace braids {

/// Letter of a raw word over {x^{+-1}, xhat^{+-1}}.
struct HatLetter {
  int gen = 1;
  bool hat = false;
  int sign = +1;
};

/// Block of the normal form of an element of the free product of the
/// rank-two abelian groups on {x, xhat}: xhat^p x^q with (p,q) != (0,0).
struct HatBlock {
  int gen = 1;
  long long p = 0;
  long long q = 0;
  bool operator==(const HatBlock&) const = default;
};

/// Normal form: consecutive blocks have distinct generators.
struct HatWord {
  int rank = 0;
  std::vector<HatBlock> blocks;
  bool operator==(const HatWord&) const = default;
};

/// Merge letters blockwise (xhat and x commute within a block), drop (0,0)
/// blocks, merge newly adjacent same-generator blocks.
HatWord hatG_normal_form(int rank, const std::vector<HatLetter>& letters);

/// Degree-graded, degree-truncated element of the completed free-group
/// ring: parts[k] is supported on degree-k words, k <= cutoff.
struct TruncatedSeries {
  int rank = 0;
  long long cutoff = 0;
  std::map<long long, RingElement> parts;
  bool operator==(const TruncatedSeries&) const = default;
};

TruncatedSeries series_zero(int rank, long long cutoff);
TruncatedSeries series_one(int rank, long long cutoff);
TruncatedSeries series_from_ring(const FreeGroupOps& ops, const RingElement& p, long long cutoff);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
/// Product truncated at the smaller cutoff.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// Sum of the parts; only valid when the series is polynomial (all terms
/// retained below the cutoff), which holds for expansions of hat-positive
/// words at large enough cutoff.
RingElement series_to_ring(const FreeGroupOps& ops, const TruncatedSeries& s);
std::string series_to_string(const TruncatedSeries& s);

/// Magnus-type expansion x -> x, xhat -> x - 1, with
/// xhat^{-1} -> -(1 + x + x^2 + ...), truncated at degree N.  Intermediate
/// cutoffs are widened so the result is exactly the degree-<=N part of the
/// full product.
TruncatedSeries magnus_expand(const HatWord& h, long long N);

/// One factor g x g^{-1} of a word over Y; the conjugator is reduced and
/// does not end in x^{+-1}, which makes the representation unique.
struct YFactor {
  FreeWord conj;
  int gen = 1;
  bool operator==(const YFactor&) const = default;
};

struct YWord {
  int rank = 0;
  std::vector<YFactor> factors;
  bool operator==(const YWord&) const = default;
};

YFactor make_y_factor(const FreeWord& conj, int gen);
FreeWord y_factor_word(const YFactor& f);

/// nu(y) = y - 1 extended multiplicatively: product of (g x g^{-1} - 1).
RingElement nu_free(const YWord& w);

/// Scan of a word over {x^{+-1}, xhat} through SG = F+(Yhat) x| F(X):
/// returns the Y-word and free part with eta(word) = nu_free(yword) * free.
std::pair<YWord, FreeWord> sg_decompose(int rank, const std::vector<HatLetter>& letters);

struct Prop41Report {
  long long checked = 0;
  std::vector<std::pair<std::string, std::string>> collisions;  // pairs of y-word dumps
  double elapsed_ms = 0;
  bool ok() const { return collisions.empty(); }
};

/// Enumerates all Y-words with conjugator length <= max_conj_len and word
/// length <= max_word_len, computes nu_free for each, and reports any
/// collision between distinct Y-words.  The planned count must stay within
/// 10^5 or BudgetError is raised.
Prop41Report verify_prop41_desk(int rank, int max_conj_len, int max_word_len);

std::string to_string(const YWord& w);
std::string to_string(const HatWord& h);

}  // namespace braids

#endif
