#ifndef BRAIDS_GROUP_RING_HPP
#define BRAIDS_GROUP_RING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braids/garside.hpp"
#include "braids/free_word.hpp"

namespace braids {

/// Group-with-canonical-key contract: keys are byte strings, renormalizing a
/// key is the identity, and degree is the exponent-sum grading.
class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual std::string one() const = 0;
  virtual std::string mul(const std::string& a, const std::string& b) const = 0;
  virtual long long degree(const std::string& key) const = 0;
  /// Instantiation tag, e.g. "braid:4"; elements of different instantiations
  /// must not be mixed.
  virtual std::string tag() const = 0;
};

class BraidGroupOps final : public GroupOps {
 public:
  explicit BraidGroupOps(int n) : n_(n) {}
  int n() const { return n_; }
  std::string one() const override;
  std::string mul(const std::string& a, const std::string& b) const override;
  long long degree(const std::string& key) const override;
  std::string tag() const override { return "braid:" + std::to_string(n_); }

 private:
  int n_;
};

class FreeGroupOps final : public GroupOps {
 public:
  explicit FreeGroupOps(int rank) : rank_(rank) {}
  int rank() const { return rank_; }
  std::string one() const override { return ""; }
  std::string mul(const std::string& a, const std::string& b) const override;
  long long degree(const std::string& key) const override;
  std::string tag() const override { return "free:" + std::to_string(rank_); }

 private:
  int rank_;
};

/// Finitely supported integer combination of canonical keys.  No stored
/// coefficient is zero; map order is lexicographic on key bytes, which fixes
/// the serialized form.
struct RingElement {
  std::string tag;
  std::map<std::string, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const RingElement&) const = default;
};

struct GradedComponent {
  long long k = 0;
  RingElement part;
};

RingElement ring_zero(const GroupOps& g);
RingElement ring_one(const GroupOps& g);
RingElement ring_term(const GroupOps& g, const std::string& key, std::int64_t coeff = 1);

RingElement ring_add(const GroupOps& g, const RingElement& p, const RingElement& q);
RingElement ring_neg(const GroupOps& g, const RingElement& p);
RingElement ring_sub(const GroupOps& g, const RingElement& p, const RingElement& q);
/// Bilinear extension of group multiplication; product keys renormalize
/// through GroupOps::mul.
RingElement ring_mul(const GroupOps& g, const RingElement& p, const RingElement& q);
RingElement ring_scale(const GroupOps& g, std::int64_t c, const RingElement& p);

/// Restriction of p to keys of degree k.
GradedComponent component(const GroupOps& g, const RingElement& p, long long k);
/// The degrees whose component is nonzero, ascending.
std::vector<long long> support_degrees(const GroupOps& g, const RingElement& p);

/// {"terms":[{"coeff":c,"key":k},...]} sorted by key.
std::string ring_to_json(const RingElement& p);
std::string ring_to_string(const RingElement& p);

}  // namespace braids

#endif
