#include "braids/group_ring.hpp"

#include "braids/checked_int.hpp"
#include "braids/errors.hpp"

#include <json.hpp>

namespace braids {

namespace {
void check_tag(const GroupOps& g, const RingElement& p) {
  if (p.tag != g.tag())
    throw ArityError("ring element instantiation " + p.tag + " does not match " + g.tag());
}
}  // namespace

std::string BraidGroupOps::one() const { return canonical_key(nf_identity(n_)); }

std::string BraidGroupOps::mul(const std::string& a, const std::string& b) const {
  CanonicalBraid ca = parse_canonical_key(a);
  CanonicalBraid cb = parse_canonical_key(b);
  if (ca.n != n_ || cb.n != n_) throw ArityError("key strand count does not match ring");
  return canonical_key(nf_multiply(ca, cb));
}

long long BraidGroupOps::degree(const std::string& key) const {
  return braids::degree(parse_canonical_key(key));
}

std::string FreeGroupOps::mul(const std::string& a, const std::string& b) const {
  return free_key(free_mul(parse_free_key(rank_, a), parse_free_key(rank_, b)));
}

long long FreeGroupOps::degree(const std::string& key) const {
  return free_degree(parse_free_key(rank_, key));
}

RingElement ring_zero(const GroupOps& g) {
  RingElement p;
  p.tag = g.tag();
  return p;
}

RingElement ring_one(const GroupOps& g) { return ring_term(g, g.one()); }

RingElement ring_term(const GroupOps& g, const std::string& key, std::int64_t coeff) {
  RingElement p;
  p.tag = g.tag();
  if (coeff != 0) p.terms[key] = coeff;
  return p;
}

RingElement ring_add(const GroupOps& g, const RingElement& p, const RingElement& q) {
  check_tag(g, p);
  check_tag(g, q);
  RingElement out = p;
  for (const auto& [key, c] : q.terms) {
    auto it = out.terms.find(key);
    if (it == out.terms.end()) {
      out.terms.emplace(key, c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

RingElement ring_neg(const GroupOps& g, const RingElement& p) {
  check_tag(g, p);
  RingElement out = p;
  for (auto& [key, c] : out.terms) c = checked_neg(c);
  return out;
}

RingElement ring_sub(const GroupOps& g, const RingElement& p, const RingElement& q) {
  return ring_add(g, p, ring_neg(g, q));
}

RingElement ring_mul(const GroupOps& g, const RingElement& p, const RingElement& q) {
  check_tag(g, p);
  check_tag(g, q);
  RingElement out = ring_zero(g);
  for (const auto& [ka, ca] : p.terms) {
    for (const auto& [kb, cb] : q.terms) {
      std::string key = g.mul(ka, kb);
      std::int64_t c = checked_mul(ca, cb);
      auto it = out.terms.find(key);
      if (it == out.terms.end()) {
        if (c != 0) out.terms.emplace(std::move(key), c);
      } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

RingElement ring_scale(const GroupOps& g, std::int64_t c, const RingElement& p) {
  check_tag(g, p);
  RingElement out = ring_zero(g);
  if (c == 0) return out;
  for (const auto& [key, pc] : p.terms) out.terms[key] = checked_mul(c, pc);
  return out;
}

GradedComponent component(const GroupOps& g, const RingElement& p, long long k) {
  check_tag(g, p);
  GradedComponent out;
  out.k = k;
  out.part = ring_zero(g);
  for (const auto& [key, c] : p.terms)
    if (g.degree(key) == k) out.part.terms.emplace(key, c);
  return out;
}

std::vector<long long> support_degrees(const GroupOps& g, const RingElement& p) {
  check_tag(g, p);
  std::map<long long, bool> degrees;
  for (const auto& [key, c] : p.terms) degrees[g.degree(key)] = true;
  std::vector<long long> out;
  for (const auto& [d, seen] : degrees) out.push_back(d);
  return out;
}

std::string ring_to_json(const RingElement& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : p.terms) terms.push_back({{"coeff", c}, {"key", key}});
  return nlohmann::json{{"terms", terms}}.dump();
}

std::string ring_to_string(const RingElement& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : p.terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*[" + key + "]";
  }
  return out;
}

}  // namespace braids
