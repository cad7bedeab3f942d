#include <doctest.h>

#include <random>

#include "braids/checked_int.hpp"
#include "braids/errors.hpp"
#include "braids/group_ring.hpp"
#include "braids/words_parse.hpp"

using namespace braids;

namespace {

RingElement braid_term(const BraidGroupOps& ops, const std::string& text, std::int64_t c = 1) {
  return ring_term(ops, canonical_key(normal_form(parse_braid_word(text, ops.n()))), c);
}

RingElement random_element(std::mt19937_64& rng, const BraidGroupOps& ops) {
  RingElement p = ring_zero(ops);
  int terms = static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    BraidWord w(ops.n());
    int len = static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k)
      w.push(1 + static_cast<int>(rng() % (ops.n() - 1)), rng() % 2 ? 1 : -1);
    std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
    p = ring_add(ops, p, ring_term(ops, canonical_key(normal_form(w)), c));
  }
  return p;
}

}  // namespace

TEST_CASE("ring_add basics") {
  BraidGroupOps ops(2);
  RingElement s1 = braid_term(ops, "s1");
  RingElement one = ring_one(ops);
  RingElement p = ring_sub(ops, s1, one);  // s1 - 1
  CHECK(ring_add(ops, p, one) == s1);
  CHECK(ring_add(ops, p, ring_zero(ops)) == p);
  RingElement q = ring_sub(ops, s1, braid_term(ops, "S1"));
  CHECK(ring_add(ops, q, ring_neg(ops, q)).is_zero());
}

TEST_CASE("ring_mul expansions") {
  BraidGroupOps ops(2);
  // (s1 - s1^-1) * s1^-1 = 1 - s1^-2
  RingElement p = ring_sub(ops, braid_term(ops, "s1"), braid_term(ops, "S1"));
  RingElement got = ring_mul(ops, p, braid_term(ops, "S1"));
  RingElement want = ring_sub(ops, ring_one(ops), braid_term(ops, "S1 S1"));
  CHECK(got == want);

  CHECK(ring_mul(ops, p, ring_one(ops)) == p);

  // (s1^2 - 1)^2 = s1^4 - 2 s1^2 + 1; the middle terms collide
  RingElement d = ring_sub(ops, braid_term(ops, "s1 s1"), ring_one(ops));
  RingElement sq = ring_mul(ops, d, d);
  RingElement expect = ring_add(
      ops, ring_sub(ops, braid_term(ops, "s1 s1 s1 s1"), braid_term(ops, "s1 s1", 2)),
      ring_one(ops));
  CHECK(sq == expect);
}

TEST_CASE("mixed instantiations are rejected") {
  BraidGroupOps b2(2), b3(3);
  CHECK_THROWS_AS(ring_add(b2, ring_one(b2), ring_one(b3)), ArityError);
}

TEST_CASE("grading components") {
  BraidGroupOps ops(3);
  RingElement p = ring_sub(ops, braid_term(ops, "s1 s2"), braid_term(ops, "s1 S2"));
  CHECK(component(ops, p, 2).part == braid_term(ops, "s1 s2"));
  CHECK(component(ops, p, 0).part == ring_neg(ops, braid_term(ops, "s1 S2")));
  CHECK(component(ops, p, 1).part.is_zero());
  CHECK(support_degrees(ops, p) == std::vector<long long>{0, 2});
}

TEST_CASE("ring axioms on random elements") {
  BraidGroupOps ops(3);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    RingElement a = random_element(rng, ops);
    RingElement b = random_element(rng, ops);
    RingElement c = random_element(rng, ops);
    CHECK(ring_add(ops, a, b) == ring_add(ops, b, a));
    CHECK(ring_mul(ops, ring_mul(ops, a, b), c) == ring_mul(ops, a, ring_mul(ops, b, c)));
    CHECK(ring_mul(ops, a, ring_add(ops, b, c)) ==
          ring_add(ops, ring_mul(ops, a, b), ring_mul(ops, a, c)));
    CHECK(ring_mul(ops, a, ring_one(ops)) == a);
    CHECK(ring_mul(ops, ring_one(ops), a) == a);
  }
}

TEST_CASE("grading is multiplicative") {
  BraidGroupOps ops(3);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    RingElement a = random_element(rng, ops);
    RingElement b = random_element(rng, ops);
    RingElement prod = ring_mul(ops, a, b);
    auto degrees_a = support_degrees(ops, a);
    auto degrees_b = support_degrees(ops, b);
    for (long long d : support_degrees(ops, prod)) {
      bool reachable = false;
      for (long long da : degrees_a)
        for (long long db : degrees_b)
          if (da + db == d) reachable = true;
      CHECK(reachable);
    }
    // components sum back to the element
    RingElement sum = ring_zero(ops);
    for (long long d : support_degrees(ops, a)) sum = ring_add(ops, sum, component(ops, a, d).part);
    CHECK(sum == a);
  }
}

TEST_CASE("singleton products renormalize keys") {
  BraidGroupOps ops(3);
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord g(3), h(3);
    for (int k = 0; k < 4; ++k) {
      g.push(1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
      h.push(1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
    }
    RingElement prod = ring_mul(ops, ring_term(ops, canonical_key(normal_form(g))),
                                ring_term(ops, canonical_key(normal_form(h))));
    REQUIRE(prod.terms.size() == 1);
    CHECK(prod.terms.begin()->first == canonical_key(normal_form(concat(g, h))));
  }
}

TEST_CASE("overflow raises instead of wrapping") {
  BraidGroupOps ops(2);
  RingElement big = ring_term(ops, ops.one(), INT64_MAX);
  CHECK_THROWS_AS(ring_add(ops, big, big), ArithmeticError);
  CHECK_THROWS_AS(ring_mul(ops, big, ring_term(ops, ops.one(), 2)), ArithmeticError);
}

TEST_CASE("json form is sorted by key") {
  BraidGroupOps ops(2);
  RingElement p = ring_sub(ops, braid_term(ops, "s1"), braid_term(ops, "S1"));
  std::string json = ring_to_json(p);
  CHECK(json.find("terms") != std::string::npos);
  CHECK(json.find(canonical_key(normal_form(parse_braid_word("S1", 2)))) <
        json.find(canonical_key(normal_form(parse_braid_word("s1", 2)))));
}
