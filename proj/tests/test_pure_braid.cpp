#include <doctest.h>

#include <algorithm>
#include <random>

#include "braids/errors.hpp"
#include "braids/pure_braid.hpp"
#include "braids/words_parse.hpp"

using namespace braids;

namespace {

BraidWord word(int n, const std::string& text) { return parse_braid_word(text, n); }

BraidWord random_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w(n);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < len; ++k) w.push(index(rng), coin(rng) ? 1 : -1);
  return w;
}

BraidWord random_pure_word(std::mt19937_64& rng, int n, int parts) {
  // products of conjugated A_ij^{+-1} are exactly the pure braids we need
  BraidWord w(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < parts; ++k) {
    int i = 1 + static_cast<int>(rng() % (n - 1));
    int j = i + 1 + static_cast<int>(rng() % (n - i));
    BraidWord a = generator_A(n, i, j);
    if (coin(rng)) a = invert(a);
    w = concat(w, conjugate(random_word(rng, n, 2), a));
  }
  return w;
}

}  // namespace

TEST_CASE("generator_A words") {
  CHECK(generator_A(3, 1, 2).letters == word(3, "s1 s1").letters);
  CHECK(generator_A(3, 1, 3).letters == word(3, "s2 s1 s1 S2").letters);
  CHECK(generator_A(4, 2, 4).letters == word(4, "s3 s2 s2 S3").letters);
  CHECK_THROWS_AS(generator_A(3, 2, 2), DomainError);
}

TEST_CASE("is_pure") {
  CHECK(is_pure(word(2, "s1 s1")));
  CHECK(!is_pure(word(2, "s1")));
  CHECK(is_pure(generator_A(3, 1, 3)));
}

TEST_CASE("abelianize basics") {
  AbelianVector v = abelianize(word(3, "s1 s1"));
  CHECK(v.at(1, 2) == 1);
  CHECK(v.at(1, 3) == 0);
  CHECK(v.entries.size() == 1);

  v = abelianize(word(3, "s2 s1 s1 S2"));
  CHECK(v.at(1, 3) == 1);
  CHECK(v.entries.size() == 1);

  // abelianization kills conjugation
  BraidWord w = concat(concat(generator_A(3, 1, 2), generator_A(3, 1, 3)),
                       invert(generator_A(3, 1, 2)));
  v = abelianize(w);
  CHECK(v.at(1, 3) == 1);
  CHECK(v.entries.size() == 1);

  CHECK_THROWS_AS(abelianize(word(3, "s1")), DomainError);
}

TEST_CASE("abelianize is a homomorphism killing pure conjugation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    BraidWord w1 = random_pure_word(rng, n, 1 + static_cast<int>(rng() % 2));
    BraidWord w2 = random_pure_word(rng, n, 1 + static_cast<int>(rng() % 2));
    CHECK(abelianize(concat(w1, w2)) == abelian_add(abelianize(w1), abelianize(w2)));
    BraidWord beta = random_pure_word(rng, n, 1);
    CHECK(abelianize(conjugate(beta, w1)) == abelianize(w1));
    // a non-pure conjugator may permute the basis but preserves the
    // multiset of coordinates
    BraidWord gamma = random_word(rng, n, 3);
    auto values = [](const AbelianVector& v) {
      std::vector<long long> out;
      for (const auto& [pair, c] : v.entries) out.push_back(c);
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(values(abelianize(conjugate(gamma, w1))) == values(abelianize(w1)));
  }
}

TEST_CASE("classify_vertex") {
  CHECK(classify_vertex(normal_form(word(3, "s2 s1 s1 S2"))) == VertexClass{1, 3});
  CHECK(classify_vertex(normal_form(word(3, "s1 s1"))) == VertexClass{1, 2});
  // cross-check the r = i-1 table row read inversely
  CHECK(classify_vertex(normal_form(word(3, "s1 s2 s2 S1"))) == VertexClass{1, 3});
  CHECK_THROWS_AS(classify_vertex(normal_form(concat(generator_A(3, 1, 2), generator_A(3, 1, 3)))),
                  NotAVertexError);
}

TEST_CASE("conjugation table examples") {
  CHECK(check_conjugation_identity(4, 3, 1, 3));  // row r=j -> A_{1,4}
  CHECK(check_conjugation_identity(4, 2, 1, 3));  // row r=j-1>i
  CHECK(check_conjugation_identity(4, 3, 1, 2));  // row otherwise
}

TEST_CASE("conjugation table all rows up to n=5") {
  for (int n = 2; n <= 5; ++n)
    for (int r = 1; r <= n - 1; ++r)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(check_conjugation_identity(n, r, i, j));
}

TEST_CASE("vertices have degree two and unit abelianization") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord alpha = random_word(rng, n, static_cast<int>(rng() % 5));
    int i = 1 + static_cast<int>(rng() % (n - 1));
    BraidWord u = conjugate(alpha, word(n, "s" + std::to_string(i) + " s" + std::to_string(i)));
    CHECK(degree(u) == 2);
    AbelianVector v = abelianize(u);
    CHECK(v.entries.size() == 1);
    CHECK(v.entries.begin()->second == 1);
  }
}

TEST_CASE("abelian vector json lists every pair") {
  AbelianVector v = abelianize(word(3, "s1 s1"));
  CHECK(abelian_to_json(v) == R"({"12":1,"13":0,"23":0})");
}
