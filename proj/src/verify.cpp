#include "braids/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include <json.hpp>

#include "braids/artin_action.hpp"
#include "braids/automorphisms.hpp"
#include "braids/errors.hpp"
#include "braids/garside.hpp"
#include "braids/magnus.hpp"
#include "braids/pure_braid.hpp"
#include "braids/singular_braid.hpp"
#include "braids/trace_monoid.hpp"

namespace braids {

namespace {

using clock_type = std::chrono::steady_clock;

struct SuiteRun {
  VerifyReport report;
  clock_type::time_point start = clock_type::now();
  std::optional<clock_type::time_point> deadline;

  explicit SuiteRun(std::string name, const VerifyOptions& options) {
    report.suite = std::move(name);
    if (options.budget_seconds)
      deadline = start + std::chrono::duration_cast<clock_type::duration>(
                             std::chrono::duration<double>(*options.budget_seconds));
  }

  bool out_of_budget() {
    if (deadline && clock_type::now() > *deadline) {
      report.aborted = true;
      return true;
    }
    return false;
  }

  void fail(const std::string& message) {
    if (report.failures.size() < 32) report.failures.push_back(message);
  }

  VerifyReport finish() {
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
    return report;
  }
};

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

BraidWord random_braid_word(std::mt19937_64& rng, int n, int len) {
  BraidWord w(n);
  for (int k = 0; k < len; ++k) w.push(rand_int(rng, 1, n - 1), rand_int(rng, 0, 1) ? 1 : -1);
  return w;
}

SingularWord random_singular_word(std::mt19937_64& rng, int n, int len) {
  SingularWord w(n);
  for (int k = 0; k < len; ++k) {
    int i = rand_int(rng, 1, n - 1);
    switch (rand_int(rng, 0, 3)) {
      case 0: w.push_sigma(i, +1); break;
      case 1: w.push_sigma(i, -1); break;
      case 2: w.push_tau(i); break;
      default: w.push_delta(i); break;
    }
  }
  return w;
}

// Element-preserving rewrites: cancelling-pair insertion, far commutations,
// braid-relation rewrites.  Keeps the word within max_len letters.
BraidWord scramble(std::mt19937_64& rng, const BraidWord& w, int max_len) {
  BraidWord out = w;
  for (int round = 0; round < 8; ++round) {
    int choice = rand_int(rng, 0, 2);
    if (choice == 0 && static_cast<int>(out.letters.size()) + 2 <= max_len && out.n >= 2) {
      int at = rand_int(rng, 0, static_cast<int>(out.letters.size()));
      int i = rand_int(rng, 1, out.n - 1);
      int s = rand_int(rng, 0, 1) ? 1 : -1;
      out.letters.insert(out.letters.begin() + at, {BraidLetter{i, s}, BraidLetter{i, -s}});
    } else if (choice == 1 && out.letters.size() >= 2) {
      int at = rand_int(rng, 0, static_cast<int>(out.letters.size()) - 2);
      auto& a = out.letters[at];
      auto& b = out.letters[at + 1];
      if (std::abs(a.index - b.index) > 1) std::swap(a, b);
    } else if (out.letters.size() >= 3) {
      int at = rand_int(rng, 0, static_cast<int>(out.letters.size()) - 3);
      auto& a = out.letters[at];
      auto& b = out.letters[at + 1];
      auto& c = out.letters[at + 2];
      if (a.sign == 1 && b.sign == 1 && c.sign == 1 && a.index == c.index &&
          std::abs(a.index - b.index) == 1) {
        int i = a.index, j = b.index;
        a.index = j;
        b.index = i;
        c.index = j;
      }
    }
  }
  return out;
}

// --- criterion 1 ---------------------------------------------------------

VerifyReport suite_word_problem(const VerifyOptions& options) {
  SuiteRun run("word-problem", options);
  std::mt19937_64 rng(options.seed);
  const int pairs = 1000;
  const int max_len = options.max_len.value_or(12);
  std::vector<int> strand_counts = options.n ? std::vector<int>{*options.n}
                                             : std::vector<int>{2, 3, 4, 5};
  for (int n : strand_counts) {
    for (int k = 0; k < pairs; ++k) {
      if (run.out_of_budget()) return run.finish();
      BraidWord w1 = random_braid_word(rng, n, rand_int(rng, 0, max_len));
      BraidWord w2 = rand_int(rng, 0, 1) ? random_braid_word(rng, n, rand_int(rng, 0, max_len))
                                         : scramble(rng, w1, max_len);
      bool garside = braid_equals(w1, w2);
      bool artin = artin_action(w1) == artin_action(w2);
      ++run.report.checked;
      if (garside != artin)
        run.fail("disagreement on n=" + std::to_string(n) + " \"" + to_string(w1) + "\" vs \"" +
                 to_string(w2) + "\": garside=" + std::to_string(garside));
      if (garside) ++run.report.info["equal_pairs"];
    }
  }
  return run.finish();
}

// --- criterion 2 ---------------------------------------------------------

void check_braid_relations(SuiteRun& run, int n) {
  for (int j = 1; j <= n - 1; ++j) {
    for (int k = 1; k <= n - 1; ++k) {
      if (j == k) continue;
      BraidWord lhs(n), rhs(n);
      if (std::abs(j - k) > 1) {
        lhs = concat(sigma(n, j), sigma(n, k));
        rhs = concat(sigma(n, k), sigma(n, j));
      } else {
        lhs = concat(concat(sigma(n, j), sigma(n, k)), sigma(n, j));
        rhs = concat(concat(sigma(n, k), sigma(n, j)), sigma(n, k));
      }
      ++run.report.checked;
      if (!braid_equals(lhs, rhs))
        run.fail("braid relation failed: n=" + std::to_string(n) + " j=" + std::to_string(j) +
                 " k=" + std::to_string(k));
    }
  }
}

void check_sb_relations(SuiteRun& run, int n, bool delta_form) {
  SingularContext ctx(n);
  auto singular = [&](int kind, int i, int sign = +1) {
    SingularWord w(n);
    if (kind == 0)
      w.push_sigma(i, sign);
    else if (kind == 1)
      w.push_tau(i);
    else
      w.push_delta(i);
    return w;
  };
  const int special = delta_form ? 2 : 1;  // d_i or t_i
  auto expect = [&](const SingularWord& a, const SingularWord& b, const std::string& what) {
    ++run.report.checked;
    if (!sb_equals(ctx, a, b))
      run.fail((delta_form ? std::string("delta") : std::string("tau")) + "-form relation failed: " +
               what + " at n=" + std::to_string(n));
  };
  SingularWord empty(n);
  for (int i = 1; i <= n - 1; ++i) {
    expect(concat(singular(0, i, +1), singular(0, i, -1)), empty, "s s^-1 = 1");
    expect(concat(singular(0, i, -1), singular(0, i, +1)), empty, "s^-1 s = 1");
    expect(concat(singular(0, i), singular(special, i)),
           concat(singular(special, i), singular(0, i)), "s_i x_i = x_i s_i");
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) > 1) {
        expect(concat(singular(0, i), singular(0, j)), concat(singular(0, j), singular(0, i)),
               "far s s");
        expect(concat(singular(0, i), singular(special, j)),
               concat(singular(special, j), singular(0, i)), "far s x");
        expect(concat(singular(special, i), singular(special, j)),
               concat(singular(special, j), singular(special, i)), "far x x");
      } else if (std::abs(i - j) == 1) {
        expect(concat(concat(singular(0, i), singular(0, j)), singular(0, i)),
               concat(concat(singular(0, j), singular(0, i)), singular(0, j)), "adjacent s s s");
        expect(concat(concat(singular(0, i), singular(0, j)), singular(special, i)),
               concat(concat(singular(special, j), singular(0, i)), singular(0, j)),
               "s_i s_j x_i = x_j s_i s_j");
      }
    }
  }
}

void check_pbn_relations(SuiteRun& run, int n) {
  auto A = [&](int i, int j) { return generator_A(n, i, j); };
  for (int r = 1; r <= n; ++r) {
    for (int s = r + 1; s <= n; ++s) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (r == i && s == j) continue;
          BraidWord lhs = concat(concat(invert(A(r, s)), A(i, j)), A(r, s));
          std::optional<BraidWord> rhs;
          if ((r < s && s < i && i < j) || (i < r && r < s && s < j)) {
            rhs = A(i, j);
          } else if (s == i) {
            rhs = concat(concat(A(r, j), A(i, j)), invert(A(r, j)));
          } else if (i == r && r < s && s < j) {
            rhs = concat(concat(concat(concat(A(i, j), A(s, j)), A(i, j)), invert(A(s, j))),
                         invert(A(i, j)));
          } else if (r < i && i < s && s < j) {
            BraidWord comm = concat(concat(concat(A(r, j), A(s, j)), invert(A(r, j))),
                                    invert(A(s, j)));
            rhs = concat(concat(comm, A(i, j)), invert(comm));
          }
          if (!rhs) continue;
          ++run.report.checked;
          if (!braid_equals(lhs, *rhs))
            run.fail("PB relation failed: n=" + std::to_string(n) + " rs=" + std::to_string(r) +
                     std::to_string(s) + " ij=" + std::to_string(i) + std::to_string(j));
        }
      }
    }
  }
}

VerifyReport suite_relations(const VerifyOptions& options) {
  SuiteRun run("relations", options);
  const int n_max = options.n.value_or(5);
  for (int n = 2; n <= n_max; ++n) {
    if (run.out_of_budget()) return run.finish();
    check_braid_relations(run, n);
    check_sb_relations(run, n, false);
    check_sb_relations(run, n, true);
    check_pbn_relations(run, n);
  }
  return run.finish();
}

// --- criterion 3 ---------------------------------------------------------

VerifyReport suite_lemma32(const VerifyOptions& options) {
  SuiteRun run("lemma32", options);
  std::vector<int> strand_counts = options.n ? std::vector<int>{*options.n}
                                             : std::vector<int>{4, 5};
  for (int n : strand_counts) {
    for (int r = 1; r <= n - 1; ++r) {
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          if (run.out_of_budget()) return run.finish();
          ++run.report.checked;
          if (!check_conjugation_identity(n, r, i, j))
            run.fail("conjugation table row failed: n=" + std::to_string(n) + " r=" +
                     std::to_string(r) + " (i,j)=(" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
        }
      }
    }
  }
  // Partition property: every a s_i^2 a^{-1} has degree 2 and unit
  // abelianization.
  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < 200; ++k) {
    if (run.out_of_budget()) return run.finish();
    int n = rand_int(rng, 2, 5);
    BraidWord alpha = random_braid_word(rng, n, rand_int(rng, 0, 4));
    Vertex v = vertex_from_conjugate(alpha, rand_int(rng, 1, n - 1));
    ++run.report.checked;
    if (degree(v.braid) != 2) run.fail("vertex degree is not 2: " + v.key());
    AbelianVector ab = abelianize(to_word(v.braid));
    if (ab.entries.size() != 1 || ab.entries.begin()->second != 1)
      run.fail("vertex abelianization is not a unit vector: " + v.key());
  }
  return run.finish();
}

// --- criterion 4 ---------------------------------------------------------

VerifyReport suite_lemma21(const VerifyOptions& options) {
  SuiteRun run("lemma21", options);
  std::mt19937_64 rng(options.seed);
  const int n = options.n.value_or(4);
  const int max_len = options.max_len.value_or(6);
  SingularContext ctx(n);
  for (int k = 0; k < 500; ++k) {
    SingularWord beta = random_singular_word(rng, n, rand_int(rng, 0, max_len));
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (run.out_of_budget()) return run.finish();
        SingularWord si2(n), sj2(n), di(n), dj(n);
        si2.push_sigma(i, +1);
        si2.push_sigma(i, +1);
        sj2.push_sigma(j, +1);
        sj2.push_sigma(j, +1);
        di.push_delta(i);
        dj.push_delta(j);
        bool squares = sb_equals(ctx, concat(beta, si2), concat(sj2, beta));
        bool deltas = sb_equals(ctx, concat(beta, di), concat(dj, beta));
        ++run.report.checked;
        if (squares != deltas)
          run.fail("square/delta commutation equivalence failed at i=" + std::to_string(i) + " j=" +
                   std::to_string(j));
        if (squares) ++run.report.info["nonvacuous"];
      }
    }
  }
  return run.finish();
}

// --- criterion 5 ---------------------------------------------------------

VerifyReport suite_eta_injectivity(const VerifyOptions& options) {
  SuiteRun run("eta-injectivity", options);
  const int n = options.n.value_or(3);
  const int max_len = options.max_len.value_or(4);
  SingularContext ctx(n);

  std::vector<SingularLetter> alphabet;
  for (int i = 1; i <= n - 1; ++i) {
    alphabet.push_back({SingularKind::Sigma, i, +1});
    alphabet.push_back({SingularKind::Sigma, i, -1});
    alphabet.push_back({SingularKind::Tau, i, +1});
    alphabet.push_back({SingularKind::Delta, i, +1});
  }

  std::map<std::string, std::string> class_to_eta;  // sb key -> eta dump
  std::map<std::string, std::string> eta_to_class;  // eta dump -> sb key
  SingularWord word(n);
  bool stop = false;
  auto visit = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (run.out_of_budget()) {
      stop = true;
      return;
    }
    SBElement e = decompose(ctx, word);
    std::string sb_key = sb_to_json(e);
    std::string eta_key = ring_to_string(desingularize(word));
    ++run.report.checked;
    auto [class_it, new_class] = class_to_eta.try_emplace(sb_key, eta_key);
    if (new_class) {
      auto [eta_it, new_eta] = eta_to_class.try_emplace(eta_key, sb_key);
      if (!new_eta)
        run.fail("eta collision between distinct classes " + eta_it->second + " and " + sb_key);
    } else if (class_it->second != eta_key) {
      run.fail("eta is not constant on the class " + sb_key);
    }
    if (depth == max_len) return;
    for (const auto& l : alphabet) {
      word.letters.push_back(l);
      self(self, depth + 1);
      word.letters.pop_back();
    }
  };
  visit(visit, 0);
  run.report.info["classes"] = static_cast<long long>(class_to_eta.size());
  return run.finish();
}

// --- criterion 6 ---------------------------------------------------------

VerifyReport suite_factorization(const VerifyOptions& options) {
  SuiteRun run("factorization", options);
  std::mt19937_64 rng(options.seed);
  const int max_len = options.max_len.value_or(6);
  std::map<int, SingularContext> contexts;
  for (int k = 0; k < 500; ++k) {
    if (run.out_of_budget()) return run.finish();
    int n = options.n.value_or(rand_int(rng, 2, 4));
    auto ctx_it = contexts.try_emplace(n, n).first;
    SingularWord w = random_singular_word(rng, n, rand_int(rng, 0, max_len));
    SBElement e = decompose(ctx_it->second, w);
    BraidGroupOps ops(n);
    RingElement eta = desingularize(w);
    RingElement via_nu =
        ring_mul(ops, nu(n, e.trace), ring_term(ops, canonical_key(e.braid)));
    ++run.report.checked;
    if (eta != via_nu) {
      run.fail("eta(w) != nu(trace) * braid for \"" + sb_to_json(e) + "\"");
      continue;
    }
    RecoverReport rec = lowest_component_recover(eta, e);
    if (!rec.ok) run.fail("lowest component check failed: " + rec.detail);
  }
  return run.finish();
}

// --- criterion 7 ---------------------------------------------------------

VerifyReport suite_eq32(const VerifyOptions& options) {
  SuiteRun run("eq32", options);
  std::mt19937_64 rng(options.seed);
  for (int k = 0; k < 200; ++k) {
    if (run.out_of_budget()) return run.finish();
    int n = options.n.value_or(rand_int(rng, 2, 4));
    int l = rand_int(rng, 0, 4);
    TraceWord t;
    for (int v = 0; v < l; ++v) {
      BraidWord alpha = random_braid_word(rng, n, rand_int(rng, 0, 3));
      Vertex vert = vertex_from_conjugate(alpha, rand_int(rng, 1, n - 1));
      t.letters.push_back(vert.key());
    }
    ++run.report.checked;
    if (nu(n, t) != nu_subindex_expansion(n, t))
      run.fail("subindex expansion mismatch at l=" + std::to_string(l));
  }
  return run.finish();
}

// --- criterion 8 ---------------------------------------------------------

std::set<std::vector<std::string>> exchange_closure(const std::vector<std::string>& word,
                                                    const EdgeSetOracle& oracle) {
  std::set<std::vector<std::string>> seen{word};
  std::vector<std::vector<std::string>> queue{word};
  while (!queue.empty()) {
    std::vector<std::string> cur = std::move(queue.back());
    queue.pop_back();
    for (size_t at = 0; at + 1 < cur.size(); ++at) {
      if (cur[at] == cur[at + 1] || !oracle.edge(cur[at], cur[at + 1])) continue;
      std::vector<std::string> next = cur;
      std::swap(next[at], next[at + 1]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

VerifyReport suite_cf_exchange(const VerifyOptions& options) {
  SuiteRun run("cf-exchange", options);
  std::mt19937_64 rng(options.seed);
  const std::vector<std::string> letters{"a", "b", "c", "d", "e", "f"};
  for (int instance = 0; instance < 200; ++instance) {
    if (run.out_of_budget()) return run.finish();
    int letter_count = rand_int(rng, 1, 6);
    EdgeSetOracle oracle;
    int density = rand_int(rng, 1, 9);
    for (int a = 0; a < letter_count; ++a)
      for (int b = a + 1; b < letter_count; ++b)
        if (rand_int(rng, 1, 10) <= density) oracle.add_edge(letters[a], letters[b]);

    int len = rand_int(rng, 0, options.max_len.value_or(6));
    TraceWord x;
    for (int k = 0; k < len; ++k) x.letters.push_back(letters[rand_int(rng, 0, letter_count - 1)]);
    auto closure = exchange_closure(x.letters, oracle);

    // normal form = lexicographic minimum of the closure
    TraceWord nf = trace_normal_form(x, oracle);
    ++run.report.checked;
    if (closure.find(nf.letters) == closure.end() || *closure.begin() != nf.letters)
      run.fail("normal form is not the closure minimum");

    // random shuffle: trace_equals must agree with closure membership
    TraceWord y = x;
    std::shuffle(y.letters.begin(), y.letters.end(), rng);
    ++run.report.checked;
    if (trace_equals(x, y, oracle) != (closure.count(y.letters) > 0))
      run.fail("trace_equals disagrees with exchange closure");

    // exchange property on a closure member with the occurrence pattern
    if (!x.letters.empty()) {
      auto it = closure.begin();
      std::advance(it, rand_int(rng, 0, static_cast<int>(closure.size()) - 1));
      TraceWord z;
      z.letters = *it;
      int k = 0;
      for (size_t at = 0; at < z.letters.size(); ++at) {
        if (z.letters[at] == x.letters.front()) {
          k = static_cast<int>(at) + 1;
          break;
        }
      }
      ++run.report.checked;
      ExchangeReport ex = exchange_check(x, z, k, oracle);
      if (!ex.ok())
        run.fail("exchange property counterexample at index " +
                 std::to_string(*ex.counterexample));
    }
  }
  return run.finish();
}

// --- criterion 9 ---------------------------------------------------------

VerifyReport suite_prop41(const VerifyOptions& options) {
  SuiteRun run("prop41", options);
  Prop41Report r = verify_prop41_desk(2, 1, options.max_len.value_or(3));
  run.report.checked = r.checked;
  for (const auto& [a, b] : r.collisions)
    run.fail("nu collision between " + a + " and " + b);
  return run.finish();
}

// --- criterion 10 --------------------------------------------------------

VerifyReport suite_lemma42(const VerifyOptions& options) {
  SuiteRun run("lemma42", options);
  const int rank = 2;
  const long long N = 12;
  std::vector<std::pair<long long, long long>> exponents;
  for (long long p = -2; p <= 2; ++p)
    for (long long q = -2; q <= 2; ++q)
      if (p != 0 || q != 0) exponents.emplace_back(p, q);

  std::vector<HatWord> words;
  HatWord current;
  current.rank = rank;
  auto build = [&](auto&& self, int depth) -> void {
    words.push_back(current);
    if (depth == 3) return;
    for (int gen = 1; gen <= rank; ++gen) {
      if (!current.blocks.empty() && current.blocks.back().gen == gen) continue;
      for (const auto& [p, q] : exponents) {
        current.blocks.push_back({gen, p, q});
        self(self, depth + 1);
        current.blocks.pop_back();
      }
    }
  };
  build(build, 0);

  std::map<size_t, std::vector<size_t>> buckets;
  std::hash<std::string> hasher;
  for (size_t at = 0; at < words.size(); ++at) {
    if (run.out_of_budget()) return run.finish();
    TruncatedSeries s = magnus_expand(words[at], N);
    buckets[hasher(series_to_string(s))].push_back(at);
    ++run.report.checked;
  }
  for (const auto& [hash, members] : buckets) {
    if (members.size() < 2) continue;
    // recheck exactly: a real duplicate fails the separation property
    for (size_t a = 0; a < members.size(); ++a) {
      for (size_t b = a + 1; b < members.size(); ++b) {
        if (magnus_expand(words[members[a]], N) == magnus_expand(words[members[b]], N))
          run.fail("series collision: " + to_string(words[members[a]]) + " vs " +
                   to_string(words[members[b]]));
      }
    }
  }
  run.report.info["hat_words"] = static_cast<long long>(words.size());
  return run.finish();
}

// --- criterion 11 --------------------------------------------------------

FreeAutomorphismSpec random_rho(std::mt19937_64& rng, int rank, int x0) {
  FreeAutomorphismSpec rho = FreeAutomorphismSpec::identity(rank, x0);
  std::vector<int> other;
  for (int g = 1; g <= rank; ++g)
    if (g != x0) other.push_back(g);
  int steps = rand_int(rng, 0, 3);
  for (int s = 0; s < steps && other.size() >= 1; ++s) {
    FreeAutomorphismSpec e = FreeAutomorphismSpec::identity(rank, x0);
    int kind = rand_int(rng, 0, 2);
    int g = other[rand_int(rng, 0, static_cast<int>(other.size()) - 1)];
    if (kind == 0) {
      e.images[g - 1] = free_inverse(e.images[g - 1]);
      e.inverse_images[g - 1] = free_inverse(e.inverse_images[g - 1]);
    } else if (kind == 1 && other.size() >= 2) {
      int h = g;
      while (h == g) h = other[rand_int(rng, 0, static_cast<int>(other.size()) - 1)];
      std::swap(e.images[g - 1], e.images[h - 1]);
      std::swap(e.inverse_images[g - 1], e.inverse_images[h - 1]);
    } else if (other.size() >= 2) {
      int h = g;
      while (h == g) h = other[rand_int(rng, 0, static_cast<int>(other.size()) - 1)];
      // g -> g h, inverse g -> g h^{-1}
      e.images[g - 1] = free_mul(free_generator(rank, g), free_generator(rank, h));
      e.inverse_images[g - 1] =
          free_mul(free_generator(rank, g), free_inverse(free_generator(rank, h)));
    }
    rho = compose(rho, e);
  }
  validate(rho);
  return rho;
}

VerifyReport suite_prop51(const VerifyOptions& options) {
  SuiteRun run("prop51", options);
  std::mt19937_64 rng(options.seed);
  for (int instance = 0; instance < 1000; ++instance) {
    if (run.out_of_budget()) return run.finish();
    int rank = rand_int(rng, 2, 4);
    int x0 = rand_int(rng, 1, rank);
    FreeAutomorphismSpec rho = random_rho(rng, rank, x0);

    // alternate between fully random conjugators and conjugators built from
    // rho-fixed generators (which force the non-vacuous branch)
    bool biased = rand_int(rng, 0, 1) == 1;
    std::vector<int> pool;
    if (biased) {
      pool.push_back(x0);
      for (int g = 1; g <= rank; ++g)
        if (g != x0 && rho.images[g - 1] == free_generator(rank, g)) pool.push_back(g);
    } else {
      for (int g = 1; g <= rank; ++g) pool.push_back(g);
    }

    int l = rand_int(rng, 0, 4);
    std::vector<FreeWord> conjugators;
    for (int f = 0; f < l; ++f) {
      FreeWord g(rank);
      int len = rand_int(rng, 0, 3);
      for (int a = 0; a < len; ++a) {
        int gen = pool[rand_int(rng, 0, static_cast<int>(pool.size()) - 1)];
        push_reduced(g.letters, rand_int(rng, 0, 1) ? gen : -gen);
      }
      conjugators.push_back(g);
    }

    Prop51Verdict verdict = check_prop51_instance(rho, conjugators);
    ++run.report.checked;
    if (verdict.status == Prop51Status::Counterexample)
      run.fail("fixed-factor counterexample: " + verdict.detail);
    else if (verdict.status == Prop51Status::FixedProductFactorsFixed)
      ++run.report.info["nonvacuous"];
  }
  return run.finish();
}

VerifyReport suite_cor52(const VerifyOptions& options) {
  SuiteRun run("cor52", options);
  std::mt19937_64 rng(options.seed);
  const int n = 4;

  // pools of vertices in the (1,2) and (3,4) strata, conjugators of word
  // length <= 2
  std::vector<BraidWord> conjugators;
  conjugators.emplace_back(n);
  for (int len = 1; len <= 2; ++len) {
    std::vector<BraidWord> next;
    for (const auto& w : conjugators) {
      if (static_cast<int>(w.letters.size()) != len - 1) continue;
      for (int i = 1; i <= n - 1; ++i) {
        for (int s : {+1, -1}) {
          BraidWord e = w;
          e.push(i, s);
          next.push_back(e);
        }
      }
    }
    conjugators.insert(conjugators.end(), next.begin(), next.end());
  }
  std::vector<CanonicalBraid> pool12, pool34;
  std::set<std::string> seen;
  for (const auto& alpha : conjugators) {
    for (int i = 1; i <= n - 1; ++i) {
      Vertex v = vertex_from_conjugate(alpha, i);
      if (!seen.insert(v.key()).second) continue;
      if (v.cls == VertexClass{1, 2}) pool12.push_back(v.braid);
      if (v.cls == VertexClass{3, 4}) pool34.push_back(v.braid);
    }
  }
  run.report.info["pool12"] = static_cast<long long>(pool12.size());
  run.report.info["pool34"] = static_cast<long long>(pool34.size());

  auto commutes = [](const CanonicalBraid& a, const CanonicalBraid& b) {
    return nf_multiply(a, b) == nf_multiply(b, a);
  };
  for (int instance = 0; instance < 1000; ++instance) {
    if (run.out_of_budget()) return run.finish();
    CanonicalBraid u = pool12[rand_int(rng, 0, static_cast<int>(pool12.size()) - 1)];
    int l = rand_int(rng, 1, 3);
    std::vector<CanonicalBraid> vs;
    CanonicalBraid product = nf_identity(n);
    for (int f = 0; f < l; ++f) {
      vs.push_back(pool34[rand_int(rng, 0, static_cast<int>(pool34.size()) - 1)]);
      product = nf_multiply(product, vs.back());
    }
    ++run.report.checked;
    if (!commutes(u, product)) continue;
    ++run.report.info["nonvacuous"];
    for (int f = 0; f < l; ++f) {
      if (!commutes(u, vs[f])) {
        run.fail("u commutes with the product but not with factor " + std::to_string(f + 1));
        break;
      }
    }
  }
  return run.finish();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"word-problem", "relations",     "lemma32", "lemma21", "eta-injectivity",
          "factorization", "eq32",         "cf-exchange", "prop41",  "lemma42",
          "prop51",        "cor52"};
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& options) {
  if (name == "word-problem") return suite_word_problem(options);
  if (name == "relations") return suite_relations(options);
  if (name == "lemma32") return suite_lemma32(options);
  if (name == "lemma21") return suite_lemma21(options);
  if (name == "eta-injectivity") return suite_eta_injectivity(options);
  if (name == "factorization") return suite_factorization(options);
  if (name == "eq32") return suite_eq32(options);
  if (name == "cf-exchange") return suite_cf_exchange(options);
  if (name == "prop41") return suite_prop41(options);
  if (name == "lemma42") return suite_lemma42(options);
  if (name == "prop51") return suite_prop51(options);
  if (name == "cor52") return suite_cor52(options);
  throw DomainError("unknown suite: " + name);
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::json out;
  out["suite"] = r.suite;
  out["checked"] = r.checked;
  out["failures"] = r.failures;
  out["elapsed_ms"] = r.elapsed_ms;
  out["pass"] = r.pass();
  if (r.aborted) out["aborted"] = true;
  for (const auto& [key, value] : r.info) out[key] = value;
  if (r.suite == "prop41") out["collisions"] = r.failures;
  return out.dump();
}

std::string report_to_text(const VerifyReport& r) {
  std::string out = r.suite + ": " + (r.pass() ? "PASS" : "FAIL") + " (checked " +
                    std::to_string(r.checked) + ", " + std::to_string(r.elapsed_ms) + " ms)";
  if (r.aborted) out += " [budget exhausted]";
  for (const auto& f : r.failures) out += "\n  " + f;
  return out;
}

}  // namespace braids
