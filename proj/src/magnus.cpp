#include "braids/magnus.hpp"

#include <chrono>

#include "braids/checked_int.hpp"
#include "braids/errors.hpp"

namespace braids {

namespace {

void check_gen(int rank, int gen) {
  if (gen < 1 || gen > rank)
    throw WordError("generator " + std::to_string(gen) + " out of range for rank " +
                    std::to_string(rank));
}

// Coefficients of (x-1)^p x^q as a map degree -> coeff, truncated at maxdeg.
// For p < 0 the geometric series (x-1)^{-1} = -(1 + x + x^2 + ...) is used.
std::map<long long, std::int64_t> block_coeffs(long long p, long long q, long long maxdeg) {
  std::map<long long, std::int64_t> out;
  if (p >= 0) {
    // binomial expansion, degrees q .. q+p
    std::int64_t binom = 1;
    for (long long m = 0; m <= p; ++m) {
      std::int64_t coeff = (p - m) % 2 == 0 ? binom : checked_neg(binom);
      if (m + q <= maxdeg) out[m + q] = coeff;
      if (m < p) binom = checked_mul(binom, p - m) / (m + 1);
    }
  } else {
    const long long P = -p;
    // (x-1)^{-P} = (-1)^P sum_k C(k+P-1, P-1) x^k
    std::int64_t sign = P % 2 == 0 ? 1 : -1;
    std::int64_t binom = 1;  // C(k+P-1, P-1) at k=0
    for (long long k = 0; k + q <= maxdeg; ++k) {
      out[k + q] = sign > 0 ? binom : checked_neg(binom);
      binom = checked_mul(binom, k + P) / (k + 1);
    }
  }
  return out;
}

TruncatedSeries block_series(const FreeGroupOps& ops, int gen, long long p, long long q,
                             long long maxdeg) {
  TruncatedSeries out = series_zero(ops.rank(), maxdeg);
  for (const auto& [deg, coeff] : block_coeffs(p, q, maxdeg)) {
    FreeWord w = free_pow(free_generator(ops.rank(), gen), static_cast<int>(deg));
    out.parts[deg] = ring_term(ops, free_key(w), coeff);
  }
  return out;
}

void drop_zero_parts(TruncatedSeries& s) {
  for (auto it = s.parts.begin(); it != s.parts.end();)
    it = it->second.is_zero() ? s.parts.erase(it) : std::next(it);
}

// Cutoffs saturate here; a zero series is exact everywhere.
constexpr long long kCutoffCap = 1LL << 50;

long long min_degree(const TruncatedSeries& s) {
  return s.parts.empty() ? kCutoffCap : s.parts.begin()->first;
}

long long cap_add(long long a, long long b) {
  long long r = a + b;
  return r > kCutoffCap ? kCutoffCap : r;
}

}  // namespace

HatWord hatG_normal_form(int rank, const std::vector<HatLetter>& letters) {
  HatWord out;
  out.rank = rank;
  for (const auto& l : letters) {
    check_gen(rank, l.gen);
    if (l.sign != 1 && l.sign != -1) throw WordError("hat letter sign must be +1 or -1");
    if (out.blocks.empty() || out.blocks.back().gen != l.gen) out.blocks.push_back({l.gen, 0, 0});
    HatBlock& top = out.blocks.back();
    (l.hat ? top.p : top.q) += l.sign;
    if (top.p == 0 && top.q == 0) {
      out.blocks.pop_back();
      // dropping a block may expose two mergeable neighbors
      if (out.blocks.size() >= 2) {
        HatBlock& a = out.blocks[out.blocks.size() - 2];
        HatBlock& b = out.blocks.back();
        if (a.gen == b.gen) {
          a.p += b.p;
          a.q += b.q;
          out.blocks.pop_back();
          if (a.p == 0 && a.q == 0) out.blocks.pop_back();
        }
      }
    }
  }
  return out;
}

TruncatedSeries series_zero(int rank, long long cutoff) {
  TruncatedSeries s;
  s.rank = rank;
  s.cutoff = cutoff;
  return s;
}

TruncatedSeries series_one(int rank, long long cutoff) {
  TruncatedSeries s = series_zero(rank, cutoff);
  if (cutoff >= 0) s.parts[0] = ring_one(FreeGroupOps(rank));
  return s;
}

TruncatedSeries series_from_ring(const FreeGroupOps& ops, const RingElement& p, long long cutoff) {
  TruncatedSeries s = series_zero(ops.rank(), cutoff);
  for (const auto& [key, c] : p.terms) {
    long long d = ops.degree(key);
    if (d > cutoff) continue;
    auto [it, inserted] = s.parts.try_emplace(d, ring_zero(ops));
    it->second.terms[key] = c;
  }
  drop_zero_parts(s);
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank != b.rank) throw ArityError("adding series of different ranks");
  FreeGroupOps ops(a.rank);
  TruncatedSeries out = series_zero(a.rank, std::min(a.cutoff, b.cutoff));
  for (const auto& [d, part] : a.parts)
    if (d <= out.cutoff) out.parts[d] = part;
  for (const auto& [d, part] : b.parts) {
    if (d > out.cutoff) continue;
    auto it = out.parts.find(d);
    if (it == out.parts.end())
      out.parts[d] = part;
    else
      it->second = ring_add(ops, it->second, part);
  }
  drop_zero_parts(out);
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank != b.rank) throw ArityError("multiplying series of different ranks");
  FreeGroupOps ops(a.rank);
  // The product is determined at degree d only when every contributing
  // pair lies within the operand cutoffs, i.e. up to
  // min(a.cutoff + min_deg(b), b.cutoff + min_deg(a)).  This rule keeps
  // truncated multiplication associative even with negative degrees.
  TruncatedSeries out =
      series_zero(a.rank, std::min(cap_add(a.cutoff, min_degree(b)),
                                   cap_add(b.cutoff, min_degree(a))));
  for (const auto& [da, pa] : a.parts) {
    for (const auto& [db, pb] : b.parts) {
      long long d = da + db;
      if (d > out.cutoff) continue;
      RingElement prod = ring_mul(ops, pa, pb);
      if (prod.is_zero()) continue;
      auto it = out.parts.find(d);
      if (it == out.parts.end())
        out.parts[d] = std::move(prod);
      else
        it->second = ring_add(ops, it->second, prod);
    }
  }
  drop_zero_parts(out);
  return out;
}

RingElement series_to_ring(const FreeGroupOps& ops, const TruncatedSeries& s) {
  RingElement out = ring_zero(ops);
  for (const auto& [d, part] : s.parts) out = ring_add(ops, out, part);
  return out;
}

std::string series_to_string(const TruncatedSeries& s) {
  std::string out = "cutoff=" + std::to_string(s.cutoff);
  for (const auto& [d, part] : s.parts)
    out += "; " + std::to_string(d) + ": " + ring_to_string(part);
  return out;
}

TruncatedSeries magnus_expand(const HatWord& h, long long N) {
  if (N < 0) throw DomainError("truncation degree must be >= 0");
  FreeGroupOps ops(h.rank);
  long long total_q = 0;
  for (const auto& b : h.blocks) total_q += b.q;
  TruncatedSeries acc = series_one(h.rank, kCutoffCap);
  for (const auto& b : h.blocks) {
    check_gen(h.rank, b.gen);
    if (b.p == 0 && b.q == 0) throw DomainError("hat word block (0,0) is not in normal form");
    // Later blocks reach degrees >= their q; expanding this block up to
    // N - (sum of the other blocks' q) keeps the final cutoff at N.
    long long block_cut = N - (total_q - b.q);
    TruncatedSeries factor = block_series(ops, b.gen, b.p, b.q, block_cut);
    factor.cutoff = block_cut;
    acc = series_mul(acc, factor);
  }
  for (auto it = acc.parts.begin(); it != acc.parts.end();)
    it = it->first > N ? acc.parts.erase(it) : std::next(it);
  acc.cutoff = N;
  return acc;
}

YFactor make_y_factor(const FreeWord& conj, int gen) {
  check_gen(conj.rank, gen);
  YFactor f;
  f.gen = gen;
  f.conj = conj;
  // x commutes with its own powers: strip trailing x^{+-1} so the
  // conjugator representative is unique.
  while (!f.conj.letters.empty() && std::abs(f.conj.letters.back()) == gen)
    f.conj.letters.pop_back();
  return f;
}

FreeWord y_factor_word(const YFactor& f) {
  return free_conjugate(f.conj, free_generator(f.conj.rank, f.gen));
}

RingElement nu_free(const YWord& w) {
  FreeGroupOps ops(w.rank);
  RingElement out = ring_one(ops);
  for (const auto& f : w.factors) {
    RingElement factor =
        ring_sub(ops, ring_term(ops, free_key(y_factor_word(f))), ring_one(ops));
    out = ring_mul(ops, out, factor);
  }
  return out;
}

std::pair<YWord, FreeWord> sg_decompose(int rank, const std::vector<HatLetter>& letters) {
  YWord yw;
  yw.rank = rank;
  FreeWord g(rank);
  for (const auto& l : letters) {
    check_gen(rank, l.gen);
    if (l.hat) {
      if (l.sign != +1) throw WordError("SG words allow no inverse hat letters");
      yw.factors.push_back(make_y_factor(g, l.gen));
    } else {
      g = free_mul(g, free_generator(rank, l.gen, l.sign));
    }
  }
  return {yw, g};
}

Prop41Report verify_prop41_desk(int rank, int max_conj_len, int max_word_len) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();

  // All reduced conjugators of length <= max_conj_len.
  std::vector<FreeWord> conjugators;
  FreeWord empty(rank);
  conjugators.push_back(empty);
  std::vector<FreeWord> frontier{empty};
  for (int len = 1; len <= max_conj_len; ++len) {
    std::vector<FreeWord> next;
    for (const auto& w : frontier) {
      for (int g = 1; g <= rank; ++g) {
        for (int s : {+1, -1}) {
          if (!w.letters.empty() && w.letters.back() == -(s * g)) continue;
          FreeWord e = w;
          e.letters.push_back(s * g);
          next.push_back(e);
        }
      }
    }
    conjugators.insert(conjugators.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<YFactor> alphabet;
  for (const auto& g : conjugators)
    for (int x = 1; x <= rank; ++x)
      if (g.letters.empty() || std::abs(g.letters.back()) != x)
        alphabet.push_back(make_y_factor(g, x));

  long long planned = 1;  // the empty word
  long long layer = 1;
  for (int l = 1; l <= max_word_len; ++l) {
    layer *= static_cast<long long>(alphabet.size());
    planned += layer;
    if (planned > 100000) throw BudgetError("y-word enumeration exceeds 10^5 words");
  }

  Prop41Report report;
  std::map<std::string, std::string> image_to_yword;
  YWord current;
  current.rank = rank;
  auto visit = [&](auto&& self, int depth) -> void {
    std::string image = ring_to_string(nu_free(current));
    std::string name = to_string(current);
    auto [it, inserted] = image_to_yword.try_emplace(image, name);
    if (!inserted) report.collisions.emplace_back(it->second, name);
    ++report.checked;
    if (depth == max_word_len) return;
    for (const auto& f : alphabet) {
      current.factors.push_back(f);
      self(self, depth + 1);
      current.factors.pop_back();
    }
  };
  visit(visit, 0);

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return report;
}

std::string to_string(const YWord& w) {
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += " . ";
    out += "(" + free_key(f.conj) + "|x" + std::to_string(f.gen) + ")";
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const HatWord& h) {
  std::string out;
  for (const auto& b : h.blocks) {
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(b.gen) + "^(" + std::to_string(b.p) + "^," +
           std::to_string(b.q) + ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace braids
