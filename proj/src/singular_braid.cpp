#include "braids/singular_braid.hpp"

#include <json.hpp>

#include "braids/errors.hpp"

namespace braids {

namespace {

class VertexCommutationOracle final : public CommutationOracle {
 public:
  explicit VertexCommutationOracle(int n) : n_(n) {}
  bool edge(const std::string& a, const std::string& b) const override {
    CanonicalBraid u = parse_canonical_key(a);
    CanonicalBraid v = parse_canonical_key(b);
    if (u.n != n_ || v.n != n_) throw ArityError("vertex key strand count mismatch");
    return nf_multiply(u, v) == nf_multiply(v, u);
  }

 private:
  int n_;
};

}  // namespace

void validate(const SingularWord& w) {
  if (w.n < 1) throw WordError("strand count must be >= 1");
  for (const auto& l : w.letters) {
    if (l.index < 1 || l.index > w.n - 1)
      throw WordError("generator index " + std::to_string(l.index) + " out of range for n=" +
                      std::to_string(w.n));
    if (l.kind == SingularKind::Sigma && l.sign != 1 && l.sign != -1)
      throw WordError("sigma letter sign must be +1 or -1");
  }
}

SingularWord concat(const SingularWord& a, const SingularWord& b) {
  if (a.n != b.n) throw ArityError("concatenating words with different strand counts");
  SingularWord out(a.n);
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

SingularWord to_singular(const BraidWord& w) {
  SingularWord out(w.n);
  for (const auto& l : w.letters) out.push_sigma(l.index, l.sign);
  return out;
}

SingularContext::SingularContext(int n) : n_(n) {
  raw_ = std::make_unique<VertexCommutationOracle>(n);
  memo_ = std::make_unique<MemoizedOracle>(*raw_);
}

bool vertex_commutes(const Vertex& u, const Vertex& v) {
  return nf_multiply(u.braid, v.braid) == nf_multiply(v.braid, u.braid);
}

Vertex make_vertex(const CanonicalBraid& braid) {
  return Vertex{braid, classify_vertex(braid)};
}

Vertex vertex_from_conjugate(const BraidWord& conjugator, int i) {
  BraidWord core = concat(sigma(conjugator.n, i), sigma(conjugator.n, i));
  return make_vertex(normal_form(conjugate(conjugator, core)));
}

SBElement decompose(const SingularContext& ctx, const SingularWord& w) {
  validate(w);
  if (w.n != ctx.n()) throw ArityError("word strand count does not match context");
  SBElement out;
  out.n = w.n;
  BraidWord beta(w.n);
  auto emit_vertex = [&] (int i) {
    BraidWord core = concat(sigma(w.n, i), sigma(w.n, i));
    CanonicalBraid u = normal_form(conjugate(beta, core));
    out.trace.letters.push_back(canonical_key(u));
  };
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case SingularKind::Sigma:
        beta.push(l.index, l.sign);
        break;
      case SingularKind::Tau:
        // t_i = s_i^{-1} d_i
        beta.push(l.index, -1);
        emit_vertex(l.index);
        break;
      case SingularKind::Delta:
        emit_vertex(l.index);
        break;
    }
  }
  out.trace = trace_normal_form(out.trace, ctx.oracle());
  out.braid = normal_form(beta);
  return out;
}

bool sb_equals(const SingularContext& ctx, const SingularWord& w1, const SingularWord& w2) {
  if (w1.n != w2.n) throw ArityError("comparing words with different strand counts");
  return decompose(ctx, w1) == decompose(ctx, w2);
}

RingElement desingularize(const SingularWord& w) {
  validate(w);
  BraidGroupOps ops(w.n);
  RingElement out = ring_one(ops);
  for (const auto& l : w.letters) {
    RingElement factor = ring_zero(ops);
    switch (l.kind) {
      case SingularKind::Sigma:
        factor = ring_term(ops, canonical_key(normal_form(sigma(w.n, l.index, l.sign))));
        break;
      case SingularKind::Tau:
        factor = ring_sub(ops, ring_term(ops, canonical_key(normal_form(sigma(w.n, l.index)))),
                          ring_term(ops, canonical_key(normal_form(sigma(w.n, l.index, -1)))));
        break;
      case SingularKind::Delta: {
        BraidWord sq = concat(sigma(w.n, l.index), sigma(w.n, l.index));
        factor = ring_sub(ops, ring_term(ops, canonical_key(normal_form(sq))), ring_one(ops));
        break;
      }
    }
    out = ring_mul(ops, out, factor);
  }
  return out;
}

RingElement nu(int n, const TraceWord& t) {
  BraidGroupOps ops(n);
  RingElement out = ring_one(ops);
  for (const std::string& key : t.letters) {
    CanonicalBraid u = parse_canonical_key(key);
    if (u.n != n) throw ArityError("vertex key strand count mismatch");
    RingElement factor = ring_sub(ops, ring_term(ops, canonical_key(u)), ring_one(ops));
    out = ring_mul(ops, out, factor);
  }
  return out;
}

RingElement nu_subindex_expansion(int n, const TraceWord& t) {
  const int l = static_cast<int>(t.letters.size());
  if (l > 20) throw BudgetError("subindex expansion capped at length 20");
  BraidGroupOps ops(n);
  std::vector<CanonicalBraid> vertices;
  for (const std::string& key : t.letters) {
    CanonicalBraid u = parse_canonical_key(key);
    if (u.n != n) throw ArityError("vertex key strand count mismatch");
    vertices.push_back(u);
  }
  RingElement out = ring_zero(ops);
  for (unsigned long mask = 0; mask < (1UL << l); ++mask) {
    CanonicalBraid prod = nf_identity(n);
    int q = 0;
    for (int i = 0; i < l; ++i) {
      if (mask & (1UL << i)) {
        prod = nf_multiply(prod, vertices[i]);
        ++q;
      }
    }
    int sign = (l - q) % 2 == 0 ? 1 : -1;
    out = ring_add(ops, out, ring_term(ops, canonical_key(prod), sign));
  }
  return out;
}

RecoverReport lowest_component_recover(const RingElement& P, const SBElement& expected) {
  BraidGroupOps ops(expected.n);
  const long long d = degree(expected.braid);
  const int l = static_cast<int>(expected.trace.letters.size());
  RecoverReport report;
  for (long long k : support_degrees(ops, P)) {
    if (k < d) {
      report.ok = false;
      report.detail = "nonzero component at degree " + std::to_string(k) + " below d=" +
                      std::to_string(d);
      return report;
    }
  }
  RingElement want = ring_term(ops, canonical_key(expected.braid), l % 2 == 0 ? 1 : -1);
  RingElement got = component(ops, P, d).part;
  if (got != want) {
    report.ok = false;
    report.detail = "component at d=" + std::to_string(d) + " is " + ring_to_string(got) +
                    ", expected " + ring_to_string(want);
  }
  return report;
}

std::string sb_to_json(const SBElement& e) {
  nlohmann::json out;
  out["trace"] = e.trace.letters;
  out["braid"] = canonical_key(e.braid);
  return out.dump();
}

}  // namespace braids
