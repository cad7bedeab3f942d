#include "braids/automorphisms.hpp"

#include <cstdlib>

#include "braids/errors.hpp"

namespace braids {

namespace {

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w) {
  FreeWord out(w.rank);
  for (int l : w.letters) {
    const FreeWord& img = images[std::abs(l) - 1];
    if (l > 0)
      for (int m : img.letters) push_reduced(out.letters, m);
    else
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
        push_reduced(out.letters, -*it);
  }
  return out;
}

}  // namespace

FreeAutomorphismSpec FreeAutomorphismSpec::identity(int rank, int fixed_gen) {
  FreeAutomorphismSpec rho;
  rho.rank = rank;
  rho.fixed_gen = fixed_gen;
  for (int g = 1; g <= rank; ++g) {
    rho.images.push_back(free_generator(rank, g));
    rho.inverse_images.push_back(free_generator(rank, g));
  }
  return rho;
}

void validate(const FreeAutomorphismSpec& rho) {
  if (rho.fixed_gen < 1 || rho.fixed_gen > rho.rank)
    throw DomainError("fixed generator out of range");
  if (static_cast<int>(rho.images.size()) != rho.rank ||
      static_cast<int>(rho.inverse_images.size()) != rho.rank)
    throw DomainError("automorphism needs one image per generator");
  if (rho.images[rho.fixed_gen - 1] != free_generator(rho.rank, rho.fixed_gen))
    throw DomainError("automorphism must fix x0");
  for (int g = 1; g <= rho.rank; ++g) {
    if (g == rho.fixed_gen) continue;
    for (const auto* side : {&rho.images, &rho.inverse_images})
      for (int l : (*side)[g - 1].letters)
        if (std::abs(l) == rho.fixed_gen)
          throw DomainError("image of x" + std::to_string(g) + " must avoid x0");
  }
  for (int g = 1; g <= rho.rank; ++g) {
    FreeWord x = free_generator(rho.rank, g);
    if (substitute(rho.images, rho.inverse_images[g - 1]) != x ||
        substitute(rho.inverse_images, rho.images[g - 1]) != x)
      throw DomainError("inverse images do not invert the automorphism");
  }
}

FreeWord apply_automorphism(const FreeAutomorphismSpec& rho, const FreeWord& w) {
  if (w.rank != rho.rank) throw ArityError("automorphism rank mismatch");
  return substitute(rho.images, w);
}

FreeWord apply_automorphism_inverse(const FreeAutomorphismSpec& rho, const FreeWord& w) {
  if (w.rank != rho.rank) throw ArityError("automorphism rank mismatch");
  return substitute(rho.inverse_images, w);
}

FreeAutomorphismSpec compose(const FreeAutomorphismSpec& a, const FreeAutomorphismSpec& b) {
  if (a.rank != b.rank || a.fixed_gen != b.fixed_gen)
    throw ArityError("composing automorphisms of different shapes");
  FreeAutomorphismSpec out;
  out.rank = a.rank;
  out.fixed_gen = a.fixed_gen;
  for (int g = 1; g <= a.rank; ++g) {
    out.images.push_back(substitute(a.images, b.images[g - 1]));
    out.inverse_images.push_back(substitute(b.inverse_images, a.inverse_images[g - 1]));
  }
  return out;
}

Prop51Verdict check_prop51_instance(const FreeAutomorphismSpec& rho,
                                    const std::vector<FreeWord>& conjugators) {
  validate(rho);
  FreeWord x0 = free_generator(rho.rank, rho.fixed_gen);
  std::vector<FreeWord> ys;
  FreeWord product(rho.rank);
  for (const auto& g : conjugators) {
    if (g.rank != rho.rank) throw ArityError("conjugator rank mismatch");
    FreeWord y = free_conjugate(g, x0);
    product = free_mul(product, y);
    ys.push_back(std::move(y));
  }
  Prop51Verdict verdict;
  if (apply_automorphism(rho, product) != product) {
    verdict.status = Prop51Status::ProductMoved;
    verdict.detail = "product moved: vacuous";
    return verdict;
  }
  for (size_t i = 0; i < ys.size(); ++i) {
    if (apply_automorphism(rho, ys[i]) != ys[i]) {
      verdict.status = Prop51Status::Counterexample;
      verdict.bad_factor = static_cast<int>(i) + 1;
      verdict.detail = "product fixed but factor " + std::to_string(i + 1) + " moved: " +
                       to_string(ys[i]);
      return verdict;
    }
  }
  verdict.status = Prop51Status::FixedProductFactorsFixed;
  verdict.detail = "fixed-product: factors all fixed";
  return verdict;
}

}  // namespace braids
