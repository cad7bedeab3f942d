#include "braids/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "braids/errors.hpp"

namespace braids {

Permutation::Permutation(std::vector<int> images_zero_based) : img_(std::move(images_zero_based)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw DomainError("images do not form a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1) throw DomainError("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Permutation Permutation::delta(int n) {
  Permutation p;
  p.img_.resize(n);
  for (int k = 0; k < n; ++k) p.img_[k] = n - 1 - k;
  return p;
}

std::vector<int> Permutation::images1() const {
  std::vector<int> out(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) out[k] = img_[k] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (int k = 0; k < n(); ++k) p.img_[img_[k]] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < n(); ++k)
    if (img_[k] != k) return false;
  return true;
}

bool Permutation::is_delta() const {
  for (int k = 0; k < n(); ++k)
    if (img_[k] != n() - 1 - k) return false;
  return true;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int k = 0; k + 1 < n(); ++k)
    if (img_[k] > img_[k + 1]) out.push_back(k + 1);
  return out;
}

int Permutation::inversions() const {
  int count = 0;
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (img_[a] > img_[b]) ++count;
  return count;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw ArityError("composing permutations of different sizes");
  std::vector<int> img(a.n());
  for (int p = 0; p < a.n(); ++p) img[p] = a.apply0(b.apply0(p));
  return Permutation(std::move(img));
}

}  // namespace braids
