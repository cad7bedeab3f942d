#include "braids/artin_action.hpp"

#include "braids/errors.hpp"

namespace braids {

namespace {

// Image of one free-group letter under the action of one braid letter.
void substitute_letter(int braid_index, int braid_sign, int letter, std::vector<int>& out) {
  int g = std::abs(letter);
  int i = braid_index;
  std::vector<int> image;
  if (braid_sign > 0) {
    if (g == i)
      image = {i, i + 1, -i};
    else if (g == i + 1)
      image = {i};
    else
      image = {g};
  } else {
    if (g == i)
      image = {i + 1};
    else if (g == i + 1)
      image = {-(i + 1), i, i + 1};
    else
      image = {g};
  }
  if (letter > 0) {
    for (int l : image) push_reduced(out, l);
  } else {
    for (auto it = image.rbegin(); it != image.rend(); ++it) push_reduced(out, -*it);
  }
}

std::vector<FreeWord> action_images(const BraidWord& w) {
  std::vector<FreeWord> cur(w.n);
  for (int g = 1; g <= w.n; ++g) cur[g - 1] = free_generator(w.n, g);
  // action(u v) = action(u) o action(v): build inside-out, last letter first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    for (auto& word : cur) {
      std::vector<int> next;
      next.reserve(word.letters.size() * 3);
      for (int l : word.letters) substitute_letter(it->index, it->sign, l, next);
      word.letters = std::move(next);
    }
  }
  return cur;
}

}  // namespace

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  FreeAutomorphism a;
  a.rank = rank;
  for (int g = 1; g <= rank; ++g) {
    a.images.push_back(free_generator(rank, g));
    a.inverse_images.push_back(free_generator(rank, g));
  }
  return a;
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  if (w.rank != rank) throw ArityError("automorphism rank mismatch");
  FreeWord out(rank);
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

FreeWord FreeAutomorphism::apply_inverse(const FreeWord& w) const {
  if (w.rank != rank) throw ArityError("automorphism rank mismatch");
  FreeWord out(rank);
  for (int l : w.letters) {
    const FreeWord& img = inverse_images[std::abs(l) - 1];
    if (l > 0)
      for (int m : img.letters) push_reduced(out.letters, m);
    else
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
        push_reduced(out.letters, -*it);
  }
  return out;
}

FreeAutomorphism artin_action(const BraidWord& w) {
  validate(w);
  FreeAutomorphism a;
  a.rank = w.n;
  a.images = action_images(w);
  a.inverse_images = action_images(invert(w));
  for (int g = 1; g <= w.n; ++g) {
    FreeWord roundtrip = a.apply_inverse(a.images[g - 1]);
    if (roundtrip != free_generator(w.n, g))
      throw Error("artin action images do not invert each other");
  }
  return a;
}

}  // namespace braids
