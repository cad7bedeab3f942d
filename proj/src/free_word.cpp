#include "braids/free_word.hpp"

#include <cstdlib>

#include "braids/errors.hpp"

namespace braids {

namespace {
void check_letter(int rank, int letter) {
  if (letter == 0 || std::abs(letter) > rank)
    throw WordError("free-group letter " + std::to_string(letter) + " out of range for rank " +
                    std::to_string(rank));
}
}  // namespace

FreeWord::FreeWord(int r, std::vector<int> ls) : rank(r) {
  letters.reserve(ls.size());
  for (int l : ls) {
    check_letter(rank, l);
    push_reduced(letters, l);
  }
}

void push_reduced(std::vector<int>& letters, int letter) {
  if (!letters.empty() && letters.back() == -letter)
    letters.pop_back();
  else
    letters.push_back(letter);
}

FreeWord free_mul(const FreeWord& a, const FreeWord& b) {
  if (a.rank != b.rank) throw ArityError("multiplying free words of different ranks");
  FreeWord out(a.rank);
  out.letters = a.letters;
  for (int l : b.letters) push_reduced(out.letters, l);
  return out;
}

FreeWord free_inverse(const FreeWord& a) {
  FreeWord out(a.rank);
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord free_conjugate(const FreeWord& g, const FreeWord& w) {
  return free_mul(free_mul(g, w), free_inverse(g));
}

FreeWord free_pow(const FreeWord& a, int k) {
  FreeWord base = k >= 0 ? a : free_inverse(a);
  FreeWord out(a.rank);
  for (int r = 0; r < std::abs(k); ++r) out = free_mul(out, base);
  return out;
}

FreeWord free_generator(int rank, int g, int sign) {
  check_letter(rank, g);
  FreeWord out(rank);
  out.letters.push_back(sign >= 0 ? g : -g);
  return out;
}

long long free_degree(const FreeWord& w) {
  long long d = 0;
  for (int l : w.letters) d += l > 0 ? 1 : -1;
  return d;
}

std::string free_key(const FreeWord& w) {
  if (w.rank > 26) throw DomainError("free_key requires rank <= 26");
  std::string key;
  key.reserve(w.letters.size());
  for (int l : w.letters) key += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
  return key;
}

FreeWord parse_free_key(int rank, const std::string& key) {
  FreeWord out(rank);
  for (char c : key) {
    int letter;
    if (c >= 'a' && c <= 'z')
      letter = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      letter = -(c - 'A' + 1);
    else
      throw WordError("malformed free-group key: " + key);
    check_letter(rank, letter);
    push_reduced(out.letters, letter);
  }
  return out;
}

std::string to_string(const FreeWord& w) {
  std::string out;
  for (int l : w.letters) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out.empty() ? "1" : out;
}

}  // namespace braids
