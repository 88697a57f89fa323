#include "td/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace td {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()) + ": " + str());
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::reversal(int m) {
  std::vector<int> im(m);
  for (int i = 0; i < m; ++i) im[i] = m - i;
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  std::vector<char> seen(images_.size(), 0);
  int parity = 0;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    parity += len - 1;
  }
  return parity % 2 ? -1 : 1;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> im(size());
  for (int i = 1; i <= size(); ++i) im[i - 1] = (*this)(other(i));
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (int i = 1; i <= size(); ++i) im[(*this)(i) - 1] = i;
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size() + 1, 0);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + ")";
}

int perm_sign(const Permutation& p) { return p.sign(); }

int reversal_sign(int n) { return (n / 2) % 2 ? -1 : 1; }

int levi_civita(std::span<const int> idx) {
  const int n = static_cast<int>(idx.size());
  unsigned long long mask = 0;
  for (int v : idx) {
    if (v < 1 || v > n) return 0;
    unsigned long long bit = 1ull << (v - 1);
    if (mask & bit) return 0;
    mask |= bit;
  }
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inversions += idx[i] > idx[j];
  return inversions % 2 ? -1 : 1;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<Permutation> out;
  std::vector<int> im(m);
  std::iota(im.begin(), im.end(), 1);
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace td
