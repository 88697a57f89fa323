#pragma once

#include <span>
#include <string>
#include <vector>

namespace td {

// Bijection of {1..m}; images()[i-1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int m);
  static Permutation reversal(int m);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  int sign() const;
  // (this * other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  std::vector<std::vector<int>> cycles() const;
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

int perm_sign(const Permutation& p);

// Sign of the order-reversing permutation of n symbols: (-1)^floor(n/2).
int reversal_sign(int n);

// Sign of the sequence as a permutation of {1..n}, n = idx.size(); 0 on repeats
// or out-of-range entries.
int levi_civita(std::span<const int> idx);

// All permutations of {1..m} in lexicographic order.
std::vector<Permutation> all_permutations(int m);

}  // namespace td
