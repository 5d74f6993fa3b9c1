#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zpd {

// Permutation of {1..m} in one-line notation, stored 0-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int m);                       // identity
  static Perm from_images(std::vector<int> img0);    // 0-based images
  static Perm from_one_line_1based(const std::vector<int>& img1);
  static Perm transposition(int m, int a, int b);    // 0-based points

  int degree() const { return int(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  std::vector<int> one_line_1based() const;

  Perm inverse() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string str() const;

 private:
  std::vector<int> img_;
};

// (p o q)(i) = p(q(i))
Perm compose(const Perm& p, const Perm& q);

// Disjoint cycles with fixed points omitted; each cycle starts at its
// smallest element and follows the permutation forward. Cycles are listed
// by increasing smallest element.
struct CycleForm {
  std::vector<std::vector<int>> cycles;  // 0-based points

  std::vector<int> lengths() const;
  int moved_points() const;
  // Indices of even-length and odd-length cycles.
  std::vector<int> even_cycles() const;
  std::vector<int> odd_cycles() const;
};

CycleForm cycle_decomposition(const Perm& p);

std::vector<Perm> all_transpositions(int m);
std::vector<Perm> all_perms(int m);  // lexicographic, degree <= 8 guard

// Cayley / transposition metric: least k with t_k ... t_1 p = q. Closed
// form: moved points minus nontrivial cycle count of q p^{-1}. Left
// invariant.
int cayley_distance(const Perm& p, const Perm& q);

// Independent oracle: breadth-first search over left multiplication by
// transpositions. Degree <= 7.
int cayley_distance_bfs(const Perm& p, const Perm& q);

// Conjugates q into the canonical product of descending consecutive-label
// cycles: even-length cycles first, same parity ordered by increasing
// length, ties by smallest moved point. Returns the canonical cycle form
// (on relabeled points) and theta with theta q theta^{-1} = canonical.
struct CanonicalQuotient {
  CycleForm form;        // canonical cycles, 0-based consecutive labels
  std::vector<int> s;    // 1-based cycle endpoints s_1 < ... < s_h
  int even_count = 0;    // p: number of even-length cycles (listed first)
  Perm theta;
  Perm canonical;        // theta q theta^{-1}
};

CanonicalQuotient canonicalize_quotient(const Perm& q);

}  // namespace zpd
