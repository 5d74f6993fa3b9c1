#include "zpd/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace zpd {

Perm::Perm(int m) : img_(m) {
  if (m < 1) throw std::invalid_argument("Perm: degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> img0) {
  Perm p;
  p.img_ = std::move(img0);
  std::vector<bool> seen(p.img_.size(), false);
  for (int v : p.img_) {
    if (v < 0 || v >= int(p.img_.size()) || seen[v])
      throw std::invalid_argument("Perm: image is not a bijection");
    seen[v] = true;
  }
  return p;
}

Perm Perm::from_one_line_1based(const std::vector<int>& img1) {
  std::vector<int> img0(img1.size());
  for (std::size_t i = 0; i < img1.size(); ++i) img0[i] = img1[i] - 1;
  return from_images(std::move(img0));
}

Perm Perm::transposition(int m, int a, int b) {
  Perm p(m);
  std::swap(p.img_[a], p.img_[b]);
  return p;
}

std::vector<int> Perm::one_line_1based() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < int(img_.size()); ++i) inv[img_[i]] = i;
  return from_images(std::move(inv));
}

bool Perm::is_identity() const {
  for (int i = 0; i < int(img_.size()); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Perm::from_images(std::move(img));
}

std::vector<int> CycleForm::lengths() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(int(c.size()));
  return out;
}

int CycleForm::moved_points() const {
  int n = 0;
  for (const auto& c : cycles) n += int(c.size());
  return n;
}

std::vector<int> CycleForm::even_cycles() const {
  std::vector<int> out;
  for (int i = 0; i < int(cycles.size()); ++i)
    if (cycles[i].size() % 2 == 0) out.push_back(i);
  return out;
}

std::vector<int> CycleForm::odd_cycles() const {
  std::vector<int> out;
  for (int i = 0; i < int(cycles.size()); ++i)
    if (cycles[i].size() % 2 == 1) out.push_back(i);
  return out;
}

CycleForm cycle_decomposition(const Perm& p) {
  CycleForm form;
  const int m = p.degree();
  std::vector<bool> seen(m, false);
  for (int start = 0; start < m; ++start) {
    if (seen[start] || p(start) == start) {
      seen[start] = true;
      continue;
    }
    std::vector<int> cyc;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    form.cycles.push_back(std::move(cyc));
  }
  return form;
}

std::vector<Perm> all_transpositions(int m) {
  std::vector<Perm> out;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) out.push_back(Perm::transposition(m, a, b));
  return out;
}

std::vector<Perm> all_perms(int m) {
  if (m > 8) throw std::invalid_argument("all_perms: degree too large");
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

int cayley_distance(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cayley_distance: degree mismatch");
  const Perm r = compose(q, p.inverse());
  CycleForm form = cycle_decomposition(r);
  return form.moved_points() - int(form.cycles.size());
}

int cayley_distance_bfs(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("cayley_distance_bfs: degree mismatch");
  if (p.degree() > 7)
    throw std::invalid_argument("cayley_distance_bfs: degree too large");
  if (p == q) return 0;
  const auto taus = all_transpositions(p.degree());
  std::map<std::vector<int>, int> dist;
  std::queue<Perm> todo;
  dist[p.images()] = 0;
  todo.push(p);
  while (!todo.empty()) {
    Perm cur = todo.front();
    todo.pop();
    int dcur = dist[cur.images()];
    for (const auto& tau : taus) {
      Perm nxt = compose(tau, cur);
      if (dist.count(nxt.images())) continue;
      if (nxt == q) return dcur + 1;
      dist[nxt.images()] = dcur + 1;
      todo.push(nxt);
    }
  }
  throw std::logic_error("cayley_distance_bfs: unreachable");
}

CanonicalQuotient canonicalize_quotient(const Perm& q) {
  const int m = q.degree();
  CycleForm raw = cycle_decomposition(q);

  // Even-length cycles first, shorter first, ties by smallest moved point.
  std::vector<int> order(raw.cycles.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = raw.cycles[a];
    const auto& cb = raw.cycles[b];
    bool ea = ca.size() % 2 == 0, eb = cb.size() % 2 == 0;
    if (ea != eb) return ea;
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    return ca[0] < cb[0];
  });

  CanonicalQuotient out;
  std::vector<int> theta(m, -1);
  int s_prev = 0;  // 1-based endpoint of previous block
  for (int oi : order) {
    const auto& cyc = raw.cycles[oi];
    const int len = int(cyc.size());
    const int lo = s_prev + 1, hi = s_prev + len;  // 1-based interval
    // Canonical cycle (hi hi-1 ... lo) visits lo, hi, hi-1, ..., lo+1 when
    // traversed forward from its smallest element; match orbit positions.
    theta[cyc[0]] = lo - 1;
    for (int t = 1; t < len; ++t) theta[cyc[t]] = hi - t;  // 0-based
    out.s.push_back(hi);
    if (len % 2 == 0) ++out.even_count;
    s_prev = hi;
  }
  int next_fixed = s_prev;  // 0-based
  for (int x = 0; x < m; ++x)
    if (theta[x] < 0) theta[x] = next_fixed++;

  out.theta = Perm::from_images(std::move(theta));

  std::vector<int> canon_img(m);
  std::iota(canon_img.begin(), canon_img.end(), 0);
  s_prev = 0;
  for (int hi : out.s) {
    const int lo = s_prev + 1;
    for (int x = lo + 1; x <= hi; ++x) canon_img[x - 1] = x - 2;
    canon_img[lo - 1] = hi - 1;
    s_prev = hi;
  }
  out.canonical = Perm::from_images(std::move(canon_img));
  out.form = cycle_decomposition(out.canonical);
  return out;
}

}  // namespace zpd
