#include "starconf/projective.hpp"

#include <algorithm>

#include "starconf/linalg.hpp"

namespace starconf {

Integer pairing(const ProjPoint& p, const Hyperplane& h) {
  if (p.size() != h.size()) throw Error("point and hyperplane live in different spaces");
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * h[i];
  return s;
}

PointSet::PointSet(std::size_t n, std::vector<ProjPoint> points) : n_(n) {
  for (auto& p : points) insert(p);
}

bool PointSet::insert(const ProjPoint& p) {
  if (p.dim() != n_) throw Error("point dimension does not match the point set");
  const auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it != points_.end() && *it == p) return false;
  points_.insert(it, p);
  return true;
}

bool PointSet::contains(const ProjPoint& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

PointSet PointSet::united(const PointSet& other) const {
  PointSet out = *this;
  for (const auto& p : other) out.insert(p);
  return out;
}

PointSet PointSet::minus(const PointSet& other) const {
  PointSet out(n_);
  for (const auto& p : points_)
    if (!other.contains(p)) out.points_.push_back(p);
  return out;
}

PointSet PointSet::without(const ProjPoint& p) const {
  PointSet out = *this;
  const auto it = std::lower_bound(out.points_.begin(), out.points_.end(), p);
  if (it != out.points_.end() && *it == p) out.points_.erase(it);
  return out;
}

bool PointSet::disjoint(const PointSet& other) const {
  for (const auto& p : points_)
    if (other.contains(p)) return false;
  return true;
}

FatScheme FatScheme::reduced(const PointSet& points) {
  FatScheme z(points.ambient_dim());
  for (const auto& p : points) z.add(p, 1);
  return z;
}

void FatScheme::add(const ProjPoint& p, unsigned multiplicity) {
  if (multiplicity == 0) throw Error("fat point multiplicity must be at least 1");
  if (p.dim() != n_) throw Error("point dimension does not match the scheme");
  for (const auto& it : items_)
    if (it.point == p) throw Error("fat scheme support must be pairwise distinct");
  items_.push_back({p, multiplicity});
}

std::size_t FatScheme::degree() const {
  std::size_t d = 0;
  for (const auto& it : items_)
    d += binomial_u64(static_cast<unsigned>(n_ + it.multiplicity - 1), static_cast<unsigned>(n_));
  return d;
}

bool FatScheme::is_reduced() const {
  return std::all_of(items_.begin(), items_.end(), [](const Item& i) { return i.multiplicity == 1; });
}

IntMatrix coordinate_matrix(std::span<const ProjPoint> ps) {
  IntMatrix m;
  for (const auto& p : ps) m.append_row(p.coords());
  return m;
}

template <class Tag>
std::size_t span_rank(std::span<const ProjVector<Tag>> vs) {
  IntMatrix m;
  for (const auto& v : vs) m.append_row(v.coords());
  return rank(m);
}
template std::size_t span_rank<PointTag>(std::span<const ProjPoint>);
template std::size_t span_rank<HyperplaneTag>(std::span<const Hyperplane>);

ProjPoint intersect_hyperplanes(std::span<const Hyperplane> hs) {
  if (hs.empty()) throw Error("no hyperplanes to intersect");
  const std::size_t n = hs.front().dim();
  if (hs.size() != n) throw Error("need exactly n hyperplanes in P^n");
  IntMatrix m;
  for (const auto& h : hs) m.append_row(h.coords());
  const auto ker = kernel_basis(m);
  if (ker.size() != 1) throw DegenerateConfiguration("hyperplanes do not meet properly");
  return ProjPoint(std::span<const Integer>(ker.front()));
}

Hyperplane join_points(std::span<const ProjPoint> ps) {
  if (ps.empty()) throw Error("no points to join");
  const std::size_t n = ps.front().dim();
  if (ps.size() != n) throw Error("need exactly n points in P^n");
  const auto ker = kernel_basis(coordinate_matrix(ps));
  if (ker.size() != 1) throw DegenerateConfiguration("points do not span a hyperplane");
  return Hyperplane(std::span<const Integer>(ker.front()));
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool meets_properly(std::span<const Hyperplane> hs) {
  if (hs.empty()) return false;
  const std::size_t n = hs.front().dim();
  if (hs.size() < n) throw Error("meets_properly needs at least n hyperplanes");
  for (const auto& h : hs)
    if (h.dim() != n) throw Error("hyperplanes live in different spaces");
  auto subset_rank = [&](const std::vector<std::size_t>& idx) {
    IntMatrix m;
    for (auto i : idx) m.append_row(hs[i].coords());
    return rank(m);
  };
  for (const auto& idx : combinations(hs.size(), n))
    if (subset_rank(idx) != n) return false;
  for (const auto& idx : combinations(hs.size(), n + 1))
    if (subset_rank(idx) != n + 1) return false;
  return true;
}

PointSet star_configuration(std::span<const Hyperplane> hs) {
  if (hs.empty()) throw Error("no hyperplanes");
  const std::size_t n = hs.front().dim();
  const auto subsets = combinations(hs.size(), n);
  PointSet out(n);
  for (const auto& idx : subsets) {
    std::vector<Hyperplane> sub;
    for (auto i : idx) sub.push_back(hs[i]);
    out.insert(intersect_hyperplanes(sub));
  }
  if (out.size() != subsets.size())
    throw DegenerateConfiguration("hyperplanes do not meet properly: coincident intersection points");
  return out;
}

bool collinear(std::span<const ProjPoint> ps) {
  if (ps.size() < 2) throw Error("collinearity needs at least two points");
  return rank(coordinate_matrix(ps)) <= 2;
}

ProjPoint dual_point(const Hyperplane& h) {
  if (h.dim() != 2) throw Error("duality is implemented for the plane only");
  return ProjPoint(std::span<const Integer>(h.coords()));
}

Hyperplane dual_line(const ProjPoint& p) {
  if (p.dim() != 2) throw Error("duality is implemented for the plane only");
  return Hyperplane(std::span<const Integer>(p.coords()));
}

}  // namespace starconf
