#pragma once

// Points and hyperplanes of P^n with canonical integer coordinates, plus the
// star-configuration construction and incidence predicates.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starconf/matrix.hpp"
#include "starconf/rational.hpp"

namespace starconf {

/// Homogeneous integer vector normalized to content 1 with a positive first
/// nonzero entry. `Tag` separates points from hyperplanes at the type level.
template <class Tag>
class ProjVector {
 public:
  ProjVector() = default;
  explicit ProjVector(std::span<const Integer> coords) : coords_(primitive_integer_vector(coords)) {
    check();
  }
  explicit ProjVector(std::span<const Rational> coords) : coords_(primitive_integer_vector(coords)) {
    check();
  }
  ProjVector(std::initializer_list<long> coords) {
    std::vector<Integer> v;
    for (long c : coords) v.emplace_back(c);
    coords_ = primitive_integer_vector(std::span<const Integer>(v));
    check();
  }

  /// n for a vector of P^n.
  std::size_t dim() const { return coords_.size() - 1; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<Integer>& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjVector& a, const ProjVector& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const ProjVector& a, const ProjVector& b) {
    if (a.coords_.size() != b.coords_.size()) return a.coords_.size() <=> b.coords_.size();
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      const int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ":";
      s += coords_[i].get_str();
    }
    return s + "]";
  }

 private:
  void check() const {
    if (coords_.size() < 2) throw Error("projective vectors need at least two coordinates");
    for (const auto& c : coords_)
      if (c != 0) return;
    throw Error("the zero vector is not a projective point");
  }

  std::vector<Integer> coords_;
};

struct PointTag {};
struct HyperplaneTag {};
using ProjPoint = ProjVector<PointTag>;
using Hyperplane = ProjVector<HyperplaneTag>;

Integer pairing(const ProjPoint& p, const Hyperplane& h);
inline bool incident(const ProjPoint& p, const Hyperplane& h) { return pairing(p, h) == 0; }

/// Duplicate-free point set kept sorted by canonical coordinates.
class PointSet {
 public:
  explicit PointSet(std::size_t n = 2) : n_(n) {}
  PointSet(std::size_t n, std::vector<ProjPoint> points);

  std::size_t ambient_dim() const { return n_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Returns false when the point was already present.
  bool insert(const ProjPoint& p);
  bool contains(const ProjPoint& p) const;

  PointSet united(const PointSet& other) const;
  PointSet minus(const PointSet& other) const;
  PointSet without(const ProjPoint& p) const;
  bool disjoint(const PointSet& other) const;

  bool operator==(const PointSet&) const = default;

 private:
  std::size_t n_;
  std::vector<ProjPoint> points_;
};

/// Points with multiplicities; multiplicity 1 everywhere is a reduced set.
class FatScheme {
 public:
  struct Item {
    ProjPoint point;
    unsigned multiplicity;
  };

  explicit FatScheme(std::size_t n = 2) : n_(n) {}
  static FatScheme reduced(const PointSet& points);

  void add(const ProjPoint& p, unsigned multiplicity);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Item>& items() const { return items_; }
  std::size_t degree() const;
  bool is_reduced() const;

 private:
  std::size_t n_;
  std::vector<Item> items_;
};

/// Intersection of n hyperplanes of P^n.
ProjPoint intersect_hyperplanes(std::span<const Hyperplane> hs);
/// Hyperplane through n points of P^n.
Hyperplane join_points(std::span<const ProjPoint> ps);
inline Hyperplane line_through(const ProjPoint& a, const ProjPoint& b) {
  const ProjPoint ps[] = {a, b};
  return join_points(ps);
}
inline ProjPoint meet(const Hyperplane& a, const Hyperplane& b) {
  const Hyperplane hs[] = {a, b};
  return intersect_hyperplanes(hs);
}

/// Every n of the hyperplanes meet in a point and no n+1 are concurrent.
bool meets_properly(std::span<const Hyperplane> hs);

/// All C(r, n) n-wise intersection points.
PointSet star_configuration(std::span<const Hyperplane> hs);

bool collinear(std::span<const ProjPoint> ps);
inline bool collinear(const PointSet& ps) { return collinear(ps.points()); }

/// Canonical duality of P^2.
ProjPoint dual_point(const Hyperplane& h);
Hyperplane dual_line(const ProjPoint& p);

/// Rank of the matrix whose rows are the given vectors.
template <class Tag>
std::size_t span_rank(std::span<const ProjVector<Tag>> vs);

IntMatrix coordinate_matrix(std::span<const ProjPoint> ps);

/// Index subsets of size k of {0..n-1}, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace starconf
