#ifndef PAM_LATTICE_HPP
#define PAM_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pam {

/// A lattice point in Z^d. Dimension d >= 1 is fixed per experiment;
/// lexicographic ordering of the coordinate vector is the canonical order
/// used everywhere downstream.
using Site = std::vector<int>;

int ell1_norm(const Site& x);
int linf_norm(const Site& x);
int ell1_dist(const Site& a, const Site& b);
int linf_dist(const Site& a, const Site& b);
Site site_add(const Site& a, const Site& b);
Site site_sub(const Site& a, const Site& b);
std::string site_to_string(const Site& x);

/// Centered cube y + [-R,R]^d on Z^d.
class BoxDomain {
 public:
  BoxDomain() = default;
  BoxDomain(Site center, int radius);
  static BoxDomain centered(int dim, int radius);

  int dim() const { return static_cast<int>(center_.size()); }
  int radius() const { return radius_; }
  const Site& center() const { return center_; }
  std::int64_t size() const;           // (2R+1)^d
  bool contains(const Site& x) const;  // linf_dist(x, center) <= R
  bool contains_box(const BoxDomain& inner) const;

  /// Row-major linear index over the cube; sites enumerate in
  /// lexicographic coordinate order.
  std::int64_t index_of(const Site& x) const;
  Site site_at(std::int64_t idx) const;

 private:
  Site center_;
  int radius_ = 0;
};

/// Finite set of sites of a common dimension, kept sorted and unique.
class SiteSet {
 public:
  SiteSet() = default;
  explicit SiteSet(std::vector<Site> sites);

  bool empty() const { return sites_.empty(); }
  std::size_t size() const { return sites_.size(); }
  int dim() const { return sites_.empty() ? 0 : static_cast<int>(sites_.front().size()); }
  bool contains(const Site& x) const;
  void insert(const Site& x);
  void erase(const Site& x);
  const std::vector<Site>& sites() const { return sites_; }
  auto begin() const { return sites_.begin(); }
  auto end() const { return sites_.end(); }

  bool operator==(const SiteSet& o) const { return sites_ == o.sites_; }

  static SiteSet from_box(const BoxDomain& box);
  SiteSet set_union(const SiteSet& o) const;
  SiteSet set_minus(const SiteSet& o) const;
  SiteSet set_intersect(const SiteSet& o) const;
  /// Restrict to sites inside a box.
  SiteSet clipped_to(const BoxDomain& box) const;

 private:
  std::vector<Site> sites_;  // sorted, unique
};

/// B_R(A) = union of R-cubes around the members of A. B_0(A) = A.
SiteSet cube_neighborhood(const SiteSet& A, int R);
SiteSet cube_neighborhood(const Site& y, int R);

/// Maximal r-connected components of A, where x,y are r-neighbors iff
/// y lies in B_r(x) (linf distance <= r). Components are ordered by their
/// lexicographically smallest member.
std::vector<SiteSet> connected_components(const SiteSet& A, int r);

/// Minimal l1 (lattice) distance between two nonempty sets.
int set_distance(const SiteSet& A, const SiteSet& B);

}  // namespace pam

#endif
