#include "pam/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace pam {

int ell1_norm(const Site& x) {
  int s = 0;
  for (int c : x) s += std::abs(c);
  return s;
}

int linf_norm(const Site& x) {
  int s = 0;
  for (int c : x) s = std::max(s, std::abs(c));
  return s;
}

int ell1_dist(const Site& a, const Site& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

int linf_dist(const Site& a, const Site& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
  return s;
}

Site site_add(const Site& a, const Site& b) {
  Site r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Site site_sub(const Site& a, const Site& b) {
  Site r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string site_to_string(const Site& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  os << ')';
  return os.str();
}

BoxDomain::BoxDomain(Site center, int radius) : center_(std::move(center)), radius_(radius) {
  if (center_.empty()) throw std::invalid_argument("BoxDomain: dimension must be >= 1");
  if (radius_ < 0) throw std::invalid_argument("BoxDomain: radius must be >= 0");
}

BoxDomain BoxDomain::centered(int dim, int radius) {
  return BoxDomain(Site(static_cast<std::size_t>(dim), 0), radius);
}

std::int64_t BoxDomain::size() const {
  std::int64_t n = 1;
  for (int i = 0; i < dim(); ++i) n *= 2 * static_cast<std::int64_t>(radius_) + 1;
  return n;
}

bool BoxDomain::contains(const Site& x) const {
  if (static_cast<int>(x.size()) != dim()) return false;
  return linf_dist(x, center_) <= radius_;
}

bool BoxDomain::contains_box(const BoxDomain& inner) const {
  if (inner.dim() != dim()) return false;
  return linf_dist(inner.center(), center_) + inner.radius() <= radius_;
}

std::int64_t BoxDomain::index_of(const Site& x) const {
  const std::int64_t side = 2 * static_cast<std::int64_t>(radius_) + 1;
  std::int64_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    const int off = x[i] - center_[i] + radius_;
    if (off < 0 || off >= side) throw std::out_of_range("BoxDomain::index_of: site outside box");
    idx = idx * side + off;
  }
  return idx;
}

Site BoxDomain::site_at(std::int64_t idx) const {
  const std::int64_t side = 2 * static_cast<std::int64_t>(radius_) + 1;
  Site x(center_.size());
  for (int i = dim() - 1; i >= 0; --i) {
    x[i] = static_cast<int>(idx % side) - radius_ + center_[i];
    idx /= side;
  }
  return x;
}

SiteSet::SiteSet(std::vector<Site> sites) : sites_(std::move(sites)) {
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
  for (const auto& s : sites_) {
    if (s.size() != sites_.front().size())
      throw std::invalid_argument("SiteSet: mixed dimensions");
  }
}

bool SiteSet::contains(const Site& x) const {
  return std::binary_search(sites_.begin(), sites_.end(), x);
}

void SiteSet::insert(const Site& x) {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), x);
  if (it == sites_.end() || *it != x) sites_.insert(it, x);
}

void SiteSet::erase(const Site& x) {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), x);
  if (it != sites_.end() && *it == x) sites_.erase(it);
}

SiteSet SiteSet::from_box(const BoxDomain& box) {
  std::vector<Site> v;
  v.reserve(static_cast<std::size_t>(box.size()));
  for (std::int64_t i = 0; i < box.size(); ++i) v.push_back(box.site_at(i));
  std::sort(v.begin(), v.end());
  SiteSet s;
  s.sites_ = std::move(v);
  return s;
}

SiteSet SiteSet::set_union(const SiteSet& o) const {
  std::vector<Site> v;
  v.reserve(sites_.size() + o.sites_.size());
  std::set_union(sites_.begin(), sites_.end(), o.sites_.begin(), o.sites_.end(),
                 std::back_inserter(v));
  SiteSet s;
  s.sites_ = std::move(v);
  return s;
}

SiteSet SiteSet::set_minus(const SiteSet& o) const {
  std::vector<Site> v;
  std::set_difference(sites_.begin(), sites_.end(), o.sites_.begin(), o.sites_.end(),
                      std::back_inserter(v));
  SiteSet s;
  s.sites_ = std::move(v);
  return s;
}

SiteSet SiteSet::set_intersect(const SiteSet& o) const {
  std::vector<Site> v;
  std::set_intersection(sites_.begin(), sites_.end(), o.sites_.begin(), o.sites_.end(),
                        std::back_inserter(v));
  SiteSet s;
  s.sites_ = std::move(v);
  return s;
}

SiteSet SiteSet::clipped_to(const BoxDomain& box) const {
  std::vector<Site> v;
  for (const auto& s : sites_)
    if (box.contains(s)) v.push_back(s);
  SiteSet r;
  r.sites_ = std::move(v);
  return r;
}

SiteSet cube_neighborhood(const Site& y, int R) {
  if (R < 0) throw std::invalid_argument("cube_neighborhood: R must be >= 0");
  BoxDomain b(y, R);
  return SiteSet::from_box(b);
}

SiteSet cube_neighborhood(const SiteSet& A, int R) {
  if (R < 0) throw std::invalid_argument("cube_neighborhood: R must be >= 0");
  if (R == 0) return A;
  SiteSet out;
  std::vector<Site> all;
  for (const auto& y : A) {
    BoxDomain b(y, R);
    for (std::int64_t i = 0; i < b.size(); ++i) all.push_back(b.site_at(i));
  }
  return SiteSet(std::move(all));
}

std::vector<SiteSet> connected_components(const SiteSet& A, int r) {
  if (r <= 0) throw std::invalid_argument("connected_components: r must be >= 1");
  const auto& pts = A.sites();
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (linf_dist(pts[i], pts[j]) <= r) {
        auto a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }

  std::vector<std::vector<Site>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(pts[i]);
  std::vector<SiteSet> out;
  for (auto& g : groups)
    if (!g.empty()) out.emplace_back(std::move(g));
  // Members are sorted by SiteSet's constructor; order components by their
  // smallest member so downstream constructions are deterministic.
  std::sort(out.begin(), out.end(), [](const SiteSet& a, const SiteSet& b) {
    return a.sites().front() < b.sites().front();
  });
  return out;
}

int set_distance(const SiteSet& A, const SiteSet& B) {
  if (A.empty() || B.empty()) throw std::invalid_argument("set_distance: empty argument");
  int best = std::numeric_limits<int>::max();
  for (const auto& a : A)
    for (const auto& b : B) best = std::min(best, ell1_dist(a, b));
  return best;
}

}  // namespace pam
