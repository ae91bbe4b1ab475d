#pragma once

#include <compare>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lqt/config.hpp"

namespace lqt {

// A bijection on {0..n-1}; images_[i] is the image of point i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm from_images(std::vector<Point> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (Point p : images) {
      if (p < 0 || p >= n) throw std::invalid_argument("permutation image out of range");
      if (seen[p]) throw std::invalid_argument("permutation image repeated");
      seen[p] = 1;
    }
    Perm r;
    r.img_ = std::move(images);
    return r;
  }

  int degree() const { return static_cast<int>(img_.size()); }
  Point operator()(Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
  }

  friend auto operator<=>(const Perm&, const Perm&) = default;

  // Cycle notation, e.g. "(0 1 2)(3 4)"; "id" for the identity.
  std::string to_string() const {
    std::ostringstream os;
    std::vector<char> done(img_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
      if (done[i] || img_[i] == i) continue;
      any = true;
      os << '(' << i;
      done[i] = 1;
      for (int j = img_[i]; j != i; j = img_[j]) {
        os << ' ' << j;
        done[j] = 1;
      }
      os << ')';
    }
    return any ? os.str() : "id";
  }

 private:
  std::vector<Point> img_;
};

// (p o q)(i) = p(q(i)); q acts first.
inline Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Perm::from_images(std::move(img));
}

// g * p * g^-1 without forming g^-1.
inline Perm conjugate(const Perm& g, const Perm& p) {
  if (g.degree() != p.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<Point> img(g.degree());
  for (int i = 0; i < g.degree(); ++i) img[g(i)] = g(p(i));
  return Perm::from_images(std::move(img));
}

inline Perm commutator(const Perm& a, const Perm& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

}  // namespace lqt
