#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace metanil {

/// A permutation of {0, ..., degree-1} stored as its image sequence:
/// images()[i] is the image of point i.
///
/// Products apply the LEFT factor first: (p * q)(i) = q(p(i)).
/// This convention is fixed repo-wide; coset actions and commutators
/// below all assume it.
class Perm {
public:
  Perm() = default;

  /// Identity on `degree` points.
  explicit Perm(int degree);

  /// Validating constructor; throws Errc::invalid_spec unless `images`
  /// is a bijection on {0, ..., n-1}.
  explicit Perm(std::vector<int> images);

  /// Trusted constructor for internal paths that produce valid images.
  static Perm unchecked(std::vector<int> images) {
    return Perm(unchecked_t{}, std::move(images));
  }

  int degree() const { return static_cast<int>(imgs_.size()); }
  int operator[](int point) const { return imgs_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return imgs_; }
  bool is_identity() const;

  /// Smallest moved point, or -1 for the identity.
  int first_moved_point() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic on image sequences; the canonical element order.
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.imgs_ <=> b.imgs_; }

private:
  struct unchecked_t {};
  Perm(unchecked_t, std::vector<int> images) : imgs_(std::move(images)) {}

  std::vector<int> imgs_;
};

/// p then q. Throws Errc::degree_mismatch.
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
/// y^-1 x y (the conjugate x^y).
Perm conjugate(const Perm& x, const Perm& y);
/// [x, y] = x^-1 y^-1 x y.
Perm commutator(const Perm& x, const Perm& y);
Perm power(const Perm& p, std::int64_t n);
/// Least m >= 1 with p^m = identity; the lcm of the cycle lengths.
std::uint64_t element_order(const Perm& p);

/// 0-based cycle notation with cycles ordered by least moved point,
/// each cycle starting at its least point; "()" for the identity.
std::string format_cycles(const Perm& p);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace metanil
