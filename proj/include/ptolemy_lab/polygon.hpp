#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace ptolemy_lab {

/// A polygon vertex, a residue modulo the polygon size. Vertices are
/// labelled 0..N-1 anticlockwise; anticlockwise is the positive direction.
using Vertex = int;

class Polygon;

/// Unordered pair of distinct vertices, stored with the smaller index first.
/// Adjacent endpoints make the arc a polygon edge, which models the zero
/// object; otherwise the arc is a diagonal.
class Arc {
 public:
  constexpr Vertex first() const noexcept { return first_; }
  constexpr Vertex second() const noexcept { return second_; }
  constexpr bool has_endpoint(Vertex v) const noexcept { return v == first_ || v == second_; }

  /// The endpoint that is not `v`. `v` must be an endpoint.
  constexpr Vertex other(Vertex v) const noexcept { return v == first_ ? second_ : first_; }

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;

 private:
  friend class Polygon;
  friend class Diagonal;
  constexpr Arc(Vertex a, Vertex b) noexcept
      : first_(a < b ? a : b), second_(a < b ? b : a) {}

  Vertex first_ = 0;
  Vertex second_ = 0;
};

/// A diagonal between non-neighbouring vertices: the model of an
/// indecomposable object. Only a Polygon can mint one, so every Diagonal
/// value satisfies the non-adjacency invariant for the polygon it came from.
class Diagonal {
 public:
  constexpr Vertex first() const noexcept { return first_; }
  constexpr Vertex second() const noexcept { return second_; }
  constexpr bool has_endpoint(Vertex v) const noexcept { return v == first_ || v == second_; }
  constexpr Vertex other(Vertex v) const noexcept { return v == first_ ? second_ : first_; }
  constexpr std::array<Vertex, 2> endpoints() const noexcept { return {first_, second_}; }

  constexpr Arc arc() const noexcept { return Arc(first_, second_); }
  constexpr operator Arc() const noexcept { return arc(); }  // NOLINT(google-explicit-constructor)

  friend constexpr auto operator<=>(const Diagonal&, const Diagonal&) = default;

 private:
  friend class Polygon;
  constexpr Diagonal(Vertex a, Vertex b) noexcept
      : first_(a < b ? a : b), second_(a < b ? b : a) {}

  Vertex first_ = 0;
  Vertex second_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Arc& a);
std::ostream& operator<<(std::ostream& os, const Diagonal& d);

/// The regular N-gon, N = n + 3 >= 4, modelling the cluster category of
/// type A_n. All interval arguments are closed anticlockwise intervals unless
/// the name says otherwise.
class Polygon {
 public:
  /// Throws Error(parse_error) when size < 4.
  explicit Polygon(int size);

  int size() const noexcept { return size_; }

  Vertex normalize(long long v) const noexcept;

  /// v moved k steps; +1 is one anticlockwise step (v^+), -1 one clockwise
  /// step (v^-).
  Vertex step(Vertex v, int k) const noexcept { return normalize(static_cast<long long>(v) + k); }

  /// Anticlockwise distance from a to b, in [0, N).
  int distance(Vertex a, Vertex b) const noexcept { return normalize(static_cast<long long>(b) - a); }

  /// v in [a, b] going anticlockwise. [a, a] = {a}; [a, a-1] is everything.
  bool in_interval(Vertex v, Vertex a, Vertex b) const noexcept {
    return distance(a, v) <= distance(a, b);
  }

  /// v strictly between a and b going anticlockwise.
  bool in_open_interval(Vertex v, Vertex a, Vertex b) const noexcept {
    const int dv = distance(a, v);
    return dv > 0 && dv < distance(a, b);
  }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    const int d = distance(u, v);
    return d == 1 || d == size_ - 1;
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < size_; }
  bool is_diagonal(Vertex u, Vertex v) const noexcept {
    return contains(u) && contains(v) && u != v && !adjacent(u, v);
  }

  /// Throws Error(parse_error) when {u, v} is not a diagonal.
  Diagonal diagonal(Vertex u, Vertex v) const;

  /// Throws Error(parse_error) when u == v or either is out of range.
  Arc arc(Vertex u, Vertex v) const;

  bool is_zero(const Arc& a) const noexcept { return adjacent(a.first(), a.second()); }
  std::optional<Diagonal> as_diagonal(const Arc& a) const noexcept;

  /// Interior intersection; sharing an endpoint is not crossing.
  bool crosses(const Arc& d, const Arc& e) const noexcept;

  /// The suspension: both endpoints one step clockwise.
  Arc suspend(const Arc& a) const noexcept;
  Arc suspend_inverse(const Arc& a) const noexcept;
  Diagonal suspend(const Diagonal& d) const noexcept;
  Diagonal suspend_inverse(const Diagonal& d) const noexcept;

  /// Sorted; N(N-3)/2 entries.
  std::vector<Diagonal> all_diagonals() const;
  std::size_t diagonal_count() const noexcept {
    return static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_ - 3) / 2;
  }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  int size_;
};

}  // namespace ptolemy_lab
