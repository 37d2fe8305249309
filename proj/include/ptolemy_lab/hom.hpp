#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ptolemy_lab/polygon.hpp"

namespace ptolemy_lab {

/// The endpoints of a diagonal labelled relative to some fixed diagonal x,
/// as in the interval criteria for morphisms out of and into x.
struct RelativeEndpoints {
  Vertex first;
  Vertex second;
};

/// dim Ext^1(a, c): 1 exactly when the diagonals cross.
int ext1_dim(const Polygon& p, const Diagonal& a, const Diagonal& c);

/// Labels y relative to x so that y.first lies in [x0, x1--] and y.second
/// in [x1, x0--]. Empty when no such labelling exists, i.e. Hom(x, y) = 0.
std::optional<RelativeEndpoints> relative_from(const Polygon& p, const Diagonal& x,
                                               const Diagonal& y);

/// Labels z relative to x so that z.first lies in [x0++, x1] and z.second
/// in [x1++, x0]. Empty when Hom(z, x) = 0.
std::optional<RelativeEndpoints> relative_to(const Polygon& p, const Diagonal& z,
                                             const Diagonal& x);

/// dim Hom(x, y) via the interval criterion on morphisms out of x.
int hom_dim_from(const Polygon& p, const Diagonal& x, const Diagonal& y);

/// dim Hom(z, x) via the interval criterion on morphisms into x.
int hom_dim_to(const Polygon& p, const Diagonal& z, const Diagonal& x);

/// Whether the non-zero morphism x -> y factors through s. Zero arcs never
/// qualify. Throws Error(precondition_violation) when Hom(x, y) = 0.
bool factors_from(const Polygon& p, const Diagonal& x, const Diagonal& y, const Arc& s);

/// Whether the non-zero morphism z -> x factors through s. Throws
/// Error(precondition_violation) when Hom(z, x) = 0.
bool factors_to(const Polygon& p, const Diagonal& z, const Diagonal& x, const Arc& s);

/// The two triangles completing the morphisms between a crossing pair:
///   a -> b_pair[0] (+) b_pair[1] -> c -> Sigma a
///   c -> s_pair[0] (+) s_pair[1] -> a -> Sigma c
/// The four arcs are the sides of the quadrilateral on the endpoints of a
/// and c; sides that are polygon edges are zero.
struct CrossingTriangles {
  Diagonal a;
  Diagonal c;
  std::array<Arc, 2> b_pair;
  std::array<Arc, 2> s_pair;
};

/// Pairs each endpoint a_k with the endpoint of c immediately clockwise from
/// it to form b_pair. Throws Error(not_crossing) unless a and c cross.
CrossingTriangles crossing_triangles(const Polygon& p, const Diagonal& a, const Diagonal& c);

enum class TriangleSide {
  b_side,  // a -> b -> c -> Sigma a
  s_side,  // c -> s -> a -> Sigma c
};

/// Auslander-Reiten triangles are those whose first term is the suspension
/// of the third.
bool is_ar_triangle(const Polygon& p, const CrossingTriangles& t, TriangleSide side);

/// Non-zero middle terms of the Auslander-Reiten triangle ending at a.
std::vector<Diagonal> ar_mesh(const Polygon& p, const Diagonal& a);

class ARQuiver {
 public:
  explicit ARQuiver(const Polygon& p);

  const Polygon& polygon() const noexcept { return polygon_; }
  const std::vector<Diagonal>& nodes() const noexcept { return nodes_; }
  /// Sorted (source, target) pairs.
  const std::vector<std::pair<Diagonal, Diagonal>>& arrows() const noexcept { return arrows_; }

  std::vector<Diagonal> successors(const Diagonal& d) const;
  std::vector<Diagonal> predecessors(const Diagonal& d) const;

 private:
  Polygon polygon_;
  std::vector<Diagonal> nodes_;
  std::vector<std::pair<Diagonal, Diagonal>> arrows_;
};

/// Irreducible maps move one endpoint a single step anticlockwise.
ARQuiver ar_quiver(const Polygon& p);

}  // namespace ptolemy_lab
