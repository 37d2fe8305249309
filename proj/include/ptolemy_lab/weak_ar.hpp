#pragma once

#include <optional>
#include <vector>

#include "ptolemy_lab/diagram.hpp"
#include "ptolemy_lab/polygon.hpp"

namespace ptolemy_lab {

enum class Direction { left, right };

/// A weak Auslander-Reiten triangle of a Ptolemy diagram.
///
/// LEFT:  x -> b0 (+) b1 -> c -> Sigma x, with c Ext-projective in the
///        diagram and x outside it; b0 (+) b1 -> c is minimal right almost
///        split and x -> b0 (+) b1 is an envelope of x.
/// RIGHT: c -> b0 (+) b1 -> x -> Sigma c, with c Ext-injective and x
///        outside; c -> b0 (+) b1 is minimal left almost split and
///        b0 (+) b1 -> x is a cover of x.
///
/// Either b may be a polygon edge, i.e. zero.
struct WeakARTriangle {
  Direction direction;
  Diagonal x;
  Arc b0;
  Arc b1;
  Diagonal c;
  /// Vertices of the two cells bordered by c, ascending.
  std::vector<Vertex> cell_vertices;

  /// The non-zero middle terms.
  std::vector<Diagonal> middle(const Polygon& p) const;
};

/// Members d with Ext^1(d, e) = 0 for every member e. These are exactly the
/// dissecting diagonals; both characterisations are computed and a
/// disagreement throws std::logic_error.
std::vector<Diagonal> ext_projectives(const Diagram& d);

/// Members d with Ext^1(e, d) = 0 for every member e.
std::vector<Diagonal> ext_injectives(const Diagram& d);

/// A member crossing `d`, if any.
std::optional<Diagonal> crossing_witness(const Diagram& diagram, const Diagonal& d);

/// Left-weak AR triangle ending at the Ext-projective c = {v_i, v_j}:
/// v_p is the last vertex of [v_i^+, v_j^-] joined to v_i inside the
/// diagram (edges count), v_q likewise in [v_j^+, v_i^-] joined to v_j, and
/// x = {v_p, v_q}, b0 = {v_i, v_p}, b1 = {v_j, v_q}.
/// Throws Error(not_ext_projective), with a crossing witness when one exists.
WeakARTriangle left_weak_ar(const Diagram& d, const Diagonal& c);

/// Right-weak AR triangle starting at the Ext-injective a = {v_r, v_s}:
/// v_p is the first vertex of [v_r^+, v_s^-] joined to v_s, v_q the first
/// of [v_s^+, v_r^-] joined to v_r; z = {v_p, v_q}, b0 = {v_s, v_p},
/// b1 = {v_r, v_q}. Throws Error(not_ext_injective).
WeakARTriangle right_weak_ar(const Diagram& d, const Diagonal& a);

/// Whether End(b0 (+) b1) is diagonal: neither summand maps to the other,
/// i.e. b1 does not cross Sigma^-1 b0 and b0 does not cross Sigma^-1 b1.
/// Zero arcs are compatible with everything.
bool summands_orthogonal(const Polygon& p, const Arc& b0, const Arc& b1);

/// b0 (+) b1 -> c is minimal right almost split in the diagram. Throws
/// Error(precondition_violation) for a RIGHT triangle.
bool verify_minimal_right_almost_split(const Diagram& d, const WeakARTriangle& t);

/// c -> b0 (+) b1 is minimal left almost split in the diagram. Throws
/// Error(precondition_violation) for a LEFT triangle.
bool verify_minimal_left_almost_split(const Diagram& d, const WeakARTriangle& t);

/// x -> b0 (+) b1 is a left-minimal left approximation of x by the diagram.
/// Throws Error(precondition_violation) if x is a member.
bool verify_envelope(const Diagram& d, const Diagonal& x, const Arc& b0, const Arc& b1);

/// b0 (+) b1 -> z is a right-minimal right approximation of z by the
/// diagram. Throws Error(precondition_violation) if z is a member.
bool verify_cover(const Diagram& d, const Diagonal& z, const Arc& b0, const Arc& b1);

/// c -> x is injective over the Ext-projectives (left triangles), and
/// likewise for the Ext-injectives with right triangles.
bool uniqueness_check(const Diagram& d);

}  // namespace ptolemy_lab
