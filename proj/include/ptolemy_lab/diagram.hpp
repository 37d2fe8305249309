#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ptolemy_lab/polygon.hpp"

namespace ptolemy_lab {

/// A set of diagonals of one polygon, modelling the additive subcategory
/// they generate.
class Diagram {
 public:
  explicit Diagram(const Polygon& p) : polygon_(p) {}

  /// Throws Error(parse_error) if a member is not a diagonal of `p`.
  Diagram(const Polygon& p, std::set<Diagonal> diagonals);

  /// Convenience for literals: Diagram::of(p, {{0, 2}, {2, 4}}).
  static Diagram of(const Polygon& p, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

  const Polygon& polygon() const noexcept { return polygon_; }
  const std::set<Diagonal>& diagonals() const noexcept { return diagonals_; }
  std::size_t size() const noexcept { return diagonals_.size(); }
  bool empty() const noexcept { return diagonals_.empty(); }
  auto begin() const noexcept { return diagonals_.begin(); }
  auto end() const noexcept { return diagonals_.end(); }

  bool contains(const Diagonal& d) const { return diagonals_.contains(d); }

  /// Membership of a non-zero arc.
  bool contains(const Arc& a) const;

  /// Membership in the diagram extended by the polygon edges.
  bool contains_or_edge(const Arc& a) const { return polygon_.is_zero(a) || contains(a); }

  Diagram with(const Diagonal& d) const;
  Diagram without(const Diagonal& d) const;

  /// Members crossing `d`, sorted.
  std::vector<Diagonal> crossing(const Arc& d) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Polygon polygon_;
  std::set<Diagonal> diagonals_;
};

/// Whether every crossing pair has all its endpoint-connecting diagonals in
/// the diagram.
bool is_ptolemy(const Diagram& d);

/// The smallest Ptolemy diagram containing `d`.
Diagram ptolemy_closure(const Diagram& d);

/// Checks closure under extensions directly: for every crossing pair the
/// middle terms of both non-split triangles between them must be members.
bool extension_closed_oracle(const Diagram& d);

/// Members crossed by no other member.
std::vector<Diagonal> dissecting_diagonals(const Diagram& d);

enum class CellKind { empty, clique, mixed };

struct Cell {
  /// Anticlockwise, starting at the smallest index.
  std::vector<Vertex> vertices;
  CellKind kind = CellKind::empty;

  /// Whether `a` is a side of the cell (edge or dissecting diagonal).
  bool has_side(const Arc& a) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellDecomposition {
  std::vector<Diagonal> dissecting;
  std::vector<Cell> cells;

  /// The two cells having `d` as a side. `d` must be dissecting.
  std::pair<const Cell*, const Cell*> cells_bordering(const Diagonal& d) const;
};

/// Cuts the polygon along the dissecting diagonals and classifies each face
/// by which of its internal diagonals are members. Triangles are EMPTY.
CellDecomposition cell_decomposition(const Diagram& d);

/// Internal diagonals of a cell: vertex pairs not adjacent along the cell.
std::vector<Diagonal> internal_diagonals(const Polygon& p, const Cell& cell);

/// Default bound for exhaustive enumeration.
inline constexpr int kDefaultEnumerationBound = 8;

/// All Ptolemy diagrams of `p`, built as a dissection plus an empty/clique
/// choice for every non-triangle cell. Sorted by diagonal set. Throws
/// Error(size_limit) when p.size() > max_size.
std::vector<Diagram> enumerate_ptolemy(const Polygon& p, int max_size = kDefaultEnumerationBound);

/// All pairwise non-crossing diagonal sets (including the empty set).
std::vector<std::vector<Diagonal>> enumerate_dissections(const Polygon& p);

}  // namespace ptolemy_lab
