#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptolemy_lab/diagram.hpp"
#include "ptolemy_lab/weak_ar.hpp"

namespace ptolemy_lab {

enum class MutationDirection { backward, forward };

/// Checks that the removed diagonal's mutation with respect to
/// D = (dissecting diagonals) \ {removed} is the inserted diagonal, by
/// verifying that the middle of the weak AR triangle is a minimal
/// approximation by D. For backward mutation this is a right-minimal D-cover
/// of the removed diagonal; for forward mutation the dual left-minimal
/// D-envelope, reported in the same fields.
struct TheoremCReport {
  std::vector<Diagonal> d_subcategory;
  std::vector<Diagonal> cover_summands;
  bool cover_is_precover = false;
  bool cover_is_right_minimal = false;
  bool cover_in_d = false;
  Diagonal mu_of_removed;
  bool equals_inserted = false;
  /// Empty when equals_inserted holds, otherwise the first failed check.
  std::string reason;
};

struct MutationReport {
  MutationDirection direction;
  Diagram input;
  Diagonal removed;
  Diagonal inserted;
  Diagram result;
  bool extension_closed = false;
  bool criterion_two_empty_cells = false;
  /// The inserted diagonal crosses no member of the result. In this
  /// 2-Calabi-Yau setting this is also Ext-injectivity.
  bool x_ext_projective_in_result = false;
  std::string reason;
  /// A non-empty cell bordered by the removed diagonal, when there is one.
  std::optional<Cell> failing_cell;
  std::optional<TheoremCReport> theorem_c;
};

/// Whether both cells bordered by the dissecting diagonal c are EMPTY.
bool borders_two_empty_cells(const Diagram& d, const Diagonal& c);

/// Replaces the Ext-projective c by the end term x of its left weak AR
/// triangle. Throws Error(not_ext_projective).
MutationReport backward_replace(const Diagram& d, const Diagonal& c);

/// Replaces the Ext-injective a by the end term z of its right weak AR
/// triangle. Throws Error(not_ext_injective).
MutationReport forward_replace(const Diagram& d, const Diagonal& a);

/// Dispatches on direction.
MutationReport mutate(const Diagram& d, const Diagonal& c, MutationDirection direction);

/// Backward D-mutation check for the Ext-projective c.
TheoremCReport d_cover_check(const Diagram& d, const Diagonal& c);

/// Forward D-mutation check for the Ext-injective a.
TheoremCReport d_envelope_check(const Diagram& d, const Diagonal& a);

struct TheoremBReport {
  std::size_t diagrams = 0;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

/// For every Ext-projective c of `d` (and dually every Ext-injective):
/// x Ext-projective in the result <=> result closed under extensions <=>
/// c borders two empty cells.
TheoremBReport theorem_b_check(const Diagram& d);

/// theorem_b_check over every Ptolemy diagram of `p`. Throws
/// Error(size_limit) when p.size() > max_size.
TheoremBReport theorem_b_suite(const Polygon& p, int max_size = kDefaultEnumerationBound);

}  // namespace ptolemy_lab
