#include "ptolemy_lab/mutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"

namespace ptolemy_lab {

namespace {

std::string show(const Diagonal& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

MutationReport replace(const Diagram& d, const WeakARTriangle& t, MutationDirection direction) {
  const Diagonal& removed = t.c;
  const Diagram result = d.without(removed).with(t.x);

  const bool ptolemy = is_ptolemy(result);
  if (ptolemy != extension_closed_oracle(result)) {
    throw std::logic_error("Ptolemy test and extension-closure oracle disagree after replacing " +
                           show(removed));
  }

  const CellDecomposition cells = cell_decomposition(d);
  const auto [first, second] = cells.cells_bordering(removed);
  std::optional<Cell> failing;
  for (const Cell* cell : {first, second}) {
    if (cell->kind != CellKind::empty && !failing) failing = *cell;
  }

  std::string reason;
  if (!failing) {
    reason = "both cells bordered by the removed diagonal are empty";
  } else if (failing->kind == CellKind::clique) {
    reason = "clique cell with ≥ 4 vertices";
  } else {
    reason = "mixed cell: the input is not a Ptolemy diagram";
  }

  MutationReport report{
      .direction = direction,
      .input = d,
      .removed = removed,
      .inserted = t.x,
      .result = result,
      .extension_closed = ptolemy,
      .criterion_two_empty_cells = !failing.has_value(),
      .x_ext_projective_in_result = !crossing_witness(result, t.x).has_value(),
      .reason = std::move(reason),
      .failing_cell = std::move(failing),
      .theorem_c = std::nullopt,
  };
  if (report.criterion_two_empty_cells) {
    report.theorem_c = direction == MutationDirection::backward ? d_cover_check(d, removed)
                                                                : d_envelope_check(d, removed);
  }
  return report;
}

// D = (dissecting diagonals) \ {removed}; it must be rigid.
std::vector<Diagonal> rigid_part(const Diagram& d, const std::vector<Diagonal>& dissecting,
                                 const Diagonal& removed) {
  std::vector<Diagonal> out;
  std::copy_if(dissecting.begin(), dissecting.end(), std::back_inserter(out),
               [&](const Diagonal& e) { return e != removed; });
  for (const Diagonal& a : out) {
    for (const Diagonal& b : out) {
      if (d.polygon().crosses(a, b)) {
        throw std::logic_error("dissecting diagonals " + show(a) + " and " + show(b) + " cross");
      }
    }
  }
  return out;
}

std::string first_failure(const TheoremCReport& r) {
  if (!r.cover_in_d) return "a middle term is not Ext-projective in the diagram";
  if (!r.cover_is_precover) return "some map from D does not factor through the middle term";
  if (!r.cover_is_right_minimal) return "the middle term is not minimal";
  return {};
}

}  // namespace

bool borders_two_empty_cells(const Diagram& d, const Diagonal& c) {
  const CellDecomposition cells = cell_decomposition(d);
  const auto [first, second] = cells.cells_bordering(c);
  return first->kind == CellKind::empty && second->kind == CellKind::empty;
}

MutationReport backward_replace(const Diagram& d, const Diagonal& c) {
  return replace(d, left_weak_ar(d, c), MutationDirection::backward);
}

MutationReport forward_replace(const Diagram& d, const Diagonal& a) {
  return replace(d, right_weak_ar(d, a), MutationDirection::forward);
}

MutationReport mutate(const Diagram& d, const Diagonal& c, MutationDirection direction) {
  return direction == MutationDirection::backward ? backward_replace(d, c) : forward_replace(d, c);
}

TheoremCReport d_cover_check(const Diagram& d, const Diagonal& c) {
  const Polygon& p = d.polygon();
  const WeakARTriangle t = left_weak_ar(d, c);
  const auto part = rigid_part(d, ext_projectives(d), c);
  const auto summands = t.middle(p);

  auto in_part = [&](const Diagonal& s) { return std::find(part.begin(), part.end(), s) != part.end(); };
  TheoremCReport r{
      .d_subcategory = part,
      .cover_summands = summands,
      .cover_is_precover = std::all_of(part.begin(), part.end(),
                                       [&](const Diagonal& e) {
                                         if (hom_dim_to(p, e, c) == 0) return true;
                                         return std::any_of(summands.begin(), summands.end(),
                                                            [&](const Diagonal& s) {
                                                              return factors_to(p, e, c, s);
                                                            });
                                       }),
      .cover_is_right_minimal =
          summands_orthogonal(p, t.b0, t.b1) &&
          std::all_of(summands.begin(), summands.end(),
                      [&](const Diagonal& s) { return hom_dim_to(p, s, c) == 1; }),
      .cover_in_d = std::all_of(summands.begin(), summands.end(), in_part),
      .mu_of_removed = t.x,
      .equals_inserted = false,
      .reason = {},
  };
  r.equals_inserted = r.cover_in_d && r.cover_is_precover && r.cover_is_right_minimal;
  r.reason = first_failure(r);
  return r;
}

TheoremCReport d_envelope_check(const Diagram& d, const Diagonal& a) {
  const Polygon& p = d.polygon();
  const WeakARTriangle t = right_weak_ar(d, a);
  const auto part = rigid_part(d, ext_injectives(d), a);
  const auto summands = t.middle(p);

  auto in_part = [&](const Diagonal& s) { return std::find(part.begin(), part.end(), s) != part.end(); };
  TheoremCReport r{
      .d_subcategory = part,
      .cover_summands = summands,
      .cover_is_precover = std::all_of(part.begin(), part.end(),
                                       [&](const Diagonal& e) {
                                         if (hom_dim_from(p, a, e) == 0) return true;
                                         return std::any_of(summands.begin(), summands.end(),
                                                            [&](const Diagonal& s) {
                                                              return factors_from(p, a, e, s);
                                                            });
                                       }),
      .cover_is_right_minimal =
          summands_orthogonal(p, t.b0, t.b1) &&
          std::all_of(summands.begin(), summands.end(),
                      [&](const Diagonal& s) { return hom_dim_from(p, a, s) == 1; }),
      .cover_in_d = std::all_of(summands.begin(), summands.end(), in_part),
      .mu_of_removed = t.x,
      .equals_inserted = false,
      .reason = {},
  };
  r.equals_inserted = r.cover_in_d && r.cover_is_precover && r.cover_is_right_minimal;
  r.reason = first_failure(r);
  return r;
}

TheoremBReport theorem_b_check(const Diagram& d) {
  TheoremBReport out;
  out.diagrams = 1;
  auto check = [&](const MutationReport& r) {
    ++out.cases;
    const bool a = !r.x_ext_projective_in_result || r.extension_closed;
    const bool b = !r.extension_closed || r.x_ext_projective_in_result;
    const bool two_cells = r.extension_closed == r.criterion_two_empty_cells;
    if (a && b && two_cells) return;
    std::ostringstream os;
    os << (r.direction == MutationDirection::backward ? "backward" : "forward") << " replace of "
       << r.removed << " by " << r.inserted << " in a " << d.polygon().size()
       << "-gon diagram with " << d.size() << " diagonals: extension_closed=" << r.extension_closed
       << " x_ext_projective=" << r.x_ext_projective_in_result
       << " two_empty_cells=" << r.criterion_two_empty_cells;
    out.counterexamples.push_back(os.str());
  };
  for (const Diagonal& c : ext_projectives(d)) check(backward_replace(d, c));
  for (const Diagonal& a : ext_injectives(d)) check(forward_replace(d, a));
  return out;
}

TheoremBReport theorem_b_suite(const Polygon& p, int max_size) {
  TheoremBReport out;
  for (const Diagram& d : enumerate_ptolemy(p, max_size)) {
    TheoremBReport one = theorem_b_check(d);
    out.diagrams += 1;
    out.cases += one.cases;
    out.counterexamples.insert(out.counterexamples.end(), one.counterexamples.begin(),
                               one.counterexamples.end());
  }
  return out;
}

}  // namespace ptolemy_lab
