// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "ptolemy_lab/analysis.hpp"
#include "ptolemy_lab/hom.hpp"
#include "ptolemy_lab/mutation.hpp"
#include "ptolemy_lab/weak_ar.hpp"

using namespace ptolemy_lab;
using ptolemy_lab::testing::subset;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    first_failure = what();
  }
};

std::string show(const Diagram& d) {
  std::ostringstream os;
  os << "N=" << d.polygon().size() << " {";
  for (const Diagonal& e : d) os << e;
  os << "}";
  return os.str();
}

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (o.ok ? "PASS " : "FAIL ") << name << " (" << o.checked << " checks, " << std::fixed
            << std::setprecision(2) << secs << " s)";
  if (!o.ok) std::cout << ": " << o.first_failure;
  std::cout << std::endl;
  if (!o.ok) ++failures;
}

Outcome ptolemy_equivalence() {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      const Diagram d = subset(p, all, mask);
      o.expect(is_ptolemy(d) == extension_closed_oracle(d), [&] { return show(d); });
    }
  }
  const Polygon p(8);
  const auto all = p.all_diagonals();
  std::mt19937_64 rng(20261017);
  const std::uint64_t full = (std::uint64_t{1} << all.size()) - 1;
  for (int k = 0; k < 100'000; ++k) {
    const Diagram d = subset(p, all, rng() & full);
    o.expect(is_ptolemy(d) == extension_closed_oracle(d), [&] { return show(d); });
  }
  return o;
}

Outcome hom_criteria() {
  Outcome o;
  for (int n = 4; n <= 12; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    for (const Diagonal& x : all) {
      for (const Diagonal& y : all) {
        auto where = [&] { return "N=" + std::to_string(n) + " x=" + show(x) + " y=" + show(y); };
        o.expect(hom_dim_from(p, x, y) == hom_dim_to(p, x, y), where);
        o.expect(hom_dim_from(p, x, p.suspend(y)) == hom_dim_from(p, y, p.suspend(x)), where);
        o.expect(hom_dim_from(p, x, p.suspend(y)) == ext1_dim(p, x, y), where);
        o.expect(ext1_dim(p, x, y) == (p.crosses(x, y) ? 1 : 0), where);
      }
    }
  }
  return o;
}

Outcome golden_example() {
  Outcome o;
  const Diagram d = ptolemy_lab::testing::twelve_gon();
  const Polygon& p = d.polygon();
  const Diagonal c = p.diagonal(3, 9);

  const AnalysisReport a = analyze(d);
  const std::vector<Diagonal> green{p.diagonal(1, 3), p.diagonal(1, 11), p.diagonal(3, 5), p.diagonal(3, 9),
                                    p.diagonal(5, 7), p.diagonal(7, 9),  p.diagonal(9, 11)};
  o.expect(a.ptolemy, [] { return std::string("diagram is not Ptolemy"); });
  o.expect(a.cells.dissecting == green, [] { return std::string("dissecting diagonals differ"); });

  const WeakARTriangle t = left_weak_ar(d, c);
  o.expect(t.x == p.diagonal(1, 5), [&] { return "x = " + show(t.x); });
  o.expect(t.b0 == p.arc(3, 5) && t.b1 == p.arc(1, 9),
           [&] { return "b0 = " + show(t.b0) + ", b1 = " + show(t.b1); });

  const MutationReport m = backward_replace(d, c);
  o.expect(!m.extension_closed, [] { return std::string("clique side reported closed"); });
  o.expect(m.reason == "clique cell with ≥ 4 vertices", [&] { return "reason: " + m.reason; });

  const MutationReport two = backward_replace(ptolemy_lab::testing::twelve_gon_two_empty(), c);
  o.expect(two.extension_closed, [] { return std::string("two-empty-cells variant not closed"); });
  o.expect(two.inserted == p.diagonal(5, 11), [&] { return "variant x = " + show(two.inserted); });
  return o;
}

Outcome theorem_a() {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    for (const Diagram& d : enumerate_ptolemy(Polygon(n))) {
      std::set<Diagonal> left_ends, right_ends;
      const auto projectives = ext_projectives(d);
      for (const Diagonal& c : projectives) {
        auto where = [&] { return show(d) + " c=" + show(c); };
        const WeakARTriangle l = left_weak_ar(d, c);
        o.expect(verify_minimal_right_almost_split(d, l), where);
        o.expect(verify_envelope(d, l.x, l.b0, l.b1), where);
        o.expect(!d.contains(l.x), where);
        left_ends.insert(l.x);

        const WeakARTriangle r = right_weak_ar(d, c);
        o.expect(verify_minimal_left_almost_split(d, r), where);
        o.expect(verify_cover(d, r.x, r.b0, r.b1), where);
        o.expect(!d.contains(r.x), where);
        right_ends.insert(r.x);
      }
      o.expect(uniqueness_check(d), [&] { return show(d); });
      o.expect(left_ends.size() == projectives.size() && right_ends.size() == projectives.size(),
               [&] { return show(d) + " end terms repeat"; });
    }
  }
  return o;
}

Outcome theorem_b() {
  Outcome o;
  for (int n = 4; n <= 7; ++n) {
    const TheoremBReport suite = theorem_b_suite(Polygon(n));
    o.expect(suite.passed(), [&] { return suite.counterexamples.front(); });
    for (const Diagram& d : enumerate_ptolemy(Polygon(n))) {
      for (const Diagonal& c : ext_projectives(d)) {
        for (const MutationDirection dir : {MutationDirection::backward, MutationDirection::forward}) {
          const MutationReport r = mutate(d, c, dir);
          o.expect(r.extension_closed == r.criterion_two_empty_cells &&
                       r.criterion_two_empty_cells == r.x_ext_projective_in_result,
                   [&] { return show(d) + " c=" + show(c); });
        }
      }
    }
  }
  return o;
}

Outcome theorem_c() {
  Outcome o;
  std::size_t applicable = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const Diagram& d : enumerate_ptolemy(Polygon(n))) {
      for (const Diagonal& c : ext_projectives(d)) {
        if (!borders_two_empty_cells(d, c)) continue;
        ++applicable;
        const TheoremCReport r = d_cover_check(d, c);
        const MutationReport m = backward_replace(d, c);
        o.expect(r.cover_in_d && r.cover_is_precover && r.cover_is_right_minimal && r.equals_inserted &&
                     r.mu_of_removed == m.inserted && m.extension_closed,
                 [&] { return show(d) + " c=" + show(c) + ": " + r.reason; });
      }
    }
  }
  o.expect(applicable > 0, [] { return std::string("no applicable cases"); });
  return o;
}

Outcome structural() {
  Outcome o;
  for (int n = 4; n <= 12; ++n) {
    const Polygon p(n);
    const auto all = p.all_diagonals();
    o.expect(all.size() == static_cast<std::size_t>(n * (n - 3) / 2),
             [&] { return "diagonal count at N=" + std::to_string(n); });

    const ARQuiver q = ar_quiver(p);
    for (const Diagonal& a : all) {
      Diagonal e = a;
      for (int k = 0; k < n; ++k) e = p.suspend(e);
      o.expect(e == a, [&] { return "suspension period at " + show(a); });

      // Degrees: in = out, and in {1, 2} once the polygon has an arrow at
      // all. The square's two diagonals have no irreducible maps.
      const auto in = q.predecessors(a);
      const auto out = q.successors(a);
      o.expect(in.size() == out.size(), [&] { return "degree mismatch at " + show(a); });
      const bool range_ok = n == 4 ? in.empty() : (in.size() >= 1 && in.size() <= 2);
      o.expect(range_ok, [&] { return "degree out of range at N=" + std::to_string(n) + " " + show(a); });

      // Mesh ending at a: the middle of the triangle Sigma a -> . -> a.
      const CrossingTriangles t = crossing_triangles(p, p.suspend(a), a);
      std::vector<Diagonal> mesh;
      for (const Arc& b : t.b_pair) {
        if (!p.is_zero(b)) mesh.push_back(*p.as_diagonal(b));
      }
      std::sort(mesh.begin(), mesh.end());
      std::vector<Diagonal> explicit_mesh;
      for (const Vertex moved : a.endpoints()) {
        const Vertex back = p.step(moved, -1);
        if (p.is_diagonal(back, a.other(moved))) explicit_mesh.push_back(p.diagonal(back, a.other(moved)));
      }
      std::sort(explicit_mesh.begin(), explicit_mesh.end());
      auto from_sigma = q.successors(p.suspend(a));
      std::sort(from_sigma.begin(), from_sigma.end());
      o.expect(mesh == in && mesh == explicit_mesh && mesh == from_sigma,
               [&] { return "mesh mismatch at N=" + std::to_string(n) + " " + show(a); });
    }
  }
  return o;
}

}  // namespace

int main() {
  report("ptolemy-iff-extension-closed (N=4..7 exhaustive, N=8 100000 random subsets)", ptolemy_equivalence);
  report("hom-criteria-equivalence, 2-CY symmetry, ext1-crossing (N<=12)", hom_criteria);
  report("twelve-gon golden values (dissecting, left weak AR, both replacement branches)", golden_example);
  report("weak-AR triangles: almost split, envelope/cover, x outside, uniqueness (N<=7)", theorem_a);
  report("replacement closed <=> two empty cells <=> x Ext-projective (N<=7)", theorem_b);
  report("D-mutation equals replacement whenever two empty cells (N<=7)", theorem_c);
  report("structural: suspension period, diagonal count, quiver degrees and meshes (N<=12)", structural);
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures;
}
