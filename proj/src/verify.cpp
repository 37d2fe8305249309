#include "ptolemy_lab/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>

#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"
#include "ptolemy_lab/mutation.hpp"
#include "ptolemy_lab/serialize.hpp"
#include "ptolemy_lab/weak_ar.hpp"

namespace ptolemy_lab {

namespace {

constexpr std::size_t kKeptCounterexamples = 10;
constexpr int kHomSweepSize = 12;
constexpr std::size_t kExhaustiveDiagonals = 14;
constexpr std::size_t kSampledSubsets = 100'000;

struct Tally {
  std::size_t diagrams = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (ok) return;
    ++failures;
    if (counterexamples.size() < kKeptCounterexamples) counterexamples.push_back(describe());
  }

  void merge(Tally other) {
    diagrams += other.diagrams;
    cases += other.cases;
    failures += other.failures;
    for (auto& s : other.counterexamples) {
      if (counterexamples.size() < kKeptCounterexamples) counterexamples.push_back(std::move(s));
    }
  }
};

std::string describe(const Diagram& d) { return document_json(d).dump(); }

std::string describe(const Diagram& d, const Diagonal& c, std::string_view what) {
  return std::string(what) + " at [" + std::to_string(c.first()) + "," + std::to_string(c.second()) +
         "] in " + describe(d);
}

Diagram subset(const Polygon& p, const std::vector<Diagonal>& all, std::uint64_t mask) {
  std::set<Diagonal> ds;
  for (std::size_t k = 0; k < all.size(); ++k) {
    if ((mask >> k) & 1U) ds.insert(all[k]);
  }
  return Diagram(p, std::move(ds));
}

Tally ptolemy_equivalence(int n) {
  Tally t;
  const Polygon p(n);
  const auto all = p.all_diagonals();
  auto one = [&](const Diagram& d) {
    ++t.diagrams;
    t.check(is_ptolemy(d) == extension_closed_oracle(d), [&] { return describe(d); });
  };
  if (all.size() <= kExhaustiveDiagonals) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) one(subset(p, all, mask));
    return t;
  }
  std::mt19937_64 rng(0x5eed + static_cast<unsigned>(n));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t k = 0; k < kSampledSubsets; ++k) {
    std::set<Diagonal> ds;
    for (const Diagonal& d : all) {
      if (coin(rng)) ds.insert(d);
    }
    one(Diagram(p, std::move(ds)));
  }
  return t;
}

Tally hom_criteria(int n) {
  Tally t;
  const Polygon p(n);
  const auto all = p.all_diagonals();
  for (const Diagonal& x : all) {
    for (const Diagonal& y : all) {
      const bool ok = hom_dim_from(p, x, y) == hom_dim_to(p, x, y) &&
                      hom_dim_from(p, x, y) == (p.crosses(x, p.suspend_inverse(y)) ? 1 : 0) &&
                      ext1_dim(p, x, y) == ext1_dim(p, y, x) &&
                      ext1_dim(p, x, y) == (p.crosses(x, y) ? 1 : 0) &&
                      hom_dim_from(p, x, p.suspend(y)) == ext1_dim(p, x, y);
      t.check(ok, [&] {
        std::ostringstream os;
        os << "N=" << n << " x=" << x << " y=" << y;
        return os.str();
      });
    }
  }
  return t;
}

Tally weak_ar(const Diagram& d) {
  Tally t;
  for (const Diagonal& c : ext_projectives(d)) {
    const WeakARTriangle l = left_weak_ar(d, c);
    t.check(!d.contains(l.x) && verify_minimal_right_almost_split(d, l) && verify_envelope(d, l.x, l.b0, l.b1),
            [&] { return describe(d, c, "left weak AR triangle fails"); });
    const WeakARTriangle r = right_weak_ar(d, c);
    t.check(!d.contains(r.x) && verify_minimal_left_almost_split(d, r) && verify_cover(d, r.x, r.b0, r.b1),
            [&] { return describe(d, c, "right weak AR triangle fails"); });
  }
  return t;
}

Tally uniqueness(const Diagram& d) {
  Tally t;
  t.check(uniqueness_check(d), [&] { return describe(d); });
  return t;
}

Tally theorem_b(const Diagram& d) {
  Tally t;
  const TheoremBReport r = theorem_b_check(d);
  t.cases = r.cases;
  t.failures = r.counterexamples.size();
  t.counterexamples = r.counterexamples;
  if (t.counterexamples.size() > kKeptCounterexamples) t.counterexamples.resize(kKeptCounterexamples);
  return t;
}

Tally theorem_c(const Diagram& d) {
  Tally t;
  for (const Diagonal& c : ext_projectives(d)) {
    if (!borders_two_empty_cells(d, c)) continue;
    for (const MutationDirection dir : {MutationDirection::backward, MutationDirection::forward}) {
      const MutationReport m = mutate(d, c, dir);
      const bool ok = m.theorem_c && m.theorem_c->cover_in_d && m.theorem_c->cover_is_precover &&
                      m.theorem_c->cover_is_right_minimal && m.theorem_c->equals_inserted &&
                      m.theorem_c->mu_of_removed == m.inserted && m.extension_closed;
      t.check(ok, [&] {
        return describe(d, c, std::string(to_string(dir)) + " D-mutation differs from the replacement");
      });
    }
  }
  return t;
}

using PerDiagram = Tally (*)(const Diagram&);
using PerSize = Tally (*)(int);

PerSize per_size(std::string_view name) {
  if (name == "ptolemy-equivalence") return ptolemy_equivalence;
  if (name == "hom-criteria") return hom_criteria;
  return nullptr;
}

PerDiagram per_diagram(std::string_view name) {
  if (name == "weak-ar") return weak_ar;
  if (name == "theorem-b") return theorem_b;
  if (name == "theorem-c") return theorem_c;
  if (name == "uniqueness") return uniqueness;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ptolemy-equivalence", "hom-criteria", "weak-ar",
                                              "theorem-b",           "theorem-c",    "uniqueness"};
  return names;
}

int verify_bound() {
  const char* env = std::getenv("PTOLEMY_LAB_MAX_SIZE");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBound;
  const std::string_view text(env);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v < 4) {
    throw Error(ErrorCode::parse_error, "PTOLEMY_LAB_MAX_SIZE must be an integer >= 4");
  }
  return v;
}

SuiteResult run_suite(std::string_view name, int max_size) {
  const int bound = verify_bound();
  if (max_size < 4 || max_size > bound) {
    throw Error(ErrorCode::size_limit, "max size " + std::to_string(max_size) + " outside [4, " +
                                           std::to_string(bound) + "]");
  }
  const PerSize sized = per_size(name);
  const PerDiagram each = per_diagram(name);
  if (sized == nullptr && each == nullptr) {
    throw Error(ErrorCode::parse_error, "unknown suite '" + std::string(name) + "'");
  }
  const int top = name == "hom-criteria" ? std::max(max_size, kHomSweepSize) : max_size;

  // One worker per polygon size; results merge in size order.
  std::vector<std::future<Tally>> jobs;
  for (int n = 4; n <= top; ++n) {
    jobs.push_back(std::async(std::launch::async, [=] {
      if (sized != nullptr) return sized(n);
      Tally t;
      for (const Diagram& d : enumerate_ptolemy(Polygon(n), bound)) {
        Tally one = each(d);
        one.diagrams = 1;
        t.merge(std::move(one));
      }
      return t;
    }));
  }
  Tally total;
  for (auto& job : jobs) total.merge(job.get());
  return SuiteResult{.name = std::string(name),
                     .diagrams = total.diagrams,
                     .cases = total.cases,
                     .failures = total.failures,
                     .counterexamples = std::move(total.counterexamples)};
}

std::vector<SuiteResult> run_suites(int max_size, const std::vector<std::string>& names) {
  std::vector<SuiteResult> out;
  for (const std::string& name : names) out.push_back(run_suite(name, max_size));
  return out;
}

}  // namespace ptolemy_lab
