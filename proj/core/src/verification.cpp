#include "sumfree/verification.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "sumfree/error.hpp"
#include "sumfree/sumset.hpp"

namespace sumfree {

namespace {

ResidueSet modular_fold(const ResidueSet& s, int fold) {
  return fold_sumset(SumsetRequest{s, fold, Ambient::modular});
}

Check element_check(std::string name, std::optional<Residue> bad, const char* kind) {
  Check c{std::move(name), !bad.has_value(), std::nullopt, {}};
  if (bad) c.counterexample = Counterexample{kind, {*bad}};
  return c;
}

void check_length(int length) {
  if (length < 3) {
    throw Error(ErrorCode::invalid_cycle_length,
                "cycle length must be >= 3, got " + std::to_string(length));
  }
}

// Unweighted distances from `source`, restricted to vertices with allowed[v].
// Unreachable vertices get a large sentinel.
std::vector<std::uint32_t> bfs(const Graph& g, std::size_t source,
                               const std::vector<char>* allowed = nullptr) {
  constexpr auto kFar = std::numeric_limits<std::uint32_t>::max() / 2;
  std::vector<std::uint32_t> dist(g.order(), kFar);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const std::size_t y : g.neighbors(x)) {
      if (allowed != nullptr && !(*allowed)[y]) continue;
      if (dist[y] == kFar) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Depth-limited simple-path extension. The last hop is resolved with one
// row intersection instead of another DFS level.
class PathFinder {
 public:
  PathFinder(const Graph& g, std::size_t target, int edges, const std::vector<std::uint32_t>& dist,
             const std::vector<std::uint64_t>& allowed)
      : g_(g), target_(target), edges_(edges), dist_(dist), allowed_(allowed),
        on_path_(g.words_per_row(), 0) {}

  std::optional<std::vector<std::size_t>> run(std::size_t start) {
    path_.assign(1, start);
    mark(start, true);
    const bool ok = extend();
    mark(start, false);
    if (!ok) return std::nullopt;
    return path_;
  }

 private:
  void mark(std::size_t v, bool on) {
    if (on) {
      on_path_[v / 64] |= std::uint64_t{1} << (v % 64);
    } else {
      on_path_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  bool extend() {
    const std::size_t at = path_.back();
    const int used = static_cast<int>(path_.size()) - 1;
    if (used == edges_ - 2) {
      // Final vertex must neighbour both `at` and the target.
      const std::uint64_t* a = g_.row(at);
      const std::uint64_t* b = g_.row(target_);
      for (std::size_t w = 0; w < g_.words_per_row(); ++w) {
        std::uint64_t c = a[w] & b[w] & allowed_[w] & ~on_path_[w];
        if (target_ / 64 == w) c &= ~(std::uint64_t{1} << (target_ % 64));
        if (c != 0) {
          path_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(c)));
          path_.push_back(target_);
          return true;
        }
      }
      return false;
    }
    const int left_after = edges_ - used - 1;
    for (const std::size_t next : g_.neighbors(at)) {
      if (next == target_) continue;
      if (((allowed_[next / 64] >> (next % 64)) & 1U) == 0) continue;
      if ((on_path_[next / 64] >> (next % 64)) & 1U) continue;
      if (dist_[next] > static_cast<std::uint32_t>(left_after)) continue;
      path_.push_back(next);
      mark(next, true);
      if (extend()) {
        mark(next, false);
        return true;
      }
      mark(next, false);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t target_;
  int edges_;
  const std::vector<std::uint32_t>& dist_;
  const std::vector<std::uint64_t>& allowed_;
  std::vector<std::uint64_t> on_path_;
  std::vector<std::size_t> path_;
};

std::vector<std::uint64_t> all_vertices(const Graph& g) {
  std::vector<std::uint64_t> mask(g.words_per_row(), ~std::uint64_t{0});
  const std::size_t tail = g.order() % 64;
  if (tail != 0 && !mask.empty()) mask.back() = (std::uint64_t{1} << tail) - 1;
  return mask;
}

}  // namespace

bool VerificationReport::overall() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

SetCheck is_sum_free(const ResidueSet& s, int ell) {
  const ResidueSet sums = modular_fold(s, ell);
  const auto common = (sums & s).min();
  return SetCheck{!common.has_value(), common};
}

SetCheck is_complete(const ResidueSet& s, int ell) {
  const ResidueSet covered = modular_fold(s, ell) | s;
  const auto missing = covered.complement().min();
  return SetCheck{!missing.has_value(), missing};
}

bool satisfies_binomial_bound(std::int64_t n, std::size_t size, int ell) {
  // C(size + ell - 1, ell), saturating once it passes n.
  long double c = 1;
  for (int i = 1; i <= ell; ++i) {
    c = c * static_cast<long double>(size + static_cast<std::size_t>(i) - 1) / i;
  }
  return static_cast<long double>(n) <= c + static_cast<long double>(size) + 0.5L;
}

VerificationReport certify_symmetric_complete_sumfree(const ResidueSet& s, int ell) {
  VerificationReport report;
  report.checks.push_back(element_check("symmetric", first_asymmetric_member(s), "element"));
  report.checks.push_back(element_check("sum-free", is_sum_free(s, ell).counterexample, "element"));
  report.checks.push_back(element_check("complete", is_complete(s, ell).counterexample, "missing"));
  Check bound{"binomial-bound", satisfies_binomial_bound(s.n(), s.size(), ell), std::nullopt,
              "n <= C(|S|+ell-1, ell) + |S|"};
  if (!bound.passed) {
    bound.counterexample = Counterexample{"element", {s.n(), static_cast<std::int64_t>(s.size())}};
  }
  report.checks.push_back(std::move(bound));
  return report;
}

bool check_no_zero_in_ell_plus_one(const ResidueSet& s, int ell) {
  if (const auto bad = first_asymmetric_member(s)) {
    throw Error(ErrorCode::symmetry_required, "asymmetric at " + std::to_string(*bad));
  }
  return !modular_fold(s, ell + 1).contains(0);
}

bool check_no_zero_in_ell_plus_one_via_sum_free(const ResidueSet& s, int ell) {
  if (const auto bad = first_asymmetric_member(s)) {
    throw Error(ErrorCode::symmetry_required, "asymmetric at " + std::to_string(*bad));
  }
  return is_sum_free(s, ell).passed;
}

VerificationReport certify_proposition(const ResidueSet& s, int ell) {
  VerificationReport report;
  const auto asym = first_asymmetric_member(s);
  report.checks.push_back(element_check("symmetric", asym, "element"));
  const bool has_zero = s.contains(0);
  report.checks.push_back(
      element_check("zero-excluded", has_zero ? std::optional<Residue>(0) : std::nullopt, "element"));

  Check restricted{"restricted-sumset", false, std::nullopt,
                   "R_ell(S) = Z_n \\ (S u {0})"};
  if (has_zero) {
    restricted.counterexample = Counterexample{"element", {0}};
  } else {
    const ResidueSet r = restricted_sumset(s, ell);
    ResidueSet expected = s.complement();
    expected.erase(0);
    if (const auto miss = expected.first_not_in(r)) {
      restricted.counterexample = Counterexample{"missing", {*miss}};
    } else if (const auto extra = r.first_not_in(expected)) {
      restricted.counterexample = Counterexample{"extra", {*extra}};
    } else {
      restricted.passed = true;
    }
  }
  report.checks.push_back(std::move(restricted));

  Check no_zero{"no-zero-in-(ell+1)S", false, std::nullopt, {}};
  if (asym) {
    no_zero.detail = "requires a symmetric set";
  } else {
    const ResidueSet wide = modular_fold(s, ell + 1);
    no_zero.passed = !wide.contains(0);
    if (!no_zero.passed) no_zero.counterexample = Counterexample{"element", {0}};
  }
  report.checks.push_back(std::move(no_zero));
  return report;
}

Check check_construction_decomposition(const ConstructionParams& p) {
  const Modulus m(p.n);
  const ResidueSet plus = build_splus(p);
  const ResidueSet minus = negate_set(plus);
  const std::int64_t ell = p.ell;
  const std::vector<ResidueSet> parts{
      interval_to_set(ParityInterval::even(0, ell - 2), m),
      plus,
      modular_fold(minus, static_cast<int>(ell)),
      modular_fold(plus, static_cast<int>(ell)),
      minus,
      interval_to_set(ParityInterval::odd(p.n - ell + 2, p.n - 2), m),
  };
  Check c{"decomposition", true, std::nullopt,
          "[0,ell-2]_e, S+, ell S-, ell S+, S-, [n-ell+2,n-2]_o partition Z_n"};
  ResidueSet seen(m);
  for (const auto& part : parts) {
    if (const auto dup = (seen & part).min()) {
      c.passed = false;
      c.counterexample = Counterexample{"element", {*dup}};
      return c;
    }
    seen |= part;
  }
  if (const auto gap = seen.complement().min()) {
    c.passed = false;
    c.counterexample = Counterexample{"missing", {*gap}};
  }
  return c;
}

CycleSearch is_cycle_free(const Graph& g, int length) {
  check_length(length);
  const std::size_t n = g.order();
  // Only cycles whose smallest vertex is the start are explored.
  std::vector<char> above(n, 0);
  std::vector<std::uint64_t> above_mask(g.words_per_row(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    above[v] = 1;
    above_mask[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  for (std::size_t start = 0; start < n; ++start) {
    above[start] = 0;
    above_mask[start / 64] &= ~(std::uint64_t{1} << (start % 64));
    if (g.degree(start) < 2) continue;
    std::vector<char> allowed = above;
    allowed[start] = 1;
    const auto dist = bfs(g, start, &allowed);
    // A closed simple path start -> ... -> start of `length` edges through
    // vertices above start.
    PathFinder finder(g, start, length, dist, above_mask);
    if (auto path = finder.run(start)) {
      path->pop_back();
      return CycleSearch{false, std::move(*path)};
    }
  }
  return CycleSearch{};
}

std::optional<std::vector<std::size_t>> find_simple_path(const Graph& g, std::size_t u,
                                                         std::size_t v, int edges) {
  if (u >= g.order() || v >= g.order() || u == v || edges < 1) return std::nullopt;
  if (edges == 1) {
    if (g.adjacent(u, v)) return std::vector<std::size_t>{u, v};
    return std::nullopt;
  }
  const auto dist = bfs(g, v);
  const auto everything = all_vertices(g);
  PathFinder finder(g, v, edges, dist, everything);
  return finder.run(u);
}

VerificationReport is_cycle_saturated(const Graph& g, int length) {
  check_length(length);
  VerificationReport report;

  Check free{"cycle-free", true, std::nullopt, "no C_" + std::to_string(length)};
  const CycleSearch cyc = is_cycle_free(g, length);
  if (!cyc.free) {
    free.passed = false;
    free.counterexample =
        Counterexample{"cycle", std::vector<std::int64_t>(cyc.cycle.begin(), cyc.cycle.end())};
  }
  report.checks.push_back(std::move(free));

  Check sat{"saturated", true, std::nullopt,
            "every non-adjacent pair joined by a path of " + std::to_string(length - 1) + " edges"};
  const std::size_t n = g.order();
  const auto everything = all_vertices(g);
  for (std::size_t v = 0; v < n && sat.passed; ++v) {
    const auto dist = bfs(g, v);
    for (std::size_t u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) continue;
      PathFinder finder(g, v, length - 1, dist, everything);
      if (!finder.run(u)) {
        sat.passed = false;
        sat.counterexample = Counterexample{
            "pair", {static_cast<std::int64_t>(u), static_cast<std::int64_t>(v)}};
        break;
      }
    }
  }
  report.checks.push_back(std::move(sat));
  return report;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

VerificationReport certify_cayley_graph(const CayleyGraph& cg, int ell) {
  const Graph g = Graph::from_cayley(cg);
  VerificationReport report;
  const auto degree = regular_degree(g);
  Check regular{"regular", degree.has_value() && *degree == cg.degree(), std::nullopt,
                "every vertex has degree |S| = " + std::to_string(cg.degree())};
  report.checks.push_back(std::move(regular));
  report.append(is_cycle_saturated(g, ell + 1));
  return report;
}

}  // namespace sumfree
