#include "sumfree/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>
#include <thread>

#include "sumfree/error.hpp"
#include "sumfree/result_log.hpp"
#include "sumfree/verification.hpp"
#include "sumfree/version.hpp"

namespace sumfree {

namespace {

constexpr std::int64_t kMaxSearchModulus = 2048;

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(unsigned i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(unsigned i) const { return (w[i / 64] >> (i % 64)) & 1U; }
  bool meets(const Bits& o) const {
    std::uint64_t acc = 0;
    for (int i = 0; i < W; ++i) acc |= w[i] & o.w[i];
    return acc != 0;
  }
  bool operator==(const Bits&) const = default;
};

// dst |= src rotated up by `shift` inside an n-bit ring. Only the first
// `live` words carry bits; `tail` masks the top live word.
template <int W>
inline void rotate_or(const Bits<W>& src, unsigned shift, unsigned n, int live,
                      std::uint64_t tail, Bits<W>& dst) {
  if (shift == 0) {
    for (int i = 0; i < live; ++i) dst.w[i] |= src.w[i];
    return;
  }
  {
    const int ws = static_cast<int>(shift / 64);
    const unsigned bs = shift % 64;
    for (int i = live - 1; i >= ws; --i) {
      std::uint64_t v = src.w[i - ws] << bs;
      if (bs != 0 && i - ws >= 1) v |= src.w[i - ws - 1] >> (64 - bs);
      dst.w[i] |= (i == live - 1) ? (v & tail) : v;
    }
  }
  {
    const unsigned back = n - shift;
    const int ws = static_cast<int>(back / 64);
    const unsigned bs = back % 64;
    for (int i = 0; i + ws < live; ++i) {
      std::uint64_t v = src.w[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < live) v |= src.w[i + ws + 1] << (64 - bs);
      dst.w[i] |= v;
    }
  }
}

// One size level, one subtree (fixed first half element). Shares nothing
// mutable with other jobs.
struct JobResult {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
  bool aborted = false;
  std::optional<std::vector<int>> half;
};

struct Level {
  int halves = 0;          // |H| excluding n/2
  bool with_middle = false;  // n/2 is a member
};

template <int W>
class LevelSearch {
 public:
  LevelSearch(unsigned n, int ell, const std::vector<int>& pool, Level level,
              const SearchOptions& opt, std::uint64_t node_cap)
      : n_(n), ell_(ell), pool_(pool), level_(level), opt_(opt), cap_(node_cap) {
    live_ = static_cast<int>((n + 63) / 64);
    const unsigned top_bits = n % 64;
    tail_ = top_bits == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    for (unsigned i = 0; i < n; ++i) full_.set(i);
    for (const int x : pool_) gcd_.push_back(std::gcd(x, static_cast<int>(n)));
  }

  // first < 0 means the level has no half elements (only n/2).
  JobResult run(int first) {
    result_ = JobResult{};
    elems_.clear();
    chosen_.clear();
    Bits<W> root;
    if (level_.with_middle) {
      root.set(n_ / 2);
      elems_.push_back(n_ / 2);
    }
    if (first < 0) {
      if (opt_.prune && !sum_free(root)) return result_;
      if (leaf(root)) result_.half = chosen_;
      return result_;
    }
    if (opt_.canonical) {
      // The smallest member must realise the minimal gcd, i.e. divide n.
      if (gcd_[first] != pool_[first]) return result_;
      min_gcd_ = pool_[first];
    }
    descend_with(root, first, 0);
    return result_;
  }

 private:
  // Adds pool_[index] (and its negation) then recurses.
  bool descend_with(const Bits<W>& base, int index, int depth) {
    if (++result_.nodes > cap_) {
      result_.aborted = true;
      return true;
    }
    const auto x = static_cast<unsigned>(pool_[index]);
    Bits<W> s = base;
    s.set(x);
    s.set(n_ - x);
    elems_.push_back(x);
    elems_.push_back(n_ - x);
    chosen_.push_back(pool_[index]);
    bool stop = false;
    if (!opt_.prune || sum_free(s)) {
      if (depth + 1 == level_.halves) {
        if (leaf(s)) {
          result_.half = chosen_;
          stop = true;
        }
      } else {
        const int need = level_.halves - depth - 1;
        const int last = static_cast<int>(pool_.size()) - need;
        for (int next = index + 1; next <= last && !stop; ++next) {
          if (opt_.canonical && gcd_[next] < min_gcd_) continue;
          stop = descend_with(s, next, depth + 1);
        }
      }
    }
    elems_.resize(elems_.size() - 2);
    chosen_.pop_back();
    return stop;
  }

  // acc + S for the current member list.
  Bits<W> add_members(const Bits<W>& acc) const {
    Bits<W> out;
    for (const unsigned e : elems_) rotate_or(acc, e, n_, live_, tail_, out);
    return out;
  }

  // For symmetric S: ell S meets S iff (ell/2) S meets (ell/2 + 1) S.
  bool sum_free(const Bits<W>& s) {
    half_ = s;
    for (int i = 2; i <= ell_ / 2; ++i) half_ = add_members(half_);
    over_ = add_members(half_);
    return !half_.meets(over_);
  }

  bool leaf(const Bits<W>& s) {
    ++result_.candidates;
    if (elems_.empty()) return false;
    // With pruning on, half_/over_ already describe s.
    if (!opt_.prune && !sum_free(s)) return false;
    Bits<W> sums = over_;
    for (int i = ell_ / 2 + 2; i <= ell_; ++i) sums = add_members(sums);
    for (int i = 0; i < W; ++i) sums.w[i] |= s.w[i];
    return sums == full_;
  }

  unsigned n_;
  int ell_;
  const std::vector<int>& pool_;
  Level level_;
  const SearchOptions& opt_;
  std::uint64_t cap_;
  int live_ = 1;
  std::uint64_t tail_ = 0;
  Bits<W> full_;
  Bits<W> half_;
  Bits<W> over_;
  std::vector<int> gcd_;
  int min_gcd_ = 0;
  std::vector<unsigned> elems_;
  std::vector<int> chosen_;
  JobResult result_;
};

std::uint64_t binomial_capped(std::uint64_t top, std::uint64_t k, std::uint64_t cap) {
  long double c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(top - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::uint64_t>(c + 0.5L);
}

struct LevelOutcome {
  bool inconclusive = false;
  std::optional<std::vector<int>> half;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};

template <int W>
LevelOutcome run_level(unsigned n, int ell, const std::vector<int>& pool, Level level,
                       const SearchOptions& opt, std::uint64_t remaining_budget) {
  LevelOutcome out;
  if (level.halves > static_cast<int>(pool.size())) return out;

  std::vector<int> jobs;
  if (level.halves == 0) {
    jobs.push_back(-1);
  } else {
    for (int i = 0; i + level.halves <= static_cast<int>(pool.size()); ++i) jobs.push_back(i);
  }
  std::vector<JobResult> results(jobs.size());
  std::vector<char> ran(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  const auto worker = [&] {
    LevelSearch<W> search(n, ell, pool, level, opt, remaining_budget);
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      // Jobs after a known hit cannot change the lexicographic minimum.
      if (j > best.load()) continue;
      results[j] = search.run(jobs[j]);
      ran[j] = 1;
      if (results[j].half || results[j].aborted) {
        std::size_t cur = best.load();
        while (j < cur && !best.compare_exchange_weak(cur, j)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(opt.threads, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool_threads;
    for (unsigned t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
    for (auto& th : pool_threads) th.join();
  }

  // Replay in job order as a sequential run with a shrinking cap would have
  // gone: job j may use only what jobs before it left over. Every job ran
  // with the full cap, so a job over its share is cut at share + 1 nodes.
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (!ran[j]) break;
    const JobResult& r = results[j];
    const std::uint64_t share = remaining_budget - out.nodes;
    if (r.aborted || r.nodes > share) {
      out.nodes += share + 1;
      out.inconclusive = true;
      return out;
    }
    out.nodes += r.nodes;
    out.candidates += r.candidates;
    if (r.half) {
      out.half = r.half;
      return out;
    }
  }
  return out;
}

void fill_witness(std::int64_t n, const std::vector<int>& half, bool middle,
                  std::vector<Residue>& witness) {
  witness.clear();
  for (const int x : half) {
    witness.push_back(x);
    witness.push_back(n - x);
  }
  if (middle) witness.push_back(n / 2);
  std::sort(witness.begin(), witness.end());
}

template <int W>
SearchResult search_impl(std::int64_t n, int ell, const SearchOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SearchResult res;
  res.n = n;
  res.ell = ell;
  res.version = kCodeVersion;

  const int max_size = opt.max_size.value_or(static_cast<int>(n / 2));
  std::vector<int> pool;
  for (int x = 1; 2 * x < n; ++x) pool.push_back(x);
  const bool even = n % 2 == 0;
  const std::uint64_t budget = opt.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());

  const auto spent = [&] { return res.stats.nodes; };
  bool searching_main = true;
  bool out_of_budget = false;
  for (int m = 1; m <= max_size; ++m) {
    const bool middle = m % 2 == 1;
    if (middle && !(even && opt.allow_half)) {
      if (searching_main) res.up_to = m;
      continue;
    }
    // Sets without n/2 have even size; once psi is known only those remain.
    if (!searching_main && middle) continue;
    if (opt.prune) {
      const std::uint64_t reach = binomial_capped(static_cast<std::uint64_t>(m + ell - 1),
                                                  static_cast<std::uint64_t>(ell),
                                                  static_cast<std::uint64_t>(n) + 1);
      if (static_cast<std::uint64_t>(n) > reach + static_cast<std::uint64_t>(m)) {
        if (searching_main) res.up_to = m;
        continue;
      }
    }
    const Level level{m / 2, middle};
    const LevelOutcome lo =
        run_level<W>(static_cast<unsigned>(n), ell, pool, level, opt, budget - spent());
    res.stats.nodes += lo.nodes;
    res.stats.candidates += lo.candidates;
    if (lo.inconclusive) {
      out_of_budget = searching_main;
      break;
    }
    if (lo.half) {
      if (searching_main) {
        res.outcome = Outcome::found;
        res.psi = m;
        res.up_to = m;
        fill_witness(n, *lo.half, middle, res.witness);
        if (!middle) {
          res.psi_without_half = m;
          res.witness_without_half = res.witness;
          break;
        }
        if (!opt.report_without_half) break;
        searching_main = false;
        continue;
      }
      res.psi_without_half = m;
      fill_witness(n, *lo.half, false, res.witness_without_half);
      break;
    }
    if (searching_main) res.up_to = m;
  }
  if (res.outcome != Outcome::found) {
    res.outcome = out_of_budget ? Outcome::inconclusive : Outcome::none_exists;
    if (!out_of_budget) res.up_to = max_size;
  }
  res.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return res;
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::found: return "found";
    case Outcome::none_exists: return "none_exists";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Outcome outcome_from_string(const std::string& text) {
  if (text == "found") return Outcome::found;
  if (text == "none_exists") return Outcome::none_exists;
  if (text == "inconclusive") return Outcome::inconclusive;
  throw Error(ErrorCode::usage, "unknown outcome '" + text + "'");
}

bool SearchResult::same_outcome(const SearchResult& other) const {
  SearchResult a = *this;
  SearchResult b = other;
  a.stats.millis = 0;
  b.stats.millis = 0;
  return a == b;
}

SearchResult psi_search(std::int64_t n, int ell, const SearchOptions& options) {
  if (ell % 2 != 0) throw Error(ErrorCode::parity, "ell must be even, got " + std::to_string(ell));
  if (ell < 2) throw Error(ErrorCode::out_of_range, "ell must be >= 2");
  if (n < 1 || n > kMaxSearchModulus) {
    throw Error(ErrorCode::out_of_range,
                "search supports 1 <= n <= " + std::to_string(kMaxSearchModulus));
  }
  const auto words = (n + 63) / 64;
  if (words <= 1) return search_impl<1>(n, ell, options);
  if (words <= 2) return search_impl<2>(n, ell, options);
  if (words <= 4) return search_impl<4>(n, ell, options);
  if (words <= 8) return search_impl<8>(n, ell, options);
  if (words <= 16) return search_impl<16>(n, ell, options);
  return search_impl<32>(n, ell, options);
}

std::vector<SearchResult> psi_table(int ell, std::int64_t from, std::int64_t to,
                                    const SearchOptions& options, ResultLog* log, bool resume,
                                    const ResultSink& sink) {
  if (from > to) {
    throw Error(ErrorCode::usage, "empty range: from " + std::to_string(from) + " > to " +
                                      std::to_string(to));
  }
  if (ell % 2 != 0) throw Error(ErrorCode::parity, "ell must be even, got " + std::to_string(ell));
  std::vector<SearchResult> rows;
  for (std::int64_t n = from; n <= to; ++n) {
    if (resume && log != nullptr) {
      if (auto cached = log->lookup(ell, n, kCodeVersion);
          cached && cached->outcome != Outcome::inconclusive) {
        if (sink) sink(*cached, true);
        rows.push_back(std::move(*cached));
        continue;
      }
    }
    SearchResult r = psi_search(n, ell, options);
    if (log != nullptr) log->append(r);
    if (sink) sink(r, false);
    rows.push_back(std::move(r));
  }
  return rows;
}

RsatReport rsat_report(const ResidueSet& s, int ell, std::optional<int> psi) {
  if (s.empty() || !certify_proposition(s, ell).overall()) {
    throw Error(ErrorCode::certificate_required,
                "set does not certify a C_" + std::to_string(ell + 1) + "-saturated Cayley graph");
  }
  RsatReport r;
  r.n = s.n();
  r.ell = ell;
  r.degree = s.size();
  r.edges = static_cast<std::uint64_t>(r.n) * r.degree / 2;
  const double n = static_cast<double>(r.n);
  const double quad = n * n / (2.0 * (ell + 1));
  r.bound_plus = quad + n;
  r.bound_minus = quad - n;
  r.bound_satisfied = static_cast<double>(r.edges) <= r.bound_plus;
  r.bound_minus_satisfied = static_cast<double>(r.edges) <= r.bound_minus;
  if (psi) {
    r.product_bound = static_cast<std::uint64_t>(r.n) * static_cast<std::uint64_t>(*psi);
    r.product_satisfied = r.edges <= *r.product_bound;
  }
  return r;
}

}  // namespace sumfree
