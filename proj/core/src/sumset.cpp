#include "sumfree/sumset.hpp"

#include <algorithm>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

void check_fold(int fold) {
  if (fold < 1) throw Error(ErrorCode::invalid_fold, "fold must be >= 1, got " + std::to_string(fold));
}

// Re-express the base over a modulus large enough that sums never wrap.
ResidueSet lift_to_integers(const ResidueSet& base, int fold) {
  const auto top = base.max();
  if (!top) return ResidueSet(Modulus(1));
  const Modulus wide(static_cast<std::int64_t>(fold) * *top + 1);
  return ResidueSet::from_members(wide, base.members());
}

void reject_zero(const ResidueSet& s) {
  if (s.contains(0)) throw Error(ErrorCode::zero_in_set, "0 is a member of " + s.to_string());
}

// Walk-reachability tables: reach[k] = kS (reach[0] = {0}).
std::vector<ResidueSet> reach_tables(const ResidueSet& s, int fold) {
  std::vector<ResidueSet> reach;
  reach.reserve(static_cast<std::size_t>(fold) + 1);
  ResidueSet zero(s.modulus());
  zero.insert(0);
  reach.push_back(zero);
  for (int k = 1; k <= fold; ++k) reach.push_back(pairwise_sumset(reach.back(), s));
  return reach;
}

class PathSearch {
 public:
  PathSearch(const ResidueSet& s, int fold)
      : modulus_(s.modulus()), steps_(s.members()), fold_(fold), reach_(reach_tables(s, fold)) {}

  const ResidueSet& walk_endpoints() const { return reach_.back(); }

  std::optional<std::vector<Residue>> find(Residue target) {
    // P_fold = P_0 would repeat a prefix vertex.
    if (target == 0 || !reach_.back().contains(target)) return std::nullopt;
    target_ = target;
    prefix_.assign(1, 0);
    terms_.clear();
    if (!descend(0)) return std::nullopt;
    return terms_;
  }

 private:
  bool descend(Residue at) {
    const int remaining = fold_ - static_cast<int>(terms_.size());
    for (const Residue step : steps_) {
      const Residue next = modulus_.reduce(at + step);
      if (std::find(prefix_.begin(), prefix_.end(), next) != prefix_.end()) continue;
      if (remaining == 1) {
        if (next != target_) continue;
        terms_.push_back(step);
        return true;
      }
      if (!reach_[static_cast<std::size_t>(remaining - 1)].contains(
              modulus_.reduce(target_ - next))) {
        continue;
      }
      prefix_.push_back(next);
      terms_.push_back(step);
      if (descend(next)) return true;
      prefix_.pop_back();
      terms_.pop_back();
    }
    return false;
  }

  Modulus modulus_;
  std::vector<Residue> steps_;
  int fold_;
  std::vector<ResidueSet> reach_;
  Residue target_ = 0;
  std::vector<Residue> prefix_;
  std::vector<Residue> terms_;
};

}  // namespace

ResidueSet pairwise_sumset(const ResidueSet& a, const ResidueSet& b) {
  ResidueSet out(a.modulus());
  const ResidueSet& wide = a.size() >= b.size() ? a : b;
  const ResidueSet& narrow = a.size() >= b.size() ? b : a;
  for (const Residue x : narrow.members()) wide.rotate_or_into(x, out);
  return out;
}

ResidueSet fold_sumset(const SumsetRequest& req) {
  check_fold(req.fold);
  const ResidueSet base =
      req.ambient == Ambient::integers ? lift_to_integers(req.base, req.fold) : req.base;
  ResidueSet acc = base;
  for (int i = 1; i < req.fold; ++i) acc = pairwise_sumset(acc, base);
  return acc;
}

ResidueSet brute_force_sumset(const SumsetRequest& req) {
  check_fold(req.fold);
  const auto elems = req.base.members();
  const auto size = static_cast<std::uint64_t>(elems.size());
  if (size > 64 || req.fold > 8) {
    throw Error(ErrorCode::oracle_too_large, "|base| = " + std::to_string(size) +
                                                 ", fold = " + std::to_string(req.fold));
  }
  // C(size + fold - 1, fold) multisets.
  std::uint64_t count = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(req.fold); ++i) {
    count = count * (size + i - 1) / i;
    if (count > kBruteForceLimit) {
      throw Error(ErrorCode::oracle_too_large, std::to_string(count) + "+ multisets");
    }
  }

  const bool integers = req.ambient == Ambient::integers;
  const std::int64_t modulus =
      integers ? (elems.empty() ? 1 : req.fold * elems.back() + 1) : req.base.n();
  ResidueSet out{Modulus(modulus)};
  if (elems.empty()) return out;

  // Non-decreasing index tuples idx[0] <= ... <= idx[fold-1].
  std::vector<std::size_t> idx(static_cast<std::size_t>(req.fold), 0);
  while (true) {
    std::int64_t total = 0;
    for (const auto i : idx) total += elems[i];
    out.insert(integers ? total : total % modulus);
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == elems.size() - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t q = pos; q < idx.size(); ++q) idx[q] = idx[pos - 1];
  }
  return out;
}

ResidueSet restricted_sumset(const ResidueSet& s, int fold) {
  check_fold(fold);
  reject_zero(s);
  PathSearch search(s, fold);
  ResidueSet out(s.modulus());
  for (const Residue target : search.walk_endpoints().members()) {
    if (search.find(target)) out.insert(target);
  }
  return out;
}

std::optional<std::vector<Residue>> subsum_check_witness(const ResidueSet& s, int fold,
                                                         Residue target) {
  check_fold(fold);
  reject_zero(s);
  if (target < 0 || target >= s.n()) {
    throw Error(ErrorCode::domain, "target " + std::to_string(target) + " not in Z_" +
                                       std::to_string(s.n()));
  }
  PathSearch search(s, fold);
  return search.find(target);
}

bool is_valid_restricted_witness(const ResidueSet& s, std::span<const Residue> terms,
                                 Residue target) {
  const Modulus m = s.modulus();
  std::int64_t total = 0;
  for (const Residue x : terms) {
    if (!s.contains(x)) return false;
    total += x;
  }
  if (m.reduce(total) != m.reduce(target)) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::int64_t sub = terms[i];
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      sub += terms[j];
      if (m.reduce(sub) == 0) return false;
    }
  }
  return true;
}

}  // namespace sumfree
