#include "sumfree/residue.hpp"

#include <bit>
#include <sstream>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::int64_t bits) {
  return static_cast<std::size_t>((bits + kWordBits - 1) / kWordBits);
}

// dst |= (src << shift), truncated to `bits`.
void shl_or(std::span<const std::uint64_t> src, std::size_t shift,
            std::span<std::uint64_t> dst) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  const std::size_t w = dst.size();
  for (std::size_t i = w; i-- > ws;) {
    std::uint64_t v = src[i - ws] << bs;
    if (bs != 0 && i - ws >= 1) v |= src[i - ws - 1] >> (kWordBits - bs);
    dst[i] |= v;
  }
}

// dst |= (src >> shift).
void shr_or(std::span<const std::uint64_t> src, std::size_t shift,
            std::span<std::uint64_t> dst) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  const std::size_t w = dst.size();
  for (std::size_t i = 0; i + ws < w; ++i) {
    std::uint64_t v = src[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < w) v |= src[i + ws + 1] << (kWordBits - bs);
    dst[i] |= v;
  }
}

}  // namespace

Modulus::Modulus(std::int64_t n) : n_(n) {
  if (n < 1) {
    throw Error(ErrorCode::invalid_modulus, "modulus must be >= 1, got " + std::to_string(n));
  }
}

ResidueSet::ResidueSet(Modulus m) : modulus_(m), words_(word_count(m.value()), 0) {}

ResidueSet ResidueSet::from_members(Modulus m, std::span<const Residue> members) {
  ResidueSet s(m);
  for (const Residue x : members) {
    if (x < 0 || x >= m.value()) {
      throw Error(ErrorCode::domain, "residue " + std::to_string(x) + " not in [0, " +
                                         std::to_string(m.value()) + ")");
    }
    s.insert(x);
  }
  return s;
}

ResidueSet ResidueSet::from_members(Modulus m, std::initializer_list<Residue> members) {
  return from_members(m, std::span<const Residue>(members.begin(), members.size()));
}

ResidueSet ResidueSet::full(Modulus m) {
  ResidueSet s(m);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  const auto tail = static_cast<std::size_t>(m.value()) % kWordBits;
  if (tail != 0) s.words_.back() &= (std::uint64_t{1} << tail) - 1;
  return s;
}

bool ResidueSet::contains(Residue x) const noexcept {
  if (x < 0 || x >= n()) return false;
  const auto u = static_cast<std::size_t>(x);
  return (words_[u / kWordBits] >> (u % kWordBits)) & 1U;
}

void ResidueSet::insert(Residue x) {
  if (x < 0 || x >= n()) {
    throw Error(ErrorCode::domain, "residue " + std::to_string(x) + " not in [0, " +
                                       std::to_string(n()) + ")");
  }
  const auto u = static_cast<std::size_t>(x);
  words_[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void ResidueSet::erase(Residue x) {
  if (x < 0 || x >= n()) return;
  const auto u = static_cast<std::size_t>(x);
  words_[u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

std::size_t ResidueSet::size() const noexcept {
  std::size_t c = 0;
  for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ResidueSet::empty() const noexcept {
  for (const auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::optional<Residue> ResidueSet::min() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Residue>(i * kWordBits + std::countr_zero(words_[i]));
    }
  }
  return std::nullopt;
}

std::optional<Residue> ResidueSet::max() const noexcept {
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (words_[i] != 0) {
      return static_cast<Residue>(i * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i])));
    }
  }
  return std::nullopt;
}

std::vector<Residue> ResidueSet::members() const {
  std::vector<Residue> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Residue>(i * kWordBits + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void ResidueSet::rotate_or_into(Residue shift, ResidueSet& out) const {
  check_same_modulus(out);
  const auto s = static_cast<std::size_t>(modulus_.reduce(shift));
  if (s == 0) {
    out |= *this;
    return;
  }
  const auto nbits = static_cast<std::size_t>(n());
  shl_or(words_, s, out.words_);
  const auto tail = nbits % kWordBits;
  if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  shr_or(words_, nbits - s, out.words_);
}

ResidueSet ResidueSet::translated(Residue shift) const {
  ResidueSet out(modulus_);
  rotate_or_into(shift, out);
  return out;
}

ResidueSet ResidueSet::complement() const { return full(modulus_) - *this; }

bool ResidueSet::intersects(const ResidueSet& other) const {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::optional<Residue> ResidueSet::first_not_in(const ResidueSet& other) const {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t d = words_[i] & ~other.words_[i];
    if (d != 0) return static_cast<Residue>(i * kWordBits + std::countr_zero(d));
  }
  return std::nullopt;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ResidueSet& ResidueSet::operator-=(const ResidueSet& other) {
  check_same_modulus(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::string ResidueSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Residue x : members()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '}';
  return os.str();
}

void ResidueSet::check_same_modulus(const ResidueSet& other) const {
  if (other.modulus_ != modulus_) {
    throw Error(ErrorCode::domain, "residue sets over different moduli (" +
                                       std::to_string(n()) + " vs " +
                                       std::to_string(other.n()) + ")");
  }
}

ParityInterval::ParityInterval(std::int64_t lo, std::int64_t hi, Parity parity)
    : lo_(lo), hi_(hi), parity_(parity) {
  const int want = parity == Parity::even ? 0 : 1;
  const auto mod2 = [](std::int64_t x) { return static_cast<int>(((x % 2) + 2) % 2); };
  if (lo > hi || mod2(lo) != want || mod2(hi) != want) {
    throw Error(ErrorCode::invalid_interval,
                "[" + std::to_string(lo) + "," + std::to_string(hi) + "]_" +
                    (parity == Parity::even ? "e" : "o"));
  }
}

bool ParityInterval::contains(std::int64_t x) const noexcept {
  return x >= lo_ && x <= hi_ && ((x - lo_) % 2 == 0);
}

ResidueSet interval_to_set(const ParityInterval& iv, Modulus m) {
  if (iv.lo() < 0 || iv.hi() > m.value() - 1) {
    throw Error(ErrorCode::interval_out_of_bounds,
                "[" + std::to_string(iv.lo()) + "," + std::to_string(iv.hi()) +
                    "] outside [0, " + std::to_string(m.value() - 1) + "]");
  }
  ResidueSet s(m);
  for (std::int64_t x = iv.lo(); x <= iv.hi(); x += 2) s.insert(x);
  return s;
}

ResidueSet negate_set(const ResidueSet& s) {
  ResidueSet out(s.modulus());
  for (const Residue x : s.members()) out.insert(s.modulus().reduce(-x));
  return out;
}

bool is_symmetric(const ResidueSet& s) { return !first_asymmetric_member(s).has_value(); }

std::optional<Residue> first_asymmetric_member(const ResidueSet& s) {
  for (const Residue x : s.members()) {
    if (!s.contains(s.modulus().reduce(-x))) return x;
  }
  return std::nullopt;
}

}  // namespace sumfree
