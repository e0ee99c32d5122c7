#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sumfree {

using Residue = std::int64_t;

/// Order of the cyclic group Z_n.
class Modulus {
 public:
  explicit Modulus(std::int64_t n);

  std::int64_t value() const noexcept { return n_; }
  Residue reduce(std::int64_t x) const noexcept {
    const auto r = x % n_;
    return r < 0 ? r + n_ : r;
  }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::int64_t n_;
};

/// Subset of Z_n stored as a membership bitset over the least residues
/// {0, ..., n-1}. Bits at or above n are always clear.
class ResidueSet {
 public:
  explicit ResidueSet(Modulus m);

  /// Throws ErrorCode::domain when a member lies outside [0, n).
  static ResidueSet from_members(Modulus m, std::span<const Residue> members);
  static ResidueSet from_members(Modulus m, std::initializer_list<Residue> members);
  static ResidueSet full(Modulus m);

  Modulus modulus() const noexcept { return modulus_; }
  std::int64_t n() const noexcept { return modulus_.value(); }

  bool contains(Residue x) const noexcept;
  void insert(Residue x);
  void erase(Residue x);

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::optional<Residue> min() const noexcept;
  std::optional<Residue> max() const noexcept;

  /// Members in increasing order.
  std::vector<Residue> members() const;

  /// { (x + shift) mod n : x in *this }.
  ResidueSet translated(Residue shift) const;
  ResidueSet complement() const;

  bool intersects(const ResidueSet& other) const;
  bool is_subset_of(const ResidueSet& other) const;

  /// First member of (*this \ other), if any.
  std::optional<Residue> first_not_in(const ResidueSet& other) const;

  ResidueSet& operator|=(const ResidueSet& other);
  ResidueSet& operator&=(const ResidueSet& other);
  ResidueSet& operator-=(const ResidueSet& other);

  friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) { return a |= b; }
  friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) { return a &= b; }
  friend ResidueSet operator-(ResidueSet a, const ResidueSet& b) { return a -= b; }
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "{a,b,c}" rendering, members ascending.
  std::string to_string() const;

  /// ORs (x + shift) mod n for every member x into `out`; `out` must share
  /// the modulus. This is the primitive behind every sumset pass.
  void rotate_or_into(Residue shift, ResidueSet& out) const;

 private:
  void check_same_modulus(const ResidueSet& other) const;

  Modulus modulus_;
  std::vector<std::uint64_t> words_;
};

enum class Parity { even, odd };

/// Arithmetic progression {lo, lo+2, ..., hi} with lo and hi of the stated
/// parity.
class ParityInterval {
 public:
  ParityInterval(std::int64_t lo, std::int64_t hi, Parity parity);

  static ParityInterval even(std::int64_t lo, std::int64_t hi) {
    return {lo, hi, Parity::even};
  }
  static ParityInterval odd(std::int64_t lo, std::int64_t hi) {
    return {lo, hi, Parity::odd};
  }

  std::int64_t lo() const noexcept { return lo_; }
  std::int64_t hi() const noexcept { return hi_; }
  Parity parity() const noexcept { return parity_; }
  std::int64_t cardinality() const noexcept { return (hi_ - lo_) / 2 + 1; }
  bool contains(std::int64_t x) const noexcept;

  friend bool operator==(const ParityInterval&, const ParityInterval&) = default;

 private:
  std::int64_t lo_;
  std::int64_t hi_;
  Parity parity_;
};

/// Members of the interval as a subset of Z_n. Intervals never wrap; a
/// range outside [0, n) is an interval_out_of_bounds error.
ResidueSet interval_to_set(const ParityInterval& iv, Modulus m);

/// { (n - x) mod n : x in s }.
ResidueSet negate_set(const ResidueSet& s);

bool is_symmetric(const ResidueSet& s);

/// Smallest member x whose negation is absent, if any.
std::optional<Residue> first_asymmetric_member(const ResidueSet& s);

}  // namespace sumfree
