#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gnm/rational.hpp"

namespace gnm {

enum class Parity { Even, Odd };

/// Finite moment data s₀…s_ℓ, never empty. n = ⌊ℓ/2⌋ sizes the Hankel
/// matrix S_n; an odd ℓ carries one trailing moment beyond S_n.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Rational> entries);
  MomentSequence(std::initializer_list<Rational> entries);

  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
  [[nodiscard]] const Rational& operator[](std::size_t j) const { return entries_[j]; }
  [[nodiscard]] std::size_t ell() const { return entries_.size() - 1; }
  [[nodiscard]] std::size_t n() const { return ell() / 2; }
  [[nodiscard]] Parity parity() const { return ell() % 2 == 0 ? Parity::Even : Parity::Odd; }
  [[nodiscard]] bool is_odd() const { return parity() == Parity::Odd; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  /// True when s_j = 0 for all j ≤ upto (clamped to ℓ).
  [[nodiscard]] bool zero_through(std::size_t upto) const;
  /// Index of the first nonzero entry, or size() when all vanish.
  [[nodiscard]] std::size_t first_nonzero() const;

  friend bool operator==(const MomentSequence&, const MomentSequence&) = default;

 private:
  std::vector<Rational> entries_;
};

}  // namespace gnm
