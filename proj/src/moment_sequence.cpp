#include "gnm/moment_sequence.hpp"

#include "gnm/errors.hpp"

namespace gnm {

MomentSequence::MomentSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw MathError(ErrorCode::InvalidArgument, "empty moment sequence");
  for (auto& x : entries_) x.canonicalize();
}

MomentSequence::MomentSequence(std::initializer_list<Rational> entries)
    : MomentSequence(std::vector<Rational>(entries)) {}

bool MomentSequence::zero_through(std::size_t upto) const {
  for (std::size_t j = 0; j <= upto && j < entries_.size(); ++j) {
    if (entries_[j] != 0) return false;
  }
  return true;
}

std::size_t MomentSequence::first_nonzero() const {
  std::size_t j = 0;
  while (j < entries_.size() && entries_[j] == 0) ++j;
  return j;
}

}  // namespace gnm
