#include "hn/word.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hn {

Word Word::reduce(std::span<const int> letters, int rank) {
  if (rank < 1) {
    throw std::invalid_argument("ambient rank must be positive");
  }
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank) {
      throw std::invalid_argument("letter index " + std::to_string(l) +
                                  " out of range for rank " +
                                  std::to_string(rank));
    }
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::letter(int signed_index, int rank) {
  const int ls[1] = {signed_index};
  return reduce(ls, rank);
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(-*it);
  }
  return w;
}

Word operator*(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_) {
    throw std::invalid_argument("rank mismatch in word multiplication");
  }
  Word w = u;
  for (int l : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

bool Word::operator<(const Word& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  return letters_ < other.letters_;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = static_cast<std::size_t>(w.rank());
  for (int l : w.letters()) {
    h = h * 1000003u + static_cast<std::size_t>(l + 512);
  }
  return h;
}

}  // namespace hn
