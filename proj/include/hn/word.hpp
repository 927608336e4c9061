#ifndef HN_WORD_HPP_
#define HN_WORD_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace hn {

// A freely reduced word over the generators x_1..x_k of a free group.
// Letters are signed generator indices: +i for x_i, -i for x_i^-1.
class Word {
 public:
  explicit Word(int rank) : rank_(rank) {}

  // Free reduction of an arbitrary letter sequence. Throws
  // std::invalid_argument if a letter index is 0 or exceeds the rank.
  static Word reduce(std::span<const int> letters, int rank);

  static Word letter(int signed_index, int rank);

  int rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  // Reduced product. Throws std::invalid_argument on rank mismatch.
  friend Word operator*(const Word& u, const Word& v);

  bool operator==(const Word&) const = default;
  // Lexicographic on (rank, letters); an arbitrary container order, not
  // the group order (see magnus.hpp for that).
  bool operator<(const Word& other) const;

 private:
  int rank_;
  std::vector<int> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

}  // namespace hn

#endif  // HN_WORD_HPP_
