#ifndef HN_MAGNUS_HPP_
#define HN_MAGNUS_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "hn/word.hpp"

namespace hn {

enum class Sign { negative, zero, positive };
enum class Ordering { less, equal, greater };

// Noncommutative integer polynomial in X_1..X_rank, truncated at a fixed
// total degree. Monomials are sequences of generator indices; terms are
// kept in degree-lexicographic order (X_1 < X_2 < ...), so the first
// stored term is the deg-lex smallest. All arithmetic is exact.
class MagnusPolynomial {
 public:
  using Monomial = std::vector<int>;

  struct DegLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    }
  };
  using TermMap = std::map<Monomial, std::int64_t, DegLexLess>;

  MagnusPolynomial(int rank, int truncation_degree);

  static MagnusPolynomial one(int rank, int truncation_degree);
  // Image of the letter under x_i -> 1 + X_i, x_i^-1 -> 1 - X_i + X_i^2 - ...
  static MagnusPolynomial letter_image(int signed_index, int rank,
                                       int truncation_degree);

  int rank() const { return rank_; }
  int truncation_degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }

  std::int64_t coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, std::int64_t c);

  // Truncated product; operands must share rank and truncation degree.
  friend MagnusPolynomial operator*(const MagnusPolynomial& a,
                                    const MagnusPolynomial& b);
  friend MagnusPolynomial operator-(const MagnusPolynomial& a,
                                    const MagnusPolynomial& b);
  bool operator==(const MagnusPolynomial&) const = default;

 private:
  int rank_;
  int degree_;
  TermMap terms_;
};

// Magnus image of w, truncated at the given degree. Multiplicative up to
// truncation.
MagnusPolynomial expand(const Word& w, int degree);

// Sign of w in the bi-invariant order: zero iff w is empty, otherwise the
// sign of the deg-lex smallest nonzero coefficient of expand(w, d) - 1.
// The truncation degree d starts small and grows until a nonzero term
// appears; for a reduced word of length L a term of degree <= L exists,
// so the search terminates.
Sign order_sign(const Word& w);

// Total order on a free group: u < v iff order_sign(u^-1 v) is positive.
Ordering compare(const Word& u, const Word& v);

}  // namespace hn

#endif  // HN_MAGNUS_HPP_
