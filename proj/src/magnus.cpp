#include "hn/magnus.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hn {

MagnusPolynomial::MagnusPolynomial(int rank, int truncation_degree)
    : rank_(rank), degree_(truncation_degree) {
  if (rank < 1 || truncation_degree < 1) {
    throw std::invalid_argument("rank and truncation degree must be positive");
  }
}

MagnusPolynomial MagnusPolynomial::one(int rank, int truncation_degree) {
  MagnusPolynomial p(rank, truncation_degree);
  p.terms_[{}] = 1;
  return p;
}

MagnusPolynomial MagnusPolynomial::letter_image(int signed_index, int rank,
                                                int truncation_degree) {
  int i = std::abs(signed_index);
  if (i == 0 || i > rank) throw std::invalid_argument("letter out of range");
  MagnusPolynomial p = one(rank, truncation_degree);
  if (signed_index > 0) {
    p.terms_[{i}] = 1;
  } else {
    // Truncated inverse of 1 + X_i.
    Monomial m;
    std::int64_t c = 1;
    for (int d = 1; d <= truncation_degree; ++d) {
      m.push_back(i);
      c = -c;
      p.terms_[m] = c;
    }
  }
  return p;
}

std::int64_t MagnusPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void MagnusPolynomial::add_term(const Monomial& m, std::int64_t c) {
  if (static_cast<int>(m.size()) > degree_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MagnusPolynomial operator*(const MagnusPolynomial& a,
                           const MagnusPolynomial& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_) {
    throw std::invalid_argument("polynomial rank/degree mismatch");
  }
  MagnusPolynomial r(a.rank_, a.degree_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > a.degree_) break;
      MagnusPolynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MagnusPolynomial operator-(const MagnusPolynomial& a,
                           const MagnusPolynomial& b) {
  if (a.rank_ != b.rank_ || a.degree_ != b.degree_) {
    throw std::invalid_argument("polynomial rank/degree mismatch");
  }
  MagnusPolynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

MagnusPolynomial expand(const Word& w, int degree) {
  MagnusPolynomial p = MagnusPolynomial::one(w.rank(), degree);
  for (int l : w.letters()) {
    p = p * MagnusPolynomial::letter_image(l, w.rank(), degree);
  }
  return p;
}

Sign order_sign(const Word& w) {
  if (w.empty()) return Sign::zero;
  const int len = static_cast<int>(w.length());
  // The first nonzero term of expand(w) - 1 has degree at most |w|; probe
  // cheap low degrees first since most words show up in degree 1 or 2.
  for (int d = 1; d <= 2 * len; d = d < len ? std::min(2 * d, len) : 2 * d) {
    MagnusPolynomial p = expand(w, d);
    auto it = p.terms().begin();
    if (it != p.terms().end() && it->first.empty()) ++it;  // skip constant 1
    if (it != p.terms().end()) {
      return it->second > 0 ? Sign::positive : Sign::negative;
    }
  }
  throw std::logic_error("Magnus expansion of a nonempty reduced word "
                         "vanished past twice its length");
}

Ordering compare(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw std::invalid_argument("rank mismatch in comparison");
  }
  if (u == v) return Ordering::equal;
  return order_sign(u.inverse() * v) == Sign::positive ? Ordering::less
                                                       : Ordering::greater;
}

}  // namespace hn
