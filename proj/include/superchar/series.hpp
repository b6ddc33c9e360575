#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "superchar/lattice.hpp"

namespace superchar {

// A height-truncated exact-integer formal sum of exponentials e^nu supported
// in (base - Q+).  A term nu is representable iff base - nu lies in Q+ with
// height at most max_height; everything outside that window is silently
// dropped, so arithmetic is exact inside it and says nothing beyond.
class CharacterSeries {
public:
  CharacterSeries(ShiftedWeight base, long max_height);

  static CharacterSeries monomial(const ShiftedWeight& nu, long max_height) {
    CharacterSeries s(nu, max_height);
    s.terms_.emplace(nu, 1);
    return s;
  }

  AlgebraShape shape() const { return base_.shape(); }
  const ShiftedWeight& base() const { return base_; }
  long max_height() const { return max_height_; }
  const std::map<ShiftedWeight, std::int64_t>& terms() const { return terms_; }

  bool in_window(const ShiftedWeight& nu) const;
  std::int64_t coefficient(const ShiftedWeight& nu) const;

  // accumulate c.e^nu, clipped to the window; returns whether it was kept
  bool add_term(const ShiftedWeight& nu, std::int64_t c);

  CharacterSeries& operator+=(const CharacterSeries& o);  // requires equal bases
  CharacterSeries operator*(const CharacterSeries& o) const;  // bases add, cuts min
  CharacterSeries scalar_multiply(std::int64_t k) const;

  // same terms after re-clipping to the (base, cut) window; exactness is the
  // caller's concern when the new window is not contained in the old one
  CharacterSeries rebased(const ShiftedWeight& base, long max_height) const;

  bool is_zero() const { return terms_.empty(); }

private:
  ShiftedWeight base_;
  long max_height_;
  std::map<ShiftedWeight, std::int64_t> terms_;
};

// Terms with equal heights relative to each series' own base are compared on
// the intersection of the two windows; missing terms count as zero.
std::vector<ShiftedWeight> mismatches_on_overlap(const CharacterSeries& x,
                                                 const CharacterSeries& y);
bool equal_on_overlap(const CharacterSeries& x, const CharacterSeries& y);

// 1/(1+e^{-beta}) = sum_k (-1)^k e^{-k beta}, truncated at k*height(beta) <= max_height.
CharacterSeries geometric_factor(OddRoot beta, AlgebraShape shape, long max_height);

// w moves e^nu to e^{w(nu)}; the result is re-clipped to the input's window.
CharacterSeries apply_weyl(const WeylElement& w, const CharacterSeries& x);

// F_W(X) = sum_w (-1)^{l(w)} w(X), clipped to X's window.  Exact whenever the
// support consists of weights whose W-orbits never rise above the base, which
// holds for the dominant-monomial sums used by the character formulas.
CharacterSeries f_w(const CharacterSeries& x);

// e^rho R and e^{-rho} R^{-1}; their product is 1 below the cut.
CharacterSeries weyl_denominator(AlgebraShape shape, long max_height);
CharacterSeries weyl_denominator_inverse(AlgebraShape shape, long max_height);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// Exact single-coefficient extraction of e^rho R ch L(lambda) at e^nu, via the
// path formula.  No truncation is involved.
std::int64_t coefficient_path_side(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu);

// The same coefficient via the closed one-term formula; PDC weights only.
Rational coefficient_pdc_side(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu);

namespace detail {
// Closed-formula extraction with the raising map applied mechanically; lets
// tests exhibit the failure on non-PDC weights.
Rational coefficient_pdc_side_unchecked(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu);
}  // namespace detail

}  // namespace superchar
