#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superchar/errors.hpp"
#include "superchar/halfint.hpp"
#include "superchar/perm.hpp"

namespace superchar {

// Block sizes of gl(m|n).
struct AlgebraShape {
  int m = 1;
  int n = 1;

  void validate() const {
    if (m < 1 || n < 1) throw Error("AlgebraShape: m and n must be positive");
  }

  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
  friend auto operator<=>(const AlgebraShape&, const AlgebraShape&) = default;
};

// An isotropic odd root sign*(eps_p - delta_q); indices are 0-based.
struct OddRoot {
  int p = 0;
  int q = 0;
  int sign = 1;

  friend bool operator==(const OddRoot&, const OddRoot&) = default;

  std::string str() const;
};

class ShiftedWeight;

// A Weyl group element: a pair of permutations acting on the eps- and
// delta-indices.  length() counts inversions, sign() = (-1)^length.
class WeylElement {
public:
  WeylElement(Perm eps, Perm delta) : eps_(std::move(eps)), delta_(std::move(delta)) {}
  static WeylElement identity(AlgebraShape s) { return {Perm(s.m), Perm(s.n)}; }

  const Perm& eps() const { return eps_; }
  const Perm& delta() const { return delta_; }

  long length() const { return eps_.inversions() + delta_.inversions(); }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }
  bool is_identity() const { return eps_.is_identity() && delta_.is_identity(); }

  WeylElement operator*(const WeylElement& o) const { return {eps_ * o.eps_, delta_ * o.delta_}; }
  WeylElement inverse() const { return {eps_.inverse(), delta_.inverse()}; }

  ShiftedWeight apply(const ShiftedWeight& nu) const;
  OddRoot apply(OddRoot beta) const {
    return {eps_(beta.p), delta_(beta.q), beta.sign};
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

private:
  Perm eps_, delta_;
};

// An integral (or rho-level half-integral) weight nu = sum a_i eps_i - sum b_j delta_j,
// stored by its entry vectors: a_i = (nu, eps_i) and b_j = (nu, delta_j).
class ShiftedWeight {
public:
  ShiftedWeight(AlgebraShape shape, std::vector<HalfInt> a, std::vector<HalfInt> b);

  static ShiftedWeight zero(AlgebraShape shape) {
    return {shape, std::vector<HalfInt>(static_cast<std::size_t>(shape.m)),
            std::vector<HalfInt>(static_cast<std::size_t>(shape.n))};
  }

  AlgebraShape shape() const { return shape_; }
  int m() const { return shape_.m; }
  int n() const { return shape_.n; }

  HalfInt a(int i) const { return a_[static_cast<std::size_t>(i)]; }
  HalfInt b(int j) const { return b_[static_cast<std::size_t>(j)]; }
  const std::vector<HalfInt>& avec() const { return a_; }
  const std::vector<HalfInt>& bvec() const { return b_; }

  ShiftedWeight with_a(int i, HalfInt v) const;
  ShiftedWeight with_b(int j, HalfInt v) const;
  ShiftedWeight shifted_by(HalfInt c) const;  // adds c to every entry on both sides

  bool integral() const;

  ShiftedWeight operator+(const ShiftedWeight& o) const;
  ShiftedWeight operator-(const ShiftedWeight& o) const;
  ShiftedWeight scaled(std::int64_t k) const;

  friend bool operator==(const ShiftedWeight&, const ShiftedWeight&) = default;
  friend auto operator<=>(const ShiftedWeight&, const ShiftedWeight&) = default;

  // Canonical text form "a1,a2,...,am|b1,...,bn".
  std::string encode() const;
  static ShiftedWeight parse(const std::string& text);

private:
  AlgebraShape shape_;
  std::vector<HalfInt> a_, b_;
};

ShiftedWeight rho(AlgebraShape shape);

// lambda -> lambda + rho; throws NotIntegral (with a suggested orthogonal
// shift) when the result has half-integral entries.
ShiftedWeight from_unshifted(const ShiftedWeight& lambda);

// The bilinear form with (eps_i,eps_j) = delta_ij = -(delta_i,delta_j).
HalfInt pairing(const ShiftedWeight& x, const ShiftedWeight& y);

ShiftedWeight weight_of(OddRoot beta, AlgebraShape shape);

// height of eps_p - delta_q in the simple-root basis (0-based indices): m - p + q.
long root_height(OddRoot beta, AlgebraShape shape);

bool is_strictly_dominant(const ShiftedWeight& nu);
bool is_regular(const ShiftedWeight& nu);

void require_strictly_dominant(const ShiftedWeight& nu);
void require_integral(const ShiftedWeight& nu);

// The unique (w, nu+) with w(nu) = nu+ strictly dominant; throws NotRegular.
std::pair<ShiftedWeight, WeylElement> dominant_rearrangement(const ShiftedWeight& nu);

// Entry rearrangement with a sorted descending and b ascending (no Weyl
// element; works for non-regular weights too).
ShiftedWeight sorted_dominant(const ShiftedWeight& nu);

// All eps_p - delta_q with a_p = b_q, ordered by q ascending.  Requires a
// strictly dominant integral weight; the common values then increase.
std::vector<OddRoot> atypical_roots(const ShiftedWeight& nu);
int atypicality(const ShiftedWeight& nu);
bool is_typical(const ShiftedWeight& nu);

// Partial order on strictly dominant integral weights: equal typical entries
// per side, equal atypicality, and slotwise atypical values muRho <= lambdaRho.
bool preceq(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho);

struct RootLatticeCoords {
  std::vector<std::int64_t> u;  // coefficients along the m+n-1 simple roots
  long height = 0;              // sum of coefficients
  bool nonneg = false;          // all coefficients >= 0
};

// Expansion of q in the simple-root basis; nullopt when q is not in Q.
std::optional<RootLatticeCoords> root_lattice_coords(const ShiftedWeight& q);

// Coefficient sum of q in the simple-root basis; throws NotInRootLattice.
long root_lattice_height(const ShiftedWeight& q);

// base - nu in Q+ (and its height, when inside).
bool in_positive_root_lattice(const ShiftedWeight& q);
std::optional<long> cone_height(const ShiftedWeight& base, const ShiftedWeight& nu);

std::vector<ShiftedWeight> simple_roots(AlgebraShape shape);
std::vector<ShiftedWeight> positive_even_roots(AlgebraShape shape);
std::vector<OddRoot> positive_odd_roots(AlgebraShape shape);

// All m!*n! Weyl group elements (cached per shape; safe to share).
const std::vector<WeylElement>& weyl_group(AlgebraShape shape);

}  // namespace superchar
