#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superchar/diagrams.hpp"
#include "superchar/lattice.hpp"

namespace superchar {

// A label-monotone sequence of right moves R_{i_1} o ... o R_{i_k} with
// i_1 <= ... <= i_k, executed largest label first.  counts[i] is the number
// of R_{i+1} moves; sigma records where each labeled vee of the start
// diagram lands among the target's vees (left-to-right numbering).
struct Path {
  std::vector<int> counts;
  Perm sigma;
  WeightDiagram endpoint;

  long length() const {
    long k = 0;
    for (int c : counts) k += c;
    return k;
  }

  std::string moves_str() const;  // e.g. "R1^3 R2^3 R3^2", "(empty)" for length 0
};

struct KLPolynomial {
  std::map<long, std::int64_t> coefficients;  // exponent -> positive count

  std::int64_t evaluate(std::int64_t q) const;
  std::string str() const;  // "q^8 + q^10", "1" for the constant term
};

// Swaps the vee labeled `label` with the wedge it marks in the current cap
// matching; every other symbol stays put.
WeightDiagram apply_right_move(const WeightDiagram& d, int label);

// The unique longest path: vee r travels to the r-th target vee, then vee
// r-1, and so on.  Throws NotComparable unless mu^rho precedes lambda^rho.
Path trivial_path(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho);

long trivial_length(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho);

// Depth-first enumeration over per-label move counts, largest label first;
// a branch dies as soon as a finished vee is off the target vee set.
// Empty result exactly when the weights are incomparable.
std::vector<Path> enumerate_paths(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho);

std::int64_t path_count(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho);

KLPolynomial kl_polynomial(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho);

inline const Perm& theta(const Path& p) { return p.sigma; }

// All dominant mu with mu^rho preceding lambda^rho within the height window:
// root_lattice_height(lambda^rho - mu^rho) <= max_height.
std::vector<ShiftedWeight> enumerate_p_lambda(const ShiftedWeight& lambda_rho, long max_height);

}  // namespace superchar
