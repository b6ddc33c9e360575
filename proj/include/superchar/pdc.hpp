#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "superchar/diagrams.hpp"
#include "superchar/lattice.hpp"
#include "superchar/paths.hpp"

namespace superchar {

// Everything the proof machinery needs about one strictly dominant integral
// weight: the ordered atypical roots, their values and heights, the component
// decomposition, and the raised value per slot.
class AtypicalFrame {
public:
  static AtypicalFrame analyze(const ShiftedWeight& lambda_rho);

  const ShiftedWeight& lambda_rho() const { return lambda_rho_; }
  const std::vector<OddRoot>& s_roots() const { return s_; }
  int r() const { return static_cast<int>(s_.size()); }

  std::int64_t value(int slot) const { return values_[static_cast<std::size_t>(slot)]; }
  std::int64_t cap(int slot) const { return caps_[static_cast<std::size_t>(slot)]; }
  long height(int slot) const { return heights_[static_cast<std::size_t>(slot)]; }

  const ClassificationFlags& flags() const { return flags_; }
  const ComponentDecomposition& decomposition() const { return comp_; }
  std::int64_t t_lambda() const { return comp_.t_lambda; }
  bool same_component(int slot_j, int slot_k) const { return comp_.same_component(slot_j, slot_k); }

  // (lambda^rho)^up and |up - lambda^rho|_S; both use the mechanical
  // per-component raising, meaningful for PDC weights.
  const ShiftedWeight& up() const { return up_; }
  long up_norm() const { return up_norm_; }

  // nu = lambda^rho with the slot values replaced by the given ones.
  ShiftedWeight weight_with_slot_values(const std::vector<std::int64_t>& values) const;

  // slot values of an element of the lattice up - N.S (or lambda^rho - N.S);
  // throws NotInSpan when nu is not of that form.
  std::vector<std::int64_t> slot_values(const ShiftedWeight& nu) const;

  void require_pdc() const;

private:
  ShiftedWeight lambda_rho_ = ShiftedWeight::zero({1, 1});
  ShiftedWeight up_ = ShiftedWeight::zero({1, 1});
  std::vector<OddRoot> s_;
  std::vector<std::int64_t> values_, caps_;
  std::vector<long> heights_;
  ComponentDecomposition comp_;
  ClassificationFlags flags_;
  long up_norm_ = 0;
};

// The subgroup W_r permuting the atypical roots: r! elements, all of sign +1.
std::vector<WeylElement> w_r_elements(const AtypicalFrame& frame);

// The component-preserving subgroup W_r(t_lambda) of cardinality t_lambda.
std::vector<WeylElement> w_r_t_elements(const AtypicalFrame& frame);

WeylElement weyl_from_slot_perm(const AtypicalFrame& frame, const Perm& sigma);

// The maximal element of W.mu^rho intersected with (lambda^rho - N.S):
// lambda's typical entries stay put, mu's atypical values go in increasing
// order along beta_1,...,beta_r.  Throws NotInPLambda unless mu precedes lambda.
ShiftedWeight mu_bar(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho);

struct SkipWord {
  WeylElement w{Perm(1), Perm(1)};              // w(mu^rho) = mu_bar
  long length = 0;                              // = total skips over crosses/circles
  std::vector<std::pair<int, long>> per_move;   // (label, skips) per executed move
  long l_trivial = 0;
  long lexi_norm = 0;                           // |lambda^rho - mu_bar|_S = l_trivial + length
};

SkipWord skip_word(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho);

struct WrCount {
  std::int64_t count = 0;
  std::vector<WeylElement> elements;
};

// |{w in W_r : w(nu) lies slotwise under the raised caps}|.
WrCount c_count(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu);

struct ImageThetaSets {
  std::set<Perm> via_lambda;   // slotwise caps from lambda^rho
  std::set<Perm> via_uparrow;  // slotwise caps from (lambda^rho)^up
};

// Both set characterizations of the path image in Sym(r); for PDC weights
// they coincide with {theta(p)} over all paths.
ImageThetaSets image_theta_sets(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho);

std::set<Perm> theta_image_of_paths(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho);

struct CLexiSets {
  std::vector<ShiftedWeight> reg;  // increasing slot values, regular, under lambda^rho
  std::vector<ShiftedWeight> bar;  // increasing slot values under the raised caps
};

// Both index sets truncated to root_lattice_height(base - nu) <= max_height
// against each set's own base (lambda^rho for reg, up for bar).
CLexiSets c_lexi_sets(const ShiftedWeight& lambda_rho, long max_height);

bool in_reg_set(const AtypicalFrame& frame, const ShiftedWeight& nu);
bool in_bar_set(const AtypicalFrame& frame, const ShiftedWeight& nu);

// Within the |up - .|_S <= max_height window: the multiset {w(nu)} over
// w in W_r, nu in the bar set, clipped to the lattice, equals the set of
// lattice elements with pairwise distinct slot values.
bool multiset_identity_check(const ShiftedWeight& lambda_rho, long max_height);

namespace detail {
// Same counting with the raised caps computed mechanically for non-PDC
// weights; exists to reproduce what goes wrong without the hypothesis.
WrCount c_count_unchecked(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu);
}  // namespace detail

}  // namespace superchar
