#include "superchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "superchar/paths.hpp"

namespace superchar {

CharacterSeries path_side(const ShiftedWeight& lambda_rho, long max_height) {
  require_strictly_dominant(lambda_rho);
  require_integral(lambda_rho);
  CharacterSeries out(lambda_rho, max_height);
  const auto& group = weyl_group(lambda_rho.shape());
  for (const ShiftedWeight& mu_rho : enumerate_p_lambda(lambda_rho, max_height)) {
    const auto paths = enumerate_paths(mu_rho, lambda_rho);
    if (paths.empty()) throw Error("internal: enumerate_p_lambda produced an unreachable weight");
    long l_trivial = 0;
    for (const Path& p : paths) l_trivial = std::max(l_trivial, p.length());
    const std::int64_t coeff =
        (l_trivial % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(paths.size());
    for (const WeylElement& w : group) out.add_term(w.apply(mu_rho), w.sign() * coeff);
  }
  return out;
}

namespace {

detail::RawClosedForm closed_form_impl(const AtypicalFrame& frame, long max_height) {
  const ShiftedWeight& lambda_rho = frame.lambda_rho();
  detail::RawClosedForm out{CharacterSeries(lambda_rho, max_height), frame.t_lambda(),
                            frame.up_norm()};

  // Work in the sum-of-k grading.  A term w(up - sum k_i beta_i) can land in
  // the window only if sum k_i <= max_height + height(sorted(up) - lambda^rho):
  // heights of odd roots are >= 1 and the sorted rearrangement bounds the rise
  // of any W-image of up.
  long headroom = 0;
  {
    const ShiftedWeight gap = sorted_dominant(frame.up()) - lambda_rho;
    const auto coords = root_lattice_coords(gap);
    if (!coords) throw Error("internal: raised weight left the root lattice coset");
    headroom = std::max(0L, coords->height);
  }
  const long kcut = max_height + headroom;

  const auto& group = weyl_group(lambda_rho.shape());
  const int r = frame.r();
  std::vector<std::int64_t> values(static_cast<std::size_t>(r));
  const int pre = frame.up_norm() % 2 == 0 ? 1 : -1;

  std::function<void(int, long)> go = [&](int slot, long left) {
    if (slot < 0) {
      const ShiftedWeight xi = frame.weight_with_slot_values(values);
      // no W-image rises above the dominant rearrangement, so a tuple whose
      // rearranged height exceeds the cut contributes nothing
      const auto best = root_lattice_coords(lambda_rho - sorted_dominant(xi));
      if (!best || best->height > out.sum.max_height()) return;
      long ksum = 0;
      for (int i = 0; i < r; ++i) ksum += frame.cap(i) - values[static_cast<std::size_t>(i)];
      const std::int64_t coeff = pre * (ksum % 2 == 0 ? 1 : -1);
      for (const WeylElement& w : group) out.sum.add_term(w.apply(xi), w.sign() * coeff);
      return;
    }
    const std::size_t si = static_cast<std::size_t>(slot);
    for (std::int64_t k = 0; k <= left; ++k) {
      values[si] = frame.cap(slot) - k;
      go(slot - 1, left - k);
    }
  };
  if (r == 0) {
    for (const WeylElement& w : group) out.sum.add_term(w.apply(lambda_rho), w.sign());
  } else {
    go(r - 1, kcut);
  }
  return out;
}

}  // namespace

namespace detail {

RawClosedForm closed_form_raw(const ShiftedWeight& lambda_rho, long max_height) {
  return closed_form_impl(AtypicalFrame::analyze(lambda_rho), max_height);
}

}  // namespace detail

CharacterSeries pdc_side(const ShiftedWeight& lambda_rho, long max_height) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  frame.require_pdc();
  detail::RawClosedForm raw = closed_form_impl(frame, max_height);
  CharacterSeries out(lambda_rho, max_height);
  for (const auto& [nu, c] : raw.sum.terms()) {
    if (c % raw.t_lambda != 0)
      throw NonIntegerCoefficient("coefficient " + std::to_string(c) + " at " + nu.encode() +
                                  " is not divisible by t_lambda = " +
                                  std::to_string(raw.t_lambda));
    out.add_term(nu, c / raw.t_lambda);
  }
  return out;
}

SimpleCharacter simple_character(const ShiftedWeight& lambda_rho, long max_height) {
  SimpleCharacter result{path_side(lambda_rho, max_height) *
                             weyl_denominator_inverse(lambda_rho.shape(), max_height),
                         false, 0, 0, true, true};
  const CharacterSeries& ch = result.ch;

  long deepest = 0;
  for (const auto& [nu, c] : ch.terms()) {
    deepest = std::max(deepest, *cone_height(ch.base(), nu));
    result.dim += c;
    result.nonnegative = result.nonnegative && c > 0;
  }
  result.support_height = deepest;
  // the weights of a module connect to the top by single simple-root steps,
  // so one empty shell below the cut proves the support is finite
  result.complete = deepest < max_height;

  // reflection invariance, checked pairwise inside the window
  for (const WeylElement& w : weyl_group(ch.shape())) {
    if (w.length() != 1) continue;  // generators only
    for (const auto& [nu, c] : ch.terms()) {
      const ShiftedWeight img = w.apply(nu);
      if (ch.in_window(img) && ch.coefficient(img) != c) {
        result.weyl_invariant = false;
        break;
      }
    }
    if (!result.weyl_invariant) break;
  }
  return result;
}

VerificationReport verify_main_theorem(const ShiftedWeight& lambda_rho, long max_height,
                                       int extractor_samples) {
  VerificationReport report;
  report.lambda = lambda_rho;
  report.max_height = max_height;
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  report.flags = frame.flags();
  report.t_lambda = frame.t_lambda();
  report.up_norm = frame.up_norm();
  report.r = frame.r();
  frame.require_pdc();

  const CharacterSeries lhs = path_side(lambda_rho, max_height);
  const CharacterSeries rhs = pdc_side(lambda_rho, max_height);

  std::vector<ShiftedWeight> support;
  for (const auto& [nu, c] : lhs.terms()) support.push_back(nu);
  for (const auto& [nu, c] : rhs.terms())
    if (lhs.coefficient(nu) == 0) support.push_back(nu);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  for (const ShiftedWeight& nu : support) {
    ++report.compared;
    if (lhs.coefficient(nu) != rhs.coefficient(nu))
      report.mismatches.emplace_back(nu, lhs.coefficient(nu), rhs.coefficient(nu));
  }

  // spot checks with the truncation-free extractors at random window points
  std::mt19937_64 rng(std::hash<std::string>{}(lambda_rho.encode()) ^
                      static_cast<std::uint64_t>(max_height));
  const auto simples = simple_roots(lambda_rho.shape());
  std::uniform_int_distribution<long> pick_height(0, max_height);
  for (int s = 0; s < extractor_samples; ++s) {
    ShiftedWeight nu = lambda_rho;
    long budget = pick_height(rng);
    while (budget > 0) {
      std::uniform_int_distribution<std::size_t> pick_root(0, simples.size() - 1);
      nu = nu - simples[pick_root(rng)];
      --budget;
    }
    ++report.compared;
    const std::int64_t from_series = lhs.coefficient(nu);
    const std::int64_t from_paths = coefficient_path_side(lambda_rho, nu);
    const Rational from_closed = coefficient_pdc_side(lambda_rho, nu);
    if (from_paths != from_series || !from_closed.is_integer() ||
        from_closed.num != from_paths)
      report.mismatches.emplace_back(nu, from_paths, from_closed.num);
  }
  return report;
}

}  // namespace superchar
