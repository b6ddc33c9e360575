#include "superchar/series.hpp"

#include <algorithm>

#include "superchar/paths.hpp"
#include "superchar/pdc.hpp"

namespace superchar {

CharacterSeries::CharacterSeries(ShiftedWeight base, long max_height)
    : base_(std::move(base)), max_height_(max_height) {
  if (max_height < 0) throw Error("CharacterSeries: negative height cut");
}

bool CharacterSeries::in_window(const ShiftedWeight& nu) const {
  const auto h = cone_height(base_, nu);
  return h && *h <= max_height_;
}

std::int64_t CharacterSeries::coefficient(const ShiftedWeight& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? 0 : it->second;
}

bool CharacterSeries::add_term(const ShiftedWeight& nu, std::int64_t c) {
  if (c == 0) return true;
  if (!in_window(nu)) return false;
  auto [it, inserted] = terms_.emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return true;
}

CharacterSeries& CharacterSeries::operator+=(const CharacterSeries& o) {
  if (base_ != o.base_) throw Error("CharacterSeries: += requires equal bases");
  max_height_ = std::min(max_height_, o.max_height_);
  std::erase_if(terms_, [&](const auto& kv) { return !in_window(kv.first); });
  for (const auto& [nu, c] : o.terms_) add_term(nu, c);
  return *this;
}

CharacterSeries CharacterSeries::operator*(const CharacterSeries& o) const {
  if (shape() != o.shape()) throw ShapeMismatch("CharacterSeries: shape mismatch in *");
  // supports live in cones whose heights add, so the product is exact below
  // the smaller cut
  CharacterSeries out(base_ + o.base_, std::min(max_height_, o.max_height_));
  for (const auto& [nu, c] : terms_)
    for (const auto& [mu, d] : o.terms_) out.add_term(nu + mu, c * d);
  return out;
}

CharacterSeries CharacterSeries::scalar_multiply(std::int64_t k) const {
  CharacterSeries out(base_, max_height_);
  if (k == 0) return out;
  for (const auto& [nu, c] : terms_) out.terms_.emplace(nu, c * k);
  return out;
}

CharacterSeries CharacterSeries::rebased(const ShiftedWeight& base, long max_height) const {
  CharacterSeries out(base, max_height);
  for (const auto& [nu, c] : terms_) out.add_term(nu, c);
  return out;
}

std::vector<ShiftedWeight> mismatches_on_overlap(const CharacterSeries& x,
                                                 const CharacterSeries& y) {
  std::vector<ShiftedWeight> bad;
  auto check = [&](const ShiftedWeight& nu) {
    if (!x.in_window(nu) || !y.in_window(nu)) return;
    if (x.coefficient(nu) != y.coefficient(nu)) bad.push_back(nu);
  };
  for (const auto& [nu, c] : x.terms()) check(nu);
  for (const auto& [nu, c] : y.terms())
    if (x.coefficient(nu) == 0) check(nu);
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  return bad;
}

bool equal_on_overlap(const CharacterSeries& x, const CharacterSeries& y) {
  return mismatches_on_overlap(x, y).empty();
}

CharacterSeries geometric_factor(OddRoot beta, AlgebraShape shape, long max_height) {
  if (beta.sign < 0) throw Error("geometric_factor: beta must be a positive odd root");
  CharacterSeries out(ShiftedWeight::zero(shape), max_height);
  const ShiftedWeight step = weight_of(beta, shape);
  const long h = root_height(beta, shape);
  ShiftedWeight nu = ShiftedWeight::zero(shape);
  int sign = 1;
  for (long k = 0; k * h <= max_height; ++k) {
    out.add_term(nu, sign);
    nu = nu - step;
    sign = -sign;
  }
  return out;
}

CharacterSeries apply_weyl(const WeylElement& w, const CharacterSeries& x) {
  CharacterSeries out(x.base(), x.max_height());
  for (const auto& [nu, c] : x.terms()) out.add_term(w.apply(nu), c);
  return out;
}

CharacterSeries f_w(const CharacterSeries& x) {
  CharacterSeries out(x.base(), x.max_height());
  for (const WeylElement& w : weyl_group(x.shape())) {
    const int sign = w.sign();
    for (const auto& [nu, c] : x.terms()) out.add_term(w.apply(nu), sign * c);
  }
  return out;
}

CharacterSeries weyl_denominator(AlgebraShape shape, long max_height) {
  CharacterSeries out = CharacterSeries::monomial(rho(shape), max_height);
  const ShiftedWeight zero = ShiftedWeight::zero(shape);
  for (const ShiftedWeight& alpha : positive_even_roots(shape)) {
    CharacterSeries factor(zero, max_height);
    factor.add_term(zero, 1);
    factor.add_term(zero - alpha, -1);
    out = out * factor;
  }
  for (OddRoot beta : positive_odd_roots(shape))
    out = out * geometric_factor(beta, shape, max_height);
  return out;
}

CharacterSeries weyl_denominator_inverse(AlgebraShape shape, long max_height) {
  CharacterSeries out = CharacterSeries::monomial(rho(shape).scaled(-1), max_height);
  const ShiftedWeight zero = ShiftedWeight::zero(shape);
  for (OddRoot beta : positive_odd_roots(shape)) {
    CharacterSeries factor(zero, max_height);
    factor.add_term(zero, 1);
    factor.add_term(zero - weight_of(beta, shape), 1);
    out = out * factor;
  }
  for (const ShiftedWeight& alpha : positive_even_roots(shape)) {
    // 1/(1-e^{-alpha}) = sum_k e^{-k alpha}
    CharacterSeries factor(zero, max_height);
    const long h = root_lattice_height(alpha);
    ShiftedWeight nu = zero;
    for (long k = 0; k * h <= max_height; ++k) {
      factor.add_term(nu, 1);
      nu = nu - alpha;
    }
    out = out * factor;
  }
  return out;
}

std::int64_t coefficient_path_side(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu) {
  require_strictly_dominant(lambda_rho);
  require_integral(lambda_rho);
  if (!is_regular(nu)) return 0;
  auto [nu_plus, w] = dominant_rearrangement(nu);
  if (!is_strictly_dominant(nu_plus) || !nu_plus.integral()) return 0;
  if (!preceq(nu_plus, lambda_rho)) return 0;
  const auto paths = enumerate_paths(nu_plus, lambda_rho);
  if (paths.empty()) return 0;
  long l_max = 0;
  for (const Path& p : paths) l_max = std::max(l_max, p.length());
  const int parity_sign = l_max % 2 == 0 ? 1 : -1;
  return w.sign() * parity_sign * static_cast<std::int64_t>(paths.size());
}

namespace {

Rational pdc_coefficient_impl(const AtypicalFrame& frame, const ShiftedWeight& nu) {
  std::int64_t total = 0;
  for (const WeylElement& w : weyl_group(nu.shape())) {
    const ShiftedWeight xi = w.inverse().apply(nu);
    // xi must equal up - sum k_i beta_i with all k_i >= 0
    std::vector<std::int64_t> x;
    try {
      x = frame.slot_values(xi);
    } catch (const NotInSpan&) {
      continue;
    }
    std::int64_t ksum = 0;
    bool ok = true;
    for (int i = 0; i < frame.r() && ok; ++i) {
      const std::int64_t k = frame.cap(i) - x[static_cast<std::size_t>(i)];
      ok = k >= 0;
      ksum += k;
    }
    if (!ok) continue;
    total += w.sign() * (ksum % 2 == 0 ? 1 : -1);
  }
  const int pre = frame.up_norm() % 2 == 0 ? 1 : -1;
  return Rational{pre * total, frame.t_lambda()};
}

}  // namespace

Rational coefficient_pdc_side(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  frame.require_pdc();
  return pdc_coefficient_impl(frame, nu);
}

namespace detail {

Rational coefficient_pdc_side_unchecked(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu) {
  return pdc_coefficient_impl(AtypicalFrame::analyze(lambda_rho), nu);
}

}  // namespace detail

}  // namespace superchar
