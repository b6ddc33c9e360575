#include "superchar/pdc.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace superchar {

AtypicalFrame AtypicalFrame::analyze(const ShiftedWeight& lambda_rho) {
  AtypicalFrame f;
  f.lambda_rho_ = lambda_rho;
  f.s_ = atypical_roots(lambda_rho);
  const WeightDiagram d = build_diagram(lambda_rho);
  f.comp_ = components(d);
  f.flags_ = classify(d);
  f.up_ = detail::uparrow_unchecked(lambda_rho);
  for (std::size_t i = 0; i < f.s_.size(); ++i) {
    f.values_.push_back(lambda_rho.a(f.s_[i].p).integer());
    f.caps_.push_back(f.up_.a(f.s_[i].p).integer());
    f.heights_.push_back(root_height(f.s_[i], lambda_rho.shape()));
    f.up_norm_ += f.caps_.back() - f.values_.back();
  }
  return f;
}

ShiftedWeight AtypicalFrame::weight_with_slot_values(const std::vector<std::int64_t>& values) const {
  ShiftedWeight out = lambda_rho_;
  for (int i = 0; i < r(); ++i) {
    out = out.with_a(s_[static_cast<std::size_t>(i)].p, HalfInt(values[static_cast<std::size_t>(i)]));
    out = out.with_b(s_[static_cast<std::size_t>(i)].q, HalfInt(values[static_cast<std::size_t>(i)]));
  }
  return out;
}

std::vector<std::int64_t> AtypicalFrame::slot_values(const ShiftedWeight& nu) const {
  if (nu.shape() != lambda_rho_.shape()) throw ShapeMismatch("slot_values: shape mismatch");
  std::vector<std::int64_t> out;
  for (int i = 0; i < r(); ++i) {
    const OddRoot& beta = s_[static_cast<std::size_t>(i)];
    if (nu.a(beta.p) != nu.b(beta.q) || !nu.a(beta.p).is_integer())
      throw NotInSpan("weight " + nu.encode() + " does not lie on the atypical slots of " +
                      lambda_rho_.encode());
    out.push_back(nu.a(beta.p).integer());
  }
  // every off-slot entry must match lambda's typical entries
  if (weight_with_slot_values(out) != nu)
    throw NotInSpan("weight " + nu.encode() + " differs from " + lambda_rho_.encode() +
                    " outside the atypical slots");
  return out;
}

void AtypicalFrame::require_pdc() const {
  if (!flags_.pdc)
    throw NotPDC("weight " + lambda_rho_.encode() + " is not piecewise disconnected");
}

WeylElement weyl_from_slot_perm(const AtypicalFrame& frame, const Perm& sigma) {
  std::vector<int> eps(static_cast<std::size_t>(frame.lambda_rho().m()));
  std::vector<int> del(static_cast<std::size_t>(frame.lambda_rho().n()));
  std::iota(eps.begin(), eps.end(), 0);
  std::iota(del.begin(), del.end(), 0);
  for (int i = 0; i < frame.r(); ++i) {
    const OddRoot& from = frame.s_roots()[static_cast<std::size_t>(i)];
    const OddRoot& to = frame.s_roots()[static_cast<std::size_t>(sigma(i))];
    eps[static_cast<std::size_t>(from.p)] = to.p;
    del[static_cast<std::size_t>(from.q)] = to.q;
  }
  return {Perm::from_images(std::move(eps)), Perm::from_images(std::move(del))};
}

std::vector<WeylElement> w_r_elements(const AtypicalFrame& frame) {
  std::vector<WeylElement> out;
  for (const Perm& sigma : Perm::all(frame.r())) out.push_back(weyl_from_slot_perm(frame, sigma));
  return out;
}

std::vector<WeylElement> w_r_t_elements(const AtypicalFrame& frame) {
  std::vector<WeylElement> out;
  for (const Perm& sigma : Perm::all(frame.r())) {
    bool preserves = true;
    for (int i = 0; i < frame.r(); ++i)
      preserves = preserves && frame.same_component(i, sigma(i));
    if (preserves) out.push_back(weyl_from_slot_perm(frame, sigma));
  }
  return out;
}

ShiftedWeight mu_bar(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho) {
  if (!preceq(mu_rho, lambda_rho))
    throw NotInPLambda("weight " + mu_rho.encode() + " does not precede " + lambda_rho.encode());
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  const AtypicalFrame mu_frame = AtypicalFrame::analyze(mu_rho);
  std::vector<std::int64_t> values;
  for (int i = 0; i < mu_frame.r(); ++i) values.push_back(mu_frame.value(i));
  return frame.weight_with_slot_values(values);
}

SkipWord skip_word(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho) {
  const ShiftedWeight bar = mu_bar(lambda_rho, mu_rho);  // validates mu in P_lambda
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);

  SkipWord out;
  out.l_trivial = 0;

  // replay the trivial path and count the crosses/circles jumped over
  const WeightDiagram target = build_diagram(lambda_rho);
  const std::vector<int> targets = target.vee_positions();
  WeightDiagram d = build_diagram(mu_rho);
  for (int label = static_cast<int>(targets.size()); label >= 1; --label) {
    const int goal = targets[static_cast<std::size_t>(label - 1)];
    while (d.position_of_label(label) < goal) {
      const int from = d.position_of_label(label);
      d = apply_right_move(d, label);
      const int to = d.position_of_label(label);
      long skipped = 0;
      for (int p = from + 1; p < to; ++p) {
        const Symbol s = d.symbol_at(p);
        if (s == Symbol::Cross || s == Symbol::Circle) ++skipped;
        else
          throw Error("internal: trivial path jumped over a non-typical symbol");
      }
      out.per_move.emplace_back(label, skipped);
      out.length += skipped;
      ++out.l_trivial;
    }
  }

  // the unique Weyl element matching mu^rho's entries to mu_bar's arrangement
  auto match = [](const std::vector<HalfInt>& from, const std::vector<HalfInt>& to) {
    std::vector<int> img(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      auto it = std::find(to.begin(), to.end(), from[i]);
      if (it == to.end()) throw Error("internal: mu_bar is not a rearrangement of mu^rho");
      img[i] = static_cast<int>(it - to.begin());
    }
    return Perm::from_images(std::move(img));
  };
  out.w = WeylElement{match(mu_rho.avec(), bar.avec()), match(mu_rho.bvec(), bar.bvec())};
  if (out.w.apply(mu_rho) != bar) throw Error("internal: skip word does not map mu^rho to mu_bar");
  if (out.w.length() != out.length)
    throw Error("internal: skip word length differs from the skip count");

  out.lexi_norm = s_norm(lambda_rho - bar, frame.s_roots());
  if (out.lexi_norm != out.l_trivial + out.length)
    throw Error("internal: |lambda^rho - mu_bar|_S != l_trivial + l(w')");
  return out;
}

namespace {

WrCount c_count_impl(const AtypicalFrame& frame, const ShiftedWeight& nu) {
  const std::vector<std::int64_t> x = frame.slot_values(nu);
  for (int i = 0; i < frame.r(); ++i)
    if (x[static_cast<std::size_t>(i)] > frame.cap(i))
      throw NotInSpan("weight " + nu.encode() + " is above the raised caps of " +
                      frame.lambda_rho().encode());
  WrCount out;
  for (const Perm& sigma : Perm::all(frame.r())) {
    // slot j of w(nu) carries x_{sigma^-1(j)}
    const Perm inv = sigma.inverse();
    bool inside = true;
    for (int j = 0; j < frame.r(); ++j)
      inside = inside && x[static_cast<std::size_t>(inv(j))] <= frame.cap(j);
    if (inside) {
      ++out.count;
      out.elements.push_back(weyl_from_slot_perm(frame, sigma));
    }
  }
  return out;
}

}  // namespace

WrCount c_count(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  frame.require_pdc();
  return c_count_impl(frame, nu);
}

namespace detail {

WrCount c_count_unchecked(const ShiftedWeight& lambda_rho, const ShiftedWeight& nu) {
  return c_count_impl(AtypicalFrame::analyze(lambda_rho), nu);
}

}  // namespace detail

ImageThetaSets image_theta_sets(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  frame.require_pdc();
  const AtypicalFrame mu_frame = AtypicalFrame::analyze(mu_rho);
  if (mu_frame.r() != frame.r())
    throw NotInPLambda("atypicality mismatch between " + mu_rho.encode() + " and " +
                       lambda_rho.encode());

  ImageThetaSets out;
  // different typical entries: no arrangement is comparable, both sets empty
  auto typicals = [](const AtypicalFrame& f) {
    std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> sides;
    std::set<std::int64_t> atyp;
    for (int i = 0; i < f.r(); ++i) atyp.insert(f.value(i));
    const ShiftedWeight& w = f.lambda_rho();
    for (int i = 0; i < w.m(); ++i)
      if (atyp.count(w.a(i).integer()) == 0) sides.first.push_back(w.a(i).integer());
    for (int j = 0; j < w.n(); ++j)
      if (atyp.count(w.b(j).integer()) == 0) sides.second.push_back(w.b(j).integer());
    std::sort(sides.first.begin(), sides.first.end());
    std::sort(sides.second.begin(), sides.second.end());
    return sides;
  };
  if (typicals(frame) != typicals(mu_frame)) return out;
  for (const Perm& sigma : Perm::all(frame.r())) {
    const Perm inv = sigma.inverse();
    bool order_ok = true;
    for (int j = 0; j < frame.r() && order_ok; ++j)
      for (int k = j + 1; k < frame.r() && order_ok; ++k)
        if (frame.same_component(j, k)) order_ok = inv(j) < inv(k);
    if (!order_ok) continue;
    bool under_lambda = true, under_up = true;
    for (int j = 0; j < frame.r(); ++j) {
      const std::int64_t v = mu_frame.value(inv(j));
      under_lambda = under_lambda && v <= frame.value(j);
      under_up = under_up && v <= frame.cap(j);
    }
    if (under_lambda) out.via_lambda.insert(sigma);
    if (under_up) out.via_uparrow.insert(sigma);
  }
  return out;
}

std::set<Perm> theta_image_of_paths(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho) {
  std::set<Perm> out;
  for (const Path& p : enumerate_paths(mu_rho, lambda_rho)) out.insert(p.sigma);
  return out;
}

namespace {

// increasing slot-value tuples with values[i] <= cap[i] and
// sum (cap[i]-values[i])*weight[i] <= budget
void enumerate_tuples(const std::vector<std::int64_t>& cap, const std::vector<long>& weight,
                      long budget, const std::function<bool(std::int64_t)>& admissible,
                      const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  const int r = static_cast<int>(cap.size());
  std::vector<std::int64_t> values(static_cast<std::size_t>(r));
  std::function<void(int, long)> go = [&](int slot, long left) {
    if (slot < 0) {
      emit(values);
      return;
    }
    const std::size_t si = static_cast<std::size_t>(slot);
    const std::int64_t top =
        slot + 1 < r ? std::min(cap[si], values[si + 1] - 1) : cap[si];
    for (std::int64_t c = top;; --c) {
      const long cost = static_cast<long>(cap[si] - c) * weight[si];
      if (cost > left) break;
      if (!admissible(c)) continue;
      values[si] = c;
      go(slot - 1, left - cost);
    }
  };
  if (r == 0) {
    emit(values);
    return;
  }
  go(r - 1, budget);
}

std::set<std::int64_t> typical_values(const AtypicalFrame& frame) {
  std::set<std::int64_t> atypical;
  for (int i = 0; i < frame.r(); ++i) atypical.insert(frame.value(i));
  std::set<std::int64_t> out;
  const ShiftedWeight& lr = frame.lambda_rho();
  for (int i = 0; i < lr.m(); ++i)
    if (atypical.count(lr.a(i).integer()) == 0) out.insert(lr.a(i).integer());
  for (int j = 0; j < lr.n(); ++j)
    if (atypical.count(lr.b(j).integer()) == 0) out.insert(lr.b(j).integer());
  return out;
}

}  // namespace

CLexiSets c_lexi_sets(const ShiftedWeight& lambda_rho, long max_height) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  CLexiSets out;

  std::vector<std::int64_t> lambda_values, up_values;
  std::vector<long> heights;
  for (int i = 0; i < frame.r(); ++i) {
    lambda_values.push_back(frame.value(i));
    up_values.push_back(frame.cap(i));
    heights.push_back(frame.height(i));
  }
  const std::set<std::int64_t> typical = typical_values(frame);

  enumerate_tuples(
      lambda_values, heights, max_height,
      [&](std::int64_t c) { return typical.count(c) == 0; },
      [&](const std::vector<std::int64_t>& v) { out.reg.push_back(frame.weight_with_slot_values(v)); });

  frame.require_pdc();
  enumerate_tuples(
      up_values, heights, max_height, [](std::int64_t) { return true; },
      [&](const std::vector<std::int64_t>& v) { out.bar.push_back(frame.weight_with_slot_values(v)); });

  std::sort(out.reg.begin(), out.reg.end());
  std::sort(out.bar.begin(), out.bar.end());
  return out;
}

bool in_reg_set(const AtypicalFrame& frame, const ShiftedWeight& nu) {
  std::vector<std::int64_t> x;
  try {
    x = frame.slot_values(nu);
  } catch (const NotInSpan&) {
    return false;
  }
  for (int i = 0; i < frame.r(); ++i) {
    if (x[static_cast<std::size_t>(i)] > frame.value(i)) return false;
    if (i + 1 < frame.r() && x[static_cast<std::size_t>(i)] >= x[static_cast<std::size_t>(i + 1)])
      return false;
  }
  return is_regular(nu);
}

bool in_bar_set(const AtypicalFrame& frame, const ShiftedWeight& nu) {
  std::vector<std::int64_t> x;
  try {
    x = frame.slot_values(nu);
  } catch (const NotInSpan&) {
    return false;
  }
  for (int i = 0; i < frame.r(); ++i) {
    if (x[static_cast<std::size_t>(i)] > frame.cap(i)) return false;
    if (i + 1 < frame.r() && x[static_cast<std::size_t>(i)] >= x[static_cast<std::size_t>(i + 1)])
      return false;
  }
  return true;
}

bool multiset_identity_check(const ShiftedWeight& lambda_rho, long max_height) {
  const AtypicalFrame frame = AtypicalFrame::analyze(lambda_rho);
  frame.require_pdc();
  if (frame.r() == 0) return true;

  // |up - .|_S grading: invariant under slot rearrangement, so the window is
  // complete on both sides.
  std::vector<std::int64_t> caps;
  std::vector<long> unit(static_cast<std::size_t>(frame.r()), 1);
  for (int i = 0; i < frame.r(); ++i) caps.push_back(frame.cap(i));

  std::map<ShiftedWeight, std::int64_t> orbit_side;
  enumerate_tuples(
      caps, unit, max_height, [](std::int64_t) { return true; },
      [&](const std::vector<std::int64_t>& sorted_values) {
        for (const Perm& sigma : Perm::all(frame.r())) {
          const Perm inv = sigma.inverse();
          std::vector<std::int64_t> arranged(static_cast<std::size_t>(frame.r()));
          bool inside = true;
          for (int j = 0; j < frame.r(); ++j) {
            arranged[static_cast<std::size_t>(j)] = sorted_values[static_cast<std::size_t>(inv(j))];
            inside = inside && arranged[static_cast<std::size_t>(j)] <= frame.cap(j);
          }
          if (inside) ++orbit_side[frame.weight_with_slot_values(arranged)];
        }
      });

  std::map<ShiftedWeight, std::int64_t> distinct_side;
  const int r = frame.r();
  std::vector<std::int64_t> values(static_cast<std::size_t>(r));
  std::function<void(int, long)> go = [&](int slot, long left) {
    if (slot < 0) {
      bool distinct = true;
      for (int i = 0; i < r && distinct; ++i)
        for (int j = i + 1; j < r && distinct; ++j)
          distinct = values[static_cast<std::size_t>(i)] != values[static_cast<std::size_t>(j)];
      if (distinct) ++distinct_side[frame.weight_with_slot_values(values)];
      return;
    }
    const std::size_t si = static_cast<std::size_t>(slot);
    for (std::int64_t c = frame.cap(slot);; --c) {
      const long cost = frame.cap(slot) - c;
      if (cost > left) break;
      values[si] = c;
      go(slot - 1, left - cost);
    }
  };
  go(r - 1, max_height);

  return orbit_side == distinct_side;
}

}  // namespace superchar
