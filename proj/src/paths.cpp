#include "superchar/paths.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace superchar {

std::string Path::moves_str() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += "R" + std::to_string(i + 1);
    if (counts[i] > 1) out += "^" + std::to_string(counts[i]);
  }
  return out.empty() ? "(empty)" : out;
}

std::int64_t KLPolynomial::evaluate(std::int64_t q) const {
  std::int64_t total = 0;
  for (auto [exp, c] : coefficients) {
    std::int64_t p = 1;
    for (long k = 0; k < exp; ++k) p *= q;
    total += c * p;
  }
  return total;
}

std::string KLPolynomial::str() const {
  if (coefficients.empty()) return "0";
  std::string out;
  for (auto [exp, c] : coefficients) {
    if (!out.empty()) out += " + ";
    if (c != 1 || exp == 0) out += std::to_string(c);
    if (exp > 0) {
      out += "q";
      if (exp > 1) out += "^" + std::to_string(exp);
    }
  }
  return out;
}

WeightDiagram apply_right_move(const WeightDiagram& d, int label) {
  const int pos = d.position_of_label(label);  // throws NoSuchLabel
  const int target = cap_matching(d).partner_of(pos);
  WeightDiagram out = d;
  out.set(pos, Symbol::Wedge);
  out.set(target, Symbol::Vee, label);
  return out;
}

namespace {

struct PathContext {
  WeightDiagram start;
  WeightDiagram target;
  std::vector<int> target_vees;  // ascending
  int r = 0;
  bool comparable = false;
};

PathContext make_context(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  if (mu_rho.shape() != lambda_rho.shape())
    throw ShapeMismatch("paths: mu and lambda have different shapes");
  PathContext ctx{build_diagram(mu_rho), build_diagram(lambda_rho), {}, 0, false};
  ctx.target_vees = ctx.target.vee_positions();
  ctx.r = static_cast<int>(ctx.target_vees.size());
  ctx.comparable = preceq(mu_rho, lambda_rho);
  return ctx;
}

// slot (0-based) of each labeled vee in the endpoint, by target position.
Perm endpoint_sigma(const PathContext& ctx, const WeightDiagram& endpoint) {
  std::vector<int> img(static_cast<std::size_t>(ctx.r));
  for (int slot = 0; slot < ctx.r; ++slot) {
    const int label = endpoint.label_at(ctx.target_vees[static_cast<std::size_t>(slot)]);
    img[static_cast<std::size_t>(label - 1)] = slot;
  }
  return Perm::from_images(std::move(img));
}

}  // namespace

Path trivial_path(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  const PathContext ctx = make_context(mu_rho, lambda_rho);
  if (!ctx.comparable)
    throw NotComparable("no path exists: " + mu_rho.encode() + " does not precede " +
                        lambda_rho.encode());
  WeightDiagram d = ctx.start;
  std::vector<int> counts(static_cast<std::size_t>(ctx.r), 0);
  for (int label = ctx.r; label >= 1; --label) {
    const int target = ctx.target_vees[static_cast<std::size_t>(label - 1)];
    while (d.position_of_label(label) < target) {
      d = apply_right_move(d, label);
      ++counts[static_cast<std::size_t>(label - 1)];
    }
    if (d.position_of_label(label) != target)
      throw Error("internal: trivial path overshot its target");
  }
  if (!(d == ctx.target)) throw Error("internal: trivial path missed the target diagram");
  return Path{std::move(counts), endpoint_sigma(ctx, d), std::move(d)};
}

long trivial_length(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  return trivial_path(mu_rho, lambda_rho).length();
}

std::vector<Path> enumerate_paths(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  const PathContext ctx = make_context(mu_rho, lambda_rho);
  std::vector<Path> out;
  if (!ctx.comparable) return out;
  if (ctx.r == 0) {
    if (ctx.start == ctx.target)
      out.push_back(Path{{}, Perm(0), ctx.start});
    return out;
  }
  const int max_pos = ctx.target_vees.back();
  std::set<int> target_set(ctx.target_vees.begin(), ctx.target_vees.end());

  std::vector<int> counts(static_cast<std::size_t>(ctx.r), 0);
  std::function<void(int, const WeightDiagram&)> dfs = [&](int label, const WeightDiagram& d) {
    if (label == 0) {
      if (d == ctx.target)
        out.push_back(Path{counts, endpoint_sigma(ctx, d), d});
      return;
    }
    WeightDiagram cur = d;
    int moves = 0;
    while (true) {
      // once this label stops it never moves again: its vee must sit on a target
      if (target_set.count(cur.position_of_label(label)) > 0) {
        counts[static_cast<std::size_t>(label - 1)] = moves;
        dfs(label - 1, cur);
      }
      if (cur.position_of_label(label) >= max_pos) break;  // moves only go right
      cur = apply_right_move(cur, label);
      ++moves;
    }
    counts[static_cast<std::size_t>(label - 1)] = 0;
  };
  dfs(ctx.r, ctx.start);
  return out;
}

std::int64_t path_count(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  return static_cast<std::int64_t>(enumerate_paths(mu_rho, lambda_rho).size());
}

KLPolynomial kl_polynomial(const ShiftedWeight& lambda_rho, const ShiftedWeight& mu_rho) {
  KLPolynomial kl;
  for (const Path& p : enumerate_paths(mu_rho, lambda_rho)) ++kl.coefficients[p.length()];
  return kl;
}

std::vector<ShiftedWeight> enumerate_p_lambda(const ShiftedWeight& lambda_rho, long max_height) {
  require_strictly_dominant(lambda_rho);
  require_integral(lambda_rho);
  const std::vector<OddRoot> s_roots = atypical_roots(lambda_rho);
  const int r = static_cast<int>(s_roots.size());

  std::set<std::int64_t> forbidden;  // typical entries on either side
  {
    std::set<std::int64_t> common;
    for (const OddRoot& beta : s_roots) common.insert(lambda_rho.a(beta.p).integer());
    for (int i = 0; i < lambda_rho.m(); ++i)
      if (common.count(lambda_rho.a(i).integer()) == 0)
        forbidden.insert(lambda_rho.a(i).integer());
    for (int j = 0; j < lambda_rho.n(); ++j)
      if (common.count(lambda_rho.b(j).integer()) == 0)
        forbidden.insert(lambda_rho.b(j).integer());
  }

  std::vector<std::int64_t> top(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    top[static_cast<std::size_t>(i)] = lambda_rho.a(s_roots[static_cast<std::size_t>(i)].p).integer();

  std::vector<ShiftedWeight> out;
  std::vector<std::int64_t> values(static_cast<std::size_t>(r));
  // Choose atypical values slot by slot from the top: c_i <= top_i, c_i < c_{i+1},
  // skipping typical entries.  Every unit decrement raises the height of
  // lambda^rho - mu^rho by at least one, so a unit budget bounds the search;
  // the exact height of the rearranged weight is checked at the leaves.
  std::function<void(int, long)> choose = [&](int slot, long budget) {
    if (slot < 0) {
      ShiftedWeight mu = lambda_rho;
      for (int i = 0; i < r; ++i) {
        mu = mu.with_a(s_roots[static_cast<std::size_t>(i)].p, HalfInt(values[static_cast<std::size_t>(i)]));
        mu = mu.with_b(s_roots[static_cast<std::size_t>(i)].q, HalfInt(values[static_cast<std::size_t>(i)]));
      }
      mu = sorted_dominant(mu);
      const auto h = cone_height(lambda_rho, mu);
      if (h && *h <= max_height) out.push_back(std::move(mu));
      return;
    }
    const std::size_t si = static_cast<std::size_t>(slot);
    const std::int64_t hi_value =
        slot + 1 < r ? std::min(top[si], values[si + 1] - 1) : top[si];
    for (std::int64_t c = hi_value;; --c) {
      const long cost = static_cast<long>(top[si] - c);
      if (cost > budget) break;
      if (forbidden.count(c) > 0) continue;
      values[si] = c;
      choose(slot - 1, budget - cost);
    }
  };
  choose(r - 1, max_height);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superchar
