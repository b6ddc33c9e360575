#include "superchar/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace superchar {

std::string OddRoot::str() const {
  std::string core = "e" + std::to_string(p + 1) + "-d" + std::to_string(q + 1);
  return sign >= 0 ? core : "-(" + core + ")";
}

ShiftedWeight WeylElement::apply(const ShiftedWeight& nu) const {
  if (eps_.size() != nu.m() || delta_.size() != nu.n())
    throw ShapeMismatch("WeylElement::apply: shape mismatch");
  std::vector<HalfInt> a(static_cast<std::size_t>(nu.m()));
  std::vector<HalfInt> b(static_cast<std::size_t>(nu.n()));
  for (int i = 0; i < nu.m(); ++i) a[static_cast<std::size_t>(eps_(i))] = nu.a(i);
  for (int j = 0; j < nu.n(); ++j) b[static_cast<std::size_t>(delta_(j))] = nu.b(j);
  return {nu.shape(), std::move(a), std::move(b)};
}

ShiftedWeight::ShiftedWeight(AlgebraShape shape, std::vector<HalfInt> a, std::vector<HalfInt> b)
    : shape_(shape), a_(std::move(a)), b_(std::move(b)) {
  shape_.validate();
  if (a_.size() != static_cast<std::size_t>(shape_.m) ||
      b_.size() != static_cast<std::size_t>(shape_.n))
    throw Error("ShiftedWeight: entry vector sizes do not match the shape");
}

ShiftedWeight ShiftedWeight::with_a(int i, HalfInt v) const {
  ShiftedWeight r = *this;
  r.a_[static_cast<std::size_t>(i)] = v;
  return r;
}

ShiftedWeight ShiftedWeight::with_b(int j, HalfInt v) const {
  ShiftedWeight r = *this;
  r.b_[static_cast<std::size_t>(j)] = v;
  return r;
}

ShiftedWeight ShiftedWeight::shifted_by(HalfInt c) const {
  ShiftedWeight r = *this;
  for (auto& x : r.a_) x += c;
  for (auto& x : r.b_) x += c;
  return r;
}

bool ShiftedWeight::integral() const {
  for (auto x : a_)
    if (!x.is_integer()) return false;
  for (auto x : b_)
    if (!x.is_integer()) return false;
  return true;
}

ShiftedWeight ShiftedWeight::operator+(const ShiftedWeight& o) const {
  if (shape_ != o.shape_) throw ShapeMismatch("ShiftedWeight: shape mismatch in +");
  ShiftedWeight r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  for (std::size_t j = 0; j < b_.size(); ++j) r.b_[j] += o.b_[j];
  return r;
}

ShiftedWeight ShiftedWeight::operator-(const ShiftedWeight& o) const {
  if (shape_ != o.shape_) throw ShapeMismatch("ShiftedWeight: shape mismatch in -");
  ShiftedWeight r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  for (std::size_t j = 0; j < b_.size(); ++j) r.b_[j] -= o.b_[j];
  return r;
}

ShiftedWeight ShiftedWeight::scaled(std::int64_t k) const {
  ShiftedWeight r = *this;
  for (auto& x : r.a_) x = k * x;
  for (auto& x : r.b_) x = k * x;
  return r;
}

std::string ShiftedWeight::encode() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += a_[i].str();
  }
  out += '|';
  for (std::size_t j = 0; j < b_.size(); ++j) {
    if (j) out += ',';
    out += b_[j].str();
  }
  return out;
}

namespace {

std::vector<HalfInt> parse_entry_list(const std::string& text, std::size_t begin, std::size_t end) {
  std::vector<HalfInt> out;
  std::size_t i = begin;
  while (true) {
    std::size_t stop = text.find(',', i);
    if (stop == std::string::npos || stop > end) stop = end;
    const std::string tok = text.substr(i, stop - i);
    if (tok.empty()) throw ParseError("empty weight entry", i);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid integer '" + tok + "'", i);
    }
    if (used != tok.size()) throw ParseError("trailing characters in entry '" + tok + "'", i + used);
    out.emplace_back(v);
    if (stop == end) break;
    i = stop + 1;
  }
  return out;
}

}  // namespace

ShiftedWeight ShiftedWeight::parse(const std::string& text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw ParseError("expected 'a1,...,am|b1,...,bn' (missing '|')", text.size());
  auto a = parse_entry_list(text, 0, bar);
  auto b = parse_entry_list(text, bar + 1, text.size());
  return {{static_cast<int>(a.size()), static_cast<int>(b.size())}, std::move(a), std::move(b)};
}

ShiftedWeight rho(AlgebraShape shape) {
  shape.validate();
  std::vector<HalfInt> a(static_cast<std::size_t>(shape.m));
  std::vector<HalfInt> b(static_cast<std::size_t>(shape.n));
  for (int i = 1; i <= shape.m; ++i)
    a[static_cast<std::size_t>(i - 1)] = HalfInt::from_twice(shape.m + 1 - 2 * i - shape.n);
  for (int j = 1; j <= shape.n; ++j)
    b[static_cast<std::size_t>(j - 1)] = HalfInt::from_twice(-(shape.n + 1 - 2 * j + shape.m));
  return {shape, std::move(a), std::move(b)};
}

ShiftedWeight from_unshifted(const ShiftedWeight& lambda) {
  ShiftedWeight lr = lambda + rho(lambda.shape());
  if (!lr.integral()) {
    const ShiftedWeight suggestion = lr.shifted_by(HalfInt::from_twice(1));
    throw NotIntegral(
        "lambda+rho has half-integral entries (m+n is even); shift by +1/2 along the "
        "all-ones direction, which is orthogonal to every root, and supply the shifted "
        "weight directly: \"" +
        suggestion.encode() + "\"");
  }
  return lr;
}

HalfInt pairing(const ShiftedWeight& x, const ShiftedWeight& y) {
  if (x.shape() != y.shape()) throw ShapeMismatch("pairing: shape mismatch");
  std::int64_t twice = 0;
  for (int i = 0; i < x.m(); ++i) twice += x.a(i).twice() * y.a(i).twice();
  for (int j = 0; j < x.n(); ++j) twice -= x.b(j).twice() * y.b(j).twice();
  if (twice % 2 != 0) throw Error("pairing: quarter-integral value");
  return HalfInt::from_twice(twice / 2);
}

ShiftedWeight weight_of(OddRoot beta, AlgebraShape shape) {
  ShiftedWeight w = ShiftedWeight::zero(shape);
  return w.with_a(beta.p, HalfInt(beta.sign)).with_b(beta.q, HalfInt(beta.sign));
}

long root_height(OddRoot beta, AlgebraShape shape) {
  return static_cast<long>(shape.m) - beta.p + beta.q;
}

bool is_strictly_dominant(const ShiftedWeight& nu) {
  for (int i = 0; i + 1 < nu.m(); ++i)
    if (!(nu.a(i) > nu.a(i + 1))) return false;
  for (int j = 0; j + 1 < nu.n(); ++j)
    if (!(nu.b(j) < nu.b(j + 1))) return false;
  return true;
}

bool is_regular(const ShiftedWeight& nu) {
  auto a = nu.avec();
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  auto b = nu.bvec();
  std::sort(b.begin(), b.end());
  return std::adjacent_find(b.begin(), b.end()) == b.end();
}

void require_strictly_dominant(const ShiftedWeight& nu) {
  for (int i = 0; i + 1 < nu.m(); ++i)
    if (!(nu.a(i) > nu.a(i + 1)))
      throw NotStrictlyDominant("eps-entries must strictly decrease: a" + std::to_string(i + 1) +
                                " = " + nu.a(i).str() + ", a" + std::to_string(i + 2) + " = " +
                                nu.a(i + 1).str());
  for (int j = 0; j + 1 < nu.n(); ++j)
    if (!(nu.b(j) < nu.b(j + 1)))
      throw NotStrictlyDominant("delta-entries must strictly increase: b" + std::to_string(j + 1) +
                                " = " + nu.b(j).str() + ", b" + std::to_string(j + 2) + " = " +
                                nu.b(j + 1).str());
}

void require_integral(const ShiftedWeight& nu) {
  if (!nu.integral())
    throw NotIntegral("weight " + nu.encode() + " has half-integral entries");
}

namespace {

// Permutation sigma with sorted[sigma(i)] = entries[i]; entries must be distinct.
Perm sorting_perm(const std::vector<HalfInt>& entries, bool descending) {
  std::vector<int> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return descending ? entries[static_cast<std::size_t>(x)] > entries[static_cast<std::size_t>(y)]
                      : entries[static_cast<std::size_t>(x)] < entries[static_cast<std::size_t>(y)];
  });
  std::vector<int> img(entries.size());
  for (int rank = 0; rank < static_cast<int>(order.size()); ++rank)
    img[static_cast<std::size_t>(order[static_cast<std::size_t>(rank)])] = rank;
  return Perm::from_images(std::move(img));
}

}  // namespace

std::pair<ShiftedWeight, WeylElement> dominant_rearrangement(const ShiftedWeight& nu) {
  if (!is_regular(nu))
    throw NotRegular("dominant_rearrangement: repeated entries in " + nu.encode());
  WeylElement w{sorting_perm(nu.avec(), /*descending=*/true),
                sorting_perm(nu.bvec(), /*descending=*/false)};
  return {w.apply(nu), w};
}

ShiftedWeight sorted_dominant(const ShiftedWeight& nu) {
  auto a = nu.avec();
  auto b = nu.bvec();
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end());
  return {nu.shape(), std::move(a), std::move(b)};
}

std::vector<OddRoot> atypical_roots(const ShiftedWeight& nu) {
  require_strictly_dominant(nu);
  require_integral(nu);
  std::vector<OddRoot> out;
  for (int j = 0; j < nu.n(); ++j)
    for (int i = 0; i < nu.m(); ++i)
      if (nu.a(i) == nu.b(j)) {
        out.push_back({i, j, 1});
        break;
      }
  return out;
}

int atypicality(const ShiftedWeight& nu) { return static_cast<int>(atypical_roots(nu).size()); }

bool is_typical(const ShiftedWeight& nu) { return atypical_roots(nu).empty(); }

namespace {

struct EntrySplit {
  std::vector<HalfInt> typical_a, typical_b, atypical;  // each sorted ascending
};

EntrySplit split_entries(const ShiftedWeight& nu) {
  EntrySplit s;
  for (int i = 0; i < nu.m(); ++i) {
    bool common = false;
    for (int j = 0; j < nu.n(); ++j) common = common || nu.a(i) == nu.b(j);
    (common ? s.atypical : s.typical_a).push_back(nu.a(i));
  }
  for (int j = 0; j < nu.n(); ++j) {
    bool common = false;
    for (int i = 0; i < nu.m(); ++i) common = common || nu.a(i) == nu.b(j);
    if (!common) s.typical_b.push_back(nu.b(j));
  }
  std::sort(s.typical_a.begin(), s.typical_a.end());
  std::sort(s.typical_b.begin(), s.typical_b.end());
  std::sort(s.atypical.begin(), s.atypical.end());
  return s;
}

}  // namespace

bool preceq(const ShiftedWeight& mu_rho, const ShiftedWeight& lambda_rho) {
  if (mu_rho.shape() != lambda_rho.shape()) throw ShapeMismatch("preceq: shape mismatch");
  require_strictly_dominant(mu_rho);
  require_integral(mu_rho);
  require_strictly_dominant(lambda_rho);
  require_integral(lambda_rho);
  const EntrySplit mu = split_entries(mu_rho);
  const EntrySplit la = split_entries(lambda_rho);
  if (mu.typical_a != la.typical_a || mu.typical_b != la.typical_b) return false;
  if (mu.atypical.size() != la.atypical.size()) return false;
  for (std::size_t i = 0; i < mu.atypical.size(); ++i)
    if (mu.atypical[i] > la.atypical[i]) return false;
  return true;
}

std::optional<RootLatticeCoords> root_lattice_coords(const ShiftedWeight& q) {
  // u_t for t < m are partial sums of a; u_{m-1+j} = u_{m-1} - (b_0+...+b_{j-1}).
  RootLatticeCoords c;
  c.u.reserve(static_cast<std::size_t>(q.m() + q.n() - 1));
  HalfInt acc;
  for (int i = 0; i < q.m(); ++i) {
    acc += q.a(i);
    if (!acc.is_integer()) return std::nullopt;
    c.u.push_back(acc.integer());
  }
  HalfInt mass_b;
  for (int j = 0; j < q.n(); ++j) mass_b += q.b(j);
  if (acc != mass_b) return std::nullopt;  // unequal eps/delta mass: not in Q
  HalfInt running = acc;
  for (int j = 0; j + 1 < q.n(); ++j) {
    running -= q.b(j);
    if (!running.is_integer()) return std::nullopt;
    c.u.push_back(running.integer());
  }
  c.height = 0;
  c.nonneg = true;
  for (auto v : c.u) {
    c.height += v;
    c.nonneg = c.nonneg && v >= 0;
  }
  return c;
}

long root_lattice_height(const ShiftedWeight& q) {
  auto c = root_lattice_coords(q);
  if (!c) throw NotInRootLattice("element " + q.encode() + " is not in the root lattice");
  return c->height;
}

bool in_positive_root_lattice(const ShiftedWeight& q) {
  auto c = root_lattice_coords(q);
  return c && c->nonneg;
}

std::optional<long> cone_height(const ShiftedWeight& base, const ShiftedWeight& nu) {
  auto c = root_lattice_coords(base - nu);
  if (!c || !c->nonneg) return std::nullopt;
  return c->height;
}

std::vector<ShiftedWeight> simple_roots(AlgebraShape shape) {
  std::vector<ShiftedWeight> out;
  const ShiftedWeight z = ShiftedWeight::zero(shape);
  for (int i = 0; i + 1 < shape.m; ++i)
    out.push_back(z.with_a(i, HalfInt(1)).with_a(i + 1, HalfInt(-1)));
  out.push_back(weight_of({shape.m - 1, 0, 1}, shape));
  for (int j = 0; j + 1 < shape.n; ++j)
    out.push_back(z.with_b(j, HalfInt(-1)).with_b(j + 1, HalfInt(1)));
  return out;
}

std::vector<ShiftedWeight> positive_even_roots(AlgebraShape shape) {
  std::vector<ShiftedWeight> out;
  const ShiftedWeight z = ShiftedWeight::zero(shape);
  for (int i = 0; i < shape.m; ++i)
    for (int j = i + 1; j < shape.m; ++j)
      out.push_back(z.with_a(i, HalfInt(1)).with_a(j, HalfInt(-1)));
  for (int k = 0; k < shape.n; ++k)
    for (int l = k + 1; l < shape.n; ++l)
      out.push_back(z.with_b(k, HalfInt(-1)).with_b(l, HalfInt(1)));
  return out;
}

std::vector<OddRoot> positive_odd_roots(AlgebraShape shape) {
  std::vector<OddRoot> out;
  for (int i = 0; i < shape.m; ++i)
    for (int k = 0; k < shape.n; ++k) out.push_back({i, k, 1});
  return out;
}

const std::vector<WeylElement>& weyl_group(AlgebraShape shape) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.try_emplace({shape.m, shape.n});
  if (inserted) {
    for (const Perm& pe : Perm::all(shape.m))
      for (const Perm& pd : Perm::all(shape.n)) it->second.push_back(WeylElement{pe, pd});
  }
  return it->second;
}

}  // namespace superchar
