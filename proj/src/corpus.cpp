#include "superchar/corpus.hpp"

#include <algorithm>
#include <random>

#include "superchar/diagrams.hpp"

namespace superchar {

namespace {

// strictly decreasing tuples from [lo, hi]
void descending_tuples(int size, std::int64_t lo, std::int64_t hi,
                       std::vector<std::vector<std::int64_t>>& out) {
  std::vector<std::int64_t> cur;
  auto go = [&](auto&& self, std::int64_t top) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = top; v >= lo + (size - 1 - static_cast<std::int64_t>(cur.size())); --v) {
      cur.push_back(v);
      self(self, v - 1);
      cur.pop_back();
    }
  };
  go(go, hi);
}

}  // namespace

std::vector<ShiftedWeight> enumerate_strictly_dominant(AlgebraShape shape, std::int64_t lo,
                                                       std::int64_t hi) {
  shape.validate();
  if (lo > hi) throw Error("enumerate_strictly_dominant: empty entry window");
  std::vector<std::vector<std::int64_t>> a_tuples, b_tuples;
  descending_tuples(shape.m, lo, hi, a_tuples);
  descending_tuples(shape.n, lo, hi, b_tuples);
  std::vector<ShiftedWeight> out;
  out.reserve(a_tuples.size() * b_tuples.size());
  for (const auto& a : a_tuples)
    for (const auto& b : b_tuples) {
      std::vector<HalfInt> av(a.begin(), a.end());
      std::vector<HalfInt> bv(b.rbegin(), b.rend());  // ascending
      out.emplace_back(shape, std::move(av), std::move(bv));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ShiftedWeight> sample_pdc(AlgebraShape shape, std::int64_t lo, std::int64_t hi,
                                      std::size_t count, std::uint64_t seed) {
  std::vector<ShiftedWeight> pool;
  for (const ShiftedWeight& w : enumerate_strictly_dominant(shape, lo, hi))
    if (classify(w).pdc) pool.push_back(w);
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > count)
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(count), pool.end());
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace superchar
