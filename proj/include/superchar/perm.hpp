#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace superchar {

// Permutation of {0,...,n-1}; operator()(i) is the image of i.
class Perm {
public:
  Perm() = default;
  explicit Perm(int n) : img_(static_cast<std::size_t>(n)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm from_images(std::vector<int> img) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
      if (v < 0 || v >= static_cast<int>(img.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("Perm: invalid image vector");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    Perm p;
    p.img_ = std::move(img);
    return p;
  }

  static Perm transposition(int n, int i, int j) {
    Perm p(n);
    std::swap(p.img_[static_cast<std::size_t>(i)], p.img_[static_cast<std::size_t>(j)]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  // (p*q)(i) = p(q(i))
  Perm operator*(const Perm& q) const {
    Perm r(size());
    for (int i = 0; i < size(); ++i) r.img_[static_cast<std::size_t>(i)] = (*this)(q(i));
    return r;
  }

  Perm inverse() const {
    Perm r(size());
    for (int i = 0; i < size(); ++i) r.img_[static_cast<std::size_t>((*this)(i))] = i;
    return r;
  }

  long inversions() const {
    long c = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++c;
    return c;
  }

  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  // Cycle notation on 1-based points, fixed points omitted; "id" if trivial.
  std::string cycles() const {
    std::string out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < size(); ++i) {
      if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
      out += '(';
      int j = i;
      bool first = true;
      while (!seen[static_cast<std::size_t>(j)]) {
        seen[static_cast<std::size_t>(j)] = 1;
        if (!first) out += ' ';
        out += std::to_string(j + 1);
        first = false;
        j = (*this)(j);
      }
      out += ')';
    }
    return out.empty() ? "id" : out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  static std::vector<Perm> all(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
      out.push_back(from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

private:
  std::vector<int> img_;
};

}  // namespace superchar
