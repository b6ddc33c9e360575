#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superchar/lattice.hpp"

namespace superchar {

enum class Symbol : unsigned char { Wedge, Vee, Cross, Circle };

char symbol_char(Symbol s);

// The symbol string of a weight on a finite window of the integer line;
// positions outside the window are implicitly Wedge.  Vees carry labels that
// travel with them under right moves.
class WeightDiagram {
public:
  WeightDiagram(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }

  Symbol symbol_at(int pos) const;
  int label_at(int pos) const;  // 0 when the position holds no labeled vee

  void set(int pos, Symbol s, int label = 0);  // grows the window as needed

  std::vector<int> vee_positions() const;                  // ascending
  std::vector<std::pair<int, int>> labeled_vees() const;   // (position, label), ascending
  int position_of_label(int label) const;                  // throws NoSuchLabel

  int vee_count() const;
  int cross_count() const;
  int circle_count() const;

  // Semantic equality: same symbols everywhere (labels and window padding ignored).
  friend bool operator==(const WeightDiagram& x, const WeightDiagram& y);

private:
  void grow_to(int pos);

  int lo_, hi_;
  std::vector<Symbol> symbols_;
  std::vector<int> labels_;
};

struct CapMatching {
  // (vee position, wedge position) pairs, sorted by vee position ascending.
  std::vector<std::pair<int, int>> caps;

  int partner_of(int vee_pos) const;  // throws Error when vee_pos is unmatched
};

struct ClassificationFlags {
  bool typical = false;
  bool totally_connected = false;
  bool totally_disconnected = false;
  bool pdc = false;

  friend bool operator==(const ClassificationFlags&, const ClassificationFlags&) = default;
};

struct AtypicalComponent {
  int lo = 0, hi = 0;              // position interval
  std::vector<int> vee_positions;  // ascending; the contained atypical values
};

struct ComponentDecomposition {
  std::vector<AtypicalComponent> components;  // left to right
  std::vector<int> t;                         // vee counts per component
  std::vector<int> s;                         // wedge counts between consecutive components
  std::int64_t t_lambda = 1;                  // t_1! * ... * t_N!
  std::vector<int> slot_component;            // component index per vee slot (left-to-right)

  bool same_component(int slot_j, int slot_k) const {
    return slot_component[static_cast<std::size_t>(slot_j)] ==
           slot_component[static_cast<std::size_t>(slot_k)];
  }
};

// Symbols: vee on {a} cap {b}, cross on {a} only, circle on {b} only, wedge
// elsewhere; vees labeled 1..r left to right.  Requires a strictly dominant
// integral weight.
WeightDiagram build_diagram(const ShiftedWeight& lambda_rho);

// Inverse of build_diagram: a = vees+crosses descending, b = vees+circles ascending.
ShiftedWeight weight_from_diagram(const WeightDiagram& d);

// Right-to-left greedy matching of each vee to the first free wedge on its right.
CapMatching cap_matching(const WeightDiagram& d);

ComponentDecomposition components(const WeightDiagram& d);

ClassificationFlags classify(const WeightDiagram& d);
ClassificationFlags classify(const ShiftedWeight& lambda_rho);

// (lambda^rho)^up: every atypical entry raised to the maximal atypical entry
// of its component.  Defined for PDC weights only.
ShiftedWeight uparrow(const ShiftedWeight& lambda_rho);

namespace detail {
// Same raising map evaluated mechanically without the PDC hypothesis; used
// only to probe what breaks without it.
ShiftedWeight uparrow_unchecked(const ShiftedWeight& lambda_rho);
}  // namespace detail

// Coefficient sum of nu_diff in the Z-span of S; throws NotInSpan.
std::int64_t s_norm(const ShiftedWeight& nu_diff, const std::vector<OddRoot>& s_roots);

// Plain-text picture: positions, symbols, and the cap arcs beneath.
std::string render_ascii(const WeightDiagram& d);

}  // namespace superchar
