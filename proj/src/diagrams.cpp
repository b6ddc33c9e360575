#include "superchar/diagrams.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace superchar {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::Wedge: return '^';
    case Symbol::Vee: return 'v';
    case Symbol::Cross: return 'x';
    case Symbol::Circle: return 'o';
  }
  return '?';
}

WeightDiagram::WeightDiagram(int lo, int hi) : lo_(lo), hi_(hi) {
  if (hi < lo) throw MalformedDiagram("WeightDiagram: empty window");
  symbols_.assign(static_cast<std::size_t>(hi - lo + 1), Symbol::Wedge);
  labels_.assign(symbols_.size(), 0);
}

Symbol WeightDiagram::symbol_at(int pos) const {
  if (pos < lo_ || pos > hi_) return Symbol::Wedge;
  return symbols_[static_cast<std::size_t>(pos - lo_)];
}

int WeightDiagram::label_at(int pos) const {
  if (pos < lo_ || pos > hi_) return 0;
  return labels_[static_cast<std::size_t>(pos - lo_)];
}

void WeightDiagram::grow_to(int pos) {
  if (pos < lo_) {
    symbols_.insert(symbols_.begin(), static_cast<std::size_t>(lo_ - pos), Symbol::Wedge);
    labels_.insert(labels_.begin(), static_cast<std::size_t>(lo_ - pos), 0);
    lo_ = pos;
  } else if (pos > hi_) {
    symbols_.insert(symbols_.end(), static_cast<std::size_t>(pos - hi_), Symbol::Wedge);
    labels_.insert(labels_.end(), static_cast<std::size_t>(pos - hi_), 0);
    hi_ = pos;
  }
}

void WeightDiagram::set(int pos, Symbol s, int label) {
  grow_to(pos);
  symbols_[static_cast<std::size_t>(pos - lo_)] = s;
  labels_[static_cast<std::size_t>(pos - lo_)] = s == Symbol::Vee ? label : 0;
}

std::vector<int> WeightDiagram::vee_positions() const {
  std::vector<int> out;
  for (int p = lo_; p <= hi_; ++p)
    if (symbol_at(p) == Symbol::Vee) out.push_back(p);
  return out;
}

std::vector<std::pair<int, int>> WeightDiagram::labeled_vees() const {
  std::vector<std::pair<int, int>> out;
  for (int p = lo_; p <= hi_; ++p)
    if (symbol_at(p) == Symbol::Vee) out.emplace_back(p, label_at(p));
  return out;
}

int WeightDiagram::position_of_label(int label) const {
  for (int p = lo_; p <= hi_; ++p)
    if (symbol_at(p) == Symbol::Vee && label_at(p) == label) return p;
  throw NoSuchLabel("no vee labeled " + std::to_string(label));
}

int WeightDiagram::vee_count() const { return static_cast<int>(vee_positions().size()); }

int WeightDiagram::cross_count() const {
  int c = 0;
  for (auto s : symbols_) c += s == Symbol::Cross;
  return c;
}

int WeightDiagram::circle_count() const {
  int c = 0;
  for (auto s : symbols_) c += s == Symbol::Circle;
  return c;
}

bool operator==(const WeightDiagram& x, const WeightDiagram& y) {
  const int lo = std::min(x.lo(), y.lo());
  const int hi = std::max(x.hi(), y.hi());
  for (int p = lo; p <= hi; ++p)
    if (x.symbol_at(p) != y.symbol_at(p)) return false;
  return true;
}

int CapMatching::partner_of(int vee_pos) const {
  for (auto [v, w] : caps)
    if (v == vee_pos) return w;
  throw Error("no cap at position " + std::to_string(vee_pos));
}

WeightDiagram build_diagram(const ShiftedWeight& lambda_rho) {
  require_strictly_dominant(lambda_rho);
  require_integral(lambda_rho);
  std::set<std::int64_t> as, bs;
  for (int i = 0; i < lambda_rho.m(); ++i) as.insert(lambda_rho.a(i).integer());
  for (int j = 0; j < lambda_rho.n(); ++j) bs.insert(lambda_rho.b(j).integer());
  std::set<std::int64_t> entries = as;
  entries.insert(bs.begin(), bs.end());
  const int lo = static_cast<int>(*entries.begin()) - 1;
  const int hi =
      static_cast<int>(*entries.rbegin()) + lambda_rho.m() + lambda_rho.n() + 1;
  WeightDiagram d(lo, hi);
  int label = 0;
  for (std::int64_t t : entries) {
    const bool in_a = as.count(t) > 0;
    const bool in_b = bs.count(t) > 0;
    const int pos = static_cast<int>(t);
    if (in_a && in_b)
      d.set(pos, Symbol::Vee, ++label);
    else
      d.set(pos, in_a ? Symbol::Cross : Symbol::Circle);
  }
  return d;
}

ShiftedWeight weight_from_diagram(const WeightDiagram& d) {
  std::vector<HalfInt> a, b;
  for (int p = d.hi(); p >= d.lo(); --p) {
    const Symbol s = d.symbol_at(p);
    if (s == Symbol::Vee || s == Symbol::Cross) a.emplace_back(static_cast<long long>(p));
  }
  for (int p = d.lo(); p <= d.hi(); ++p) {
    const Symbol s = d.symbol_at(p);
    if (s == Symbol::Vee || s == Symbol::Circle) b.emplace_back(static_cast<long long>(p));
  }
  if (a.empty() || b.empty())
    throw MalformedDiagram("diagram has no valid (m,n): needs at least one entry per side");
  return {{static_cast<int>(a.size()), static_cast<int>(b.size())}, std::move(a), std::move(b)};
}

CapMatching cap_matching(const WeightDiagram& d) {
  CapMatching m;
  std::set<int> marked;
  const auto vees = d.vee_positions();
  for (auto it = vees.rbegin(); it != vees.rend(); ++it) {
    int p = *it + 1;
    // positions beyond the window are wedges too
    while (!(d.symbol_at(p) == Symbol::Wedge && marked.count(p) == 0)) ++p;
    marked.insert(p);
    m.caps.emplace_back(*it, p);
  }
  std::sort(m.caps.begin(), m.caps.end());
  return m;
}

ComponentDecomposition components(const WeightDiagram& d) {
  ComponentDecomposition out;
  const auto vees = d.vee_positions();
  if (vees.empty()) return out;  // typical: empty decomposition, t_lambda = 1

  // Maximal wedge-free stretches containing at least one vee.
  int run_start = d.lo();
  bool in_run = false;
  std::vector<std::pair<int, int>> runs;
  for (int p = d.lo(); p <= d.hi() + 1; ++p) {
    const bool solid = p <= d.hi() && d.symbol_at(p) != Symbol::Wedge;
    if (solid && !in_run) {
      run_start = p;
      in_run = true;
    } else if (!solid && in_run) {
      runs.emplace_back(run_start, p - 1);
      in_run = false;
    }
  }
  for (auto [lo, hi] : runs) {
    AtypicalComponent comp;
    comp.lo = lo;
    comp.hi = hi;
    for (int p = lo; p <= hi; ++p)
      if (d.symbol_at(p) == Symbol::Vee) comp.vee_positions.push_back(p);
    if (!comp.vee_positions.empty()) out.components.push_back(std::move(comp));
  }

  for (const auto& comp : out.components) {
    out.t.push_back(static_cast<int>(comp.vee_positions.size()));
    std::int64_t f = 1;
    for (int k = 2; k <= out.t.back(); ++k) f *= k;
    out.t_lambda *= f;
  }
  for (std::size_t i = 0; i + 1 < out.components.size(); ++i) {
    int wedges = 0;
    for (int p = out.components[i].hi + 1; p < out.components[i + 1].lo; ++p)
      wedges += d.symbol_at(p) == Symbol::Wedge;
    out.s.push_back(wedges);
  }
  int slot = 0;
  out.slot_component.resize(vees.size());
  for (std::size_t c = 0; c < out.components.size(); ++c)
    for (std::size_t k = 0; k < out.components[c].vee_positions.size(); ++k)
      out.slot_component[static_cast<std::size_t>(slot++)] = static_cast<int>(c);
  return out;
}

ClassificationFlags classify(const WeightDiagram& d) {
  ClassificationFlags f;
  const auto comp = components(d);
  if (comp.components.empty()) {
    f.typical = true;
    f.totally_connected = f.totally_disconnected = f.pdc = true;  // vacuous
    return f;
  }
  f.totally_connected = comp.components.size() <= 1;
  f.totally_disconnected = std::all_of(comp.t.begin(), comp.t.end(), [](int t) { return t == 1; });
  f.pdc = true;
  for (std::size_t i = 0; i + 1 < comp.components.size(); ++i)
    f.pdc = f.pdc && comp.t[i] <= comp.s[i];
  if ((f.totally_connected || f.totally_disconnected) && !f.pdc)
    throw Error("internal: TC/TDC weight classified as non-PDC");
  return f;
}

ClassificationFlags classify(const ShiftedWeight& lambda_rho) {
  return classify(build_diagram(lambda_rho));
}

namespace detail {

ShiftedWeight uparrow_unchecked(const ShiftedWeight& lambda_rho) {
  const WeightDiagram d = build_diagram(lambda_rho);
  const ComponentDecomposition comp = components(d);
  std::map<std::int64_t, std::int64_t> raise;  // atypical value -> component max
  for (const auto& c : comp.components) {
    const std::int64_t top = c.vee_positions.back();
    for (int v : c.vee_positions) raise[v] = top;
  }
  ShiftedWeight out = lambda_rho;
  for (int i = 0; i < out.m(); ++i) {
    auto it = raise.find(out.a(i).integer());
    if (it != raise.end()) out = out.with_a(i, HalfInt(it->second));
  }
  for (int j = 0; j < out.n(); ++j) {
    auto it = raise.find(out.b(j).integer());
    if (it != raise.end()) out = out.with_b(j, HalfInt(it->second));
  }
  return out;
}

}  // namespace detail

ShiftedWeight uparrow(const ShiftedWeight& lambda_rho) {
  if (!classify(lambda_rho).pdc)
    throw NotPDC("uparrow is defined only for piecewise disconnected weights: " +
                 lambda_rho.encode());
  return detail::uparrow_unchecked(lambda_rho);
}

std::int64_t s_norm(const ShiftedWeight& nu_diff, const std::vector<OddRoot>& s_roots) {
  ShiftedWeight rest = nu_diff;
  std::int64_t total = 0;
  for (const OddRoot& beta : s_roots) {
    if (!rest.a(beta.p).is_integer())
      throw NotInSpan("half-integral coefficient along " + beta.str());
    const std::int64_t k = rest.a(beta.p).integer() * beta.sign;
    rest = rest - weight_of(beta, rest.shape()).scaled(k);
    total += k;
  }
  if (rest != ShiftedWeight::zero(rest.shape()))
    throw NotInSpan("element " + nu_diff.encode() + " is not in the span of the atypical roots");
  return total;
}

std::string render_ascii(const WeightDiagram& d) {
  const CapMatching caps = cap_matching(d);

  int lo = d.hi(), hi = d.lo();
  for (int p = d.lo(); p <= d.hi(); ++p)
    if (d.symbol_at(p) != Symbol::Wedge) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  for (auto [v, w] : caps.caps) {
    lo = std::min(lo, v);
    hi = std::max(hi, w);
  }
  if (lo > hi) {
    lo = d.lo();
    hi = d.hi();
  }
  --lo;
  ++hi;

  int width = 2;
  for (int p = lo; p <= hi; ++p)
    width = std::max(width, static_cast<int>(std::to_string(p).size()) + 1);

  auto pad = [&](const std::string& cell) {
    std::string out(static_cast<std::size_t>(width) - cell.size(), ' ');
    return out + cell;
  };

  std::string positions, symbols;
  for (int p = lo; p <= hi; ++p) {
    positions += pad(std::to_string(p));
    symbols += pad(std::string(1, symbol_char(d.symbol_at(p))));
  }

  // Nesting rows: a cap sits one row below the deepest cap it covers.
  std::vector<int> row(caps.caps.size(), 0);
  int max_row = -1;
  for (std::size_t i = 0; i < caps.caps.size(); ++i) {
    for (std::size_t j = 0; j < caps.caps.size(); ++j)
      if (caps.caps[j].first > caps.caps[i].first && caps.caps[j].second < caps.caps[i].second)
        row[i] = std::max(row[i], row[j] + 1);
    max_row = std::max(max_row, row[i]);
  }

  std::string out = positions + "\n" + symbols + "\n";
  for (int level = 0; level <= max_row; ++level) {
    std::string line;
    for (int p = lo; p <= hi; ++p) {
      std::string cell(static_cast<std::size_t>(width - 1), ' ');
      std::string glyph = " ";
      for (std::size_t i = 0; i < caps.caps.size(); ++i) {
        if (row[i] != level) continue;
        const auto [v, w] = caps.caps[i];
        if (p == v) glyph = "└";
        else if (p == w) glyph = "┘";
        else if (p > v && p < w) {
          glyph = "─";
          std::string bar;
          for (int k = 0; k < width - 1; ++k) bar += "─";
          cell = bar;
        }
      }
      // fill the gap column when the cap continues through it
      if (glyph == "┘" || glyph == "─") {
        std::string bar;
        for (int k = 0; k < width - 1; ++k) bar += "─";
        cell = bar;
      }
      line += cell + glyph;
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace superchar
