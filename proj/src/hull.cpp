#include "bal/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <stdexcept>

namespace bal {

namespace {

const char kBase64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::string base64_bits(const std::vector<uint8_t>& bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<uint8_t>(1u << (i % 8));
  std::string out;
  out.reserve(((bytes.size() + 2) / 3) * 4);
  for (size_t i = 0; i < bytes.size(); i += 3) {
    uint32_t v = static_cast<uint32_t>(bytes[i]) << 16;
    if (i + 1 < bytes.size()) v |= static_cast<uint32_t>(bytes[i + 1]) << 8;
    if (i + 2 < bytes.size()) v |= bytes[i + 2];
    out.push_back(kBase64[(v >> 18) & 63]);
    out.push_back(kBase64[(v >> 12) & 63]);
    out.push_back(i + 1 < bytes.size() ? kBase64[(v >> 6) & 63] : '=');
    out.push_back(i + 2 < bytes.size() ? kBase64[v & 63] : '=');
  }
  return out;
}

struct Neighbors {
  // flat index offsets for +-1 step per axis and a bounds test per step
  const GridMask& m;
  std::vector<size_t> stride;

  explicit Neighbors(const GridMask& mask) : m(mask) {
    stride.resize(static_cast<size_t>(m.dim()));
    size_t s = 1;
    for (int i = 0; i < m.dim(); ++i) {
      stride[static_cast<size_t>(i)] = s;
      s *= static_cast<size_t>(m.dims[static_cast<size_t>(i)]);
    }
  }

  // Calls fn(neighbor_flat) for in-grid face neighbors; sets `edge` when the
  // cell touches the grid boundary along any axis.
  template <class Fn>
  void visit(size_t flat, bool& edge, Fn&& fn) const {
    size_t rem = flat;
    for (int i = 0; i < m.dim(); ++i) {
      const size_t st = stride[static_cast<size_t>(i)];
      const int n = m.dims[static_cast<size_t>(i)];
      const int c = static_cast<int>((rem / st) % static_cast<size_t>(n));
      if (c == 0 || c == n - 1) edge = true;
      if (c > 0) fn(flat - st);
      if (c < n - 1) fn(flat + st);
    }
  }
};

}  // namespace

size_t GridMask::set_count() const {
  size_t n = 0;
  for (uint8_t c : cells) n += c;
  return n;
}

double GridMask::area() const { return static_cast<double>(set_count()) * std::pow(h, dim()); }

size_t GridMask::flat(const std::vector<int>& idx) const {
  size_t f = 0, s = 1;
  for (int i = 0; i < dim(); ++i) {
    f += static_cast<size_t>(idx[static_cast<size_t>(i)]) * s;
    s *= static_cast<size_t>(dims[static_cast<size_t>(i)]);
  }
  return f;
}

Point GridMask::cell_center(size_t flat_index) const {
  Point p = box.lo;
  size_t rem = flat_index;
  for (int i = 0; i < dim(); ++i) {
    const size_t n = static_cast<size_t>(dims[static_cast<size_t>(i)]);
    p[i] += (static_cast<double>(rem % n) + 0.5) * h;
    rem /= n;
  }
  return p;
}

bool GridMask::same_geometry(const GridMask& other) const {
  return dims == other.dims && h == other.h && box.lo == other.box.lo && box.hi == other.box.hi;
}

bool GridMask::subset_of(const GridMask& other) const {
  if (!same_geometry(other)) throw std::invalid_argument("GridMask::subset_of: geometry mismatch");
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i] && !other.cells[i]) return false;
  return true;
}

nlohmann::json GridMask::to_json() const {
  return nlohmann::json{{"box", {{"lo", point_to_json(box.lo)}, {"hi", point_to_json(box.hi)}}},
                        {"h", h},
                        {"dims", dims},
                        {"connectivity", "face"},
                        {"rows", base64_bits(cells)}};
}

std::string GridMask::centers_csv() const {
  std::string out;
  for (int i = 0; i < dim(); ++i) out += (i ? ",x" : "x") + std::to_string(i);
  out += "\n";
  char buf[64];
  for (size_t f = 0; f < cells.size(); ++f) {
    if (!cells[f]) continue;
    const Point p = cell_center(f);
    for (int i = 0; i < dim(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[i]);
      out += (i ? "," : "") + std::string(buf);
    }
    out += "\n";
  }
  return out;
}

GridMask rasterize(const SetExpr& s, const BoundingBox& box, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("rasterize: h > 0 required");
  GridMask m;
  m.box = box;
  m.h = h;
  const int d = box.dim();
  m.dims.resize(static_cast<size_t>(d));
  size_t total = 1;
  for (int i = 0; i < d; ++i) {
    const int n = static_cast<int>(std::ceil((box.hi[i] - box.lo[i]) / h - 1e-12));
    if (n < 1) throw std::invalid_argument("rasterize: empty box");
    m.dims[static_cast<size_t>(i)] = n;
    total *= static_cast<size_t>(n);
  }
  m.cells.assign(total, 0);
  for (size_t f = 0; f < total; ++f)
    if (s.contains(m.cell_center(f))) m.cells[f] = 1;
  return m;
}

ComponentLabels components(const GridMask& m) {
  ComponentLabels out;
  out.label.assign(m.cells.size(), -1);
  const Neighbors nb(m);
  std::deque<size_t> queue;
  for (size_t seed = 0; seed < m.cells.size(); ++seed) {
    if (!m.cells[seed] || out.label[seed] >= 0) continue;
    const int32_t id = out.count++;
    out.label[seed] = id;
    queue.push_back(seed);
    while (!queue.empty()) {
      const size_t cur = queue.front();
      queue.pop_front();
      bool edge = false;
      nb.visit(cur, edge, [&](size_t n) {
        if (m.cells[n] && out.label[n] < 0) {
          out.label[n] = id;
          queue.push_back(n);
        }
      });
    }
  }
  return out;
}

HullReport inward_filled_hull(const GridMask& o_mask, const GridMask& k_mask) {
  if (!k_mask.subset_of(o_mask))
    throw std::invalid_argument("inward_filled_hull: K must be a subset of O");
  const size_t total = o_mask.cell_total();
  const Neighbors nb(o_mask);

  GridMask diff = o_mask;  // O \ K
  for (size_t i = 0; i < total; ++i) diff.cells[i] = static_cast<uint8_t>(o_mask.cells[i] && !k_mask.cells[i]);

  // Route (a), the definition: components of O \ K are holes when no cell
  // face-touches a cell outside O or the box boundary.
  const ComponentLabels labels = components(diff);
  std::vector<uint8_t> touches(static_cast<size_t>(labels.count), 0);
  for (size_t f = 0; f < total; ++f) {
    if (labels.label[f] < 0) continue;
    bool edge = false;
    bool outside = false;
    nb.visit(f, edge, [&](size_t n) {
      if (!o_mask.cells[n]) outside = true;
    });
    if (edge || outside) touches[static_cast<size_t>(labels.label[f])] = 1;
  }
  GridMask hull_a = k_mask;
  int holes = 0;
  for (int c = 0; c < labels.count; ++c)
    if (!touches[static_cast<size_t>(c)]) ++holes;
  for (size_t f = 0; f < total; ++f)
    if (labels.label[f] >= 0 && !touches[static_cast<size_t>(labels.label[f])]) hull_a.cells[f] = 1;

  // Route (b), the complement characterization: flood O \ K from every cell
  // adjacent to the outside (the grid stand-in for the component of the
  // compactified complement containing infinity) and subtract from O.
  std::vector<uint8_t> reached(total, 0);
  std::deque<size_t> queue;
  for (size_t f = 0; f < total; ++f) {
    if (!diff.cells[f]) continue;
    bool edge = false;
    bool outside = false;
    nb.visit(f, edge, [&](size_t n) {
      if (!o_mask.cells[n]) outside = true;
    });
    if (edge || outside) {
      reached[f] = 1;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    const size_t cur = queue.front();
    queue.pop_front();
    bool edge = false;
    nb.visit(cur, edge, [&](size_t n) {
      if (diff.cells[n] && !reached[n]) {
        reached[n] = 1;
        queue.push_back(n);
      }
    });
  }
  GridMask hull_b = o_mask;
  for (size_t f = 0; f < total; ++f)
    if (reached[f]) hull_b.cells[f] = 0;

  HullReport report;
  report.algorithms_agree = hull_a.cells == hull_b.cells;
  if (!report.algorithms_agree)
    throw std::runtime_error(
        "inward_filled_hull: definition and complement algorithms disagree; "
        "rasterization artifact, rerun at smaller h");
  report.hull = std::move(hull_a);
  report.hole_count = holes;
  report.o_minus_k_components = labels.count;

  GridMask hull_complement = report.hull;
  for (size_t f = 0; f < total; ++f) hull_complement.cells[f] = static_cast<uint8_t>(!report.hull.cells[f]);
  report.hull_complement_components = components(hull_complement).count;
  return report;
}

nlohmann::json HullReport::to_json() const {
  return nlohmann::json{{"hull", hull.to_json()},
                        {"hole_count", hole_count},
                        {"o_minus_k_components", o_minus_k_components},
                        {"hull_complement_components", hull_complement_components},
                        {"algorithms_agree", algorithms_agree}};
}

HullPropertyReport check_hull_properties(const GridMask& o_mask, const GridMask& o_big_mask, const GridMask& k_mask,
                    std::optional<int> expected_complement_census) {
  if (!o_mask.subset_of(o_big_mask)) throw std::invalid_argument("check_hull_properties: O must lie inside O_big");
  const HullReport small = inward_filled_hull(o_mask, k_mask);
  const HullReport big = inward_filled_hull(o_big_mask, k_mask);

  HullPropertyReport r;
  r.hull_inside_o = small.hull.subset_of(o_mask);
  r.hull_compact = true;
  const Neighbors nb(o_mask);
  for (size_t f = 0; f < small.hull.cell_total(); ++f) {
    if (!small.hull.cells[f]) continue;
    bool edge = false;
    nb.visit(f, edge, [](size_t) {});
    if (edge) r.hull_compact = false;
  }
  r.monotone = small.hull.subset_of(big.hull);
  const HullReport again = inward_filled_hull(o_mask, small.hull);
  r.idempotent = again.hull.cells == small.hull.cells;
  r.complement_components = small.hull_complement_components;
  if (expected_complement_census) r.census_ok = (r.complement_components == *expected_complement_census);
  return r;
}

nlohmann::json HullPropertyReport::to_json() const {
  return nlohmann::json{{"hull_inside_o", hull_inside_o},
                        {"hull_compact", hull_compact},
                        {"monotone", monotone},
                        {"idempotent", idempotent},
                        {"complement_components", complement_components},
                        {"census_ok", census_ok}};
}

}  // namespace bal
