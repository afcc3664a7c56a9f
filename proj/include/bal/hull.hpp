#pragma once

// Rasterized holes and the inward-filled hull, computed two ways (hole
// census by definition and complement flood fill from the boundary) with a
// hard agreement check. Face adjacency (2d neighbors) throughout.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bal/geom.hpp"

namespace bal {

struct GridMask {
  BoundingBox box;
  double h = 1.0;
  std::vector<int> dims;          // cells per axis
  std::vector<uint8_t> cells;     // 1 = inside, axis 0 fastest

  int dim() const { return static_cast<int>(dims.size()); }
  size_t cell_total() const { return cells.size(); }
  size_t set_count() const;
  double area() const;            // set_count * h^d

  size_t flat(const std::vector<int>& idx) const;
  Point cell_center(size_t flat_index) const;
  bool same_geometry(const GridMask& other) const;
  bool subset_of(const GridMask& other) const;

  nlohmann::json to_json() const;  // rows packed as base64 bits
  std::string centers_csv() const; // one set-cell center per line
};

// Cell included iff its center is a member of the expression.
GridMask rasterize(const SetExpr& s, const BoundingBox& box, double h);

struct ComponentLabels {
  std::vector<int32_t> label;  // -1 outside the mask, else component id in scan order
  int count = 0;
};

// Flood-fill partition under face adjacency; labels assigned in scan order.
ComponentLabels components(const GridMask& m);

struct HullReport {
  GridMask hull;
  int hole_count = 0;
  int o_minus_k_components = 0;
  int hull_complement_components = 0;  // components of box minus hull
  bool algorithms_agree = false;

  nlohmann::json to_json() const;
};

// Requires K to be a cell subset of O. Throws when the two hull algorithms
// disagree (a rasterization artifact; rerun at smaller h).
HullReport inward_filled_hull(const GridMask& o_mask, const GridMask& k_mask);

struct HullPropertyReport {
  bool hull_inside_o = false;
  bool hull_compact = false;   // no hull cell on the box edge
  bool monotone = false;       // hull(O) subset of hull(O_big), cell-wise
  bool idempotent = false;     // hull(hull) = hull
  int complement_components = 0;
  bool census_ok = true;

  nlohmann::json to_json() const;
};

HullPropertyReport check_hull_properties(const GridMask& o_mask, const GridMask& o_big_mask, const GridMask& k_mask,
                    std::optional<int> expected_complement_census = std::nullopt);

}  // namespace bal
