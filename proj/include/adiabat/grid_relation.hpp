#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adiabat/relation.hpp"

namespace adiabat {

/// A generator-induced relation on a uniform grid. States snap to their
/// nearest cell; each generator maps a cell's coordinates to a finite
/// set of successor coordinates, which are snapped back to cells.
/// Successors falling outside the declared bounds are discarded.
/// `precedes(a, b)` holds iff b's cell is in the reachability closure of
/// a's cell under repeated generator application.
class GridRelation : public RelationModel {
 public:
  struct Axis {
    double lo = 0.0;
    double hi = 1.0;
    double h = 0.1;  // spacing; (hi - lo) must be an integer multiple
  };

  /// Maps cell coordinates to raw successor coordinates (pre-snap).
  using Generator = std::function<std::vector<std::vector<double>>(const std::vector<double>&)>;

  GridRelation(std::string space_id, std::vector<Axis> axes, std::vector<Generator> generators,
               std::function<bool(const std::vector<double>&)> equilibrium_predicate = nullptr);

  const std::string& space_id() const { return space_id_; }
  std::size_t dimension() const { return axes_.size(); }
  std::size_t cell_count() const { return total_cells_; }
  const std::vector<Axis>& axes() const { return axes_; }

  /// Nearest-cell index vector for a coordinate vector; throws
  /// ModelError when outside bounds.
  std::vector<int> snap(const std::vector<double>& coords) const;

  std::int64_t cell_id(const std::vector<int>& cell) const;
  std::vector<double> coords_of(const std::vector<int>& cell) const;

  /// The grid state (snapped) for arbitrary in-bounds coordinates.
  StatePoint grid_state(const std::vector<double>& coords) const;

  /// Fixed point of generator application from x's cell, x included.
  std::vector<StatePoint> reachable_set(const StatePoint& x) const;

  /// Reachability as a mask indexed by cell id.
  std::vector<char> reachable_mask(const StatePoint& x) const;

  bool precedes(const CompoundState& from, const CompoundState& to) const override;
  using RelationModel::precedes;

 private:
  void check_space(const StatePoint& s) const;
  StatePoint make_state(const std::vector<double>& coords) const;

  std::string space_id_;
  std::vector<Axis> axes_;
  std::vector<Generator> generators_;
  std::function<bool(const std::vector<double>&)> eq_predicate_;
  std::vector<int> cells_per_axis_;
  std::size_t total_cells_ = 0;
};

}  // namespace adiabat
