#include "adiabat/grid_relation.hpp"

#include <cmath>
#include <deque>

#include "adiabat/errors.hpp"

namespace adiabat {

namespace {
constexpr std::size_t kMaxCells = 8u * 1000u * 1000u;
}

GridRelation::GridRelation(std::string space_id, std::vector<Axis> axes,
                           std::vector<Generator> generators,
                           std::function<bool(const std::vector<double>&)> equilibrium_predicate)
    : space_id_(std::move(space_id)),
      axes_(std::move(axes)),
      generators_(std::move(generators)),
      eq_predicate_(std::move(equilibrium_predicate)) {
  if (axes_.empty()) throw ModelError("grid needs at least one axis");
  total_cells_ = 1;
  for (const auto& a : axes_) {
    if (!(a.h > 0.0) || !(a.hi > a.lo)) throw ModelError("grid axis needs hi > lo and h > 0");
    const double steps = (a.hi - a.lo) / a.h;
    const auto n = static_cast<int>(std::llround(steps));
    if (std::abs(steps - n) > 1e-9) {
      throw ModelError("grid extent is not an integer multiple of the spacing");
    }
    cells_per_axis_.push_back(n + 1);
    total_cells_ *= static_cast<std::size_t>(n + 1);
    if (total_cells_ > kMaxCells) throw ModelError("grid too large");
  }
}

std::vector<int> GridRelation::snap(const std::vector<double>& coords) const {
  if (coords.size() != axes_.size()) {
    throw ModelError("dimension mismatch in space '" + space_id_ + "'");
  }
  std::vector<int> cell(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& a = axes_[i];
    if (coords[i] < a.lo - kCoordTol || coords[i] > a.hi + kCoordTol) {
      throw ModelError("state " + std::to_string(coords[i]) + " outside grid bounds on axis " +
                       std::to_string(i));
    }
    auto k = static_cast<int>(std::llround((coords[i] - a.lo) / a.h));
    if (k < 0) k = 0;
    if (k >= cells_per_axis_[i]) k = cells_per_axis_[i] - 1;
    cell[i] = k;
  }
  return cell;
}

std::int64_t GridRelation::cell_id(const std::vector<int>& cell) const {
  std::int64_t id = 0;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    id = id * cells_per_axis_[i] + cell[i];
  }
  return id;
}

std::vector<double> GridRelation::coords_of(const std::vector<int>& cell) const {
  std::vector<double> coords(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    coords[i] = axes_[i].lo + cell[i] * axes_[i].h;
  }
  return coords;
}

StatePoint GridRelation::make_state(const std::vector<double>& coords) const {
  const bool eq = eq_predicate_ ? eq_predicate_(coords) : false;
  return StatePoint{space_id_, coords, eq};
}

StatePoint GridRelation::grid_state(const std::vector<double>& coords) const {
  return make_state(coords_of(snap(coords)));
}

void GridRelation::check_space(const StatePoint& s) const {
  if (s.space_id != space_id_) {
    throw ModelError("state from space '" + s.space_id + "' queried against space '" +
                     space_id_ + "'");
  }
}

std::vector<char> GridRelation::reachable_mask(const StatePoint& x) const {
  check_space(x);
  std::vector<char> seen(total_cells_, 0);
  std::deque<std::vector<int>> queue;
  auto start = snap(x.coords);
  seen[static_cast<std::size_t>(cell_id(start))] = 1;
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    const auto cell = queue.front();
    queue.pop_front();
    const auto coords = coords_of(cell);
    for (const auto& gen : generators_) {
      for (const auto& succ : gen(coords)) {
        if (succ.size() != axes_.size()) throw ModelError("generator produced wrong dimension");
        // Boundary policy: successors leaving the grid are discarded.
        bool inside = true;
        for (std::size_t i = 0; i < succ.size(); ++i) {
          if (succ[i] < axes_[i].lo - kCoordTol || succ[i] > axes_[i].hi + kCoordTol) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        auto next = snap(succ);
        const auto id = static_cast<std::size_t>(cell_id(next));
        if (!seen[id]) {
          seen[id] = 1;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

std::vector<StatePoint> GridRelation::reachable_set(const StatePoint& x) const {
  const auto mask = reachable_mask(x);
  std::vector<StatePoint> out;
  std::vector<int> cell(axes_.size(), 0);
  for (std::size_t id = 0; id < mask.size(); ++id) {
    if (mask[id]) {
      // Decode the linear id back into per-axis indices.
      auto rest = static_cast<std::int64_t>(id);
      for (std::size_t i = axes_.size(); i-- > 0;) {
        cell[i] = static_cast<int>(rest % cells_per_axis_[i]);
        rest /= cells_per_axis_[i];
      }
      out.push_back(make_state(coords_of(cell)));
    }
  }
  return out;
}

bool GridRelation::precedes(const CompoundState& from, const CompoundState& to) const {
  if (from.parts.size() != 1 || to.parts.size() != 1 ||
      std::abs(from.parts[0].scale - 1.0) > kCoordTol ||
      std::abs(to.parts[0].scale - 1.0) > kCoordTol) {
    throw ModelError("grid relation decides queries between single unscaled states only");
  }
  const auto& a = from.parts[0].state;
  const auto& b = to.parts[0].state;
  check_space(b);
  const auto mask = reachable_mask(a);
  return mask[static_cast<std::size_t>(cell_id(snap(b.coords)))] != 0;
}

}  // namespace adiabat
