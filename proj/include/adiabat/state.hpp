#pragma once

#include <string>
#include <vector>

namespace adiabat {

/// Absolute tolerance used for floating-point ties in coordinate and
/// scale comparisons.
inline constexpr double kCoordTol = 1e-12;

/// A point in a state space. `coords` are model-defined (energies,
/// temperatures, or an abstract node index for finite models).
/// `is_equilibrium` distinguishes the equilibrium subset from the
/// surrounding non-equilibrium space.
struct StatePoint {
  std::string space_id;
  std::vector<double> coords;
  bool is_equilibrium = false;

  /// Throws ModelError if any coordinate is NaN/infinite.
  void validate() const;
};

bool approx_equal(const StatePoint& a, const StatePoint& b, double tol = kCoordTol);

/// A scaled copy of a state. Extensive quantities are multiplied by
/// `scale`; intensive ones are untouched. `scale` must be > 0.
struct ScaledState {
  double scale = 1.0;
  StatePoint state;
};

/// A composition of scaled states, kept in canonical flattened form
/// (never nested, never empty). A single unscaled part is the state
/// of one plain system.
struct CompoundState {
  std::vector<ScaledState> parts;

  std::size_t size() const { return parts.size(); }
};

/// Wrap a single state as a one-part compound.
CompoundState as_compound(const StatePoint& s);

/// Compose compounds into one flat compound (ordered concatenation).
CompoundState compose(const CompoundState& a, const CompoundState& b);
CompoundState compose(const StatePoint& a, const StatePoint& b);
CompoundState compose(const std::vector<ScaledState>& parts);

/// Scale every part by lambda (> 0). Scaling distributes over parts,
/// so scale(a, scale(b, s)) == scale(a*b, s).
CompoundState scale(double lambda, const CompoundState& s);
ScaledState scale(double lambda, const StatePoint& s);

bool approx_equal(const CompoundState& a, const CompoundState& b, double tol = kCoordTol);

/// Short textual rendering, e.g. "(0.5*[1,3], 0.5*[2,2])".
std::string to_string(const StatePoint& s);
std::string to_string(const CompoundState& s);

}  // namespace adiabat
