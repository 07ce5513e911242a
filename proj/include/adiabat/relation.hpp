#pragma once

#include <vector>

#include "adiabat/state.hpp"

namespace adiabat {

/// A decidable adiabatic-accessibility oracle. `precedes(a, b)` answers
/// whether b can be reached from a by a process whose only trace on the
/// surroundings is a raised or lowered weight. Implementations are
/// immutable after construction and safe for concurrent read-only use.
class RelationModel {
 public:
  virtual ~RelationModel() = default;

  /// Core oracle on compound states. Throws ModelError for states the
  /// model does not cover or queries it cannot decide.
  virtual bool precedes(const CompoundState& from, const CompoundState& to) const = 0;

  bool precedes(const StatePoint& from, const StatePoint& to) const {
    return precedes(as_compound(from), as_compound(to));
  }
  bool precedes(const StatePoint& from, const CompoundState& to) const {
    return precedes(as_compound(from), to);
  }
  bool precedes(const CompoundState& from, const StatePoint& to) const {
    return precedes(from, as_compound(to));
  }

  /// Whether the model defines a scaling action (lambda * X for any
  /// lambda > 0, not just the scales already present in a query).
  virtual bool supports_scaling() const { return false; }

  /// Whether the model can decide queries on multi-part compounds.
  virtual bool supports_composition() const { return false; }

  /// All single states of the model when finitely enumerable; empty
  /// when enumeration is impractical (grids, continuous models).
  virtual std::vector<StatePoint> enumerable_states() const { return {}; }
};

template <class A, class B>
bool strictly_precedes(const RelationModel& m, const A& a, const B& b) {
  return m.precedes(a, b) && !m.precedes(b, a);
}

template <class A, class B>
bool adiabatically_equivalent(const RelationModel& m, const A& a, const B& b) {
  return m.precedes(a, b) && m.precedes(b, a);
}

template <class A, class B>
bool comparable(const RelationModel& m, const A& a, const B& b) {
  return m.precedes(a, b) || m.precedes(b, a);
}

}  // namespace adiabat
