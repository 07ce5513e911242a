#include "adiabat/state.hpp"

#include <cmath>
#include <sstream>

#include "adiabat/errors.hpp"

namespace adiabat {

void StatePoint::validate() const {
  for (double c : coords) {
    if (!std::isfinite(c)) {
      throw ModelError("state in space '" + space_id + "' has non-finite coordinate");
    }
  }
}

bool approx_equal(const StatePoint& a, const StatePoint& b, double tol) {
  if (a.space_id != b.space_id || a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (std::abs(a.coords[i] - b.coords[i]) > tol) return false;
  }
  return true;
}

CompoundState as_compound(const StatePoint& s) { return CompoundState{{ScaledState{1.0, s}}}; }

CompoundState compose(const CompoundState& a, const CompoundState& b) {
  CompoundState out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

CompoundState compose(const StatePoint& a, const StatePoint& b) {
  return compose(as_compound(a), as_compound(b));
}

CompoundState compose(const std::vector<ScaledState>& parts) {
  if (parts.empty()) throw ModelError("compound state must have at least one part");
  for (const auto& p : parts) {
    if (!(p.scale > 0.0)) throw ModelError("compound part has non-positive scale");
    p.state.validate();
  }
  return CompoundState{parts};
}

CompoundState scale(double lambda, const CompoundState& s) {
  if (!(lambda > 0.0)) throw ModelError("scaling factor must be strictly positive");
  CompoundState out = s;
  for (auto& p : out.parts) p.scale *= lambda;
  return out;
}

ScaledState scale(double lambda, const StatePoint& s) {
  if (!(lambda > 0.0)) throw ModelError("scaling factor must be strictly positive");
  return ScaledState{lambda, s};
}

bool approx_equal(const CompoundState& a, const CompoundState& b, double tol) {
  if (a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (std::abs(a.parts[i].scale - b.parts[i].scale) > tol) return false;
    if (!approx_equal(a.parts[i].state, b.parts[i].state, tol)) return false;
  }
  return true;
}

std::string to_string(const StatePoint& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.coords.size(); ++i) {
    if (i) os << ",";
    os << s.coords[i];
  }
  os << "]";
  if (!s.space_id.empty()) os << "@" << s.space_id;
  return os.str();
}

std::string to_string(const CompoundState& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) os << ", ";
    if (std::abs(s.parts[i].scale - 1.0) > kCoordTol) os << s.parts[i].scale << "*";
    os << to_string(s.parts[i].state);
  }
  os << ")";
  return os.str();
}

}  // namespace adiabat
