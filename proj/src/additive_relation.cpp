#include "adiabat/additive_relation.hpp"

#include <cmath>

#include "adiabat/errors.hpp"

namespace adiabat {

int AdditiveEntropyRelation::add_node(const std::string& name, double entropy,
                                      bool is_equilibrium) {
  for (const auto& n : nodes_) {
    if (n.name == name) throw ModelError("duplicate node name '" + name + "'");
  }
  if (!std::isfinite(entropy)) throw ModelError("node entropy must be finite");
  const int index = node_count();
  StatePoint s{space_id_, {static_cast<double>(index)}, is_equilibrium};
  nodes_.push_back(Node{name, std::move(s), entropy});
  return index;
}

int AdditiveEntropyRelation::index_of(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[static_cast<std::size_t>(i)].name == name) return i;
  }
  throw ModelError("unknown node '" + name + "'");
}

int AdditiveEntropyRelation::resolve(const StatePoint& s) const {
  if (s.space_id != space_id_) {
    throw ModelError("state from space '" + s.space_id + "' queried against space '" +
                     space_id_ + "'");
  }
  for (int i = 0; i < node_count(); ++i) {
    if (approx_equal(nodes_[static_cast<std::size_t>(i)].state, s)) return i;
  }
  throw ModelError("state " + to_string(s) + " is not a node of space '" + space_id_ + "'");
}

double AdditiveEntropyRelation::entropy_of(const CompoundState& s) const {
  if (s.parts.empty()) throw ModelError("empty compound state");
  double total = 0.0;
  for (const auto& p : s.parts) {
    if (!(p.scale > 0.0)) throw ModelError("compound part has non-positive scale");
    total += p.scale * nodes_[static_cast<std::size_t>(resolve(p.state))].entropy;
  }
  return total;
}

bool AdditiveEntropyRelation::precedes(const CompoundState& from, const CompoundState& to) const {
  return entropy_of(from) <= entropy_of(to) + kCoordTol;
}

std::vector<StatePoint> AdditiveEntropyRelation::enumerable_states() const {
  std::vector<StatePoint> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.state);
  return out;
}

}  // namespace adiabat
