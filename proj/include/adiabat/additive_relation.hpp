#pragma once

#include <string>
#include <vector>

#include "adiabat/relation.hpp"

namespace adiabat {

/// A finite model whose accessibility relation on arbitrary scaled
/// products is generated by a declared additive, extensive entropy:
/// A precedes B iff S(A) <= S(B), with S(lambda X) = lambda S(X) and
/// S((A, B)) = S(A) + S(B). This is the scaled-product-capable finite
/// variant; it satisfies the comparison property by construction and is
/// the reference workload for entropy reconstruction.
class AdditiveEntropyRelation : public RelationModel {
 public:
  explicit AdditiveEntropyRelation(std::string space_id) : space_id_(std::move(space_id)) {}

  /// Adds a node with its generating entropy value. Returns the index.
  int add_node(const std::string& name, double entropy, bool is_equilibrium = true);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const StatePoint& state(int i) const { return nodes_.at(static_cast<std::size_t>(i)).state; }
  const std::string& name(int i) const { return nodes_.at(static_cast<std::size_t>(i)).name; }
  double entropy(int i) const { return nodes_.at(static_cast<std::size_t>(i)).entropy; }
  const std::string& space_id() const { return space_id_; }
  int index_of(const std::string& name) const;

  /// Generating entropy of an arbitrary scaled compound over this model.
  double entropy_of(const CompoundState& s) const;

  bool precedes(const CompoundState& from, const CompoundState& to) const override;
  using RelationModel::precedes;

  bool supports_scaling() const override { return true; }
  bool supports_composition() const override { return true; }
  std::vector<StatePoint> enumerable_states() const override;

 private:
  struct Node {
    std::string name;
    StatePoint state;
    double entropy;
  };

  int resolve(const StatePoint& s) const;

  std::string space_id_;
  std::vector<Node> nodes_;
};

}  // namespace adiabat
