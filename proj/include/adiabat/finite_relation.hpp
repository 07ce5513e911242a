#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adiabat/relation.hpp"

namespace adiabat {

/// An explicit finite relation: a list of named nodes and a boolean
/// accessibility matrix. Compound queries are decided by the relation
/// the base matrix generates under consistency (A3): a query holds iff
/// the parts of both sides can be matched one-to-one with equal scales
/// and componentwise accessibility. Queries that cannot be aligned that
/// way (for example a scaled product against a single node) are
/// undecidable here and throw.
class FiniteRelation : public RelationModel {
 public:
  struct Node {
    std::string name;
    StatePoint state;
    std::optional<double> declared_entropy;  // optional S value on equilibrium nodes
  };

  explicit FiniteRelation(std::string space_id) : space_id_(std::move(space_id)) {}

  /// Adds a node; coords default to {index}. Returns the node index.
  int add_node(const std::string& name, bool is_equilibrium,
               std::vector<double> coords = {},
               std::optional<double> entropy = std::nullopt);

  /// Adds a directed edge by node name or index. Clears the closure flag.
  void add_edge(const std::string& from, const std::string& to);
  void add_edge(int from, int to);
  void remove_edge(int from, int to);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }
  const std::string& space_id() const { return space_id_; }

  /// Index lookup by name; throws ModelError if absent.
  int index_of(const std::string& name) const;

  /// Resolves a StatePoint to its node by space id and coordinates.
  int resolve(const StatePoint& s) const;

  bool edge(int from, int to) const { return matrix_[idx(from, to)] != 0; }

  /// Whether the reflexive-transitive closure has been applied.
  bool closed() const { return closed_; }
  void mark_closed(bool v) { closed_ = v; }

  bool is_reflexive() const;
  bool is_transitive() const;

  bool precedes(const CompoundState& from, const CompoundState& to) const override;
  using RelationModel::precedes;

  bool supports_composition() const override { return true; }
  std::vector<StatePoint> enumerable_states() const override;

 private:
  std::size_t idx(int from, int to) const {
    return static_cast<std::size_t>(from) * nodes_.size() + static_cast<std::size_t>(to);
  }

  std::string space_id_;
  std::vector<Node> nodes_;
  std::vector<char> matrix_;
  bool closed_ = false;
};

/// Smallest reflexive-transitive superset of the input relation.
/// Idempotent and extensive.
FiniteRelation transitive_reflexive_closure(const FiniteRelation& r);

/// Loads a relation from the plain-text edge-list format:
///   # comment
///   node NAME eq|noneq [coord ...] [s=VALUE]
///   FROM TO
/// Closure is NOT applied by the loader.
FiniteRelation load_edge_list(std::istream& in, const std::string& space_id = "finite");
FiniteRelation load_edge_list_file(const std::string& path, const std::string& space_id = "finite");

}  // namespace adiabat
