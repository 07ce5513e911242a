#pragma once

#include <string>
#include <vector>

#include "adiabat/kvtree.hpp"
#include "adiabat/relation.hpp"
#include "adiabat/state.hpp"

namespace adiabat {

enum class CheckStatus { pass, fail, not_applicable };

std::string to_string(CheckStatus s);

/// An elementary accessibility claim: lhs precedes rhs.
struct Claim {
  CompoundState lhs;
  CompoundState rhs;
};

/// A reproducible counterexample. The violation is: every premise claim
/// holds under the model, yet none of the conclusion claims does.
/// An empty premise list means the conclusions alone are violated.
struct ViolationWitness {
  std::vector<Claim> premises;
  std::vector<Claim> conclusion_any;
  std::string note;
};

/// Re-evaluates a witness against the model; true when it still
/// demonstrates the violation.
bool witness_still_violates(const RelationModel& m, const ViolationWitness& w);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  long checked = 0;  // number of instances evaluated
  std::vector<ViolationWitness> witnesses;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  CheckRecord& add(const std::string& name);
  const CheckRecord* find(const std::string& name) const;
  bool all_passed() const;  // no record has status fail
  long failure_count() const;

  /// One line per check: name, status, witness coordinates.
  std::string to_text() const;

  /// Flattens into `prefix.<check>.status` etc. for the summary file.
  void append_kv(KvTree& kv, const std::string& prefix) const;
};

/// Marks a record failed and stores a witness (keeps at most `cap`).
void record_failure(CheckRecord& rec, ViolationWitness w, std::size_t cap = 5);

}  // namespace adiabat
