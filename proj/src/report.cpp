#include "adiabat/report.hpp"

#include <sstream>

namespace adiabat {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not-applicable";
  }
  return "?";
}

bool witness_still_violates(const RelationModel& m, const ViolationWitness& w) {
  for (const auto& c : w.premises) {
    if (!m.precedes(c.lhs, c.rhs)) return false;
  }
  for (const auto& c : w.conclusion_any) {
    if (m.precedes(c.lhs, c.rhs)) return false;
  }
  return true;
}

CheckRecord& CheckReport::add(const std::string& name) {
  records.push_back(CheckRecord{name});
  return records.back();
}

const CheckRecord* CheckReport::find(const std::string& name) const {
  for (const auto& r : records) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool CheckReport::all_passed() const { return failure_count() == 0; }

long CheckReport::failure_count() const {
  long n = 0;
  for (const auto& r : records) {
    if (r.status == CheckStatus::fail) ++n;
  }
  return n;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : records) {
    os << r.name << " " << to_string(r.status) << " checked=" << r.checked;
    if (!r.detail.empty()) os << " " << r.detail;
    for (const auto& w : r.witnesses) {
      os << " witness{";
      bool first = true;
      for (const auto& c : w.premises) {
        if (!first) os << "; ";
        first = false;
        os << to_string(c.lhs) << " prec " << to_string(c.rhs);
      }
      for (const auto& c : w.conclusion_any) {
        if (!first) os << "; ";
        first = false;
        os << "NOT " << to_string(c.lhs) << " prec " << to_string(c.rhs);
      }
      if (!w.note.empty()) os << " | " << w.note;
      os << "}";
    }
    os << "\n";
  }
  return os.str();
}

void CheckReport::append_kv(KvTree& kv, const std::string& prefix) const {
  for (const auto& r : records) {
    const std::string base = prefix + "." + r.name;
    kv.set(base + ".status", to_string(r.status));
    kv.set(base + ".checked", r.checked);
    if (!r.detail.empty()) kv.set(base + ".detail", r.detail);
    kv.set(base + ".witnesses", static_cast<long>(r.witnesses.size()));
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      const auto& w = r.witnesses[i];
      std::ostringstream os;
      bool first = true;
      for (const auto& c : w.premises) {
        if (!first) os << "; ";
        first = false;
        os << to_string(c.lhs) << " prec " << to_string(c.rhs);
      }
      for (const auto& c : w.conclusion_any) {
        if (!first) os << "; ";
        first = false;
        os << "NOT " << to_string(c.lhs) << " prec " << to_string(c.rhs);
      }
      if (!w.note.empty()) os << " | " << w.note;
      kv.set(base + ".witness." + std::to_string(i), os.str());
    }
  }
}

void record_failure(CheckRecord& rec, ViolationWitness w, std::size_t cap) {
  rec.status = CheckStatus::fail;
  if (rec.witnesses.size() < cap) rec.witnesses.push_back(std::move(w));
}

}  // namespace adiabat
