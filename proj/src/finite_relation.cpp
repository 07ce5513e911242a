#include "adiabat/finite_relation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "adiabat/errors.hpp"

namespace adiabat {

int FiniteRelation::add_node(const std::string& name, bool is_equilibrium,
                             std::vector<double> coords, std::optional<double> entropy) {
  for (const auto& n : nodes_) {
    if (n.name == name) throw ModelError("duplicate node name '" + name + "'");
  }
  const int index = node_count();
  if (coords.empty()) coords = {static_cast<double>(index)};
  StatePoint s{space_id_, std::move(coords), is_equilibrium};
  s.validate();
  if (!nodes_.empty() && s.coords.size() != nodes_.front().state.coords.size()) {
    throw ModelError("node '" + name + "' has mismatched coordinate dimension");
  }
  nodes_.push_back(Node{name, std::move(s), entropy});

  // Grow the matrix to (n+1) x (n+1), preserving old entries.
  const std::size_t n = nodes_.size();
  std::vector<char> grown(n * n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) grown[i * n + j] = matrix_[i * (n - 1) + j];
  }
  matrix_ = std::move(grown);
  closed_ = false;
  return index;
}

void FiniteRelation::add_edge(const std::string& from, const std::string& to) {
  add_edge(index_of(from), index_of(to));
}

void FiniteRelation::add_edge(int from, int to) {
  matrix_.at(idx(from, to)) = 1;
  closed_ = false;
}

void FiniteRelation::remove_edge(int from, int to) {
  matrix_.at(idx(from, to)) = 0;
  closed_ = false;
}

int FiniteRelation::index_of(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[static_cast<std::size_t>(i)].name == name) return i;
  }
  throw ModelError("unknown node '" + name + "'");
}

int FiniteRelation::resolve(const StatePoint& s) const {
  if (s.space_id != space_id_) {
    throw ModelError("state from space '" + s.space_id + "' queried against space '" +
                     space_id_ + "'");
  }
  if (!nodes_.empty() && s.coords.size() != nodes_.front().state.coords.size()) {
    throw ModelError("dimension mismatch in space '" + space_id_ + "'");
  }
  for (int i = 0; i < node_count(); ++i) {
    if (approx_equal(nodes_[static_cast<std::size_t>(i)].state, s)) return i;
  }
  throw ModelError("state " + to_string(s) + " is not a node of space '" + space_id_ + "'");
}

bool FiniteRelation::is_reflexive() const {
  for (int i = 0; i < node_count(); ++i) {
    if (!edge(i, i)) return false;
  }
  return true;
}

bool FiniteRelation::is_transitive() const {
  const int n = node_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!edge(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (edge(j, k) && !edge(i, k)) return false;
      }
    }
  }
  return true;
}

namespace {

// Tries to match every part of `a` with a distinct part of `b` of equal
// scale such that the matched nodes are related componentwise.
bool match_parts(const FiniteRelation& r, const std::vector<std::pair<double, int>>& a,
                 std::vector<std::pair<double, int>>& b, std::vector<char>& used,
                 std::size_t next) {
  if (next == a.size()) return true;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    if (std::abs(a[next].first - b[j].first) > kCoordTol) continue;
    if (!r.edge(a[next].second, b[j].second)) continue;
    used[j] = 1;
    if (match_parts(r, a, b, used, next + 1)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool FiniteRelation::precedes(const CompoundState& from, const CompoundState& to) const {
  if (from.parts.empty() || to.parts.empty()) throw ModelError("empty compound state");
  if (from.parts.size() != to.parts.size()) {
    throw ModelError("finite relation cannot decide a query between compounds of " +
                     std::to_string(from.parts.size()) + " and " +
                     std::to_string(to.parts.size()) + " parts");
  }
  std::vector<std::pair<double, int>> lhs, rhs;
  lhs.reserve(from.parts.size());
  rhs.reserve(to.parts.size());
  for (const auto& p : from.parts) lhs.emplace_back(p.scale, resolve(p.state));
  for (const auto& p : to.parts) rhs.emplace_back(p.scale, resolve(p.state));

  // Scale multisets must agree, otherwise no alignment exists.
  auto scales_of = [](const std::vector<std::pair<double, int>>& v) {
    std::vector<double> s;
    for (const auto& [sc, n] : v) s.push_back(sc);
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto sl = scales_of(lhs), sr = scales_of(rhs);
  for (std::size_t i = 0; i < sl.size(); ++i) {
    if (std::abs(sl[i] - sr[i]) > kCoordTol) {
      throw ModelError("finite relation cannot decide a query with unmatched part scales");
    }
  }

  std::vector<char> used(rhs.size(), 0);
  return match_parts(*this, lhs, rhs, used, 0);
}

std::vector<StatePoint> FiniteRelation::enumerable_states() const {
  std::vector<StatePoint> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.state);
  return out;
}

FiniteRelation transitive_reflexive_closure(const FiniteRelation& r) {
  FiniteRelation out = r;
  const int n = out.node_count();
  for (int i = 0; i < n; ++i) out.add_edge(i, i);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!out.edge(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (out.edge(k, j)) out.add_edge(i, j);
      }
    }
  }
  out.mark_closed(true);
  return out;
}

FiniteRelation load_edge_list(std::istream& in, const std::string& space_id) {
  FiniteRelation r(space_id);
  std::string line;
  int lineno = 0;
  std::vector<std::pair<std::string, std::string>> pending_edges;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "node") {
      std::string name, kind;
      if (!(ls >> name >> kind) || (kind != "eq" && kind != "noneq")) {
        throw ConfigError("line " + std::to_string(lineno) +
                          ": expected 'node NAME eq|noneq [coords...] [s=VAL]'");
      }
      std::vector<double> coords;
      std::optional<double> entropy;
      std::string tok;
      while (ls >> tok) {
        if (tok.rfind("s=", 0) == 0) {
          try {
            entropy = std::stod(tok.substr(2));
          } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad entropy value '" + tok + "'");
          }
        } else {
          try {
            coords.push_back(std::stod(tok));
          } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad coordinate '" + tok + "'");
          }
        }
      }
      r.add_node(name, kind == "eq", std::move(coords), entropy);
    } else {
      std::string to;
      if (!(ls >> to)) {
        throw ConfigError("line " + std::to_string(lineno) + ": expected 'FROM TO'");
      }
      std::string extra;
      if (ls >> extra) {
        throw ConfigError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
      }
      pending_edges.emplace_back(first, to);
    }
  }
  for (const auto& [f, t] : pending_edges) {
    try {
      r.add_edge(f, t);
    } catch (const ModelError& e) {
      throw ConfigError(std::string("edge list: ") + e.what());
    }
  }
  return r;
}

FiniteRelation load_edge_list_file(const std::string& path, const std::string& space_id) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open relation file '" + path + "'");
  return load_edge_list(in, space_id);
}

}  // namespace adiabat
