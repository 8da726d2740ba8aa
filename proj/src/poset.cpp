#include "localmodel/poset.hpp"

#include "localmodel/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace localmodel {

namespace {

StrataPoset make_nodes(int n, int r, std::vector<Alcove> alcoves) {
  StrataPoset p;
  p.n = n;
  p.r = r;
  p.nodes.reserve(alcoves.size());
  for (auto& a : alcoves) {
    auto w = relative_position(a, r);
    const int len = length(w);
    p.nodes.push_back({std::move(a), std::move(w), len});
  }
  return p;
}

std::vector<std::pair<int, int>> covers_below(const StrataPoset& p,
                                              const std::map<AffinePermutation, int>& index, int hi) {
  std::vector<std::pair<int, int>> out;
  for (const auto& u : lower_covers(p.nodes[static_cast<std::size_t>(hi)].position)) {
    auto it = index.find(u);
    if (it == index.end())
      throw ComputationError("admissible set is not closed under Bruhat covers at " + u.to_string());
    out.emplace_back(it->second, hi);
  }
  return out;
}

void finish(StrataPoset& p, std::vector<std::vector<std::pair<int, int>>> per_node) {
  for (auto& part : per_node) std::move(part.begin(), part.end(), std::back_inserter(p.covers));
  std::sort(p.covers.begin(), p.covers.end());
  std::vector<bool> has_upper(p.nodes.size(), false);
  for (auto [lo, hi] : p.covers) has_upper[static_cast<std::size_t>(lo)] = true;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (p.nodes[i].length == 0) {
      if (p.bottom >= 0) throw ComputationError("more than one length-zero stratum");
      p.bottom = static_cast<int>(i);
    }
    if (!has_upper[i]) p.tops.push_back(static_cast<int>(i));
  }
}

std::map<AffinePermutation, int> index_of(const StrataPoset& p) {
  std::map<AffinePermutation, int> index;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) index.emplace(p.nodes[i].position, static_cast<int>(i));
  return index;
}

nlohmann::json profile_json(const Alcove& a) {
  nlohmann::json rows = nlohmann::json::array();
  const TypeProfile t = profile_of(a);
  for (const auto& row : t.rows()) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto v : row) jr.push_back(int(v));
    rows.push_back(jr);
  }
  return rows;
}

} // namespace

StrataPoset strata_poset_serial(int n, int r) {
  StrataPoset p = make_nodes(n, r, enumerate_admissible_serial(n, r));
  const auto index = index_of(p);
  std::vector<std::vector<std::pair<int, int>>> per_node(p.nodes.size());
  for (std::size_t hi = 0; hi < p.nodes.size(); ++hi) per_node[hi] = covers_below(p, index, static_cast<int>(hi));
  finish(p, std::move(per_node));
  return p;
}

StrataPoset strata_poset(int n, int r) {
  StrataPoset p = make_nodes(n, r, enumerate_admissible(n, r));
  const auto index = index_of(p);
  std::vector<std::vector<std::pair<int, int>>> per_node(p.nodes.size());
  const auto count = static_cast<std::ptrdiff_t>(p.nodes.size());
  bool closed = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : closed)
  for (std::ptrdiff_t hi = 0; hi < count; ++hi) {
    try {
      per_node[static_cast<std::size_t>(hi)] = covers_below(p, index, static_cast<int>(hi));
    } catch (const ComputationError&) {
      closed = false;
    }
  }
  if (!closed) throw ComputationError("admissible set is not closed under Bruhat covers");
  finish(p, std::move(per_node));
  return p;
}

std::string poset_to_json(const StrataPoset& p) {
  nlohmann::json doc;
  doc["n"] = p.n;
  doc["r"] = p.r;
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    nodes.push_back({{"id", i}, {"profile", profile_json(p.nodes[i].alcove)}, {"length", p.nodes[i].length}});
  doc["nodes"] = std::move(nodes);
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : p.covers) covers.push_back({lo, hi});
  doc["covers"] = std::move(covers);
  doc["bottom"] = p.bottom;
  doc["tops"] = p.tops;
  return doc.dump(2) + "\n";
}

std::string poset_to_dot(const StrataPoset& p) {
  std::ostringstream os;
  os << "digraph strata_n" << p.n << "_r" << p.r << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    os << "  n" << i << " [label=\"l=" << p.nodes[i].length << "\"];\n";
  for (auto [lo, hi] : p.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string alcoves_to_json(int n, int r, const std::vector<Alcove>& alcoves) {
  nlohmann::json doc;
  doc["n"] = n;
  doc["r"] = r;
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < alcoves.size(); ++i)
    list.push_back({{"id", i}, {"profile", profile_json(alcoves[i])}, {"rows", alcoves[i].rows()}});
  doc["alcoves"] = std::move(list);
  return doc.dump(2) + "\n";
}

} // namespace localmodel
