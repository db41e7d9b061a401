// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/network.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace survnet {

namespace {

// Strict base-10 parse of a whole token; rejects trailing garbage.
long long parse_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw ParseError(line, "bad integer '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer '" + tok + "'");
  }
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

const NodeInfo& Network::info(NodeId id) const {
  auto it = nodes_.find(id);
  if (it == nodes_.end()) throw UnknownNode(id);
  return it->second;
}

void Network::set_cluster_count(int constituent, int count) {
  if (constituent != 1 && constituent != 2)
    throw Error("constituent must be 1 or 2");
  if (count < 1) throw Error("cluster count must be >= 1");
  gamma_[constituent - 1] = count;
}

int Network::cluster_count(int constituent) const {
  if (constituent != 1 && constituent != 2)
    throw Error("constituent must be 1 or 2");
  return gamma_[constituent - 1];
}

void Network::add_node(NodeId id, int constituent, int cluster,
                       std::set<int> supports) {
  if (constituent != 1 && constituent != 2)
    throw Error("constituent must be 1 or 2");
  if (nodes_.count(id))
    throw Error("node " + std::to_string(id) + " already exists");
  NodeInfo ni;
  ni.constituent = constituent;
  ni.cluster = cluster;
  ni.supports = std::move(supports);
  nodes_.emplace(id, std::move(ni));
  out_.emplace(id, std::vector<NodeId>{});
  in_degree_.emplace(id, 0);
}

ArcRef Network::add_arc(NodeId source, NodeId dest) {
  if (!has_node(source)) throw UnknownNode(source);
  if (!has_node(dest)) throw UnknownNode(dest);
  if (has_arc(source, dest))
    throw Error("duplicate arc (" + std::to_string(source) + "," +
                std::to_string(dest) + ")");
  auto& dests = out_[source];
  dests.push_back(dest);
  std::uint32_t index = static_cast<std::uint32_t>(dests.size());
  arc_index_[{source, dest}] = index;
  ++in_degree_[dest];
  return ArcRef{source, index};
}

void Network::relocate_arc(const ArcRef& arc, NodeId new_dest) {
  if (!has_node(arc.source)) throw UnknownNode(arc.source);
  auto& dests = out_.at(arc.source);
  if (arc.index < 1 || arc.index > dests.size())
    throw Error("no arc " + to_string(arc));
  NodeId old_dest = dests[arc.index - 1];
  if (new_dest == old_dest) return;
  if (!has_node(new_dest)) throw UnknownNode(new_dest);
  if (has_arc(arc.source, new_dest))
    throw Error("relocation would duplicate arc (" +
                std::to_string(arc.source) + "," + std::to_string(new_dest) +
                ")");
  dests[arc.index - 1] = new_dest;
  arc_index_.erase({arc.source, old_dest});
  arc_index_[{arc.source, new_dest}] = arc.index;
  --in_degree_[old_dest];
  ++in_degree_[new_dest];
}

std::optional<ArcRef> Network::find_arc(NodeId source, NodeId dest) const {
  auto it = arc_index_.find({source, dest});
  if (it == arc_index_.end()) return std::nullopt;
  return ArcRef{source, it->second};
}

NodeId Network::arc_dest(const ArcRef& arc) const {
  auto it = out_.find(arc.source);
  if (it == out_.end()) throw UnknownNode(arc.source);
  if (arc.index < 1 || arc.index > it->second.size())
    throw Error("no arc " + to_string(arc));
  return it->second[arc.index - 1];
}

int Network::degree_in(NodeId id) const {
  auto it = in_degree_.find(id);
  if (it == in_degree_.end()) throw UnknownNode(id);
  return it->second;
}

int Network::degree_out(NodeId id) const {
  auto it = out_.find(id);
  if (it == out_.end()) throw UnknownNode(id);
  return static_cast<int>(it->second.size());
}

bool Network::cluster_legal(NodeId source, NodeId dest) const {
  return info(source).supports.count(info(dest).cluster) != 0;
}

std::vector<NodeId> Network::node_ids() const {
  std::vector<NodeId> out;
  out.reserve(nodes_.size());
  for (const auto& [id, ni] : nodes_) out.push_back(id);
  return out;
}

std::vector<NodeId> Network::constituent_nodes(int constituent) const {
  std::vector<NodeId> out;
  for (const auto& [id, ni] : nodes_)
    if (ni.constituent == constituent) out.push_back(id);
  return out;
}

std::vector<std::pair<ArcRef, NodeId>> Network::arcs() const {
  std::vector<std::pair<ArcRef, NodeId>> out;
  out.reserve(arc_index_.size());
  for (const auto& [src, dests] : out_)
    for (std::uint32_t m = 1; m <= dests.size(); ++m)
      out.push_back({ArcRef{src, m}, dests[m - 1]});
  return out;
}

const std::vector<NodeId>& Network::out_dests(NodeId id) const {
  auto it = out_.find(id);
  if (it == out_.end()) throw UnknownNode(id);
  return it->second;
}

std::vector<ArcRef> Network::in_arcs(NodeId id) const {
  if (!has_node(id)) throw UnknownNode(id);
  std::vector<ArcRef> out;
  for (const auto& [src, dests] : out_)
    for (std::uint32_t m = 1; m <= dests.size(); ++m)
      if (dests[m - 1] == id) out.push_back(ArcRef{src, m});
  return out;
}

std::vector<NodeId> Network::in_neighbors(NodeId id) const {
  if (!has_node(id)) throw UnknownNode(id);
  std::vector<NodeId> out;
  for (const auto& [src, dests] : out_)
    for (NodeId d : dests)
      if (d == id) {
        out.push_back(src);
        break;
      }
  return out;
}

ConstituentSummary Network::constituent_summary() const {
  ConstituentSummary s;
  for (const auto& [id, ni] : nodes_) {
    auto& side = s.side[ni.constituent - 1];
    ++side.node_count;
    side.clusters[ni.cluster].push_back(id);
    if (!out_.at(id).empty()) ++side.supporting_count;
  }
  int a = s.side[0].supporting_count;
  int b = s.side[1].supporting_count;
  s.minimum_supporting_side = (b < a) ? 2 : 1;
  s.supporting_tie = (a == b);
  return s;
}

std::string Network::to_text() const {
  std::ostringstream os;
  os << "k=2 gamma1=" << gamma_[0] << " gamma2=" << gamma_[1] << "\n";
  for (const auto& [id, ni] : nodes_) {
    os << "node " << id << " " << ni.constituent << " " << ni.cluster
       << " supports=";
    bool first = true;
    for (int c : ni.supports) {
      if (!first) os << ",";
      os << c;
      first = false;
    }
    os << "\n";
  }
  for (const auto& [src, dests] : out_)
    for (NodeId d : dests) os << "arc " << src << " " << d << "\n";
  return os.str();
}

void Network::save(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << to_text();
  if (!f) throw IoError("write to '" + path + "' failed");
}

Network Network::from_text(const std::string& text) {
  Network g;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (!header_seen) {
      if (toks.size() != 3 || toks[0].rfind("k=", 0) != 0 ||
          toks[1].rfind("gamma1=", 0) != 0 || toks[2].rfind("gamma2=", 0) != 0)
        throw ParseError(lineno, "expected header 'k=2 gamma1=* gamma2=*'");
      if (parse_int(toks[0].substr(2), lineno) != 2)
        throw ParseError(lineno, "only k=2 networks are supported");
      g.set_cluster_count(
          1, static_cast<int>(parse_int(toks[1].substr(7), lineno)));
      g.set_cluster_count(
          2, static_cast<int>(parse_int(toks[2].substr(7), lineno)));
      header_seen = true;
      continue;
    }
    if (toks[0] == "node") {
      if (toks.size() != 5 || toks[4].rfind("supports=", 0) != 0)
        throw ParseError(lineno,
                         "expected 'node <id> <constituent> <cluster> "
                         "supports=<list>'");
      NodeId id = static_cast<NodeId>(parse_int(toks[1], lineno));
      int constituent = static_cast<int>(parse_int(toks[2], lineno));
      int cluster = static_cast<int>(parse_int(toks[3], lineno));
      std::set<int> sup;
      std::string list = toks[4].substr(9);
      std::size_t pos = 0;
      while (pos <= list.size() && !list.empty()) {
        std::size_t comma = list.find(',', pos);
        std::string item = list.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw ParseError(lineno, "empty supports entry");
        sup.insert(static_cast<int>(parse_int(item, lineno)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (constituent != 1 && constituent != 2)
        throw ParseError(lineno, "constituent must be 1 or 2");
      if (g.has_node(id))
        throw ParseError(lineno, "duplicate node " + std::to_string(id));
      g.add_node(id, constituent, cluster, std::move(sup));
      continue;
    }
    if (toks[0] == "arc") {
      if (toks.size() != 3)
        throw ParseError(lineno, "expected 'arc <source> <dest>'");
      NodeId src = static_cast<NodeId>(parse_int(toks[1], lineno));
      NodeId dst = static_cast<NodeId>(parse_int(toks[2], lineno));
      if (!g.has_node(src))
        throw ParseError(lineno, "arc from unknown node " + toks[1]);
      if (!g.has_node(dst))
        throw ParseError(lineno, "arc to unknown node " + toks[2]);
      if (g.has_arc(src, dst))
        throw ParseError(lineno,
                         "duplicate arc (" + toks[1] + "," + toks[2] + ")");
      g.add_arc(src, dst);
      continue;
    }
    throw ParseError(lineno, "unrecognized record '" + toks[0] + "'");
  }
  if (!header_seen) throw ParseError(lineno, "missing header line");
  return g;
}

Network Network::load(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return from_text(buf.str());
}

}  // namespace survnet
