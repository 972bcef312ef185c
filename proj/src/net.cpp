#include "lazynets/net.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace lazynets {

int arity(NodeLabel label) {
  switch (label) {
    case NodeLabel::P:
    case NodeLabel::C:
    case NodeLabel::W:
      return 1;
    case NodeLabel::D:
    case NodeLabel::N:
    case NodeLabel::BoxPrincipal:
    case NodeLabel::BoxAux:
      return 2;
    case NodeLabel::X:
    case NodeLabel::RImp:
    case NodeLabel::LImp:
    case NodeLabel::RTens:
    case NodeLabel::LTens:
      return 3;
  }
  return 0;
}

int principalPort(NodeLabel label) {
  switch (label) {
    case NodeLabel::P:
    case NodeLabel::C:
    case NodeLabel::W:
    case NodeLabel::X:
    case NodeLabel::D:
    case NodeLabel::N:
    case NodeLabel::LImp:
    case NodeLabel::LTens:
      return 0;
    case NodeLabel::RImp:
    case NodeLabel::RTens:
      return 2;
    case NodeLabel::BoxPrincipal:
    case NodeLabel::BoxAux:
      return 1;
  }
  return 0;
}

const char* labelToken(NodeLabel label) {
  switch (label) {
    case NodeLabel::P: return "P";
    case NodeLabel::C: return "C";
    case NodeLabel::W: return "W";
    case NodeLabel::X: return "X";
    case NodeLabel::D: return "D";
    case NodeLabel::N: return "N";
    case NodeLabel::RImp: return "Rimp";
    case NodeLabel::LImp: return "Limp";
    case NodeLabel::RTens: return "Rtens";
    case NodeLabel::LTens: return "Ltens";
    case NodeLabel::BoxPrincipal: return "Rbox";
    case NodeLabel::BoxAux: return "Lbox";
  }
  return "?";
}

std::optional<NodeLabel> labelFromToken(std::string_view token) {
  static const std::pair<const char*, NodeLabel> table[] = {
      {"P", NodeLabel::P},         {"C", NodeLabel::C},
      {"W", NodeLabel::W},         {"X", NodeLabel::X},
      {"D", NodeLabel::D},         {"N", NodeLabel::N},
      {"Rimp", NodeLabel::RImp},   {"Limp", NodeLabel::LImp},
      {"Rtens", NodeLabel::RTens}, {"Ltens", NodeLabel::LTens},
      {"Rbox", NodeLabel::BoxPrincipal}, {"Lbox", NodeLabel::BoxAux},
  };
  for (const auto& [tok, lab] : table)
    if (token == tok) return lab;
  return std::nullopt;
}

NodeId ProofNet::addNode(NodeLabel label) {
  NodeId id = next_node++;
  nodes.emplace(id, label);
  return id;
}

NodeLabel ProofNet::labelOf(NodeId id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw NetError("unknown node id");
  return it->second;
}

std::optional<Port> ProofNet::peer(Port p) const {
  auto it = edges.find(p);
  if (it == edges.end()) return std::nullopt;
  return it->second;
}

Port ProofNet::peerOf(Port p) const {
  auto it = edges.find(p);
  if (it == edges.end()) throw NetError("dangling port");
  return it->second;
}

void ProofNet::connect(Port a, Port b) {
  if (a == b) throw NetError("cannot connect a port to itself");
  if (edges.count(a) || edges.count(b)) throw NetError("port already connected");
  edges[a] = b;
  edges[b] = a;
}

void ProofNet::disconnect(Port p) {
  auto it = edges.find(p);
  if (it == edges.end()) return;
  Port q = it->second;
  edges.erase(it);
  edges.erase(q);
}

void ProofNet::removeNode(NodeId id) {
  auto it = nodes.find(id);
  if (it == nodes.end()) return;
  int n = arity(it->second);
  for (int k = 0; k < n; ++k) disconnect(Port{id, k});
  nodes.erase(it);
}

int ProofNet::depthOf(NodeId id) const {
  int d = 0;
  for (const auto& [bid, rec] : boxes)
    if (rec.content.count(id)) ++d;
  return d;
}

std::vector<BoxId> ProofNet::boxesContaining(NodeId id) const {
  std::vector<BoxId> out;
  for (const auto& [bid, rec] : boxes)
    if (rec.content.count(id)) out.push_back(bid);
  // outermost first: larger content sets are further out
  std::sort(out.begin(), out.end(), [&](BoxId x, BoxId y) {
    return boxes.at(x).content.size() > boxes.at(y).content.size();
  });
  return out;
}

std::optional<BoxId> ProofNet::innermostBoxOf(NodeId id) const {
  std::optional<BoxId> best;
  std::size_t best_size = 0;
  for (const auto& [bid, rec] : boxes) {
    if (!rec.content.count(id)) continue;
    if (!best || rec.content.size() < best_size) {
      best = bid;
      best_size = rec.content.size();
    }
  }
  return best;
}

std::optional<BoxId> ProofNet::boxOfPrincipalDoor(NodeId id) const {
  for (const auto& [bid, rec] : boxes)
    if (rec.principal == id) return bid;
  return std::nullopt;
}

std::optional<BoxId> ProofNet::boxOfAuxDoor(NodeId id) const {
  for (const auto& [bid, rec] : boxes)
    for (NodeId a : rec.aux)
      if (a == id) return bid;
  return std::nullopt;
}

std::optional<BoxId> ProofNet::portContext(Port p) const {
  NodeLabel lab = labelOf(p.node);
  if (lab == NodeLabel::BoxPrincipal) {
    auto b = boxOfPrincipalDoor(p.node);
    if (b && p.index == 0) return b;
    return innermostBoxOf(p.node);
  }
  if (lab == NodeLabel::BoxAux) {
    auto b = boxOfAuxDoor(p.node);
    if (b && p.index == 1) return b;
    return innermostBoxOf(p.node);
  }
  return innermostBoxOf(p.node);
}

std::vector<Edge> ProofNet::allEdges() const {
  std::vector<Edge> out;
  for (const auto& [a, b] : edges)
    if (a < b) out.push_back(Edge{a, b});
  return out;
}

namespace {

std::string portStr(Port p) {
  std::ostringstream os;
  os << p.node << ":" << p.index;
  return os.str();
}

}  // namespace

ValidationReport validate(const ProofNet& net) {
  ValidationReport rep;
  auto fail = [&](const std::string& v) {
    rep.ok = false;
    rep.violations.push_back(v);
  };

  // Edge map well-formedness.
  for (const auto& [p, q] : net.edges) {
    if (!net.hasNode(p.node) || !net.hasNode(q.node)) {
      fail("edge references unknown node at " + portStr(p));
      continue;
    }
    if (p.index < 0 || p.index >= arity(net.labelOf(p.node)))
      fail("port index out of range at " + portStr(p));
    auto back = net.edges.find(q);
    if (back == net.edges.end() || !(back->second == p))
      fail("edge map not symmetric at " + portStr(p));
    if (p == q) fail("port connected to itself at " + portStr(p));
  }

  // Every port of every node covered exactly once.
  for (const auto& [id, lab] : net.nodes) {
    for (int k = 0; k < arity(lab); ++k) {
      if (!net.edges.count(Port{id, k})) {
        std::ostringstream os;
        os << "dangling port node=" << id << " port=" << k;
        fail(os.str());
      }
    }
  }

  // Interface: exactly one C, premises are exactly the P nodes.
  std::vector<NodeId> cs, ps;
  for (const auto& [id, lab] : net.nodes) {
    if (lab == NodeLabel::C) cs.push_back(id);
    if (lab == NodeLabel::P) ps.push_back(id);
  }
  if (cs.size() != 1)
    fail("net must have exactly one conclusion node, found " +
         std::to_string(cs.size()));
  else if (net.conclusion != cs[0])
    fail("conclusion field does not name the C node");
  {
    std::set<NodeId> declared(net.premises.begin(), net.premises.end());
    if (declared.size() != net.premises.size())
      fail("duplicate premise entries");
    std::set<NodeId> actual(ps.begin(), ps.end());
    if (declared != actual) fail("premise list does not match the P nodes");
  }

  // Box records.
  std::map<NodeId, int> principal_uses, aux_uses;
  for (const auto& [bid, rec] : net.boxes) {
    if (!net.hasNode(rec.principal) ||
        net.labelOf(rec.principal) != NodeLabel::BoxPrincipal)
      fail("box " + std::to_string(bid) + " principal is not a Rbox node");
    else
      principal_uses[rec.principal]++;
    for (NodeId a : rec.aux) {
      if (!net.hasNode(a) || net.labelOf(a) != NodeLabel::BoxAux)
        fail("box " + std::to_string(bid) + " auxiliary is not a Lbox node");
      else
        aux_uses[a]++;
    }
    if (rec.content.count(rec.principal))
      fail("box " + std::to_string(bid) + " contains its own principal door");
    for (NodeId a : rec.aux)
      if (rec.content.count(a))
        fail("box " + std::to_string(bid) + " contains its own aux door");
    for (NodeId m : rec.content)
      if (!net.hasNode(m))
        fail("box " + std::to_string(bid) + " content references unknown node");
  }
  for (const auto& [id, lab] : net.nodes) {
    if (lab == NodeLabel::BoxPrincipal && principal_uses[id] != 1)
      fail("Rbox node " + std::to_string(id) +
           " must be principal of exactly one box");
    if (lab == NodeLabel::BoxAux && aux_uses[id] != 1)
      fail("Lbox node " + std::to_string(id) +
           " must be auxiliary of exactly one box");
  }

  // Proper nesting: contents pairwise disjoint or nested.
  for (auto it1 = net.boxes.begin(); it1 != net.boxes.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != net.boxes.end(); ++it2) {
      const auto& c1 = it1->second.content;
      const auto& c2 = it2->second.content;
      bool meet = false;
      const auto& small = c1.size() <= c2.size() ? c1 : c2;
      const auto& large = c1.size() <= c2.size() ? c2 : c1;
      bool inside = true;
      for (NodeId m : small) {
        if (large.count(m))
          meet = true;
        else
          inside = false;
      }
      if (meet && !inside)
        fail("boxes " + std::to_string(it1->first) + " and " +
             std::to_string(it2->first) + " overlap without nesting");
    }
  }

  // All doors of a box lie at the same level.
  for (const auto& [bid, rec] : net.boxes) {
    if (!net.hasNode(rec.principal)) continue;
    auto outer = net.boxesContaining(rec.principal);
    for (NodeId a : rec.aux) {
      if (!net.hasNode(a)) continue;
      if (net.boxesContaining(a) != outer)
        fail("doors of box " + std::to_string(bid) +
             " lie at different levels");
    }
    std::set<BoxId> must(outer.begin(), outer.end());
    must.insert(bid);
    for (NodeId m : rec.content) {
      auto inner = net.boxesContaining(m);
      for (BoxId need : must)
        if (std::find(inner.begin(), inner.end(), need) == inner.end())
          fail("content of box " + std::to_string(bid) +
               " escapes an enclosing box");
    }
  }

  // Interface nodes at depth 0.
  for (NodeId id : cs)
    if (net.depthOf(id) != 0) fail("conclusion node inside a box");
  for (NodeId id : ps)
    if (net.depthOf(id) != 0) fail("premise node inside a box");

  // Edges respect box borders.
  for (const auto& [p, q] : net.edges) {
    if (!(p < q)) continue;
    if (!net.hasNode(p.node) || !net.hasNode(q.node)) continue;
    if (net.portContext(p) != net.portContext(q))
      fail("edge crosses a box border: " + portStr(p) + " -- " + portStr(q));
  }

  return rep;
}

NetMeasure measure(const ProofNet& net) {
  NetMeasure m;
  m.size = net.nodes.size();
  m.depth = 0;
  for (const auto& [id, lab] : net.nodes)
    m.depth = std::max(m.depth, net.depthOf(id));
  return m;
}

namespace {

// Deterministic breadth-first numbering used by canonicalKey. Starting from
// the given seeds, assigns consecutive ids following ports in index order.
void bfsAssign(const ProofNet& net, const std::vector<NodeId>& seeds,
               std::map<NodeId, std::uint32_t>& canon,
               std::vector<NodeId>& order) {
  std::deque<NodeId> queue;
  for (NodeId s : seeds) {
    if (canon.count(s)) continue;
    canon[s] = static_cast<std::uint32_t>(order.size());
    order.push_back(s);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    int n = arity(net.labelOf(id));
    for (int k = 0; k < n; ++k) {
      auto q = net.peer(Port{id, k});
      if (!q) continue;
      if (canon.count(q->node)) continue;
      canon[q->node] = static_cast<std::uint32_t>(order.size());
      order.push_back(q->node);
      queue.push_back(q->node);
    }
  }
}

std::string renderCanonical(const ProofNet& net,
                            const std::map<NodeId, std::uint32_t>& canon) {
  std::ostringstream os;
  std::vector<std::pair<std::uint32_t, NodeId>> ordered;
  for (const auto& [id, c] : canon) ordered.emplace_back(c, id);
  std::sort(ordered.begin(), ordered.end());
  for (const auto& [c, id] : ordered)
    os << "n " << c << " " << labelToken(net.labelOf(id)) << "\n";

  std::vector<std::string> boxLines;
  for (const auto& [bid, rec] : net.boxes) {
    std::ostringstream bs;
    bs << "b p=" << canon.at(rec.principal) << " a=";
    std::vector<std::uint32_t> aux;
    for (NodeId a : rec.aux) aux.push_back(canon.at(a));
    std::sort(aux.begin(), aux.end());
    for (std::size_t i = 0; i < aux.size(); ++i)
      bs << (i ? "," : "") << aux[i];
    bs << " c=";
    std::vector<std::uint32_t> content;
    for (NodeId m : rec.content) content.push_back(canon.at(m));
    std::sort(content.begin(), content.end());
    for (std::size_t i = 0; i < content.size(); ++i)
      bs << (i ? "," : "") << content[i];
    boxLines.push_back(bs.str());
  }
  std::sort(boxLines.begin(), boxLines.end());
  for (const auto& l : boxLines) os << l << "\n";

  std::vector<std::pair<std::pair<std::uint32_t, int>,
                        std::pair<std::uint32_t, int>>>
      es;
  for (const auto& [p, q] : net.edges) {
    std::pair<std::uint32_t, int> cp{canon.at(p.node), p.index};
    std::pair<std::uint32_t, int> cq{canon.at(q.node), q.index};
    if (cq < cp) continue;
    es.emplace_back(cp, cq);
  }
  std::sort(es.begin(), es.end());
  for (const auto& [cp, cq] : es)
    os << "e " << cp.first << ":" << cp.second << " " << cq.first << ":"
       << cq.second << "\n";

  os << "i";
  for (NodeId p : net.premises) os << " " << canon.at(p);
  os << "\n";
  if (net.conclusion != kNoNode && canon.count(net.conclusion))
    os << "c " << canon.at(net.conclusion) << "\n";
  return os.str();
}

// Canonical text of a single floating component, minimized over start nodes.
std::pair<std::string, std::vector<NodeId>> canonicalComponent(
    const ProofNet& net, const std::vector<NodeId>& component) {
  std::string best;
  std::vector<NodeId> bestOrder;
  for (NodeId start : component) {
    std::map<NodeId, std::uint32_t> canon;
    std::vector<NodeId> order;
    bfsAssign(net, {start}, canon, order);
    // Render only this component: nodes+edges+boxes fully inside it.
    std::ostringstream os;
    for (std::size_t i = 0; i < order.size(); ++i)
      os << "n " << i << " " << labelToken(net.labelOf(order[i])) << "\n";
    std::vector<std::string> lines;
    for (const auto& [p, q] : net.edges) {
      if (!canon.count(p.node) || !canon.count(q.node)) continue;
      std::pair<std::uint32_t, int> cp{canon.at(p.node), p.index};
      std::pair<std::uint32_t, int> cq{canon.at(q.node), q.index};
      if (cq < cp) continue;
      std::ostringstream es;
      es << "e " << cp.first << ":" << cp.second << " " << cq.first << ":"
         << cq.second;
      lines.push_back(es.str());
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) os << l << "\n";
    std::string text = os.str();
    if (best.empty() || text < best) {
      best = text;
      bestOrder = order;
    }
  }
  return {best, bestOrder};
}

}  // namespace

std::string canonicalKey(const ProofNet& net) {
  std::map<NodeId, std::uint32_t> canon;
  std::vector<NodeId> order;
  std::vector<NodeId> seeds;
  if (net.conclusion != kNoNode && net.hasNode(net.conclusion))
    seeds.push_back(net.conclusion);
  for (NodeId p : net.premises)
    if (net.hasNode(p)) seeds.push_back(p);
  bfsAssign(net, seeds, canon, order);

  // Remaining nodes form floating components (valid nets may contain a box
  // erased against a weakening, detached from the interface).
  std::set<NodeId> remaining;
  for (const auto& [id, lab] : net.nodes)
    if (!canon.count(id)) remaining.insert(id);
  std::vector<std::pair<std::string, std::vector<NodeId>>> comps;
  while (!remaining.empty()) {
    NodeId seed = *remaining.begin();
    std::map<NodeId, std::uint32_t> local;
    std::vector<NodeId> localOrder;
    bfsAssign(net, {seed}, local, localOrder);
    std::vector<NodeId> component = localOrder;
    for (NodeId id : component) remaining.erase(id);
    comps.push_back(canonicalComponent(net, component));
  }
  std::sort(comps.begin(), comps.end());
  for (const auto& [text, compOrder] : comps) {
    for (NodeId id : compOrder) {
      canon[id] = static_cast<std::uint32_t>(order.size());
      order.push_back(id);
    }
  }

  return renderCanonical(net, canon);
}

bool isomorphic(const ProofNet& a, const ProofNet& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  if (a.edges.size() != b.edges.size()) return false;
  if (a.boxes.size() != b.boxes.size()) return false;
  if (a.premises.size() != b.premises.size()) return false;
  return canonicalKey(a) == canonicalKey(b);
}

}  // namespace lazynets
