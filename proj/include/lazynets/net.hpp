#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lazynets {

using NodeId = std::uint32_t;
using BoxId = std::uint32_t;

inline constexpr NodeId kNoNode = 0xffffffffu;

// The twelve node labels. BoxPrincipal/BoxAux are the two box doors
// (the R!/L! nodes); every other label is an ordinary proof-net node.
enum class NodeLabel : std::uint8_t {
  P,             // premise
  C,             // conclusion
  W,             // weakening
  X,             // contraction
  D,             // dereliction
  N,             // digging
  RImp,          // abstraction
  LImp,          // application
  RTens,         // pair
  LTens,         // pair split
  BoxPrincipal,  // principal box door
  BoxAux,        // auxiliary box door
};

// Port/arity table.
//   P      1  principal 0
//   C      1  principal 0
//   W      1  principal 0 (faces a box principal)
//   X      3  principal 0 faces supplier; 1,2 the two shared uses
//   D      2  principal 0 faces supplier; 1 continues
//   N      2  principal 0 faces supplier; 1 continues
//   RImp   3  0 bound premise, 1 body, principal 2 conclusion
//   LImp   3  principal 0 function, 1 argument, 2 result
//   RTens  3  0,1 components, principal 2
//   LTens  3  principal 0, 1,2 components
//   BoxPrincipal 2  0 inside, principal 1 outside
//   BoxAux       2  0 outside (not principal), principal 1 inside
int arity(NodeLabel label);
int principalPort(NodeLabel label);
const char* labelToken(NodeLabel label);
std::optional<NodeLabel> labelFromToken(std::string_view token);

struct Port {
  NodeId node = kNoNode;
  int index = 0;
  auto operator<=>(const Port&) const = default;
};

// An edge between two ports, stored with the smaller endpoint first.
struct Edge {
  Port a, b;
  Edge() = default;
  Edge(Port x, Port y) {
    if (y < x) std::swap(x, y);
    a = x;
    b = y;
  }
  auto operator<=>(const Edge&) const = default;
};

struct BoxRecord {
  NodeId principal = kNoNode;
  std::vector<NodeId> aux;     // ordered
  std::set<NodeId> content;    // every node inside, including nested doors
};

struct NetMeasure {
  std::size_t size = 0;  // node count, |G|
  int depth = 0;         // max box nesting over nodes
  bool operator==(const NetMeasure&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

struct NetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Port/edge graph with a nesting tree of boxes and an ordered interface.
// Value type: rewrites copy and mutate privately.
class ProofNet {
 public:
  std::map<NodeId, NodeLabel> nodes;
  std::map<Port, Port> edges;  // stored in both directions
  std::map<BoxId, BoxRecord> boxes;
  std::vector<NodeId> premises;  // ordered P nodes
  NodeId conclusion = kNoNode;   // the single C node
  NodeId next_node = 0;
  BoxId next_box = 0;

  NodeId addNode(NodeLabel label);
  NodeLabel labelOf(NodeId id) const;
  bool hasNode(NodeId id) const { return nodes.count(id) != 0; }

  std::optional<Port> peer(Port p) const;
  Port peerOf(Port p) const;  // throws if dangling
  void connect(Port a, Port b);
  void disconnect(Port p);

  // Removes the node and its edges; caller maintains box records/interface.
  void removeNode(NodeId id);

  int depthOf(NodeId id) const;
  // Boxes containing the node, outermost first.
  std::vector<BoxId> boxesContaining(NodeId id) const;
  std::optional<BoxId> innermostBoxOf(NodeId id) const;
  std::optional<BoxId> boxOfPrincipalDoor(NodeId id) const;
  std::optional<BoxId> boxOfAuxDoor(NodeId id) const;

  // The box level a port lives at: for door nodes the two ports straddle
  // the border, for every other node both ports share the node's level.
  std::optional<BoxId> portContext(Port p) const;

  std::vector<Edge> allEdges() const;
};

ValidationReport validate(const ProofNet& net);
NetMeasure measure(const ProofNet& net);

// Exact isomorphism: label-, port-, box-, and interface-preserving.
bool isomorphic(const ProofNet& a, const ProofNet& b);

// Canonical renumbering key; equal keys iff isomorphic.
std::string canonicalKey(const ProofNet& net);

}  // namespace lazynets
