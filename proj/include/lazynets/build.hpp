#pragma once

#include "lazynets/net.hpp"

namespace lazynets {

// Incremental net construction following the formation rules. Nodes created
// while boxes are open are recorded as content of every open box; door nodes
// are placed at the border automatically.
class NetAssembler {
 public:
  NodeId node(NodeLabel label);
  void edge(NodeId a, int pa, NodeId b, int pb);
  void edge(Port a, Port b);

  // Opens a box: creates its principal door and pushes it on the box stack.
  BoxId openBox();
  // Adds an auxiliary door to the innermost open box; returns its id
  // (port 0 faces outside, port 1 inside).
  NodeId auxDoor();
  // Closes the innermost open box, wiring the content conclusion to the
  // principal door's inside port. Returns the door's outside port.
  Port closeBox(Port contentConclusion);

  NodeId premise();          // adds a P node to the interface
  void conclude(Port from);  // adds the C node wired to `from`

  ProofNet& net() { return net_; }
  ProofNet take();

 private:
  ProofNet net_;
  std::vector<BoxId> open_;
};

}  // namespace lazynets
