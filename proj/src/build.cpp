#include "lazynets/build.hpp"

namespace lazynets {

NodeId NetAssembler::node(NodeLabel label) {
  NodeId id = net_.addNode(label);
  for (BoxId b : open_) net_.boxes[b].content.insert(id);
  return id;
}

void NetAssembler::edge(NodeId a, int pa, NodeId b, int pb) {
  net_.connect(Port{a, pa}, Port{b, pb});
}

void NetAssembler::edge(Port a, Port b) { net_.connect(a, b); }

BoxId NetAssembler::openBox() {
  NodeId pd = net_.addNode(NodeLabel::BoxPrincipal);
  for (BoxId b : open_) net_.boxes[b].content.insert(pd);
  BoxId id = net_.next_box++;
  net_.boxes[id] = BoxRecord{pd, {}, {}};
  open_.push_back(id);
  return id;
}

NodeId NetAssembler::auxDoor() {
  if (open_.empty()) throw NetError("auxDoor outside any open box");
  NodeId door = net_.addNode(NodeLabel::BoxAux);
  // The door sits at the border: content of the outer boxes only.
  for (std::size_t i = 0; i + 1 < open_.size(); ++i)
    net_.boxes[open_[i]].content.insert(door);
  net_.boxes[open_.back()].aux.push_back(door);
  return door;
}

Port NetAssembler::closeBox(Port contentConclusion) {
  if (open_.empty()) throw NetError("closeBox without open box");
  BoxId id = open_.back();
  open_.pop_back();
  NodeId pd = net_.boxes[id].principal;
  net_.connect(Port{pd, 0}, contentConclusion);
  return Port{pd, 1};
}

NodeId NetAssembler::premise() {
  NodeId p = node(NodeLabel::P);
  net_.premises.push_back(p);
  return p;
}

void NetAssembler::conclude(Port from) {
  NodeId c = node(NodeLabel::C);
  net_.connect(Port{c, 0}, from);
  net_.conclusion = c;
}

ProofNet NetAssembler::take() {
  if (!open_.empty()) throw NetError("unclosed box at take()");
  return std::move(net_);
}

}  // namespace lazynets
