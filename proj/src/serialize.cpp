#include "lazynets/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace lazynets {

std::string serialize(const ProofNet& net, const std::string& name) {
  auto rep = validate(net);
  if (!rep.ok)
    throw NetError("cannot serialize invalid net: " + rep.violations.front());

  std::ostringstream os;
  os << "net " << name << "\n";
  for (const auto& [id, lab] : net.nodes)
    os << "node " << id << " " << labelToken(lab) << "\n";
  for (const auto& [bid, rec] : net.boxes) {
    os << "box " << bid << " principal=" << rec.principal << " aux=";
    for (std::size_t i = 0; i < rec.aux.size(); ++i)
      os << (i ? "," : "") << rec.aux[i];
    os << " content=";
    std::size_t i = 0;
    for (NodeId m : rec.content) os << (i++ ? "," : "") << m;
    os << "\n";
  }
  auto es = net.allEdges();
  std::sort(es.begin(), es.end());
  for (const Edge& e : es)
    os << "edge " << e.a.node << ":" << e.a.index << " " << e.b.node << ":"
       << e.b.index << "\n";
  for (NodeId p : net.premises) os << "premise " << p << "\n";
  os << "conclusion " << net.conclusion << "\n";
  return os.str();
}

namespace {

struct LineParser {
  const std::string& text;
  std::size_t pos = 0;
  int lineno = 0;
  std::string line;
  std::size_t col = 0;

  explicit LineParser(const std::string& t) : text(t) {}

  bool nextLine() {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++lineno;
      col = 0;
      // strip trailing carriage return
      if (!line.empty() && line.back() == '\r') line.pop_back();
      skipSpace();
      if (col >= line.size() || line[col] == '#') continue;
      return true;
    }
    return false;
  }

  void skipSpace() {
    while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
  }

  bool atEnd() {
    skipSpace();
    return col >= line.size();
  }

  [[noreturn]] void err(const std::string& what) {
    throw ParseError(what, lineno, static_cast<int>(col) + 1);
  }

  std::string token() {
    skipSpace();
    if (col >= line.size()) err("unexpected end of line");
    std::size_t start = col;
    while (col < line.size() && line[col] != ' ' && line[col] != '\t') ++col;
    return line.substr(start, col - start);
  }

  std::uint64_t number(const std::string& tok) {
    if (tok.empty()) err("expected a number");
    std::uint64_t v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') err("expected a number, got '" + tok + "'");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
  }

  std::vector<NodeId> idList(const std::string& s) {
    std::vector<NodeId> out;
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      out.push_back(static_cast<NodeId>(number(s.substr(i, j - i))));
      i = j + 1;
    }
    return out;
  }

  Port port(const std::string& tok) {
    std::size_t colonAt = tok.find(':');
    if (colonAt == std::string::npos)
      err("expected <node>:<port>, got '" + tok + "'");
    Port p;
    p.node = static_cast<NodeId>(number(tok.substr(0, colonAt)));
    p.index = static_cast<int>(number(tok.substr(colonAt + 1)));
    return p;
  }

  std::string keyed(const std::string& tok, const std::string& key) {
    if (tok.size() < key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
        tok[key.size()] != '=')
      err("expected " + key + "=..., got '" + tok + "'");
    return tok.substr(key.size() + 1);
  }
};

}  // namespace

ProofNet deserialize(const std::string& text) {
  LineParser lp(text);
  ProofNet net;
  bool sawHeader = false;
  bool sawConclusion = false;

  while (lp.nextLine()) {
    std::string kind = lp.token();
    if (kind == "net") {
      lp.token();  // name, unused
      sawHeader = true;
    } else if (kind == "node") {
      NodeId id = static_cast<NodeId>(lp.number(lp.token()));
      std::string labTok = lp.token();
      auto lab = labelFromToken(labTok);
      if (!lab) lp.err("unknown label " + labTok);
      if (net.nodes.count(id)) lp.err("duplicate node id");
      net.nodes.emplace(id, *lab);
      if (*lab == NodeLabel::C) {
        // conclusion line still required; remember tentatively
      }
      net.next_node = std::max(net.next_node, id + 1);
    } else if (kind == "box") {
      BoxId id = static_cast<BoxId>(lp.number(lp.token()));
      if (net.boxes.count(id)) lp.err("duplicate box id");
      BoxRecord rec;
      rec.principal = static_cast<NodeId>(lp.number(lp.keyed(lp.token(), "principal")));
      for (NodeId a : lp.idList(lp.keyed(lp.token(), "aux"))) rec.aux.push_back(a);
      for (NodeId m : lp.idList(lp.keyed(lp.token(), "content")))
        rec.content.insert(m);
      net.boxes.emplace(id, std::move(rec));
      net.next_box = std::max(net.next_box, id + 1);
    } else if (kind == "edge") {
      Port a = lp.port(lp.token());
      Port b = lp.port(lp.token());
      if (!net.nodes.count(a.node) || !net.nodes.count(b.node))
        lp.err("edge references unknown node");
      if (a.index >= arity(net.labelOf(a.node)) ||
          b.index >= arity(net.labelOf(b.node)))
        lp.err("port index out of range");
      if (net.edges.count(a) || net.edges.count(b))
        lp.err("port connected twice");
      if (a == b) lp.err("port connected to itself");
      net.edges[a] = b;
      net.edges[b] = a;
    } else if (kind == "premise") {
      net.premises.push_back(static_cast<NodeId>(lp.number(lp.token())));
    } else if (kind == "conclusion") {
      net.conclusion = static_cast<NodeId>(lp.number(lp.token()));
      sawConclusion = true;
    } else {
      lp.err("unknown directive '" + kind + "'");
    }
    if (!lp.atEnd()) lp.err("trailing text");
  }

  if (!sawHeader) throw ParseError("missing net header", 1, 1);
  if (!sawConclusion) throw ParseError("missing conclusion line", lp.lineno, 1);

  auto rep = validate(net);
  if (!rep.ok)
    throw ParseError("invalid net: " + rep.violations.front(), lp.lineno, 1);
  return net;
}

}  // namespace lazynets
