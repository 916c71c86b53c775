#include "levelnet/enewick.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace levelnet {

bool isValidTaxonName(const std::string& name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-'))
      return false;
  return true;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  NetworkBuilder builder;
  std::map<long, Vertex> tagVertex;      // #H tag -> reticulation vertex
  std::map<long, int> tagOccurrences;    // #H tag -> times seen
  std::map<long, bool> tagHasDefinition; // #H tag -> defining occurrence seen
  std::map<std::string, bool> taxaSeen;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    size_t line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw std::runtime_error("extended Newick syntax error at line " +
                             std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + msg);
  }

  void skipSpace() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peekIs(char c) {
    skipSpace();
    return pos < text.size() && text[pos] == c;
  }

  void expect(char c) {
    skipSpace();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool tryTag(long& tag) {
    skipSpace();
    if (pos + 1 >= text.size() || text[pos] != '#' || text[pos + 1] != 'H')
      return false;
    size_t p = pos + 2;
    size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
      ++p;
    if (p == start) fail("expected digits after #H");
    tag = std::stol(text.substr(start, p - start));
    pos = p;
    return true;
  }

  std::string parseName() {
    skipSpace();
    size_t start = pos;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.' || c == '-')
        ++pos;
      else
        break;
    }
    if (pos == start) fail("expected a taxon name");
    return text.substr(start, pos - start);
  }

  Vertex reticulationFor(long tag) {
    auto it = tagVertex.find(tag);
    if (it != tagVertex.end()) return it->second;
    Vertex v = builder.addVertex();
    tagVertex[tag] = v;
    return v;
  }

  // Parses one subtree and returns its top vertex.
  Vertex parseSubtree() {
    skipSpace();
    if (pos >= text.size()) fail("unexpected end of input");
    long tag = 0;
    if (text[pos] == '(') {
      ++pos;
      std::vector<Vertex> children;
      children.push_back(parseSubtree());
      while (peekIs(',')) {
        ++pos;
        children.push_back(parseSubtree());
      }
      expect(')');
      if (tryTag(tag)) {
        // Defining occurrence of a reticulation.
        if (children.size() != 1)
          fail("reticulation #H" + std::to_string(tag) +
               " must have exactly one child subtree");
        Vertex v = reticulationFor(tag);
        if (tagHasDefinition[tag])
          fail("#H" + std::to_string(tag) + " defined twice");
        tagHasDefinition[tag] = true;
        ++tagOccurrences[tag];
        builder.addArc(v, children[0]);
        return v;
      }
      Vertex v = builder.addVertex();
      for (Vertex c : children) builder.addArc(v, c);
      return v;
    }
    if (tryTag(tag)) {
      // Bare reference.
      ++tagOccurrences[tag];
      return reticulationFor(tag);
    }
    std::string name = parseName();
    if (taxaSeen[name]) fail("duplicate taxon '" + name + "'");
    taxaSeen[name] = true;
    return builder.addLeaf(name);
  }

  Network parse() {
    Vertex top = parseSubtree();
    (void)top;
    expect(';');
    skipSpace();
    if (pos != text.size()) fail("trailing characters after ';'");
    for (const auto& [tag, count] : tagOccurrences) {
      if (!tagHasDefinition[tag])
        fail("dangling #H" + std::to_string(tag) + ": no defining occurrence");
      if (count != 2)
        fail("#H" + std::to_string(tag) + " appears " + std::to_string(count) +
             " times, expected exactly 2");
    }
    return builder.build();
  }
};

// --- canonical writer -----------------------------------------------------

struct Writer {
  const Network& net;
  // Structural sort key per vertex: (smallest descendant taxon, full key).
  std::vector<std::string> minTaxon;
  std::vector<std::string> structKey;
  std::map<Vertex, int> tagOf;
  int nextTag = 1;

  explicit Writer(const Network& n) : net(n) {
    minTaxon.assign(net.vertexCount(), "");
    structKey.assign(net.vertexCount(), "");
    for (Vertex v : reverseTopological()) computeKey(v);
  }

  std::vector<Vertex> reverseTopological() const {
    std::vector<Vertex> order = net.topologicalOrder();
    std::reverse(order.begin(), order.end());
    return order;
  }

  void computeKey(Vertex v) {
    if (net.isLeaf(v)) {
      minTaxon[v] = net.label(v);
      structKey[v] = net.label(v);
      return;
    }
    std::vector<std::pair<std::string, std::string>> childKeys;
    for (Vertex c : net.children(v)) childKeys.push_back({minTaxon[c], structKey[c]});
    std::sort(childKeys.begin(), childKeys.end());
    minTaxon[v] = childKeys.front().first;
    std::string key = "(";
    for (size_t i = 0; i < childKeys.size(); ++i) {
      if (i) key += ",";
      key += childKeys[i].second;
    }
    key += ")";
    structKey[v] = key;
  }

  std::vector<Vertex> sortedChildren(Vertex v) const {
    std::vector<Vertex> cs = net.children(v);
    std::stable_sort(cs.begin(), cs.end(), [&](Vertex x, Vertex y) {
      return std::make_pair(minTaxon[x], structKey[x]) <
             std::make_pair(minTaxon[y], structKey[y]);
    });
    return cs;
  }

  void emit(Vertex v, std::string& out) {
    if (net.isLeaf(v)) {
      if (!isValidTaxonName(net.label(v)))
        throw std::runtime_error("cannot serialize reserved or invalid taxon '" +
                                 net.label(v) + "'");
      out += net.label(v);
      return;
    }
    if (net.isReticulation(v)) {
      auto it = tagOf.find(v);
      if (it != tagOf.end()) {
        out += "#H" + std::to_string(it->second);
        return;
      }
      int tag = nextTag++;
      tagOf[v] = tag;
      out += "(";
      emit(net.children(v).front(), out);
      out += ")#H" + std::to_string(tag);
      return;
    }
    out += "(";
    std::vector<Vertex> cs = sortedChildren(v);
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ",";
      emit(cs[i], out);
    }
    out += ")";
  }
};

}  // namespace

Network parseENewick(const std::string& text) {
  Parser p(text);
  return p.parse();
}

std::string writeENewick(const Network& net) {
  Writer w(net);
  std::string out;
  w.emit(net.root(), out);
  out += ";";
  return out;
}

std::vector<TrinetFileEntry> readTrinetFile(std::istream& in) {
  std::map<std::string, long long> lineCounts;
  std::vector<std::string> orderOfFirstUse;
  std::string line;
  long lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    // Trim whitespace.
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    size_t e = line.find_last_not_of(" \t\r");
    std::string body = line.substr(b, e - b + 1);
    if (body[0] == '#') continue;  // comment (tags never start a line)
    try {
      parseENewick(body);  // early syntax check with a useful line number
    } catch (const std::exception& ex) {
      throw std::runtime_error("line " + std::to_string(lineNo) + ": " +
                               ex.what());
    }
    if (lineCounts.find(body) == lineCounts.end()) orderOfFirstUse.push_back(body);
    ++lineCounts[body];
  }
  std::vector<TrinetFileEntry> out;
  for (const std::string& body : orderOfFirstUse)
    out.push_back({parseENewick(body), lineCounts[body]});
  return out;
}

std::vector<TrinetFileEntry> readTrinetFileAt(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return readTrinetFile(in);
}

void writeTrinetFile(const std::vector<TrinetFileEntry>& entries,
                     std::ostream& out) {
  std::vector<std::string> lines;
  for (const auto& e : entries) {
    std::string text = writeENewick(e.network);
    for (long long i = 0; i < e.multiplicity; ++i) lines.push_back(text);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << "\n";
}

}  // namespace levelnet
