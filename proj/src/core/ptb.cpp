#include "core/ptb.hpp"

#include <array>
#include <utility>

#include "core/error.hpp"

namespace syncur {

namespace {

constexpr std::array<std::pair<const char*, const char*>, 6> kEscapes = {{
    {"-LRB-", "("},
    {"-RRB-", ")"},
    {"-LCB-", "{"},
    {"-RCB-", "}"},
    {"-LSB-", "["},
    {"-RSB-", "]"},
}};

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool is_atom_char(char c) {
  return c != '(' && c != ')' && c != ' ' && c != '\t' && c != '\n' &&
         c != '\r';
}

// Functional tags and coindexation ("NP-SBJ", "NP=2") reduce to the base
// label; a leading '-' marks escape labels like -LRB- which stay intact.
std::string strip_label(const std::string& raw) {
  if (raw.empty() || raw[0] == '-' || raw[0] == '=') return raw;
  const auto cut = raw.find_first_of("-=");
  if (cut == std::string::npos) return raw;
  return raw.substr(0, cut);
}

struct Reader {
  std::string_view text;
  std::size_t pos = 0;
  std::vector<ParseTree::Node>* nodes;

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, pos);
  }

  void skip_blank() {
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == '\n' || c == '\r') fail("unexpected newline inside tree");
      if (!is_blank(c)) break;
      ++pos;
    }
  }

  std::string read_atom() {
    const std::size_t start = pos;
    while (pos < text.size() && is_atom_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  int read_node() {
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    skip_blank();
    const std::string raw_label = read_atom();
    if (raw_label.empty())
      throw Error(ErrorCode::Structure,
                  "node without label at offset " + std::to_string(pos));
    const int id = static_cast<int>(nodes->size());
    nodes->emplace_back();
    (*nodes)[id].label = strip_label(raw_label);
    if ((*nodes)[id].label != raw_label) (*nodes)[id].orig_label = raw_label;

    std::vector<std::string> terminals;
    for (;;) {
      skip_blank();
      if (pos >= text.size()) fail("unbalanced parentheses");
      const char c = text[pos];
      if (c == ')') {
        ++pos;
        break;
      }
      if (c == '(') {
        const int child = read_node();
        (*nodes)[child].parent = id;
        (*nodes)[id].children.push_back(child);
      } else {
        terminals.push_back(read_atom());
      }
    }

    auto& node = (*nodes)[id];
    if (!terminals.empty() && !node.children.empty())
      throw Error(ErrorCode::Structure,
                  "node '" + node.label + "' mixes terminals and subtrees");
    if (terminals.size() > 1)
      throw Error(ErrorCode::Structure, "node '" + node.label +
                                            "' has multiple terminals");
    if (terminals.empty() && node.children.empty())
      throw Error(ErrorCode::Structure,
                  "empty node '" + node.label + "'");
    if (!terminals.empty()) node.token = unescape_token(terminals[0]);
    return id;
  }
};

void serialize_node(const ParseTree& tree, int id, std::string& out) {
  out += '(';
  const auto& nodes = tree.nodes();
  out += nodes[id].orig_label.empty() ? nodes[id].label
                                      : nodes[id].orig_label;
  if (tree.is_leaf(id)) {
    out += ' ';
    out += escape_token(tree.token(id));
  } else {
    for (int child : tree.children(id)) {
      out += ' ';
      serialize_node(tree, child, out);
    }
  }
  out += ')';
}

}  // namespace

std::string unescape_token(std::string_view raw) {
  for (const auto& [escaped, surface] : kEscapes)
    if (raw == escaped) return surface;
  return std::string(raw);
}

std::string escape_token(std::string_view token) {
  for (const auto& [escaped, surface] : kEscapes)
    if (token == surface) return escaped;
  return std::string(token);
}

ParseTree ParseTree::parse(std::string_view text) {
  ParseTree tree;
  Reader reader{text, 0, &tree.nodes_};
  reader.skip_blank();
  if (reader.pos >= text.size()) reader.fail("empty input");
  reader.read_node();
  while (reader.pos < text.size()) {
    const char c = text[reader.pos];
    if (c == '\n' || c == '\r') {
      // Trailing newline from the source line is fine; content after it
      // would be a second line and is rejected.
      std::size_t rest = reader.pos + 1;
      while (rest < text.size() &&
             (is_blank(text[rest]) || text[rest] == '\n' ||
              text[rest] == '\r'))
        ++rest;
      if (rest < text.size()) reader.fail("more than one line of input");
      break;
    }
    if (!is_blank(c)) reader.fail("trailing content after tree");
    ++reader.pos;
  }
  return tree;
}

std::string ParseTree::serialize() const {
  std::string out;
  serialize_node(*this, root(), out);
  return out;
}

std::vector<std::string> ParseTree::yield() const {
  std::vector<std::string> tokens;
  for (const auto& node : nodes_)
    if (node.children.empty()) tokens.push_back(node.token);
  return tokens;
}

bool ParseTree::operator==(const ParseTree& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& a = nodes_[i];
    const auto& b = other.nodes_[i];
    if (a.label != b.label || a.token != b.token || a.parent != b.parent ||
        a.children != b.children)
      return false;
  }
  return true;
}

}  // namespace syncur
