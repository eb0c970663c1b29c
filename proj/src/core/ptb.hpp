#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace syncur {

// Immutable constituency tree for one sentence, read from a single-line
// Penn-Treebank bracketing. Nodes are stored in preorder; node ids are
// dense indices into the node vector, root is id 0. Tokens live on
// preterminal leaves (the terminal word is folded into its tag node).
class ParseTree {
 public:
  struct Node {
    std::string label;       // base label, functional tags after -/= stripped
    std::string orig_label;  // original label when stripping changed it
    std::string token;       // surface form; non-empty iff leaf
    int parent = -1;
    std::vector<int> children;
  };

  // Throws SyntaxError (with byte offset) on unbalanced or multi-line
  // input, Error(Structure) on empty nodes or mixed terminal children.
  static ParseTree parse(std::string_view text);

  // Single-line canonical bracketing; parse(serialize(t)) == t.
  std::string serialize() const;

  // Left-to-right leaf tokens.
  std::vector<std::string> yield() const;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int root() const { return 0; }
  bool is_leaf(int id) const { return nodes_[id].children.empty(); }
  const std::string& label(int id) const { return nodes_[id].label; }
  const std::string& token(int id) const { return nodes_[id].token; }
  int parent(int id) const { return nodes_[id].parent; }
  const std::vector<int>& children(int id) const {
    return nodes_[id].children;
  }
  const std::vector<Node>& nodes() const { return nodes_; }

  // Structural equality over base labels, tokens, and shape.
  bool operator==(const ParseTree& other) const;

 private:
  std::vector<Node> nodes_;
};

// PTB escape handling for bracket tokens: -LRB- <-> "(", etc.
std::string unescape_token(std::string_view raw);
std::string escape_token(std::string_view token);

}  // namespace syncur
