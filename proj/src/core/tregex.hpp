#pragma once

#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "core/ptb.hpp"

namespace syncur {

// Node descriptor: literal label, /regex/ over labels, or the wildcard
// "__". Regexes are unanchored (substring search) unless the source
// anchors with ^/$, matching the usual tregex convention.
struct NodeDesc {
  enum class Kind { Literal, Regex, Wildcard };
  Kind kind = Kind::Wildcard;
  std::string payload;  // label text or regex source
  std::shared_ptr<const std::regex> compiled;

  bool matches(const std::string& label) const;
};

enum class RelOp {
  Child,              // <
  Parent,             // >
  Descendant,         // <<
  Ancestor,           // >>
  NthChild,           // <n
  OnlyChild,          // <:
  FollowingSibling,   // $++
  ImmediateFollowing, // $+
  PrecedingSibling,   // $--
};

const char* relop_symbol(RelOp op);

struct Pattern;

struct Relation {
  RelOp op = RelOp::Child;
  int arg = 0;  // NthChild index, 1-based
  bool negated = false;
  std::shared_ptr<const Pattern> target;
};

// One conjunctive term. A plain relation is a single one-element group;
// a bracketed disjunction "[ r1 r2 | r3 ]" holds when some group's
// relations all hold.
struct ConstraintTerm {
  bool disjunction = false;
  std::vector<std::vector<Relation>> groups;
};

struct Pattern {
  NodeDesc node;
  std::vector<ConstraintTerm> terms;
};

// Throws SyntaxError with the byte offset of the failure.
Pattern compile_pattern(std::string_view source);

// Canonical text form; recompiling yields identical match behavior.
std::string serialize_pattern(const Pattern& pattern);

// Every node whose context satisfies the pattern, in preorder.
// Matching is pure; relations are existential per term (negated: no
// witness exists). Relations anchored on a preterminal leaf may descend
// into its token, treated as a virtual terminal child node.
std::vector<int> match_nodes(const Pattern& pattern, const ParseTree& tree);

bool matches_sentence(const Pattern& pattern, const ParseTree& tree);

// True when `node` (a real node id) itself satisfies the pattern.
bool node_matches(const Pattern& pattern, const ParseTree& tree, int node);

}  // namespace syncur
