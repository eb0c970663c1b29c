#include "core/tregex.hpp"

#include <cctype>

#include "core/error.hpp"

namespace syncur {

namespace {

enum class TokKind {
  LParen,
  RParen,
  LBracket,
  RBracket,
  Pipe,
  Bang,
  Atom,
  Regex,
  Rel,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  RelOp op = RelOp::Child;
  int arg = 0;
  std::size_t pos = 0;
};

bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '.' || c == ',' || c == ':' || c == '\'' || c == '`' ||
         c == '-';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  const std::size_t n = src.size();
  while (pos < n) {
    const char c = src[pos];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    switch (c) {
      case '(':
        out.push_back({TokKind::LParen, "(", {}, 0, start});
        ++pos;
        continue;
      case ')':
        out.push_back({TokKind::RParen, ")", {}, 0, start});
        ++pos;
        continue;
      case '[':
        out.push_back({TokKind::LBracket, "[", {}, 0, start});
        ++pos;
        continue;
      case ']':
        out.push_back({TokKind::RBracket, "]", {}, 0, start});
        ++pos;
        continue;
      case '|':
        out.push_back({TokKind::Pipe, "|", {}, 0, start});
        ++pos;
        continue;
      case '!':
        out.push_back({TokKind::Bang, "!", {}, 0, start});
        ++pos;
        continue;
      default:
        break;
    }
    if (c == '/') {
      ++pos;
      std::string body;
      while (pos < n && src[pos] != '/') {
        if (src[pos] == '\\' && pos + 1 < n) {
          if (src[pos + 1] == '/') {
            body += '/';
          } else {
            body += '\\';
            body += src[pos + 1];
          }
          pos += 2;
        } else {
          body += src[pos];
          ++pos;
        }
      }
      if (pos >= n) throw SyntaxError("unterminated regex", start);
      ++pos;  // closing '/'
      out.push_back({TokKind::Regex, body, {}, 0, start});
      continue;
    }
    if (c == '<') {
      ++pos;
      if (pos < n && src[pos] == '<') {
        ++pos;
        out.push_back({TokKind::Rel, "<<", RelOp::Descendant, 0, start});
      } else if (pos < n && src[pos] == ':') {
        ++pos;
        out.push_back({TokKind::Rel, "<:", RelOp::OnlyChild, 0, start});
      } else if (pos < n && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        int value = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(src[pos]))) {
          value = value * 10 + (src[pos] - '0');
          ++pos;
        }
        if (value < 1)
          throw SyntaxError("nth-child index must be >= 1", start);
        out.push_back({TokKind::Rel, "<n", RelOp::NthChild, value, start});
      } else {
        out.push_back({TokKind::Rel, "<", RelOp::Child, 0, start});
      }
      continue;
    }
    if (c == '>') {
      ++pos;
      if (pos < n && src[pos] == '>') {
        ++pos;
        out.push_back({TokKind::Rel, ">>", RelOp::Ancestor, 0, start});
      } else {
        out.push_back({TokKind::Rel, ">", RelOp::Parent, 0, start});
      }
      continue;
    }
    if (c == '$') {
      if (src.substr(pos, 3) == "$++") {
        pos += 3;
        out.push_back({TokKind::Rel, "$++", RelOp::FollowingSibling, 0, start});
      } else if (src.substr(pos, 3) == "$--") {
        pos += 3;
        out.push_back({TokKind::Rel, "$--", RelOp::PrecedingSibling, 0, start});
      } else if (src.substr(pos, 2) == "$+") {
        pos += 2;
        out.push_back(
            {TokKind::Rel, "$+", RelOp::ImmediateFollowing, 0, start});
      } else {
        throw SyntaxError("unknown relation symbol '$'", start);
      }
      continue;
    }
    if (is_atom_char(c)) {
      std::size_t end = pos;
      while (end < n && is_atom_char(src[end])) ++end;
      out.push_back(
          {TokKind::Atom, std::string(src.substr(pos, end - pos)), {}, 0,
           start});
      pos = end;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }
  out.push_back({TokKind::End, "", {}, 0, n});
  return out;
}

NodeDesc make_desc(const Token& tok) {
  NodeDesc desc;
  if (tok.kind == TokKind::Regex) {
    desc.kind = NodeDesc::Kind::Regex;
    desc.payload = tok.text;
    try {
      desc.compiled = std::make_shared<const std::regex>(
          tok.text, std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
      throw SyntaxError(std::string("invalid regex: ") + e.what(), tok.pos);
    }
    return desc;
  }
  if (tok.text == "__") {
    desc.kind = NodeDesc::Kind::Wildcard;
    return desc;
  }
  desc.kind = NodeDesc::Kind::Literal;
  desc.payload = tok.text;
  return desc;
}

struct PatternParser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  const Token& get() { return toks[i++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, peek().pos);
  }

  bool starts_constraint() const {
    const TokKind k = peek().kind;
    return k == TokKind::Bang || k == TokKind::Rel || k == TokKind::LBracket;
  }

  Pattern parse_pattern() {
    Pattern p = parse_primary();
    while (starts_constraint()) p.terms.push_back(parse_term());
    return p;
  }

  Pattern parse_primary() {
    const Token& t = peek();
    if (t.kind == TokKind::LParen) {
      get();
      Pattern p = parse_pattern();
      if (peek().kind != TokKind::RParen) fail("expected ')'");
      get();
      return p;
    }
    if (t.kind == TokKind::Atom || t.kind == TokKind::Regex) {
      const Token tok = get();
      return Pattern{make_desc(tok), {}};
    }
    fail("expected node description");
  }

  ConstraintTerm parse_term() {
    if (peek().kind == TokKind::LBracket) {
      get();
      ConstraintTerm term;
      term.disjunction = true;
      for (;;) {
        term.groups.push_back(parse_group());
        if (peek().kind == TokKind::Pipe) {
          get();
          continue;
        }
        break;
      }
      if (peek().kind != TokKind::RBracket) fail("expected ']'");
      get();
      return term;
    }
    ConstraintTerm term;
    term.groups.push_back({parse_relation()});
    return term;
  }

  std::vector<Relation> parse_group() {
    std::vector<Relation> group;
    while (peek().kind == TokKind::Bang || peek().kind == TokKind::Rel)
      group.push_back(parse_relation());
    if (group.empty()) fail("empty relation group");
    return group;
  }

  Relation parse_relation() {
    Relation rel;
    if (peek().kind == TokKind::Bang) {
      get();
      rel.negated = true;
    }
    if (peek().kind != TokKind::Rel) fail("expected relation operator");
    const Token op = get();
    rel.op = op.op;
    rel.arg = op.arg;
    rel.target = std::make_shared<const Pattern>(parse_target());
    return rel;
  }

  Pattern parse_target() {
    const Token& t = peek();
    if (t.kind == TokKind::LParen) {
      get();
      Pattern p = parse_pattern();
      if (peek().kind != TokKind::RParen) fail("expected ')'");
      get();
      return p;
    }
    if (t.kind == TokKind::Atom || t.kind == TokKind::Regex) {
      const Token tok = get();
      return Pattern{make_desc(tok), {}};
    }
    fail("dangling relation: missing target");
  }
};

// Node handles: ids below node_count are real nodes; node_count + leaf_id
// addresses the virtual terminal (the leaf's token).
struct Matcher {
  const ParseTree& tree;
  const int n;

  explicit Matcher(const ParseTree& t) : tree(t), n(t.node_count()) {}

  bool is_virtual(int h) const { return h >= n; }
  const std::string& label_of(int h) const {
    return h < n ? tree.label(h) : tree.token(h - n);
  }

  bool matches(const Pattern& p, int h) const {
    if (!p.node.matches(label_of(h))) return false;
    for (const auto& term : p.terms) {
      bool term_ok = false;
      for (const auto& group : term.groups) {
        bool group_ok = true;
        for (const auto& rel : group) {
          if (!relation_holds(rel, h)) {
            group_ok = false;
            break;
          }
        }
        if (group_ok) {
          term_ok = true;
          break;
        }
      }
      if (!term_ok) return false;
    }
    return true;
  }

  bool relation_holds(const Relation& rel, int h) const {
    const bool found = witness_exists(rel, h);
    return rel.negated ? !found : found;
  }

  bool witness_exists(const Relation& rel, int h) const {
    const Pattern& target = *rel.target;
    switch (rel.op) {
      case RelOp::Child: {
        if (is_virtual(h)) return false;
        if (tree.is_leaf(h)) return matches(target, n + h);
        for (int c : tree.children(h))
          if (matches(target, c)) return true;
        return false;
      }
      case RelOp::NthChild: {
        if (is_virtual(h)) return false;
        if (tree.is_leaf(h))
          return rel.arg == 1 && matches(target, n + h);
        const auto& kids = tree.children(h);
        if (rel.arg > static_cast<int>(kids.size())) return false;
        return matches(target, kids[rel.arg - 1]);
      }
      case RelOp::OnlyChild: {
        if (is_virtual(h)) return false;
        if (tree.is_leaf(h)) return matches(target, n + h);
        const auto& kids = tree.children(h);
        return kids.size() == 1 && matches(target, kids[0]);
      }
      case RelOp::Descendant: {
        if (is_virtual(h)) return false;
        if (tree.is_leaf(h)) return matches(target, n + h);
        std::vector<int> stack(tree.children(h).rbegin(),
                               tree.children(h).rend());
        while (!stack.empty()) {
          const int c = stack.back();
          stack.pop_back();
          if (matches(target, c)) return true;
          if (tree.is_leaf(c)) {
            if (matches(target, n + c)) return true;
          } else {
            for (auto it = tree.children(c).rbegin();
                 it != tree.children(c).rend(); ++it)
              stack.push_back(*it);
          }
        }
        return false;
      }
      case RelOp::Parent: {
        if (is_virtual(h)) return matches(target, h - n);
        const int p = tree.parent(h);
        return p >= 0 && matches(target, p);
      }
      case RelOp::Ancestor: {
        int cur = is_virtual(h) ? h - n : tree.parent(h);
        while (cur >= 0) {
          if (matches(target, cur)) return true;
          cur = tree.parent(cur);
        }
        return false;
      }
      case RelOp::FollowingSibling:
      case RelOp::ImmediateFollowing:
      case RelOp::PrecedingSibling: {
        if (is_virtual(h)) return false;
        const int p = tree.parent(h);
        if (p < 0) return false;
        const auto& sibs = tree.children(p);
        std::size_t self = 0;
        while (sibs[self] != h) ++self;
        if (rel.op == RelOp::ImmediateFollowing)
          return self + 1 < sibs.size() && matches(target, sibs[self + 1]);
        if (rel.op == RelOp::FollowingSibling) {
          for (std::size_t j = self + 1; j < sibs.size(); ++j)
            if (matches(target, sibs[j])) return true;
          return false;
        }
        for (std::size_t j = 0; j < self; ++j)
          if (matches(target, sibs[j])) return true;
        return false;
      }
    }
    return false;
  }
};

void pattern_text(const Pattern& p, std::string& out);

std::string desc_text(const NodeDesc& d) {
  switch (d.kind) {
    case NodeDesc::Kind::Wildcard:
      return "__";
    case NodeDesc::Kind::Literal:
      return d.payload;
    case NodeDesc::Kind::Regex: {
      std::string s = "/";
      for (char c : d.payload) {
        if (c == '/') s += "\\/";
        else s += c;
      }
      s += '/';
      return s;
    }
  }
  return "__";
}

void relation_text(const Relation& rel, std::string& out) {
  if (rel.negated) out += '!';
  if (rel.op == RelOp::NthChild) {
    out += '<';
    out += std::to_string(rel.arg);
  } else {
    out += relop_symbol(rel.op);
  }
  out += ' ';
  if (rel.target->terms.empty()) {
    out += desc_text(rel.target->node);
  } else {
    out += '(';
    pattern_text(*rel.target, out);
    out += ')';
  }
}

void pattern_text(const Pattern& p, std::string& out) {
  out += desc_text(p.node);
  for (const auto& term : p.terms) {
    out += ' ';
    if (term.disjunction) {
      out += "[ ";
      bool first_group = true;
      for (const auto& group : term.groups) {
        if (!first_group) out += " | ";
        first_group = false;
        bool first_rel = true;
        for (const auto& rel : group) {
          if (!first_rel) out += ' ';
          first_rel = false;
          relation_text(rel, out);
        }
      }
      out += " ]";
    } else {
      relation_text(term.groups[0][0], out);
    }
  }
}

}  // namespace

const char* relop_symbol(RelOp op) {
  switch (op) {
    case RelOp::Child: return "<";
    case RelOp::Parent: return ">";
    case RelOp::Descendant: return "<<";
    case RelOp::Ancestor: return ">>";
    case RelOp::NthChild: return "<";
    case RelOp::OnlyChild: return "<:";
    case RelOp::FollowingSibling: return "$++";
    case RelOp::ImmediateFollowing: return "$+";
    case RelOp::PrecedingSibling: return "$--";
  }
  return "?";
}

bool NodeDesc::matches(const std::string& label) const {
  switch (kind) {
    case Kind::Wildcard:
      return true;
    case Kind::Literal:
      return label == payload;
    case Kind::Regex:
      return std::regex_search(label, *compiled);
  }
  return false;
}

Pattern compile_pattern(std::string_view source) {
  PatternParser parser{lex(source)};
  if (parser.peek().kind == TokKind::End)
    throw SyntaxError("empty pattern", 0);
  Pattern p = parser.parse_pattern();
  if (parser.peek().kind != TokKind::End)
    parser.fail("trailing content after pattern");
  return p;
}

std::string serialize_pattern(const Pattern& pattern) {
  std::string out;
  pattern_text(pattern, out);
  return out;
}

bool node_matches(const Pattern& pattern, const ParseTree& tree, int node) {
  return Matcher(tree).matches(pattern, node);
}

std::vector<int> match_nodes(const Pattern& pattern, const ParseTree& tree) {
  Matcher matcher(tree);
  std::vector<int> hits;
  for (int id = 0; id < tree.node_count(); ++id)
    if (matcher.matches(pattern, id)) hits.push_back(id);
  return hits;
}

bool matches_sentence(const Pattern& pattern, const ParseTree& tree) {
  Matcher matcher(tree);
  for (int id = 0; id < tree.node_count(); ++id)
    if (matcher.matches(pattern, id)) return true;
  return false;
}

}  // namespace syncur
