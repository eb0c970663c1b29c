#include "core/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "core/error.hpp"
#include "core/io.hpp"

namespace syncur {

namespace fs = std::filesystem;

std::string_view macro_name(Macro macro) {
  switch (macro) {
    case Macro::Simple: return "Simple";
    case Macro::Complex: return "Complex";
    case Macro::Interrogatives: return "Interrogatives";
  }
  return "";
}

std::optional<Macro> macro_from_name(std::string_view name) {
  if (name == "Simple") return Macro::Simple;
  if (name == "Complex") return Macro::Complex;
  if (name == "Interrogatives") return Macro::Interrogatives;
  return std::nullopt;
}

const std::vector<CanonicalCategory>& canonical_categories() {
  static const std::vector<CanonicalCategory> table = {
      {"Subject-Verb", Macro::Simple},
      {"Adverbs & Possessives", Macro::Simple},
      {"Prepositions", Macro::Simple},
      {"Particle verbs", Macro::Simple},
      {"Auxiliaries", Macro::Simple},
      {"Negation", Macro::Simple},
      {"Tense", Macro::Simple},
      {"Embedded clauses", Macro::Complex},
      {"To-infinitives", Macro::Complex},
      {"Linked clauses", Macro::Complex},
      {"Relative clauses", Macro::Complex},
      {"Fragments", Macro::Complex},
      {"Interrogatives", Macro::Interrogatives},
  };
  return table;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct ManifestEntry {
  std::string name;
  Macro macro;
  int priority;
};

// manifest.txt lines: "<slug> = <name> | <macro> | <priority>"
std::map<std::string, ManifestEntry> read_manifest(const fs::path& path) {
  std::map<std::string, ManifestEntry> entries;
  int line_no = 0;
  for (const auto& raw : read_lines(path)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::Validation,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected '<slug> = <name> | <macro> | <priority>'");
    const std::string slug = trim(line.substr(0, eq));
    const std::string rest = line.substr(eq + 1);
    const auto p1 = rest.find('|');
    const auto p2 = rest.find('|', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw Error(ErrorCode::Validation,
                  path.string() + ":" + std::to_string(line_no) +
                      ": expected two '|' separators");
    ManifestEntry entry;
    entry.name = trim(rest.substr(0, p1));
    const std::string macro_text = trim(rest.substr(p1 + 1, p2 - p1 - 1));
    const auto macro = macro_from_name(macro_text);
    if (!macro)
      throw Error(ErrorCode::Validation,
                  path.string() + ":" + std::to_string(line_no) +
                      ": unknown macro-category '" + macro_text + "'");
    entry.macro = *macro;
    try {
      entry.priority = std::stoi(trim(rest.substr(p2 + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Validation,
                  path.string() + ":" + std::to_string(line_no) +
                      ": priority is not an integer");
    }
    if (entries.count(slug))
      throw Error(ErrorCode::Validation,
                  path.string() + ": duplicate slug '" + slug + "'");
    entries.emplace(slug, entry);
  }
  return entries;
}

// Logical lines: '#' comment lines and blanks skipped, trailing '\'
// joins the next line.
std::vector<std::pair<int, std::string>> logical_lines(
    const std::vector<std::string>& raw) {
  std::vector<std::pair<int, std::string>> out;
  std::string pending;
  int pending_start = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::string line = trim(raw[i]);
    if (pending.empty()) {
      if (line.empty() || line[0] == '#') continue;
      pending_start = static_cast<int>(i) + 1;
    }
    bool continued = false;
    if (!line.empty() && line.back() == '\\') {
      continued = true;
      line = trim(line.substr(0, line.size() - 1));
    }
    if (!pending.empty() && !line.empty()) pending += ' ';
    pending += line;
    if (!continued) {
      if (!pending.empty()) out.emplace_back(pending_start, pending);
      pending.clear();
    }
  }
  if (!pending.empty()) out.emplace_back(pending_start, pending);
  return out;
}

std::string slug_from_filename(const std::string& stem) {
  // strip the "<nn>_" ordering prefix
  std::size_t i = 0;
  while (i < stem.size() && std::isdigit(static_cast<unsigned char>(stem[i])))
    ++i;
  if (i > 0 && i < stem.size() && stem[i] == '_') return stem.substr(i + 1);
  return stem;
}

}  // namespace

Catalog Catalog::load(const fs::path& dir) {
  if (!fs::is_directory(dir))
    throw Error(ErrorCode::Io, "catalog directory not found: " + dir.string());
  const auto manifest = read_manifest(dir / "manifest.txt");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".tgx") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  Catalog catalog;
  std::set<std::string> seen_slugs;
  for (const auto& file : files) {
    const std::string slug = slug_from_filename(file.stem().string());
    const auto it = manifest.find(slug);
    if (it == manifest.end())
      throw Error(ErrorCode::Validation,
                  file.string() + ": no manifest entry for slug '" + slug +
                      "'");
    Category cat;
    cat.slug = slug;
    cat.name = it->second.name;
    cat.macro = it->second.macro;
    cat.priority = it->second.priority;
    for (const auto& [line_no, text] : logical_lines(read_lines(file))) {
      try {
        cat.patterns.push_back(compile_pattern(text));
      } catch (const SyntaxError& e) {
        throw Error(ErrorCode::Validation,
                    file.string() + ":" + std::to_string(line_no) + ": " +
                        e.what());
      }
      cat.pattern_sources.push_back(text);
    }
    if (cat.patterns.empty())
      throw Error(ErrorCode::Validation,
                  file.string() + ": category has no patterns");
    seen_slugs.insert(slug);
    catalog.categories_.push_back(std::move(cat));
  }

  for (const auto& [slug, entry] : manifest) {
    if (!seen_slugs.count(slug))
      throw Error(ErrorCode::Validation,
                  dir.string() + ": missing pattern file for slug '" + slug +
                      "' (" + entry.name + ")");
  }

  // Validate against the canonical taxonomy.
  const auto& canon = canonical_categories();
  if (catalog.categories_.size() != canon.size())
    throw Error(ErrorCode::Validation,
                dir.string() + ": expected " +
                    std::to_string(canon.size()) + " categories, found " +
                    std::to_string(catalog.categories_.size()));
  std::set<std::string> names;
  std::set<int> priorities;
  for (const auto& cat : catalog.categories_) {
    const auto canon_it =
        std::find_if(canon.begin(), canon.end(), [&](const auto& c) {
          return cat.name == c.name;
        });
    if (canon_it == canon.end())
      throw Error(ErrorCode::Validation,
                  "unknown category name '" + cat.name + "'");
    if (canon_it->macro != cat.macro)
      throw Error(ErrorCode::Validation,
                  "category '" + cat.name + "' must map to macro '" +
                      std::string(macro_name(canon_it->macro)) + "', not '" +
                      std::string(macro_name(cat.macro)) + "'");
    if (!names.insert(cat.name).second)
      throw Error(ErrorCode::Validation,
                  "duplicate category name '" + cat.name + "'");
    if (cat.priority < 1 ||
        cat.priority > static_cast<int>(canon.size()) ||
        !priorities.insert(cat.priority).second)
      throw Error(ErrorCode::Validation,
                  "priorities must be a permutation of 1.." +
                      std::to_string(canon.size()) + "; offending category '" +
                      cat.name + "' has " + std::to_string(cat.priority));
  }
  return catalog;
}

const Category* Catalog::find(std::string_view name) const {
  for (const auto& cat : categories_)
    if (cat.name == name) return &cat;
  return nullptr;
}

CategoryAssignment Catalog::classify(const ParseTree& tree) const {
  CategoryAssignment assignment;
  const Category* best = nullptr;
  std::vector<const Category*> matched;
  for (const auto& cat : categories_) {
    const bool hit = std::any_of(
        cat.patterns.begin(), cat.patterns.end(),
        [&](const Pattern& p) { return matches_sentence(p, tree); });
    if (!hit) continue;
    matched.push_back(&cat);
    if (!best || cat.priority > best->priority) best = &cat;
  }
  std::sort(matched.begin(), matched.end(),
            [](const Category* a, const Category* b) {
              return a->priority < b->priority;
            });
  for (const Category* cat : matched) assignment.matched.push_back(cat->name);
  if (best) {
    assignment.primary = best->name;
    assignment.macro = best->macro;
  }
  return assignment;
}

bool is_complex_for_c2(const CategoryAssignment& assignment,
                       const ParseTree& tree) {
  if (!assignment.categorized())
    throw Error(ErrorCode::Data,
                "uncategorized sentence has no simple/complex split");
  if (*assignment.macro == Macro::Complex) return true;
  if (*assignment.macro != Macro::Interrogatives) return false;
  // Nested embedding: an S/SBAR properly dominated by another S/SBAR.
  const auto is_clause = [&](int id) {
    const std::string& l = tree.label(id);
    return l == "S" || l == "SBAR";
  };
  for (int id = 0; id < tree.node_count(); ++id) {
    if (!is_clause(id)) continue;
    for (int up = tree.parent(id); up >= 0; up = tree.parent(up))
      if (is_clause(up)) return true;
  }
  return false;
}

}  // namespace syncur
