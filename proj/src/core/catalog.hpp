#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/ptb.hpp"
#include "core/tregex.hpp"

namespace syncur {

enum class Macro { Simple, Complex, Interrogatives };

std::string_view macro_name(Macro macro);
std::optional<Macro> macro_from_name(std::string_view name);

struct CanonicalCategory {
  const char* name;
  Macro macro;
};

// The fixed 13-category taxonomy with its macro mapping; manifests are
// validated against it.
const std::vector<CanonicalCategory>& canonical_categories();

struct Category {
  std::string name;
  std::string slug;
  Macro macro = Macro::Simple;
  int priority = 0;  // 1..13, higher wins when several categories match
  std::vector<Pattern> patterns;
  std::vector<std::string> pattern_sources;
};

struct CategoryAssignment {
  std::vector<std::string> matched;  // ascending priority order
  std::optional<std::string> primary;
  std::optional<Macro> macro;

  bool categorized() const { return primary.has_value(); }
};

class Catalog {
 public:
  // Loads "<nn>_<slug>.tgx" pattern files plus manifest.txt from dir.
  // Pattern files: one pattern per logical line, trailing '\' continues
  // a line, '#' starts a comment line, blank lines ignored.
  static Catalog load(const std::filesystem::path& dir);

  const std::vector<Category>& categories() const { return categories_; }
  const Category* find(std::string_view name) const;

  CategoryAssignment classify(const ParseTree& tree) const;

 private:
  std::vector<Category> categories_;  // ordered by file name prefix
};

// C2's two-way split: Complex macro, or an interrogative whose parse
// nests an S/SBAR under another S/SBAR. Throws Error(Data) on
// uncategorized input.
bool is_complex_for_c2(const CategoryAssignment& assignment,
                       const ParseTree& tree);

}  // namespace syncur
