#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rhetorica/pos.hpp"

namespace rhetorica {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  auto operator<=>(const Date&) const = default;

  static std::optional<Date> parse(std::string_view text);  // YYYY-MM-DD
  std::string str() const;
};

struct Token {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::Other;

  bool is_word() const { return is_word_tag(pos); }
  bool operator==(const Token&) const = default;
};

struct Document {
  std::string id;
  std::string author;
  std::string period_label;
  std::optional<Date> date;
  std::vector<Token> tokens;
  // Index one past the last token of each sentence; strictly increasing,
  // last entry equals tokens.size() whenever tokens is non-empty.
  std::vector<std::size_t> sentence_breaks;

  std::size_t sentence_count() const { return sentence_breaks.size(); }
  bool operator==(const Document&) const = default;
};

// Spelling-variant normalization. Chains are resolved at insertion time so
// canonical forms are fixed points and apply() is idempotent.
class AliasMap {
 public:
  void insert(std::string variant, std::string canonical);
  // Canonical surface for s, or s itself when unmapped.
  const std::string& apply(const std::string& s) const;
  std::size_t size() const { return canon_.size(); }
  bool empty() const { return canon_.empty(); }

  static AliasMap load(const std::string& path);  // variant<TAB>canonical lines

 private:
  std::map<std::string, std::string> canon_;
};

struct parse_error : std::runtime_error {
  parse_error(std::string file, std::size_t line, const std::string& what);
  std::string file;
  std::size_t line;
};

struct ParseResult {
  std::vector<Document> documents;
  std::vector<std::string> warnings;
};

// Tagged-TSV reader. Document header lines are
//   #doc<TAB>id=...<TAB>author=...<TAB>period=...[<TAB>date=YYYY-MM-DD]
// followed by surface<TAB>lemma<TAB>pos token lines; a blank line ends the
// current sentence; other lines starting with '#' are comments. Unknown POS
// tags become Other with a warning; structural problems throw parse_error
// with the offending line number.
ParseResult parse_tagged(std::istream& in, const std::string& name = "<input>",
                         const AliasMap* aliases = nullptr);
ParseResult parse_tagged_file(const std::string& path,
                              const AliasMap* aliases = nullptr);

// Inverse of parse_tagged for well-formed documents.
void emit_tagged(const std::vector<Document>& docs, std::ostream& out);
std::string emit_tagged(const std::vector<Document>& docs);

// Built-in sentence-boundary exceptions; user lists extend or replace it.
const std::set<std::string>& default_abbreviations();
std::set<std::string> load_abbreviations(const std::string& path);

// Plain-text tokenizer. Maximal letter runs (with internal apostrophes or
// hyphens) become word tokens with pos Other and lemma = lowercased surface;
// digit runs (with internal [.,] followed by digits) become Num; runs of
// sentence-final punctuation collapse into a single Punct token, any other
// mark is one Punct token. Entries of the abbreviation lexicon ("U.S.",
// "Mr.") are kept as single word tokens.
std::vector<Token> tokenize(std::string_view text);
std::vector<Token> tokenize(std::string_view text,
                            const std::set<std::string>& abbreviations);

// Sentence breaks for a token sequence: a break after each terminator token
// (".", "!", "?", "…" or a collapsed run of them), unless the terminator is
// a period and the nearest preceding word token is an abbreviation; a final
// break after the last token even without a terminator.
std::vector<std::size_t> segment_sentences(
    const std::vector<Token>& tokens,
    const std::set<std::string>& abbreviations = default_abbreviations());

}  // namespace rhetorica
