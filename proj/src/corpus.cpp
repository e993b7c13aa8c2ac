#include "rhetorica/corpus.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "rhetorica/text.hpp"

namespace rhetorica {

namespace {

int days_in_month(int year, int month) {
  static const int days[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2) {
    const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    return leap ? 29 : 28;
  }
  return days[month - 1];
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  return in;
}

}  // namespace

std::optional<Date> Date::parse(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  if (!all_digits(text.substr(0, 4)) || !all_digits(text.substr(5, 2)) ||
      !all_digits(text.substr(8, 2)))
    return std::nullopt;
  Date d;
  d.year = (text[0] - '0') * 1000 + (text[1] - '0') * 100 +
           (text[2] - '0') * 10 + (text[3] - '0');
  d.month = (text[5] - '0') * 10 + (text[6] - '0');
  d.day = (text[8] - '0') * 10 + (text[9] - '0');
  if (d.month < 1 || d.month > 12) return std::nullopt;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return std::nullopt;
  return d;
}

std::string Date::str() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

void AliasMap::insert(std::string variant, std::string canonical) {
  if (auto it = canon_.find(canonical); it != canon_.end())
    canonical = it->second;
  if (variant == canonical) {
    canon_.erase(variant);
    return;
  }
  for (auto& [from, to] : canon_) {
    if (to == variant) to = canonical;
  }
  canon_[std::move(variant)] = std::move(canonical);
}

const std::string& AliasMap::apply(const std::string& s) const {
  const auto it = canon_.find(s);
  return it == canon_.end() ? s : it->second;
}

AliasMap AliasMap::load(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  AliasMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
      throw parse_error(path, line_no,
                        "expected variant<TAB>canonical with two non-empty fields");
    map.insert(std::string(fields[0]), std::string(fields[1]));
  }
  return map;
}

parse_error::parse_error(std::string file_, std::size_t line_,
                         const std::string& what_)
    : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + what_),
      file(std::move(file_)),
      line(line_) {}

namespace {

struct DocBuilder {
  Document doc;
  bool open = false;

  void close_sentence() {
    if (doc.tokens.empty()) return;
    if (doc.sentence_breaks.empty() ||
        doc.sentence_breaks.back() != doc.tokens.size())
      doc.sentence_breaks.push_back(doc.tokens.size());
  }
};

}  // namespace

ParseResult parse_tagged(std::istream& in, const std::string& name,
                         const AliasMap* aliases) {
  ParseResult result;
  std::unordered_set<std::string> seen_ids;
  DocBuilder cur;
  std::string line;
  std::size_t line_no = 0;

  const auto finish_doc = [&] {
    if (!cur.open) return;
    cur.close_sentence();
    result.documents.push_back(std::move(cur.doc));
    cur = DocBuilder{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (cur.open) cur.close_sentence();
      continue;
    }
    if (line.rfind("#doc\t", 0) == 0) {
      finish_doc();
      cur.open = true;
      const auto fields = split_tabs(line);
      for (std::size_t f = 1; f < fields.size(); ++f) {
        const std::string_view field = fields[f];
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos || eq == 0)
          throw parse_error(name, line_no, "document header field without key=value");
        const std::string_view key = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        if (value.empty())
          throw parse_error(name, line_no,
                            "empty value for document header key '" +
                                std::string(key) + "'");
        if (key == "id") {
          cur.doc.id = value;
        } else if (key == "author") {
          cur.doc.author = value;
        } else if (key == "period") {
          cur.doc.period_label = value;
        } else if (key == "date") {
          cur.doc.date = Date::parse(value);
          if (!cur.doc.date)
            throw parse_error(name, line_no,
                              "invalid date '" + std::string(value) +
                                  "' (expected YYYY-MM-DD)");
        } else {
          result.warnings.push_back(name + ":" + std::to_string(line_no) +
                                    ": unknown document header key '" +
                                    std::string(key) + "'");
        }
      }
      if (cur.doc.id.empty() || cur.doc.author.empty() ||
          cur.doc.period_label.empty())
        throw parse_error(name, line_no,
                          "document header requires id, author and period");
      if (!seen_ids.insert(cur.doc.id).second)
        throw parse_error(name, line_no,
                          "duplicate document id '" + cur.doc.id + "'");
      continue;
    }
    if (line.front() == '#') continue;
    if (!cur.open)
      throw parse_error(name, line_no, "token line before any document header");
    const auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw parse_error(name, line_no,
                        "expected 3 tab-separated fields, got " +
                            std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty())
      throw parse_error(name, line_no, "empty surface or lemma field");
    Token token;
    token.surface = fields[0];
    token.lemma = fields[1];
    if (const auto tag = parse_pos_tag(fields[2])) {
      token.pos = *tag;
    } else {
      token.pos = PosTag::Other;
      result.warnings.push_back(name + ":" + std::to_string(line_no) +
                                ": unknown pos tag '" + std::string(fields[2]) +
                                "', treated as OTHER");
    }
    if (aliases != nullptr) {
      token.surface = aliases->apply(token.surface);
      token.lemma = aliases->apply(token.lemma);
    }
    cur.doc.tokens.push_back(std::move(token));
  }
  finish_doc();
  return result;
}

ParseResult parse_tagged_file(const std::string& path, const AliasMap* aliases) {
  std::ifstream in = open_or_throw(path);
  return parse_tagged(in, path, aliases);
}

void emit_tagged(const std::vector<Document>& docs, std::ostream& out) {
  for (const Document& doc : docs) {
    out << "#doc\tid=" << doc.id << "\tauthor=" << doc.author
        << "\tperiod=" << doc.period_label;
    if (doc.date) out << "\tdate=" << doc.date->str();
    out << '\n';
    std::size_t next_break = 0;
    for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
      const Token& token = doc.tokens[t];
      out << token.surface << '\t' << token.lemma << '\t' << to_string(token.pos)
          << '\n';
      if (next_break < doc.sentence_breaks.size() &&
          doc.sentence_breaks[next_break] == t + 1) {
        out << '\n';
        ++next_break;
      }
    }
  }
}

std::string emit_tagged(const std::vector<Document>& docs) {
  std::ostringstream out;
  emit_tagged(docs, out);
  return out.str();
}

const std::set<std::string>& default_abbreviations() {
  static const std::set<std::string> abbrevs = {"M.", "Mr.", "Mme", "etc.",
                                                "U.S."};
  return abbrevs;
}

std::set<std::string> load_abbreviations(const std::string& path) {
  std::ifstream in = open_or_throw(path);
  std::set<std::string> abbrevs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    abbrevs.insert(line);
  }
  return abbrevs;
}

namespace {

bool is_terminator_char(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

// Longest abbreviation matching at byte i whose end is not glued to a
// letter or digit; empty when none matches.
std::string_view match_abbreviation(std::string_view text, std::size_t i,
                                    const std::set<std::string>& abbreviations) {
  std::string_view best;
  for (const std::string& abbrev : abbreviations) {
    if (abbrev.size() <= best.size()) continue;
    if (text.compare(i, abbrev.size(), abbrev) != 0) continue;
    const std::size_t end = i + abbrev.size();
    if (end < text.size()) {
      std::size_t j = end;
      const char32_t next = utf8_next(text, j);
      if (is_letter(next) || is_digit(next)) continue;
    }
    best = std::string_view(text).substr(i, abbrev.size());
  }
  return best;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text,
                            const std::set<std::string>& abbreviations) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    const char32_t cp = utf8_next(text, i);
    if (is_space(cp)) continue;
    if (is_letter(cp)) {
      if (const auto abbrev = match_abbreviation(text, start, abbreviations);
          !abbrev.empty()) {
        tokens.push_back(
            {std::string(abbrev), lowercase(abbrev), PosTag::Other});
        i = start + abbrev.size();
        continue;
      }
      std::size_t end = i;
      while (end < text.size()) {
        std::size_t peek = end;
        const char32_t next = utf8_next(text, peek);
        if (is_letter(next)) {
          end = peek;
          continue;
        }
        if ((is_apostrophe(next) || next == U'-') && peek < text.size()) {
          std::size_t after = peek;
          if (is_letter(utf8_next(text, after))) {
            end = peek;
            continue;
          }
        }
        break;
      }
      const std::string_view surface = text.substr(start, end - start);
      tokens.push_back({std::string(surface), lowercase(surface), PosTag::Other});
      i = end;
      continue;
    }
    if (is_digit(cp)) {
      std::size_t end = i;
      while (end < text.size()) {
        std::size_t peek = end;
        const char32_t next = utf8_next(text, peek);
        if (is_digit(next)) {
          end = peek;
          continue;
        }
        if ((next == U'.' || next == U',') && peek < text.size()) {
          std::size_t after = peek;
          if (is_digit(utf8_next(text, after))) {
            end = peek;
            continue;
          }
        }
        break;
      }
      const std::string_view surface = text.substr(start, end - start);
      tokens.push_back({std::string(surface), std::string(surface), PosTag::Num});
      i = end;
      continue;
    }
    if (is_terminator_char(cp)) {
      std::size_t end = i;
      while (end < text.size()) {
        std::size_t peek = end;
        if (!is_terminator_char(utf8_next(text, peek))) break;
        end = peek;
      }
      const std::string_view surface = text.substr(start, end - start);
      tokens.push_back(
          {std::string(surface), std::string(surface), PosTag::Punct});
      i = end;
      continue;
    }
    const std::string_view surface = text.substr(start, i - start);
    tokens.push_back({std::string(surface), std::string(surface), PosTag::Punct});
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  return tokenize(text, default_abbreviations());
}

namespace {

bool is_terminator_token(const Token& token) {
  if (token.pos != PosTag::Punct || token.surface.empty()) return false;
  std::size_t i = 0;
  while (i < token.surface.size()) {
    if (!is_terminator_char(utf8_next(token.surface, i))) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> segment_sentences(
    const std::vector<Token>& tokens,
    const std::set<std::string>& abbreviations) {
  std::vector<std::size_t> breaks;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!is_terminator_token(tokens[i])) continue;
    if (tokens[i].surface == ".") {
      const Token* word = nullptr;
      for (std::size_t j = i; j-- > 0;) {
        if (tokens[j].is_word()) {
          word = &tokens[j];
          break;
        }
        if (is_terminator_token(tokens[j])) break;
      }
      if (word != nullptr && (abbreviations.contains(word->surface) ||
                              abbreviations.contains(word->surface + ".")))
        continue;
    }
    breaks.push_back(i + 1);
  }
  if (!tokens.empty() && (breaks.empty() || breaks.back() != tokens.size()))
    breaks.push_back(tokens.size());
  return breaks;
}

}  // namespace rhetorica
