#include "rhetorica/index.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace rhetorica {

namespace {

constexpr std::string_view kMagic = "rhetorica-index";
constexpr std::string_view kVersion = "v1";

std::uint64_t parse_count(std::string_view text, const std::string& name,
                          std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw parse_error(name, line_no, "invalid count '" + std::string(text) + "'");
  return value;
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

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::uint64_t FrequencyIndex::tf_of(std::string_view lemma, PosTag pos) const {
  const auto it = tf.find(Term{std::string(lemma), fold_aux(pos)});
  return it == tf.end() ? 0 : it->second;
}

std::uint64_t FrequencyIndex::lexical_count() const {
  return nc_of(PosTag::Noun) + nc_of(PosTag::Name) +
         (nc_of(PosTag::Verb) - nc_of(PosTag::Aux)) + nc_of(PosTag::Adj) +
         nc_of(PosTag::Adv);
}

std::uint64_t FrequencyIndex::function_word_count() const {
  return nc_of(PosTag::Aux) + nc_of(PosTag::Prep) + nc_of(PosTag::Conj) +
         nc_of(PosTag::Det) + nc_of(PosTag::Pron) + nc_of(PosTag::Num) +
         nc_of(PosTag::Other);
}

void FrequencyIndex::add_token(const Token& token) {
  nc[static_cast<std::size_t>(token.pos)] += 1;
  if (token.pos == PosTag::Punct) return;
  if (token.pos == PosTag::Aux) nc[static_cast<std::size_t>(PosTag::Verb)] += 1;
  n += 1;
  tf[Term{token.lemma, fold_aux(token.pos)}] += 1;
}

FrequencyIndex& FrequencyIndex::operator+=(const FrequencyIndex& other) {
  n += other.n;
  for (std::size_t i = 0; i < kPosTagCount; ++i) nc[i] += other.nc[i];
  for (const auto& [term, count] : other.tf) tf[term] += count;
  return *this;
}

bool FrequencyIndex::dominates(const FrequencyIndex& sub) const {
  if (sub.n > n) return false;
  for (std::size_t i = 0; i < kPosTagCount; ++i)
    if (sub.nc[i] > nc[i]) return false;
  for (const auto& [term, count] : sub.tf) {
    const auto it = tf.find(term);
    if (it == tf.end() || count > it->second) return false;
  }
  return true;
}

FrequencyIndex build_index(const std::vector<Document>& docs,
                           const Partition& partition) {
  std::unordered_set<std::string_view> wanted(partition.doc_ids.begin(),
                                              partition.doc_ids.end());
  std::unordered_set<std::string_view> known;
  known.reserve(docs.size());
  for (const Document& doc : docs) known.insert(doc.id);
  std::string missing;
  for (const std::string& id : partition.doc_ids) {
    if (known.contains(id)) continue;
    if (!missing.empty()) missing += ", ";
    missing += id;
  }
  if (!missing.empty())
    throw std::invalid_argument("unknown document ids: " + missing);

  FrequencyIndex index;
  index.source = partition.label;
  for (const Document& doc : docs) {
    if (!wanted.contains(doc.id)) continue;
    for (const Token& token : doc.tokens) index.add_token(token);
  }
  return index;
}

FrequencyIndex build_index(const std::vector<Document>& docs,
                           std::string label) {
  FrequencyIndex index;
  index.source = std::move(label);
  for (const Document& doc : docs)
    for (const Token& token : doc.tokens) index.add_token(token);
  return index;
}

std::string index_to_string(const FrequencyIndex& index) {
  std::string out;
  out.reserve(64 + index.tf.size() * 24);
  out.append(kMagic);
  out.push_back('\t');
  out.append(kVersion);
  out.append("\tpartition=");
  out.append(index.source);
  out.push_back('\n');
  out.append("n\t").append(std::to_string(index.n)).push_back('\n');
  for (std::size_t i = 0; i < kPosTagCount; ++i) {
    out.append("nc\t");
    out.append(to_string(static_cast<PosTag>(i)));
    out.push_back('\t');
    out.append(std::to_string(index.nc[i]));
    out.push_back('\n');
  }
  for (const auto& [term, count] : index.tf) {
    out.append("tf\t");
    out.append(term.lemma);
    out.push_back('\t');
    out.append(to_string(term.pos));
    out.push_back('\t');
    out.append(std::to_string(count));
    out.push_back('\n');
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "checksum\t%016llx",
                static_cast<unsigned long long>(fnv1a64(out)));
  out.append(buf);
  out.push_back('\n');
  return out;
}

void save_index(const FrequencyIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  const std::string content = index_to_string(index);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error(path + ": write failed");
}

FrequencyIndex parse_index(std::string_view content, const std::string& name) {
  FrequencyIndex index;
  bool saw_header = false;
  bool saw_n = false;
  bool saw_checksum = false;
  std::array<bool, kPosTagCount> saw_nc{};
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset < content.size()) {
    const std::size_t line_start = offset;
    std::size_t eol = content.find('\n', offset);
    if (eol == std::string_view::npos) eol = content.size();
    const std::string_view line = content.substr(offset, eol - offset);
    offset = eol + 1;
    ++line_no;
    if (saw_checksum && !line.empty())
      throw parse_error(name, line_no, "content after checksum line");
    if (saw_checksum || (line.empty() && offset >= content.size())) continue;
    const auto fields = split_tabs(line);
    if (!saw_header) {
      if (fields.size() != 3 || fields[0] != kMagic)
        throw parse_error(name, line_no, "not a rhetorica index file");
      if (fields[1] != kVersion)
        throw parse_error(name, line_no,
                          "unsupported index version '" + std::string(fields[1]) +
                              "'");
      if (fields[2].rfind("partition=", 0) != 0)
        throw parse_error(name, line_no, "missing partition label");
      index.source = fields[2].substr(10);
      saw_header = true;
      continue;
    }
    if (fields[0] == "n") {
      if (fields.size() != 2 || saw_n)
        throw parse_error(name, line_no, "malformed or repeated n line");
      index.n = parse_count(fields[1], name, line_no);
      saw_n = true;
    } else if (fields[0] == "nc") {
      if (fields.size() != 3)
        throw parse_error(name, line_no, "malformed nc line");
      const auto tag = parse_pos_tag(fields[1]);
      if (!tag)
        throw parse_error(name, line_no,
                          "unknown pos tag '" + std::string(fields[1]) + "'");
      const auto slot = static_cast<std::size_t>(*tag);
      if (saw_nc[slot])
        throw parse_error(name, line_no,
                          "repeated nc line for tag '" + std::string(fields[1]) +
                              "'");
      saw_nc[slot] = true;
      index.nc[slot] = parse_count(fields[2], name, line_no);
    } else if (fields[0] == "tf") {
      if (fields.size() != 4 || fields[1].empty())
        throw parse_error(name, line_no, "malformed tf line");
      const auto tag = parse_pos_tag(fields[2]);
      if (!tag)
        throw parse_error(name, line_no,
                          "unknown pos tag '" + std::string(fields[2]) + "'");
      const Term term{std::string(fields[1]), *tag};
      if (index.tf.contains(term))
        throw parse_error(name, line_no, "repeated tf line");
      index.tf[term] = parse_count(fields[3], name, line_no);
    } else if (fields[0] == "checksum") {
      if (fields.size() != 2)
        throw parse_error(name, line_no, "malformed checksum line");
      std::uint64_t stated = 0;
      const std::string_view hex = fields[1];
      const auto [ptr, ec] =
          std::from_chars(hex.data(), hex.data() + hex.size(), stated, 16);
      if (ec != std::errc() || ptr != hex.data() + hex.size())
        throw parse_error(name, line_no, "malformed checksum line");
      const std::uint64_t actual = fnv1a64(content.substr(0, line_start));
      if (stated != actual)
        throw parse_error(name, line_no, "checksum mismatch");
      saw_checksum = true;
    } else {
      throw parse_error(name, line_no,
                        "unknown record '" + std::string(fields[0]) + "'");
    }
  }
  if (!saw_header) throw parse_error(name, 1, "not a rhetorica index file");
  if (!saw_n) throw parse_error(name, line_no, "missing n line");
  if (!saw_checksum) throw parse_error(name, line_no, "missing checksum line");
  std::uint64_t tf_total = 0;
  for (const auto& [term, count] : index.tf) tf_total += count;
  if (tf_total != index.n)
    throw parse_error(name, line_no, "tf counts do not sum to n");
  return index;
}

FrequencyIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_index(buffer.str(), path);
}

}  // namespace rhetorica
