#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rhetorica/corpus.hpp"
#include "rhetorica/pos.hpp"

namespace rhetorica {

// Index key. Keys are AUX-folded: an auxiliary token counts under its verb
// lemma's Verb entry.
struct Term {
  std::string lemma;
  PosTag pos = PosTag::Other;

  auto operator<=>(const Term&) const = default;
};

struct Partition {
  std::string label;
  std::vector<std::string> doc_ids;
};

// Per-partition frequency counts.
//
// n counts word tokens only (everything but Punct). nc counts tokens per
// tag with two conventions worth knowing: nc[Verb] includes auxiliaries
// (urn totals want them folded) while nc[Aux] still holds the auxiliary
// count alone (density measures want them separable); nc[Punct] counts
// punctuation even though it is outside n. tf holds word terms only,
// keyed by (lemma, folded tag).
class FrequencyIndex {
 public:
  std::string source;
  std::uint64_t n = 0;
  std::array<std::uint64_t, kPosTagCount> nc{};
  std::map<Term, std::uint64_t> tf;

  std::uint64_t types() const { return tf.size(); }
  std::uint64_t nc_of(PosTag tag) const {
    return nc[static_cast<std::size_t>(tag)];
  }
  std::uint64_t tf_of(std::string_view lemma, PosTag pos) const;

  // Lexical words: nouns, names, adjectives, adverbs, non-auxiliary verbs.
  std::uint64_t lexical_count() const;
  // Counted independently over the non-lexical word tags; lexical_count()
  // + function_word_count() == n holds as an integer identity.
  std::uint64_t function_word_count() const;

  void add_token(const Token& token);

  FrequencyIndex& operator+=(const FrequencyIndex& other);
  friend FrequencyIndex operator+(FrequencyIndex lhs,
                                  const FrequencyIndex& rhs) {
    lhs += rhs;
    return lhs;
  }

  bool operator==(const FrequencyIndex&) const = default;

  // Element-wise domination: true when sub could be a sub-partition of
  // *this (every count of sub bounded by the matching count here).
  bool dominates(const FrequencyIndex& sub) const;
};

// Unknown partition document ids throw std::invalid_argument listing them.
FrequencyIndex build_index(const std::vector<Document>& docs,
                           const Partition& partition);
FrequencyIndex build_index(const std::vector<Document>& docs,
                           std::string label);

// Index file format (UTF-8, LF, tab-separated):
//   rhetorica-index<TAB>v1<TAB>partition=<label>
//   n<TAB><count>
//   nc<TAB><TAG><TAB><count>      (one per tag, enum order)
//   tf<TAB><lemma><TAB><TAG><TAB><count>   (sorted by lemma, tag)
//   checksum<TAB><16 hex digits>
// The checksum is FNV-1a 64 over every byte of the file before the
// checksum line. load_index rejects version or checksum mismatches.
std::string index_to_string(const FrequencyIndex& index);
void save_index(const FrequencyIndex& index, const std::string& path);
FrequencyIndex parse_index(std::string_view content,
                           const std::string& name = "<index>");
FrequencyIndex load_index(const std::string& path);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace rhetorica
