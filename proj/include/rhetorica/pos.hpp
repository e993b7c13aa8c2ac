#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace rhetorica {

// Normalized part-of-speech categories. Aux stays distinct from Verb so that
// density measures can treat auxiliaries as function words; for urn totals
// Aux folds into Verb (see fold_aux).
enum class PosTag : std::uint8_t {
  Noun,
  Name,
  Verb,
  Aux,
  Adj,
  Adv,
  Prep,
  Conj,
  Det,
  Pron,
  Num,
  Punct,
  Other,
};

inline constexpr std::size_t kPosTagCount = 13;

std::string_view to_string(PosTag tag);

// Recognizes the canonical tag names plus the usual Universal Dependencies
// aliases (PROPN, ADP, CCONJ, ...), case-insensitively. Returns nullopt for
// anything else; callers decide whether that is a warning or an error.
std::optional<PosTag> parse_pos_tag(std::string_view text);

// Punctuation never counts toward token totals.
constexpr bool is_word_tag(PosTag tag) { return tag != PosTag::Punct; }

// Content words: nouns, names, verbs, adjectives, adverbs. Auxiliaries,
// numbers and unclassified tokens are function words for density purposes.
constexpr bool is_lexical_tag(PosTag tag) {
  return tag == PosTag::Noun || tag == PosTag::Name || tag == PosTag::Verb ||
         tag == PosTag::Adj || tag == PosTag::Adv;
}

constexpr PosTag fold_aux(PosTag tag) {
  return tag == PosTag::Aux ? PosTag::Verb : tag;
}

// The nine sampling urns: nouns, names, verbs (with auxiliaries folded in),
// adjectives, adverbs, prepositions, conjunctions, determiners, pronouns.
// Num, Punct and Other belong to no urn.
constexpr bool is_urn_tag(PosTag tag) {
  switch (fold_aux(tag)) {
    case PosTag::Noun:
    case PosTag::Name:
    case PosTag::Verb:
    case PosTag::Adj:
    case PosTag::Adv:
    case PosTag::Prep:
    case PosTag::Conj:
    case PosTag::Det:
    case PosTag::Pron:
      return true;
    default:
      return false;
  }
}

const std::array<PosTag, 9>& urn_tags();

}  // namespace rhetorica
