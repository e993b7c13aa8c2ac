#include "rhetorica/pos.hpp"

#include <cctype>
#include <string>

namespace rhetorica {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun:
      return "NOUN";
    case PosTag::Name:
      return "NAME";
    case PosTag::Verb:
      return "VERB";
    case PosTag::Aux:
      return "AUX";
    case PosTag::Adj:
      return "ADJ";
    case PosTag::Adv:
      return "ADV";
    case PosTag::Prep:
      return "PREP";
    case PosTag::Conj:
      return "CONJ";
    case PosTag::Det:
      return "DET";
    case PosTag::Pron:
      return "PRON";
    case PosTag::Num:
      return "NUM";
    case PosTag::Punct:
      return "PUNCT";
    case PosTag::Other:
      return "OTHER";
  }
  return "OTHER";
}

std::optional<PosTag> parse_pos_tag(std::string_view text) {
  std::string up;
  up.reserve(text.size());
  for (char c : text)
    up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "NOUN") return PosTag::Noun;
  if (up == "NAME" || up == "PROPN") return PosTag::Name;
  if (up == "VERB") return PosTag::Verb;
  if (up == "AUX") return PosTag::Aux;
  if (up == "ADJ") return PosTag::Adj;
  if (up == "ADV") return PosTag::Adv;
  if (up == "PREP" || up == "ADP") return PosTag::Prep;
  if (up == "CONJ" || up == "CCONJ" || up == "SCONJ") return PosTag::Conj;
  if (up == "DET") return PosTag::Det;
  if (up == "PRON") return PosTag::Pron;
  if (up == "NUM") return PosTag::Num;
  if (up == "PUNCT") return PosTag::Punct;
  if (up == "OTHER" || up == "PART" || up == "INTJ" || up == "SYM" ||
      up == "X")
    return PosTag::Other;
  return std::nullopt;
}

const std::array<PosTag, 9>& urn_tags() {
  static const std::array<PosTag, 9> tags = {
      PosTag::Noun, PosTag::Name, PosTag::Verb, PosTag::Adj, PosTag::Adv,
      PosTag::Prep, PosTag::Conj, PosTag::Det,  PosTag::Pron};
  return tags;
}

}  // namespace rhetorica
