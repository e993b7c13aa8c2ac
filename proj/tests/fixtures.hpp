#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rhetorica/corpus.hpp"
#include "rhetorica/index.hpp"
#include "rhetorica/pos.hpp"

namespace fixtures {

// Nine word tokens plus a period, hand-counted: 6 surface types (case
// folded), 3 lexical words, 26 letters, one 9-word sentence, 6 terms of
// which 3 are hapaxes.
inline rhetorica::Document harsh_law_doc() {
  using rhetorica::PosTag;
  rhetorica::Document doc;
  doc.id = "law";
  doc.author = "anon";
  doc.period_label = "p1";
  doc.tokens = {
      {"The", "the", PosTag::Det},  {"law", "law", PosTag::Noun},
      {"is", "be", PosTag::Aux},    {"harsh", "harsh", PosTag::Adj},
      {"but", "but", PosTag::Conj}, {"it", "it", PosTag::Pron},
      {"is", "be", PosTag::Aux},    {"the", "the", PosTag::Det},
      {"law", "law", PosTag::Noun}, {".", ".", PosTag::Punct},
  };
  doc.sentence_breaks = {doc.tokens.size()};
  return doc;
}

inline std::string lower_tag(rhetorica::PosTag tag) {
  std::string s(rhetorica::to_string(tag));
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Deterministic random tagged corpus covering every tag.
inline std::vector<rhetorica::Document> random_corpus(
    std::uint32_t seed, std::size_t doc_count, std::size_t tokens_per_doc) {
  using rhetorica::Document;
  using rhetorica::PosTag;
  using rhetorica::Token;
  std::mt19937 rng(seed);
  const PosTag tags[] = {PosTag::Noun, PosTag::Name, PosTag::Verb,
                         PosTag::Aux,  PosTag::Adj,  PosTag::Adv,
                         PosTag::Prep, PosTag::Conj, PosTag::Det,
                         PosTag::Pron, PosTag::Num,  PosTag::Punct,
                         PosTag::Other};
  std::discrete_distribution<int> tag_dist(
      {20, 5, 15, 6, 8, 6, 10, 6, 12, 8, 2, 9, 2});
  std::uniform_int_distribution<int> vocab(0, 199);
  std::uniform_int_distribution<int> sentence_len(5, 18);
  std::uniform_int_distribution<int> coin(0, 6);

  std::vector<Document> docs;
  for (std::size_t d = 0; d < doc_count; ++d) {
    Document doc;
    doc.id = "doc" + std::to_string(d);
    doc.author = "author" + std::to_string(d % 3);
    doc.period_label = "period" + std::to_string(d % 2);
    int left_in_sentence = sentence_len(rng);
    for (std::size_t t = 0; t < tokens_per_doc; ++t) {
      const PosTag tag = tags[tag_dist(rng)];
      Token tok;
      if (tag == PosTag::Punct) {
        tok = {".", ".", tag};
      } else if (tag == PosTag::Num) {
        const std::string digits = std::to_string(vocab(rng));
        tok = {digits, digits, tag};
      } else {
        const std::string lemma = lower_tag(tag) + std::to_string(vocab(rng));
        std::string surface = lemma;
        if (coin(rng) == 0)
          surface[0] = static_cast<char>(std::toupper(
              static_cast<unsigned char>(surface[0])));
        tok = {surface, lemma, tag};
      }
      doc.tokens.push_back(std::move(tok));
      if (--left_in_sentence == 0) {
        doc.sentence_breaks.push_back(doc.tokens.size());
        left_in_sentence = sentence_len(rng);
      }
    }
    if (doc.sentence_breaks.empty() ||
        doc.sentence_breaks.back() != doc.tokens.size())
      doc.sentence_breaks.push_back(doc.tokens.size());
    docs.push_back(std::move(doc));
  }
  return docs;
}

// Synthetic two-term indexes reproducing a published worked example: a name
// attested 2,897 times in a 1,038,899-token sample drawn against 75,493
// occurrences in an 18,413,088-token population.
struct WorkedExample {
  rhetorica::FrequencyIndex sample;
  rhetorica::FrequencyIndex reference;
};

inline WorkedExample worked_example() {
  using rhetorica::PosTag;
  using rhetorica::Term;
  WorkedExample out;
  out.sample.source = "sample";
  out.sample.n = 1038899;
  out.sample.nc[static_cast<std::size_t>(PosTag::Name)] = 2897;
  out.sample.nc[static_cast<std::size_t>(PosTag::Other)] = 1038899 - 2897;
  out.sample.tf[Term{"france", PosTag::Name}] = 2897;
  out.sample.tf[Term{"filler", PosTag::Other}] = 1038899 - 2897;

  out.reference.source = "all";
  out.reference.n = 18413088;
  out.reference.nc[static_cast<std::size_t>(PosTag::Name)] = 75493;
  out.reference.nc[static_cast<std::size_t>(PosTag::Other)] = 18413088 - 75493;
  out.reference.tf[Term{"france", PosTag::Name}] = 75493;
  out.reference.tf[Term{"filler", PosTag::Other}] = 18413088 - 75493;
  return out;
}

// A ~1e5-token nine-category population whose sample partition holds exactly
// one tenth of every category. All terms occur in sample and rest at the
// exact 1:9 ratio (so their expectation equals their sample count) except
// five lemmas planted at 5-10x their baseline rate, five planted at
// 0.1-0.2x, and diffuse single-sided compensator lemmas that restore each
// category's 1:9 split while staying individually insignificant.
struct PlantedCorpus {
  rhetorica::FrequencyIndex sample;
  rhetorica::FrequencyIndex reference;
  std::vector<rhetorica::Term> over;
  std::vector<rhetorica::Term> under;
  std::vector<rhetorica::Term> controls;  // proportional, population count >= 200
};

inline PlantedCorpus planted_corpus(std::uint32_t seed) {
  using rhetorica::PosTag;
  using rhetorica::Term;
  PlantedCorpus out;
  out.sample.source = "sample";
  out.reference.source = "all";
  std::mt19937 rng(seed);

  const auto add = [&out](const Term& term, std::uint64_t in_sample,
                          std::uint64_t in_rest) {
    const auto slot = static_cast<std::size_t>(term.pos);
    if (in_sample > 0) {
      out.sample.tf[term] += in_sample;
      out.sample.nc[slot] += in_sample;
      out.sample.n += in_sample;
    }
    out.reference.tf[term] += in_sample + in_rest;
    out.reference.nc[slot] += in_sample + in_rest;
    out.reference.n += in_sample + in_rest;
  };

  std::uniform_int_distribution<std::uint64_t> control_count(20, 100);
  std::uniform_int_distribution<std::uint64_t> filler_count(10, 50);
  std::uniform_real_distribution<double> over_rate(5.0, 10.0);
  std::uniform_real_distribution<double> under_rate(0.1, 0.2);

  const auto& cats = rhetorica::urn_tags();
  for (std::size_t c = 0; c < cats.size(); ++c) {
    const PosTag tag = cats[c];
    const std::string name = lower_tag(tag);
    std::int64_t imbalance = 0;  // rest mass minus nine times sample mass

    if (c < 5) {
      const std::uint64_t in_rest = 9 * 40;
      const auto in_sample =
          static_cast<std::uint64_t>(std::llround(over_rate(rng) * 40));
      const Term term{"over_" + name, tag};
      add(term, in_sample, in_rest);
      out.over.push_back(term);
      imbalance += static_cast<std::int64_t>(in_rest) -
                   9 * static_cast<std::int64_t>(in_sample);
    }
    if (c >= 4) {
      const std::uint64_t in_rest = 9 * 300;
      const auto in_sample =
          static_cast<std::uint64_t>(std::llround(under_rate(rng) * 300));
      const Term term{"under_" + name, tag};
      add(term, in_sample, in_rest);
      out.under.push_back(term);
      imbalance += static_cast<std::int64_t>(in_rest) -
                   9 * static_cast<std::int64_t>(in_sample);
    }

    const int controls_here = c < 5 ? 6 : 5;
    for (int i = 0; i < controls_here; ++i) {
      const std::uint64_t t = control_count(rng);
      const Term term{"ctl_" + name + "_" + std::to_string(i), tag};
      add(term, t, 9 * t);
      out.controls.push_back(term);
    }

    for (int i = 0; i < 12; ++i) {
      const std::uint64_t t = filler_count(rng);
      add(Term{"fill_" + name + "_" + std::to_string(i), tag}, t, 9 * t);
    }

    // Compensators: rest-only lemmas small enough that drawing none of them
    // is unremarkable, sample-only lemmas small enough that drawing all of
    // them is unremarkable.
    int b = 0;
    while (imbalance < 0) {
      const auto k = std::min<std::uint64_t>(
          30, static_cast<std::uint64_t>(-imbalance));
      add(Term{"bal_" + name + "_" + std::to_string(b++), tag}, 0, k);
      imbalance += static_cast<std::int64_t>(k);
    }
    while (imbalance > 0) {
      const std::uint64_t a = imbalance >= 18 ? 2 : 1;
      add(Term{"bal_" + name + "_" + std::to_string(b++), tag}, a, 0);
      imbalance -= 9 * static_cast<std::int64_t>(a);
    }
  }
  return out;
}

// Golden segmentation cases: expected sentence count, abbreviation spec
// ("default", "none", or "default+Extra.|Extra2."), text.
inline std::set<std::string> abbreviations_from_spec(const std::string& spec) {
  if (spec == "none") return {};
  std::set<std::string> abbrevs = rhetorica::default_abbreviations();
  if (spec == "default") return abbrevs;
  const std::string prefix = "default+";
  if (spec.rfind(prefix, 0) != 0)
    throw std::runtime_error("bad abbreviation spec: " + spec);
  std::string rest = spec.substr(prefix.size());
  std::size_t start = 0;
  while (start <= rest.size()) {
    const std::size_t bar = rest.find('|', start);
    const std::string item = rest.substr(
        start, bar == std::string::npos ? std::string::npos : bar - start);
    if (!item.empty()) abbrevs.insert(item);
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return abbrevs;
}

// Runs every golden case; returns one description per mismatch.
inline std::vector<std::string> run_segmentation_golden(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::vector<std::string> failures;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t t1 = line.find('\t');
    const std::size_t t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
      throw std::runtime_error(path + ": bad golden line " +
                               std::to_string(line_no));
    const std::size_t expected = std::stoull(line.substr(0, t1));
    const auto abbrevs =
        abbreviations_from_spec(line.substr(t1 + 1, t2 - t1 - 1));
    const std::string text = line.substr(t2 + 1);
    const auto tokens = rhetorica::tokenize(text, abbrevs);
    const auto breaks = rhetorica::segment_sentences(tokens, abbrevs);
    if (breaks.size() != expected)
      failures.push_back("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(expected) + " sentences, got " +
                         std::to_string(breaks.size()) + " for: " + text);
  }
  return failures;
}

// Writes a tagged corpus with exactly `word_tokens` word tokens (plus
// punctuation) spread over eight documents and four authors. Zipf-flavored
// vocabulary; deterministic per seed.
inline void write_corpus_file(const std::string& path, std::size_t word_tokens,
                              std::uint32_t seed) {
  using rhetorica::PosTag;
  std::mt19937 rng(seed);
  const PosTag tags[] = {PosTag::Noun, PosTag::Name, PosTag::Verb,
                         PosTag::Aux,  PosTag::Adj,  PosTag::Adv,
                         PosTag::Prep, PosTag::Conj, PosTag::Det,
                         PosTag::Pron, PosTag::Num,  PosTag::Other};
  std::discrete_distribution<int> tag_dist(
      {22, 5, 16, 6, 9, 6, 11, 6, 12, 9, 2, 1});
  const int vocab_sizes[] = {8000, 2000, 5000, 18, 4000, 1500,
                             60,   30,   40,   60, 0,    200};
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> sentence_len(8, 20);

  std::string buf;
  buf.reserve(word_tokens * 18);
  const std::size_t docs = 8;
  std::size_t emitted = 0;
  for (std::size_t d = 0; d < docs; ++d) {
    buf += "#doc\tid=doc" + std::to_string(d) + "\tauthor=a" +
           std::to_string(d % 4) + "\tperiod=p" + std::to_string(d % 2) +
           "\tdate=200" + std::to_string(d) + "-01-15\n";
    const std::size_t quota =
        d + 1 == docs ? word_tokens - emitted : word_tokens / docs;
    std::size_t in_doc = 0;
    int left = sentence_len(rng);
    bool open_sentence = false;
    while (in_doc < quota) {
      const int ti = tag_dist(rng);
      const PosTag tag = tags[ti];
      std::string lemma;
      if (tag == PosTag::Num) {
        lemma = std::to_string(1900 + static_cast<int>(unit(rng) * 200));
      } else {
        const double u = unit(rng);
        const int id = static_cast<int>(u * u * u * vocab_sizes[ti]);
        lemma = lower_tag(tag) + std::to_string(id);
      }
      std::string surface = lemma;
      if (tag == PosTag::Name)
        surface[0] = static_cast<char>(
            std::toupper(static_cast<unsigned char>(surface[0])));
      buf += surface;
      buf += '\t';
      buf += lemma;
      buf += '\t';
      buf += rhetorica::to_string(tag);
      buf += '\n';
      ++in_doc;
      ++emitted;
      open_sentence = true;
      if (--left == 0) {
        buf += ".\t.\tPUNCT\n\n";
        left = sentence_len(rng);
        open_sentence = false;
      }
    }
    if (open_sentence) buf += ".\t.\tPUNCT\n\n";
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open file");
  out << buf;
}

}  // namespace fixtures
