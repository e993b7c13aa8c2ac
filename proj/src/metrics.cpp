#include "rhetorica/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "rhetorica/text.hpp"

namespace rhetorica {

std::string_view to_string(TtrBasis basis) {
  return basis == TtrBasis::Surface ? "surface" : "lemma";
}

double lexical_density(const FrequencyIndex& index) {
  if (index.n == 0) throw std::invalid_argument("empty index");
  return static_cast<double>(index.lexical_count()) /
         static_cast<double>(index.n);
}

double function_word_ratio(const FrequencyIndex& index) {
  if (index.n == 0) throw std::invalid_argument("empty index");
  return static_cast<double>(index.function_word_count()) /
         static_cast<double>(index.n);
}

std::vector<std::string> word_stream(const std::vector<Document>& docs,
                                     TtrBasis basis) {
  std::vector<std::string> stream;
  for (const Document& doc : docs) {
    for (const Token& token : doc.tokens) {
      if (!token.is_word()) continue;
      stream.push_back(basis == TtrBasis::Surface ? lowercase(token.surface)
                                                  : token.lemma);
    }
  }
  return stream;
}

TtrResult windowed_ttr(std::span<const std::string> stream, std::size_t window) {
  if (window == 0) throw std::invalid_argument("window size must be positive");
  if (stream.empty()) throw std::invalid_argument("empty token stream");
  TtrResult result;
  std::unordered_set<std::string_view> types;
  if (stream.size() < window) {
    types.insert(stream.begin(), stream.end());
    result.ratio =
        static_cast<double>(types.size()) / static_cast<double>(stream.size());
    result.windows_used = 1;
    result.sub_window = true;
    return result;
  }
  const std::size_t full = stream.size() / window;
  std::uint64_t type_total = 0;
  for (std::size_t w = 0; w < full; ++w) {
    types.clear();
    for (std::size_t i = w * window; i < (w + 1) * window; ++i)
      types.insert(stream[i]);
    type_total += types.size();
  }
  result.ratio = static_cast<double>(type_total) /
                 static_cast<double>(full * window);
  result.windows_used = full;
  result.sub_window = false;
  return result;
}

namespace {

struct LetterTally {
  std::uint64_t words = 0;
  std::uint64_t letters = 0;
  std::uint64_t big = 0;
};

LetterTally tally_letters(std::span<const Token> tokens, std::size_t threshold) {
  LetterTally t;
  for (const Token& token : tokens) {
    if (!token.is_word()) continue;
    const std::size_t letters = letter_count(token.surface);
    t.words += 1;
    t.letters += letters;
    if (letters >= threshold) t.big += 1;
  }
  return t;
}

LetterTally tally_letters(const std::vector<Document>& docs,
                          std::size_t threshold) {
  LetterTally t;
  for (const Document& doc : docs) {
    const LetterTally part = tally_letters(doc.tokens, threshold);
    t.words += part.words;
    t.letters += part.letters;
    t.big += part.big;
  }
  return t;
}

double big_ratio(const LetterTally& t) {
  if (t.words == 0) throw std::invalid_argument("no word tokens");
  return static_cast<double>(t.big) / static_cast<double>(t.words);
}

double mean_letters(const LetterTally& t) {
  if (t.words == 0) throw std::invalid_argument("no word tokens");
  return static_cast<double>(t.letters) / static_cast<double>(t.words);
}

}  // namespace

double big_word_ratio(const std::vector<Document>& docs, std::size_t threshold) {
  return big_ratio(tally_letters(docs, threshold));
}

double big_word_ratio(std::span<const Token> tokens, std::size_t threshold) {
  return big_ratio(tally_letters(tokens, threshold));
}

double mean_word_length(const std::vector<Document>& docs) {
  return mean_letters(tally_letters(docs, 0));
}

double mean_word_length(std::span<const Token> tokens) {
  return mean_letters(tally_letters(tokens, 0));
}

SentenceStats sentence_length_stats(const std::vector<Document>& docs,
                                    const std::vector<double>& quantiles) {
  for (const double q : quantiles)
    if (!(q >= 0.0 && q <= 1.0))
      throw std::invalid_argument("quantile outside [0,1]");
  std::vector<std::uint64_t> lengths;
  for (const Document& doc : docs) {
    std::size_t prev = 0;
    for (const std::size_t brk : doc.sentence_breaks) {
      std::uint64_t words = 0;
      for (std::size_t i = prev; i < brk; ++i)
        if (doc.tokens[i].is_word()) ++words;
      if (words > 0) lengths.push_back(words);
      prev = brk;
    }
  }
  if (lengths.empty())
    throw std::invalid_argument("no sentences with word tokens");
  std::sort(lengths.begin(), lengths.end());
  SentenceStats stats;
  stats.sentences = lengths.size();
  std::uint64_t total = 0;
  for (const std::uint64_t len : lengths) total += len;
  stats.mean =
      static_cast<double>(total) / static_cast<double>(lengths.size());
  stats.median = lengths[lengths.size() / 2];
  for (const double q : quantiles) {
    const auto pos = static_cast<std::size_t>(
        q * static_cast<double>(lengths.size()));
    stats.quantiles[q] = lengths[std::min(pos, lengths.size() - 1)];
  }
  return stats;
}

double hapax_density(const FrequencyIndex& index) {
  if (index.tf.empty()) throw std::invalid_argument("empty index");
  std::uint64_t once = 0;
  for (const auto& [term, count] : index.tf)
    if (count == 1) ++once;
  return static_cast<double>(once) / static_cast<double>(index.tf.size());
}

const std::vector<std::string>& default_pronoun_watchlist() {
  static const std::vector<std::string> watch = {"nous", "je", "il", "vous"};
  return watch;
}

PronounProfile pronoun_profile(const FrequencyIndex& sample,
                               const FrequencyIndex& reference,
                               const std::vector<std::string>& watch,
                               double alpha, ReferenceMode mode) {
  const std::uint64_t pron = sample.nc_of(PosTag::Pron);
  if (pron == 0) throw std::invalid_argument("sample has no pronoun tokens");
  PronounProfile profile;
  profile.pronoun_tokens = pron;
  for (const std::string& lemma : watch) {
    PronounRow row;
    row.lemma = lemma;
    row.tf1 = sample.tf_of(lemma, PosTag::Pron);
    row.percent =
        100.0 * static_cast<double>(row.tf1) / static_cast<double>(pron);
    if (reference.tf_of(lemma, PosTag::Pron) > 0) {
      const TermTest t = classify_term(sample, reference, lemma, PosTag::Pron,
                                       alpha, UrnModel::NineUrn, mode);
      row.expected = t.expected;
      row.classification = t.classification;
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

MetricsReport metrics_report(const std::vector<Document>& docs,
                             const FrequencyIndex& index,
                             const MetricsOptions& options) {
  MetricsReport report;
  report.partition = index.source;
  report.n = index.n;
  report.types = index.types();
  const std::vector<std::string> stream = word_stream(docs, options.ttr_basis);
  report.ttr = windowed_ttr(stream, options.window_size);
  report.ld = lexical_density(index);
  report.bw = big_word_ratio(docs, options.bw_threshold);
  report.mean_word_length = mean_word_length(docs);
  report.msl = sentence_length_stats(docs, options.quantiles);
  report.hapax_density = hapax_density(index);
  report.options = options;
  return report;
}

IndexMetrics index_metrics(const FrequencyIndex& index) {
  IndexMetrics m;
  m.partition = index.source;
  m.n = index.n;
  m.types = index.types();
  m.ld = lexical_density(index);
  m.hapax_density = hapax_density(index);
  return m;
}

}  // namespace rhetorica
