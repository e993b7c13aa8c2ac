#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rhetorica/charvocab.hpp"
#include "rhetorica/corpus.hpp"
#include "rhetorica/index.hpp"

namespace rhetorica {

enum class TtrBasis : std::uint8_t { Surface, Lemma };

std::string_view to_string(TtrBasis basis);

struct MetricsOptions {
  std::size_t window_size = 10000;
  std::size_t bw_threshold = 6;  // letters
  TtrBasis ttr_basis = TtrBasis::Surface;
  std::vector<double> quantiles = {0.25, 0.5, 0.75};
};

struct TtrResult {
  double ratio = 0.0;
  std::size_t windows_used = 0;
  bool sub_window = false;  // stream shorter than one window; whole-stream TTR
};

struct SentenceStats {
  double mean = 0.0;
  std::uint64_t median = 0;  // upper median, always an attained length
  std::map<double, std::uint64_t> quantiles;
  std::size_t sentences = 0;
};

struct MetricsReport {
  std::string partition;
  std::uint64_t n = 0;
  std::uint64_t types = 0;
  TtrResult ttr;
  double ld = 0.0;
  double bw = 0.0;
  double mean_word_length = 0.0;
  SentenceStats msl;
  double hapax_density = 0.0;
  MetricsOptions options;
};

// The subset recoverable from a bare index (no token order, surfaces or
// sentence boundaries survive indexing).
struct IndexMetrics {
  std::string partition;
  std::uint64_t n = 0;
  std::uint64_t types = 0;
  double ld = 0.0;
  double hapax_density = 0.0;
};

// Share of lexical words among word tokens. Throws std::invalid_argument
// when the index is empty.
double lexical_density(const FrequencyIndex& index);
// Complement route, computed from the function-word counts themselves.
double function_word_ratio(const FrequencyIndex& index);

// Word-token forms of the partition in document order, for TTR. Surface
// basis lowercases (a sentence-initial capital is the same word-type);
// lemma basis uses lemmas verbatim.
std::vector<std::string> word_stream(const std::vector<Document>& docs,
                                     TtrBasis basis);

// Mean types-per-window over consecutive non-overlapping windows of exactly
// `window` tokens; a trailing partial window is dropped. Streams shorter
// than one window fall back to whole-stream TTR with the sub_window flag.
// Throws std::invalid_argument on an empty stream or zero window.
TtrResult windowed_ttr(std::span<const std::string> stream,
                       std::size_t window = 10000);

// Fraction of word tokens whose surface has >= threshold letters. Throws
// std::invalid_argument when there are no word tokens.
double big_word_ratio(const std::vector<Document>& docs,
                      std::size_t threshold = 6);
double big_word_ratio(std::span<const Token> tokens, std::size_t threshold = 6);

// Throws std::invalid_argument when there are no word tokens.
double mean_word_length(const std::vector<Document>& docs);
double mean_word_length(std::span<const Token> tokens);

// Word tokens per sentence. Sentences with no word tokens are skipped; the
// median is the upper median and quantile values are attained lengths.
// Throws std::invalid_argument when no sentence has a word token.
SentenceStats sentence_length_stats(const std::vector<Document>& docs,
                                    const std::vector<double>& quantiles = {
                                        0.25, 0.5, 0.75});

// Share of terms occurring exactly once among distinct terms. Throws
// std::invalid_argument when the index is empty.
double hapax_density(const FrequencyIndex& index);

struct PronounRow {
  std::string lemma;
  std::uint64_t tf1 = 0;
  double percent = 0.0;  // of all pronoun tokens in the sample
  double expected = 0.0;
  Classification classification = Classification::Typical;
};

struct PronounProfile {
  std::vector<PronounRow> rows;  // watch-list order
  std::uint64_t pronoun_tokens = 0;
};

const std::vector<std::string>& default_pronoun_watchlist();  // nous je il vous

// Relative frequency of each watched lemma among the sample's pronoun
// tokens, classified on the pronoun urn against the reference. A lemma the
// whole population lacks is reported as 0% / C=. Throws
// std::invalid_argument when the sample has no pronoun tokens.
PronounProfile pronoun_profile(const FrequencyIndex& sample,
                               const FrequencyIndex& reference,
                               const std::vector<std::string>& watch =
                                   default_pronoun_watchlist(),
                               double alpha = 0.01,
                               ReferenceMode mode = ReferenceMode::Inclusive);

// Bundles the full measurement set for one partition. The index must be the
// one built from docs.
MetricsReport metrics_report(const std::vector<Document>& docs,
                             const FrequencyIndex& index,
                             const MetricsOptions& options = {});

IndexMetrics index_metrics(const FrequencyIndex& index);

}  // namespace rhetorica
