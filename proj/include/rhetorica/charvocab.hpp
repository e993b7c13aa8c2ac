#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rhetorica/index.hpp"
#include "rhetorica/pos.hpp"

namespace rhetorica {

enum class Classification : std::uint8_t { Under, Typical, Over };

std::string_view to_string(Classification c);  // "C-", "C=", "C+"

enum class UrnModel : std::uint8_t { SingleUrn, NineUrn };
enum class ReferenceMode : std::uint8_t { Inclusive, Exclusive };

std::string_view to_string(UrnModel m);
std::string_view to_string(ReferenceMode m);

// One term's over/under-use test against the reference population.
struct TermTest {
  std::string lemma;
  PosTag pos = PosTag::Other;
  std::uint64_t tf1 = 0;   // observed count in the sample
  double expected = 0.0;   // n*K/N under the urn
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  double cdf_at_tf1 = 0.0;
  double alpha = 0.0;
  Classification classification = Classification::Typical;
  // |tf1 - expected| / stddev, the ranking key. Infinite when the urn is
  // degenerate (stddev 0) yet the observation differs from the expectation.
  double deviation = 0.0;
};

// One row of a most-frequent-names table.
struct KeynessRow {
  std::string lemma;
  PosTag pos = PosTag::Name;
  std::size_t rank_sample = 0;
  std::size_t rank_reference = 0;
  std::uint64_t tf_sample = 0;
  double relfreq_sample = 0.0;     // per mille of the sample's word tokens
  double relfreq_reference = 0.0;  // per mille of the reference's word tokens
  double difference_pct = 0.0;     // 100*(sample - reference)/reference
};

struct CharVocabOptions {
  double alpha = 0.01;
  UrnModel model = UrnModel::NineUrn;
  ReferenceMode mode = ReferenceMode::Inclusive;
  std::optional<std::set<PosTag>> pos_filter;
};

// Tests one (lemma, pos) of the sample against the reference. The reference
// index is always the whole corpus, sample included; Exclusive mode
// subtracts the sample before building the urn. The term must occur in the
// effective population unless the sample itself attests it under Exclusive
// mode, in which case expected = 0 and any occurrence classifies Over.
// Throws std::domain_error when the sample is not dominated by the
// reference, or std::invalid_argument when the term cannot be tested.
TermTest classify_term(const FrequencyIndex& sample,
                       const FrequencyIndex& reference, std::string_view lemma,
                       PosTag pos, double alpha,
                       UrnModel model = UrnModel::NineUrn,
                       ReferenceMode mode = ReferenceMode::Inclusive);

// One TermTest per reference term matching the filter, sorted by deviation
// descending (ties by lemma, then tag). Under the nine-urn model terms
// outside the nine categories are skipped. No multiple-testing correction.
std::vector<TermTest> characteristic_vocabulary(const FrequencyIndex& sample,
                                                const FrequencyIndex& reference,
                                                const CharVocabOptions& options = {});

// The C+ rows of characteristic_vocabulary restricted to the given tags,
// most deviant first, truncated to limit.
std::vector<TermTest> top_overused_lemmas(const FrequencyIndex& sample,
                                          const FrequencyIndex& reference,
                                          const CharVocabOptions& options,
                                          const std::set<PosTag>& pos_set,
                                          std::size_t limit);

// Rows for the sample's `limit` most frequent Name lemmas: sample and
// reference relative frequencies in per mille of word tokens, rank in each
// corpus's Name ordering, and the percent difference against the reference
// (sample included unless Exclusive).
std::vector<KeynessRow> name_frequency_table(
    const FrequencyIndex& sample, const FrequencyIndex& reference,
    std::size_t limit, ReferenceMode mode = ReferenceMode::Inclusive);

}  // namespace rhetorica
