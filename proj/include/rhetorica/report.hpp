#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhetorica/charvocab.hpp"
#include "rhetorica/metrics.hpp"

namespace rhetorica {

enum class OutputFormat : std::uint8_t { Tsv, Json };

// Fixed-point rendering used by every emitter: ratios 4 decimals, lengths
// and expectations 2, probabilities 6, per-mille 2, percent differences 1.
std::string fmt_fixed(double value, int places);

// Rounds to the given number of decimals so JSON numbers carry the same
// precision as the TSV columns. Non-finite values pass through.
double round_places(double value, int places);

struct ManifestRow {
  std::string partition;
  std::size_t documents = 0;
  std::uint64_t n = 0;
  std::uint64_t types = 0;
  std::string index_file;
};

std::string manifest_tsv(const std::vector<ManifestRow>& rows);
std::string manifest_json(const std::vector<ManifestRow>& rows);

// One metric per line: name, value, unit. With tagged = false only the
// measurements meaningful for untagged text are emitted (token counts,
// TTR, word lengths, sentence lengths); density and type measures need
// real POS tags and lemmas.
std::string metrics_tsv(const MetricsReport& report, bool tagged = true);
std::string metrics_json(const MetricsReport& report, bool tagged = true);
std::string index_metrics_tsv(const IndexMetrics& report);
std::string index_metrics_json(const IndexMetrics& report);

// Multi-partition variants: one row per partition, columns per metric.
std::string metrics_table_tsv(const std::vector<MetricsReport>& reports,
                              bool tagged = true);
std::string metrics_table_json(const std::vector<MetricsReport>& reports,
                               bool tagged = true);
std::string index_metrics_table_tsv(const std::vector<IndexMetrics>& reports);
std::string index_metrics_table_json(const std::vector<IndexMetrics>& reports);

// Columns: lemma pos tf1 expected lower upper cdf class.
std::string term_tests_tsv(const std::vector<TermTest>& rows);
std::string term_tests_json(const std::vector<TermTest>& rows);

// Columns: rank_sample rank_reference lemma relfreq_sample difference_pct;
// the JSON rows also carry the reference relative frequency and raw count.
std::string keyness_tsv(const std::vector<KeynessRow>& rows);
std::string keyness_json(const std::vector<KeynessRow>& rows);

std::string pronouns_tsv(const std::vector<std::string>& partitions,
                         const std::vector<PronounProfile>& profiles,
                         const std::vector<std::string>& watch);
std::string pronouns_json(const std::vector<std::string>& partitions,
                          const std::vector<PronounProfile>& profiles,
                          const std::vector<std::string>& watch);

// Side-by-side table, one column per partition: the index-derivable
// metrics first, then percent and flag rows per watched pronoun.
std::string compare_tsv(const std::vector<IndexMetrics>& metrics,
                        const std::vector<PronounProfile>& profiles,
                        const std::vector<std::string>& watch);
std::string compare_json(const std::vector<IndexMetrics>& metrics,
                         const std::vector<PronounProfile>& profiles,
                         const std::vector<std::string>& watch);

}  // namespace rhetorica
