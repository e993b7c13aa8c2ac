#include "rhetorica/charvocab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rhetorica/hypergeom.hpp"

namespace rhetorica {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Under:
      return "C-";
    case Classification::Typical:
      return "C=";
    case Classification::Over:
      return "C+";
  }
  return "C=";
}

std::string_view to_string(UrnModel m) {
  return m == UrnModel::SingleUrn ? "single" : "nine-urn";
}

std::string_view to_string(ReferenceMode m) {
  return m == ReferenceMode::Inclusive ? "inclusive" : "exclusive";
}

namespace {

// Core test, dominance already established by the caller.
TermTest test_term(const FrequencyIndex& sample, const FrequencyIndex& reference,
                   std::string_view lemma, PosTag folded, double alpha,
                   UrnModel model, ReferenceMode mode) {
  std::uint64_t population = 0;
  std::uint64_t drawn = 0;
  if (model == UrnModel::NineUrn) {
    if (!is_urn_tag(folded))
      throw std::invalid_argument("term '" + std::string(lemma) + "/" +
                                  std::string(to_string(folded)) +
                                  "' belongs to no urn category");
    population = reference.nc_of(folded);
    drawn = sample.nc_of(folded);
  } else {
    population = reference.n;
    drawn = sample.n;
  }
  const std::uint64_t tf1 = sample.tf_of(lemma, folded);
  std::uint64_t successes = reference.tf_of(lemma, folded);
  if (mode == ReferenceMode::Exclusive) {
    population -= drawn;
    successes -= tf1;
  }
  if (successes == 0 && tf1 == 0)
    throw std::invalid_argument("term '" + std::string(lemma) +
                                "' not attested in the reference population");

  const HypergeomDist dist({population, successes, drawn});
  TermTest t;
  t.lemma = lemma;
  t.pos = folded;
  t.tf1 = tf1;
  t.alpha = alpha;
  t.expected = dist.mean();
  const auto [lower, upper] = dist.confidence_interval(alpha);
  t.lower = lower;
  t.upper = upper;
  t.cdf_at_tf1 = dist.cdf(tf1);
  if (tf1 < lower) {
    t.classification = Classification::Under;
  } else if (tf1 > upper) {
    t.classification = Classification::Over;
  } else {
    t.classification = Classification::Typical;
  }
  const double sd = dist.stddev();
  const double diff = std::abs(static_cast<double>(tf1) - t.expected);
  if (sd > 0.0) {
    t.deviation = diff / sd;
  } else {
    t.deviation = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return t;
}

void require_dominance(const FrequencyIndex& sample,
                       const FrequencyIndex& reference) {
  if (!reference.dominates(sample))
    throw std::domain_error(
        "sample counts are not contained in the reference counts");
}

std::set<PosTag> folded_tags(const std::set<PosTag>& tags) {
  std::set<PosTag> out;
  for (const PosTag tag : tags) out.insert(fold_aux(tag));
  return out;
}

}  // namespace

TermTest classify_term(const FrequencyIndex& sample,
                       const FrequencyIndex& reference, std::string_view lemma,
                       PosTag pos, double alpha, UrnModel model,
                       ReferenceMode mode) {
  require_dominance(sample, reference);
  return test_term(sample, reference, lemma, fold_aux(pos), alpha, model, mode);
}

std::vector<TermTest> characteristic_vocabulary(
    const FrequencyIndex& sample, const FrequencyIndex& reference,
    const CharVocabOptions& options) {
  require_dominance(sample, reference);
  std::optional<std::set<PosTag>> filter;
  if (options.pos_filter) filter = folded_tags(*options.pos_filter);

  std::vector<TermTest> rows;
  rows.reserve(reference.tf.size());
  for (const auto& [term, tf0] : reference.tf) {
    if (filter && !filter->contains(term.pos)) continue;
    if (options.model == UrnModel::NineUrn && !is_urn_tag(term.pos)) continue;
    rows.push_back(test_term(sample, reference, term.lemma, term.pos,
                             options.alpha, options.model, options.mode));
  }
  std::sort(rows.begin(), rows.end(), [](const TermTest& a, const TermTest& b) {
    if (a.deviation != b.deviation) return a.deviation > b.deviation;
    if (a.lemma != b.lemma) return a.lemma < b.lemma;
    return a.pos < b.pos;
  });
  return rows;
}

std::vector<TermTest> top_overused_lemmas(const FrequencyIndex& sample,
                                          const FrequencyIndex& reference,
                                          const CharVocabOptions& options,
                                          const std::set<PosTag>& pos_set,
                                          std::size_t limit) {
  CharVocabOptions opts = options;
  opts.pos_filter = pos_set;
  std::vector<TermTest> rows = characteristic_vocabulary(sample, reference, opts);
  std::erase_if(rows, [](const TermTest& t) {
    return t.classification != Classification::Over;
  });
  if (rows.size() > limit) rows.resize(limit);
  return rows;
}

std::vector<KeynessRow> name_frequency_table(const FrequencyIndex& sample,
                                             const FrequencyIndex& reference,
                                             std::size_t limit,
                                             ReferenceMode mode) {
  if (sample.nc_of(PosTag::Name) == 0 || reference.nc_of(PosTag::Name) == 0)
    throw std::invalid_argument("no name tokens to rank");
  require_dominance(sample, reference);
  std::uint64_t ref_n = reference.n;
  if (mode == ReferenceMode::Exclusive) {
    ref_n -= sample.n;
    if (ref_n == 0)
      throw std::domain_error("exclusive reference population is empty");
  }

  struct Entry {
    std::string_view lemma;
    std::uint64_t count;
  };
  const auto ranked = [](std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      if (a.count != b.count) return a.count > b.count;
      return a.lemma < b.lemma;
    });
    return entries;
  };

  std::vector<Entry> sample_names;
  for (const auto& [term, count] : sample.tf)
    if (term.pos == PosTag::Name) sample_names.push_back({term.lemma, count});
  sample_names = ranked(std::move(sample_names));

  std::vector<Entry> ref_names;
  for (const auto& [term, count] : reference.tf) {
    if (term.pos != PosTag::Name) continue;
    std::uint64_t eff = count;
    if (mode == ReferenceMode::Exclusive) eff -= sample.tf_of(term.lemma, term.pos);
    if (eff > 0) ref_names.push_back({term.lemma, eff});
  }
  ref_names = ranked(std::move(ref_names));
  std::map<std::string_view, std::pair<std::size_t, std::uint64_t>> ref_rank;
  for (std::size_t i = 0; i < ref_names.size(); ++i)
    ref_rank[ref_names[i].lemma] = {i + 1, ref_names[i].count};

  std::vector<KeynessRow> rows;
  const std::size_t take = std::min(limit, sample_names.size());
  rows.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const Entry& e = sample_names[i];
    KeynessRow row;
    row.lemma = e.lemma;
    row.pos = PosTag::Name;
    row.rank_sample = i + 1;
    row.tf_sample = e.count;
    row.relfreq_sample =
        1000.0 * static_cast<double>(e.count) / static_cast<double>(sample.n);
    if (const auto it = ref_rank.find(e.lemma); it != ref_rank.end()) {
      row.rank_reference = it->second.first;
      row.relfreq_reference = 1000.0 * static_cast<double>(it->second.second) /
                              static_cast<double>(ref_n);
    }
    if (row.relfreq_reference > 0.0) {
      row.difference_pct = 100.0 *
                           (row.relfreq_sample - row.relfreq_reference) /
                           row.relfreq_reference;
    } else {
      row.difference_pct = std::numeric_limits<double>::infinity();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rhetorica
