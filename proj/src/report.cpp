#include "rhetorica/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace rhetorica {

namespace {

using ordered_json = nlohmann::ordered_json;

const double kScale[7] = {1.0, 10.0, 100.0, 1000.0, 10000.0, 100000.0, 1000000.0};

std::string fmt_compact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", value);
  return buf;
}

std::string quantile_label(double q) { return "msl_q" + fmt_compact(q * 100.0); }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json metrics_object(const MetricsReport& r, bool tagged) {
  ordered_json j;
  j["partition"] = r.partition;
  j["n"] = r.n;
  if (tagged) j["types"] = r.types;
  j["ttr"] = round_places(r.ttr.ratio, 4);
  j["ttr_basis"] = std::string(to_string(r.options.ttr_basis));
  j["window_size"] = r.options.window_size;
  j["windows_used"] = r.ttr.windows_used;
  j["sub_window"] = r.ttr.sub_window;
  if (tagged) j["ld"] = round_places(r.ld, 4);
  j["bw"] = round_places(r.bw, 4);
  j["bw_threshold"] = r.options.bw_threshold;
  j["mean_word_length"] = round_places(r.mean_word_length, 2);
  j["msl_mean"] = round_places(r.msl.mean, 2);
  j["msl_median"] = r.msl.median;
  for (const auto& [q, value] : r.msl.quantiles) j[quantile_label(q)] = value;
  j["sentences"] = r.msl.sentences;
  if (tagged) j["hapax_density"] = round_places(r.hapax_density, 4);
  return j;
}

ordered_json index_metrics_object(const IndexMetrics& r) {
  ordered_json j;
  j["partition"] = r.partition;
  j["n"] = r.n;
  j["types"] = r.types;
  j["ld"] = round_places(r.ld, 4);
  j["hapax_density"] = round_places(r.hapax_density, 4);
  return j;
}

void metric_line(std::string& out, std::string_view name, std::string value,
                 std::string_view unit) {
  out.append(name);
  out.push_back('\t');
  out.append(value);
  out.push_back('\t');
  out.append(unit);
  out.push_back('\n');
}

ordered_json term_test_object(const TermTest& t) {
  ordered_json j;
  j["lemma"] = t.lemma;
  j["pos"] = std::string(to_string(t.pos));
  j["tf1"] = t.tf1;
  j["expected"] = round_places(t.expected, 2);
  j["lower"] = t.lower;
  j["upper"] = t.upper;
  j["cdf"] = round_places(t.cdf_at_tf1, 6);
  j["class"] = std::string(to_string(t.classification));
  j["deviation"] = round_places(t.deviation, 2);
  j["alpha"] = t.alpha;
  return j;
}

ordered_json pronoun_object(const std::string& partition,
                            const PronounProfile& profile) {
  ordered_json j;
  j["partition"] = partition;
  j["pronoun_tokens"] = profile.pronoun_tokens;
  ordered_json rows = ordered_json::array();
  for (const PronounRow& row : profile.rows) {
    ordered_json r;
    r["lemma"] = row.lemma;
    r["tf1"] = row.tf1;
    r["percent"] = round_places(row.percent, 2);
    r["expected"] = round_places(row.expected, 2);
    r["class"] = std::string(to_string(row.classification));
    rows.push_back(std::move(r));
  }
  j["pronouns"] = std::move(rows);
  return j;
}

}  // namespace

std::string fmt_fixed(double value, int places) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, value);
  return buf;
}

double round_places(double value, int places) {
  if (!std::isfinite(value)) return value;
  const double scale = kScale[places];
  return std::round(value * scale) / scale;
}

std::string manifest_tsv(const std::vector<ManifestRow>& rows) {
  std::string out = "partition\tdocuments\tn\ttypes\tindex\n";
  for (const ManifestRow& row : rows) {
    out.append(row.partition);
    out.push_back('\t');
    out.append(std::to_string(row.documents));
    out.push_back('\t');
    out.append(std::to_string(row.n));
    out.push_back('\t');
    out.append(std::to_string(row.types));
    out.push_back('\t');
    out.append(row.index_file);
    out.push_back('\n');
  }
  return out;
}

std::string manifest_json(const std::vector<ManifestRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const ManifestRow& row : rows) {
    ordered_json j;
    j["partition"] = row.partition;
    j["documents"] = row.documents;
    j["n"] = row.n;
    j["types"] = row.types;
    j["index"] = row.index_file;
    arr.push_back(std::move(j));
  }
  return dump(arr);
}

std::string metrics_tsv(const MetricsReport& r, bool tagged) {
  std::string out;
  metric_line(out, "partition", r.partition, "-");
  metric_line(out, "n", std::to_string(r.n), "tokens");
  if (tagged) metric_line(out, "types", std::to_string(r.types), "types");
  metric_line(out, "ttr", fmt_fixed(r.ttr.ratio, 4), "ratio");
  metric_line(out, "ttr_basis", std::string(to_string(r.options.ttr_basis)),
              "-");
  metric_line(out, "window_size", std::to_string(r.options.window_size),
              "tokens");
  metric_line(out, "windows_used", std::to_string(r.ttr.windows_used),
              "windows");
  metric_line(out, "sub_window", r.ttr.sub_window ? "true" : "false", "-");
  if (tagged) metric_line(out, "ld", fmt_fixed(r.ld, 4), "ratio");
  metric_line(out, "bw", fmt_fixed(r.bw, 4), "ratio");
  metric_line(out, "bw_threshold", std::to_string(r.options.bw_threshold),
              "letters");
  metric_line(out, "mean_word_length", fmt_fixed(r.mean_word_length, 2),
              "letters");
  metric_line(out, "msl_mean", fmt_fixed(r.msl.mean, 2), "tokens");
  metric_line(out, "msl_median", std::to_string(r.msl.median), "tokens");
  for (const auto& [q, value] : r.msl.quantiles)
    metric_line(out, quantile_label(q), std::to_string(value), "tokens");
  metric_line(out, "sentences", std::to_string(r.msl.sentences), "sentences");
  if (tagged)
    metric_line(out, "hapax_density", fmt_fixed(r.hapax_density, 4), "ratio");
  return out;
}

std::string metrics_json(const MetricsReport& r, bool tagged) {
  return dump(metrics_object(r, tagged));
}

std::string index_metrics_tsv(const IndexMetrics& r) {
  std::string out;
  metric_line(out, "partition", r.partition, "-");
  metric_line(out, "n", std::to_string(r.n), "tokens");
  metric_line(out, "types", std::to_string(r.types), "types");
  metric_line(out, "ld", fmt_fixed(r.ld, 4), "ratio");
  metric_line(out, "hapax_density", fmt_fixed(r.hapax_density, 4), "ratio");
  return out;
}

std::string index_metrics_json(const IndexMetrics& r) {
  return dump(index_metrics_object(r));
}

std::string metrics_table_tsv(const std::vector<MetricsReport>& reports,
                              bool tagged) {
  std::string out = "partition\tn";
  if (tagged) out.append("\ttypes");
  out.append("\tttr\twindows_used\tsub_window");
  if (tagged) out.append("\tld");
  out.append("\tbw\tmean_word_length\tmsl_mean\tmsl_median");
  std::vector<double> qs;
  if (!reports.empty())
    for (const auto& [q, value] : reports.front().msl.quantiles)
      qs.push_back(q);
  for (const double q : qs) out.append("\t").append(quantile_label(q));
  out.append("\tsentences");
  if (tagged) out.append("\thapax_density");
  out.push_back('\n');
  for (const MetricsReport& r : reports) {
    out.append(r.partition);
    out.push_back('\t');
    out.append(std::to_string(r.n));
    if (tagged) out.append("\t").append(std::to_string(r.types));
    out.append("\t").append(fmt_fixed(r.ttr.ratio, 4));
    out.append("\t").append(std::to_string(r.ttr.windows_used));
    out.append("\t").append(r.ttr.sub_window ? "true" : "false");
    if (tagged) out.append("\t").append(fmt_fixed(r.ld, 4));
    out.append("\t").append(fmt_fixed(r.bw, 4));
    out.append("\t").append(fmt_fixed(r.mean_word_length, 2));
    out.append("\t").append(fmt_fixed(r.msl.mean, 2));
    out.append("\t").append(std::to_string(r.msl.median));
    for (const double q : qs) {
      const auto it = r.msl.quantiles.find(q);
      out.append("\t").append(
          it == r.msl.quantiles.end() ? "-" : std::to_string(it->second));
    }
    out.append("\t").append(std::to_string(r.msl.sentences));
    if (tagged) out.append("\t").append(fmt_fixed(r.hapax_density, 4));
    out.push_back('\n');
  }
  return out;
}

std::string metrics_table_json(const std::vector<MetricsReport>& reports,
                               bool tagged) {
  ordered_json arr = ordered_json::array();
  for (const MetricsReport& r : reports) arr.push_back(metrics_object(r, tagged));
  return dump(arr);
}

std::string index_metrics_table_tsv(const std::vector<IndexMetrics>& reports) {
  std::string out = "partition\tn\ttypes\tld\thapax_density\n";
  for (const IndexMetrics& r : reports) {
    out.append(r.partition);
    out.append("\t").append(std::to_string(r.n));
    out.append("\t").append(std::to_string(r.types));
    out.append("\t").append(fmt_fixed(r.ld, 4));
    out.append("\t").append(fmt_fixed(r.hapax_density, 4));
    out.push_back('\n');
  }
  return out;
}

std::string index_metrics_table_json(const std::vector<IndexMetrics>& reports) {
  ordered_json arr = ordered_json::array();
  for (const IndexMetrics& r : reports) arr.push_back(index_metrics_object(r));
  return dump(arr);
}

std::string term_tests_tsv(const std::vector<TermTest>& rows) {
  std::string out = "lemma\tpos\ttf1\texpected\tlower\tupper\tcdf\tclass\n";
  for (const TermTest& t : rows) {
    out.append(t.lemma);
    out.append("\t").append(to_string(t.pos));
    out.append("\t").append(std::to_string(t.tf1));
    out.append("\t").append(fmt_fixed(t.expected, 2));
    out.append("\t").append(std::to_string(t.lower));
    out.append("\t").append(std::to_string(t.upper));
    out.append("\t").append(fmt_fixed(t.cdf_at_tf1, 6));
    out.append("\t").append(to_string(t.classification));
    out.push_back('\n');
  }
  return out;
}

std::string term_tests_json(const std::vector<TermTest>& rows) {
  ordered_json arr = ordered_json::array();
  for (const TermTest& t : rows) arr.push_back(term_test_object(t));
  return dump(arr);
}

std::string keyness_tsv(const std::vector<KeynessRow>& rows) {
  std::string out =
      "rank_sample\trank_reference\tlemma\trelfreq_sample\tdifference_pct\n";
  for (const KeynessRow& row : rows) {
    out.append(std::to_string(row.rank_sample));
    out.append("\t").append(std::to_string(row.rank_reference));
    out.append("\t").append(row.lemma);
    out.append("\t").append(fmt_fixed(row.relfreq_sample, 2));
    out.append("\t").append(fmt_fixed(row.difference_pct, 1));
    out.push_back('\n');
  }
  return out;
}

std::string keyness_json(const std::vector<KeynessRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const KeynessRow& row : rows) {
    ordered_json j;
    j["rank_sample"] = row.rank_sample;
    j["rank_reference"] = row.rank_reference;
    j["lemma"] = row.lemma;
    j["pos"] = std::string(to_string(row.pos));
    j["tf_sample"] = row.tf_sample;
    j["relfreq_sample"] = round_places(row.relfreq_sample, 2);
    j["relfreq_reference"] = round_places(row.relfreq_reference, 2);
    j["difference_pct"] = round_places(row.difference_pct, 1);
    arr.push_back(std::move(j));
  }
  return dump(arr);
}

std::string pronouns_tsv(const std::vector<std::string>& partitions,
                         const std::vector<PronounProfile>& profiles,
                         const std::vector<std::string>& watch) {
  std::string out = "lemma";
  for (const std::string& p : partitions)
    out.append("\t").append(p).append("\t").append(p).append("_class");
  out.push_back('\n');
  for (std::size_t w = 0; w < watch.size(); ++w) {
    out.append(watch[w]);
    for (const PronounProfile& profile : profiles) {
      const PronounRow& row = profile.rows[w];
      out.append("\t").append(fmt_fixed(row.percent, 2));
      out.append("\t").append(to_string(row.classification));
    }
    out.push_back('\n');
  }
  return out;
}

std::string pronouns_json(const std::vector<std::string>& partitions,
                          const std::vector<PronounProfile>& profiles,
                          const std::vector<std::string>& watch) {
  (void)watch;
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < profiles.size(); ++i)
    arr.push_back(pronoun_object(partitions[i], profiles[i]));
  return dump(arr);
}

std::string compare_tsv(const std::vector<IndexMetrics>& metrics,
                        const std::vector<PronounProfile>& profiles,
                        const std::vector<std::string>& watch) {
  std::string out = "metric";
  for (const IndexMetrics& m : metrics) out.append("\t").append(m.partition);
  out.push_back('\n');
  const auto row = [&](std::string_view name, auto&& value_of) {
    out.append(name);
    for (std::size_t i = 0; i < metrics.size(); ++i)
      out.append("\t").append(value_of(i));
    out.push_back('\n');
  };
  row("n", [&](std::size_t i) { return std::to_string(metrics[i].n); });
  row("types", [&](std::size_t i) { return std::to_string(metrics[i].types); });
  row("ld", [&](std::size_t i) { return fmt_fixed(metrics[i].ld, 4); });
  row("hapax_density",
      [&](std::size_t i) { return fmt_fixed(metrics[i].hapax_density, 4); });
  for (std::size_t w = 0; w < watch.size(); ++w) {
    row("pronoun_" + watch[w] + "_pct", [&](std::size_t i) {
      return fmt_fixed(profiles[i].rows[w].percent, 2);
    });
    row("pronoun_" + watch[w] + "_class", [&](std::size_t i) {
      return std::string(to_string(profiles[i].rows[w].classification));
    });
  }
  return out;
}

std::string compare_json(const std::vector<IndexMetrics>& metrics,
                         const std::vector<PronounProfile>& profiles,
                         const std::vector<std::string>& watch) {
  (void)watch;
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    ordered_json j = index_metrics_object(metrics[i]);
    j["pronoun_tokens"] = profiles[i].pronoun_tokens;
    ordered_json rows = ordered_json::array();
    for (const PronounRow& row : profiles[i].rows) {
      ordered_json r;
      r["lemma"] = row.lemma;
      r["percent"] = round_places(row.percent, 2);
      r["class"] = std::string(to_string(row.classification));
      rows.push_back(std::move(r));
    }
    j["pronouns"] = std::move(rows);
    arr.push_back(std::move(j));
  }
  return dump(arr);
}

}  // namespace rhetorica
