#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "rhetorica/charvocab.hpp"
#include "rhetorica/corpus.hpp"
#include "rhetorica/index.hpp"
#include "rhetorica/metrics.hpp"
#include "rhetorica/report.hpp"

namespace fs = std::filesystem;
using namespace rhetorica;

namespace {

// Command-line problems found after CLI11 parsing (bad flag combinations,
// malformed selector values). Exit 1, like CLI11's own parse errors; data
// problems exit 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      parts.emplace_back(text.substr(start));
      break;
    }
    parts.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return parts;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> parts;
  for (std::string& p : split(text, ','))
    if (!p.empty()) parts.push_back(std::move(p));
  return parts;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string file_stem(const std::string& path) {
  std::string stem = fs::path(path).stem().string();
  return stem.empty() ? path : stem;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::set<PosTag> parse_pos_list(const std::string& list) {
  std::set<PosTag> tags;
  for (const std::string& name : split_list(list)) {
    const auto tag = parse_pos_tag(name);
    if (!tag) throw usage_error("unknown pos tag '" + name + "'");
    tags.insert(*tag);
  }
  if (tags.empty()) throw usage_error("empty pos list");
  return tags;
}

std::vector<std::string> parse_watch_list(const std::string& list) {
  std::vector<std::string> watch = split_list(list);
  if (watch.empty()) throw usage_error("empty watch list");
  return watch;
}

std::optional<AliasMap> load_alias_option(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return AliasMap::load(path);
}

std::set<std::string> load_abbrev_option(const std::string& path) {
  if (path.empty()) return default_abbreviations();
  return load_abbreviations(path);
}

bool is_index_path(const std::string& path) {
  return fs::path(path).extension() == ".idx";
}

// Flag values arrive pre-checked by CLI::IsMember; these map the string
// onto the enum the library wants.
OutputFormat parse_format(const std::string& name) {
  return name == "json" ? OutputFormat::Json : OutputFormat::Tsv;
}

UrnModel parse_model(const std::string& name) {
  return name == "single" ? UrnModel::SingleUrn : UrnModel::NineUrn;
}

ReferenceMode parse_mode(const std::string& name) {
  return name == "exclusive" ? ReferenceMode::Exclusive
                             : ReferenceMode::Inclusive;
}

TtrBasis parse_basis(const std::string& name) {
  return name == "lemma" ? TtrBasis::Lemma : TtrBasis::Surface;
}

// Inputs may be prebuilt .idx files or tagged corpora; a tagged file
// becomes one partition named after the file.
FrequencyIndex load_any_index(const std::string& path,
                              const AliasMap* aliases) {
  if (is_index_path(path)) return load_index(path);
  ParseResult parsed = parse_tagged_file(path, aliases);
  print_warnings(parsed.warnings);
  return build_index(parsed.documents, file_stem(path));
}

void emit(const std::string& text) { std::cout << text; }

// ---------------------------------------------------------------- ingest

struct PartitionSpec {
  std::string label;
  std::string author;
  std::optional<Date> from;
  std::optional<Date> to;
};

PartitionSpec parse_partition_spec(const std::string& spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
    throw usage_error("bad partition spec '" + spec +
                      "': want LABEL=AUTHOR or LABEL=AUTHOR:FROM:TO");
  PartitionSpec p;
  p.label = spec.substr(0, eq);
  const std::vector<std::string> parts = split(spec.substr(eq + 1), ':');
  if (parts.size() != 1 && parts.size() != 3)
    throw usage_error("bad partition spec '" + spec +
                      "': want LABEL=AUTHOR or LABEL=AUTHOR:FROM:TO");
  p.author = parts[0];
  if (p.author.empty())
    throw usage_error("bad partition spec '" + spec + "': empty author");
  if (parts.size() == 3) {
    p.from = Date::parse(parts[1]);
    p.to = Date::parse(parts[2]);
    if (!p.from || !p.to)
      throw usage_error("bad partition spec '" + spec +
                        "': dates must be YYYY-MM-DD");
    if (*p.to < *p.from)
      throw usage_error("bad partition spec '" + spec + "': empty date range");
  }
  return p;
}

std::string sanitize_label(const std::string& label) {
  std::string out;
  for (const char c : label) {
    const bool keep = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '.' || c == '_' ||
                      c == '-';
    out.push_back(keep ? c : '_');
  }
  if (out.empty()) out = "_";
  return out;
}

struct IngestOpts {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::string by = "author";
  std::vector<std::string> partition_specs;
  std::string aliases_path;
  std::string format = "tsv";
};

int run_ingest(const IngestOpts& opts) {
  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;

  std::vector<Document> docs;
  std::unordered_set<std::string> seen_ids;
  for (const std::string& path : opts.inputs) {
    ParseResult parsed = parse_tagged_file(path, alias_ptr);
    print_warnings(parsed.warnings);
    for (Document& doc : parsed.documents) {
      if (!seen_ids.insert(doc.id).second)
        throw std::runtime_error(path + ": duplicate document id '" + doc.id +
                                 "'");
      docs.push_back(std::move(doc));
    }
  }

  std::vector<Partition> partitions;
  if (!opts.partition_specs.empty()) {
    for (const std::string& spec_text : opts.partition_specs) {
      const PartitionSpec spec = parse_partition_spec(spec_text);
      Partition part{spec.label, {}};
      for (const Document& doc : docs) {
        if (doc.author != spec.author) continue;
        if (spec.from && (!doc.date || *doc.date < *spec.from ||
                          *spec.to < *doc.date))
          continue;
        part.doc_ids.push_back(doc.id);
      }
      partitions.push_back(std::move(part));
    }
  } else {
    std::map<std::string, Partition> grouped;
    for (const Document& doc : docs) {
      const std::string& key =
          opts.by == "period" ? doc.period_label : doc.author;
      const auto it = grouped.try_emplace(key, Partition{key, {}}).first;
      it->second.doc_ids.push_back(doc.id);
    }
    for (auto& [key, part] : grouped) partitions.push_back(std::move(part));
  }

  fs::create_directories(opts.out_dir);
  std::unordered_map<std::string, std::string> used_names;
  std::vector<ManifestRow> manifest;
  for (const Partition& part : partitions) {
    if (part.doc_ids.empty()) {
      std::cerr << "warning: partition '" << part.label
                << "' matches no documents, skipped\n";
      continue;
    }
    const std::string name = sanitize_label(part.label) + ".idx";
    if (const auto [it, fresh] = used_names.try_emplace(name, part.label);
        !fresh)
      throw std::runtime_error("partition labels '" + it->second + "' and '" +
                               part.label + "' map to the same index file '" +
                               name + "'");
    const FrequencyIndex index = build_index(docs, part);
    const std::string file = (fs::path(opts.out_dir) / name).string();
    save_index(index, file);
    manifest.push_back(
        {part.label, part.doc_ids.size(), index.n, index.types(), file});
  }

  emit(parse_format(opts.format) == OutputFormat::Tsv
           ? manifest_tsv(manifest)
           : manifest_json(manifest));
  return 0;
}

// --------------------------------------------------------------- metrics

struct MetricsCmdOpts {
  std::vector<std::string> inputs;
  bool text = false;
  std::string abbrev_path;
  std::string aliases_path;
  MetricsOptions measure;
  std::string basis = "surface";
  std::string format = "tsv";
};

int run_metrics(const MetricsCmdOpts& opts) {
  const OutputFormat format = parse_format(opts.format);
  MetricsOptions measure = opts.measure;
  measure.ttr_basis = parse_basis(opts.basis);

  if (opts.text) {
    const std::set<std::string> abbrevs = load_abbrev_option(opts.abbrev_path);
    std::vector<MetricsReport> reports;
    for (const std::string& path : opts.inputs) {
      Document doc;
      doc.id = file_stem(path);
      doc.tokens = tokenize(read_file(path), abbrevs);
      doc.sentence_breaks = segment_sentences(doc.tokens, abbrevs);
      std::vector<Document> docs{std::move(doc)};
      const FrequencyIndex index = build_index(docs, file_stem(path));
      reports.push_back(metrics_report(docs, index, measure));
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const MetricsReport& a, const MetricsReport& b) {
                       return a.partition < b.partition;
                     });
    if (reports.size() == 1)
      emit(format == OutputFormat::Tsv ? metrics_tsv(reports[0], false)
                                       : metrics_json(reports[0], false));
    else
      emit(format == OutputFormat::Tsv ? metrics_table_tsv(reports, false)
                                       : metrics_table_json(reports, false));
    return 0;
  }

  std::size_t index_inputs = 0;
  for (const std::string& path : opts.inputs)
    if (is_index_path(path)) ++index_inputs;
  if (index_inputs != 0 && index_inputs != opts.inputs.size())
    throw usage_error("cannot mix index files and tagged corpora");

  if (index_inputs != 0) {
    std::vector<IndexMetrics> reports;
    for (const std::string& path : opts.inputs)
      reports.push_back(index_metrics(load_index(path)));
    std::stable_sort(reports.begin(), reports.end(),
                     [](const IndexMetrics& a, const IndexMetrics& b) {
                       return a.partition < b.partition;
                     });
    if (reports.size() == 1)
      emit(format == OutputFormat::Tsv ? index_metrics_tsv(reports[0])
                                       : index_metrics_json(reports[0]));
    else
      emit(format == OutputFormat::Tsv ? index_metrics_table_tsv(reports)
                                       : index_metrics_table_json(reports));
    return 0;
  }

  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;
  std::vector<MetricsReport> reports;
  for (const std::string& path : opts.inputs) {
    ParseResult parsed = parse_tagged_file(path, alias_ptr);
    print_warnings(parsed.warnings);
    const FrequencyIndex index =
        build_index(parsed.documents, file_stem(path));
    reports.push_back(metrics_report(parsed.documents, index, measure));
  }
  std::stable_sort(reports.begin(), reports.end(),
                   [](const MetricsReport& a, const MetricsReport& b) {
                     return a.partition < b.partition;
                   });
  if (reports.size() == 1)
    emit(format == OutputFormat::Tsv ? metrics_tsv(reports[0])
                                     : metrics_json(reports[0]));
  else
    emit(format == OutputFormat::Tsv ? metrics_table_tsv(reports)
                                     : metrics_table_json(reports));
  return 0;
}

// ------------------------------------------------- charvocab and friends

struct TermCmdOpts {
  std::string sample;
  std::string reference;
  std::string aliases_path;
  double alpha = 0.01;
  std::string model = "nine-urn";
  std::string mode = "inclusive";
  std::string pos_list;
  std::size_t top = 0;  // 0 = no truncation
  bool overused = false;
  bool names = false;
  std::string format = "tsv";
};

int run_charvocab(const TermCmdOpts& opts) {
  const OutputFormat format = parse_format(opts.format);
  const ReferenceMode mode = parse_mode(opts.mode);
  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;
  const FrequencyIndex sample = load_any_index(opts.sample, alias_ptr);
  const FrequencyIndex reference = load_any_index(opts.reference, alias_ptr);

  if (opts.names) {
    const std::size_t limit =
        opts.top == 0 ? std::numeric_limits<std::size_t>::max() : opts.top;
    const std::vector<KeynessRow> rows =
        name_frequency_table(sample, reference, limit, mode);
    emit(format == OutputFormat::Tsv ? keyness_tsv(rows) : keyness_json(rows));
    return 0;
  }

  CharVocabOptions options;
  options.alpha = opts.alpha;
  options.model = parse_model(opts.model);
  options.mode = mode;
  if (!opts.pos_list.empty()) options.pos_filter = parse_pos_list(opts.pos_list);

  std::vector<TermTest> rows = characteristic_vocabulary(sample, reference, options);
  if (opts.overused)
    std::erase_if(rows, [](const TermTest& t) {
      return t.classification != Classification::Over;
    });
  if (opts.top != 0 && rows.size() > opts.top) rows.resize(opts.top);
  emit(format == OutputFormat::Tsv ? term_tests_tsv(rows)
                                   : term_tests_json(rows));
  return 0;
}

int run_top_lemmas(const TermCmdOpts& opts) {
  const OutputFormat format = parse_format(opts.format);
  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;
  const FrequencyIndex sample = load_any_index(opts.sample, alias_ptr);
  const FrequencyIndex reference = load_any_index(opts.reference, alias_ptr);

  CharVocabOptions options;
  options.alpha = opts.alpha;
  options.model = parse_model(opts.model);
  options.mode = parse_mode(opts.mode);
  const std::set<PosTag> pos_set = parse_pos_list(opts.pos_list);
  const std::vector<TermTest> rows =
      top_overused_lemmas(sample, reference, options, pos_set, opts.top);
  emit(format == OutputFormat::Tsv ? term_tests_tsv(rows)
                                   : term_tests_json(rows));
  return 0;
}

struct PronounCmdOpts {
  std::string sample;
  std::string reference;
  std::string aliases_path;
  std::string watch = "nous,je,il,vous";
  double alpha = 0.01;
  std::string mode = "inclusive";
  std::string format = "tsv";
};

int run_pronouns(const PronounCmdOpts& opts) {
  const OutputFormat format = parse_format(opts.format);
  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;
  const FrequencyIndex sample = load_any_index(opts.sample, alias_ptr);
  const FrequencyIndex reference = load_any_index(opts.reference, alias_ptr);
  const std::vector<std::string> watch = parse_watch_list(opts.watch);

  const PronounProfile profile = pronoun_profile(
      sample, reference, watch, opts.alpha, parse_mode(opts.mode));
  const std::vector<std::string> partitions{sample.source};
  const std::vector<PronounProfile> profiles{profile};
  emit(format == OutputFormat::Tsv ? pronouns_tsv(partitions, profiles, watch)
                                   : pronouns_json(partitions, profiles, watch));
  return 0;
}

// --------------------------------------------------------------- compare

struct CompareOpts {
  std::vector<std::string> inputs;
  std::string aliases_path;
  std::string watch = "nous,je,il,vous";
  double alpha = 0.01;
  std::string mode = "inclusive";
  std::string format = "tsv";
};

int run_compare(const CompareOpts& opts) {
  if (opts.inputs.size() < 2)
    throw usage_error("compare needs at least two inputs");
  const OutputFormat format = parse_format(opts.format);
  const ReferenceMode mode = parse_mode(opts.mode);
  const std::optional<AliasMap> aliases = load_alias_option(opts.aliases_path);
  const AliasMap* alias_ptr = aliases ? &*aliases : nullptr;
  const std::vector<std::string> watch = parse_watch_list(opts.watch);

  std::vector<FrequencyIndex> indexes;
  for (const std::string& path : opts.inputs)
    indexes.push_back(load_any_index(path, alias_ptr));
  FrequencyIndex total;
  for (const FrequencyIndex& index : indexes) total += index;
  total.source = "all";

  std::vector<IndexMetrics> metrics;
  std::vector<PronounProfile> profiles;
  for (const FrequencyIndex& index : indexes) {
    metrics.push_back(index_metrics(index));
    profiles.push_back(pronoun_profile(index, total, watch, opts.alpha, mode));
  }
  emit(format == OutputFormat::Tsv ? compare_tsv(metrics, profiles, watch)
                                   : compare_json(metrics, profiles, watch));
  return 0;
}

const CLI::Validator kOpenUnit{
    [](std::string& s) -> std::string {
      try {
        if (const double v = std::stod(s); v > 0.0 && v < 1.0) return {};
      } catch (...) {
      }
      return "must be a number strictly between 0 and 1";
    },
    "FLOAT in (0,1)"};

void add_format(CLI::App* cmd, std::string& slot) {
  cmd->add_option("--format", slot, "output format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->default_str("tsv");
}

void add_alpha(CLI::App* cmd, double& slot) {
  cmd->add_option("--alpha", slot, "two-sided significance level")
      ->check(kOpenUnit)
      ->default_str("0.01");
}

void add_model(CLI::App* cmd, std::string& slot) {
  cmd->add_option("--model", slot, "urn model")
      ->check(CLI::IsMember({"single", "nine-urn"}))
      ->default_str("nine-urn");
}

void add_reference_mode(CLI::App* cmd, std::string& slot) {
  cmd->add_option("--reference", slot,
                  "reference population includes or excludes the sample")
      ->check(CLI::IsMember({"inclusive", "exclusive"}))
      ->default_str("inclusive");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corpus stylometry: overall measurements and characteristic "
               "vocabulary",
               "rhetorica"};
  app.set_config("--config")->envname("RHETORICA_CONFIG");
  app.set_version_flag("--version", "rhetorica 0.1.0");
  app.require_subcommand(1);

  IngestOpts ingest_opts;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "partition tagged corpora and write index files");
  ingest->add_option("INPUTS", ingest_opts.inputs, "tagged corpus files")
      ->required();
  ingest->add_option("--out-dir", ingest_opts.out_dir,
                     "directory for index files");
  ingest->add_option("--by", ingest_opts.by, "group documents by this field")
      ->check(CLI::IsMember({"author", "period"}))
      ->default_str("author");
  ingest->add_option("--partition", ingest_opts.partition_specs,
                     "explicit partition LABEL=AUTHOR[:FROM:TO], repeatable");
  ingest->add_option("--aliases", ingest_opts.aliases_path,
                     "spelling alias file (variant<TAB>canonical)");
  add_format(ingest, ingest_opts.format);

  MetricsCmdOpts metrics_opts;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "overall measurements per partition");
  metrics->add_option("INPUTS", metrics_opts.inputs,
                      "index files, tagged corpora, or with --text plain text")
      ->required();
  metrics->add_flag("--text", metrics_opts.text,
                    "inputs are untagged plain text");
  metrics->add_option("--abbrev", metrics_opts.abbrev_path,
                      "abbreviation list replacing the built-in set");
  metrics->add_option("--aliases", metrics_opts.aliases_path,
                      "spelling alias file (variant<TAB>canonical)");
  metrics->add_option("--window", metrics_opts.measure.window_size,
                      "TTR window size in tokens")
      ->check(CLI::PositiveNumber)
      ->default_str("10000");
  metrics->add_option("--bw-threshold", metrics_opts.measure.bw_threshold,
                      "big-word letter threshold")
      ->check(CLI::PositiveNumber)
      ->default_str("6");
  metrics->add_option("--ttr-basis", metrics_opts.basis,
                      "count types over surfaces or lemmas")
      ->check(CLI::IsMember({"surface", "lemma"}))
      ->default_str("surface");
  add_format(metrics, metrics_opts.format);

  TermCmdOpts charvocab_opts;
  CLI::App* charvocab = app.add_subcommand(
      "charvocab", "characteristic vocabulary of a sample against a reference");
  charvocab->add_option("SAMPLE", charvocab_opts.sample, "sample partition")
      ->required();
  charvocab
      ->add_option("REFERENCE", charvocab_opts.reference,
                   "reference partition (whole corpus)")
      ->required();
  add_alpha(charvocab, charvocab_opts.alpha);
  add_model(charvocab, charvocab_opts.model);
  add_reference_mode(charvocab, charvocab_opts.mode);
  charvocab->add_option("--pos", charvocab_opts.pos_list,
                        "restrict to these pos tags (comma-separated)");
  charvocab->add_option("--top", charvocab_opts.top,
                        "keep only the first N rows (0 = all)");
  CLI::Option* overused_flag = charvocab->add_flag(
      "--overused", charvocab_opts.overused, "only overused (C+) terms");
  charvocab
      ->add_flag("--names", charvocab_opts.names,
                 "most frequent proper names with relative frequencies")
      ->excludes(overused_flag);
  charvocab->add_option("--aliases", charvocab_opts.aliases_path,
                        "spelling alias file for tagged inputs");
  add_format(charvocab, charvocab_opts.format);

  PronounCmdOpts pronoun_opts;
  CLI::App* pronouns = app.add_subcommand(
      "pronouns", "personal pronoun profile of a sample against a reference");
  pronouns->add_option("SAMPLE", pronoun_opts.sample, "sample partition")
      ->required();
  pronouns
      ->add_option("REFERENCE", pronoun_opts.reference,
                   "reference partition (whole corpus)")
      ->required();
  pronouns->add_option("--watch", pronoun_opts.watch,
                       "pronoun lemmas to profile (comma-separated)")
      ->default_str("nous,je,il,vous");
  add_alpha(pronouns, pronoun_opts.alpha);
  add_reference_mode(pronouns, pronoun_opts.mode);
  pronouns->add_option("--aliases", pronoun_opts.aliases_path,
                       "spelling alias file for tagged inputs");
  add_format(pronouns, pronoun_opts.format);

  TermCmdOpts top_opts;
  top_opts.pos_list = "NOUN,ADJ,VERB";
  top_opts.top = 5;
  CLI::App* top_lemmas = app.add_subcommand(
      "top-lemmas", "most overused lemmas of a sample, by deviation");
  top_lemmas->add_option("SAMPLE", top_opts.sample, "sample partition")
      ->required();
  top_lemmas
      ->add_option("REFERENCE", top_opts.reference,
                   "reference partition (whole corpus)")
      ->required();
  top_lemmas->add_option("--pos", top_opts.pos_list,
                         "pos tags to consider (comma-separated)")
      ->default_str("NOUN,ADJ,VERB");
  top_lemmas->add_option("--top", top_opts.top, "number of lemmas to keep")
      ->check(CLI::PositiveNumber)
      ->default_str("5");
  add_alpha(top_lemmas, top_opts.alpha);
  add_model(top_lemmas, top_opts.model);
  add_reference_mode(top_lemmas, top_opts.mode);
  top_lemmas->add_option("--aliases", top_opts.aliases_path,
                         "spelling alias file for tagged inputs");
  add_format(top_lemmas, top_opts.format);

  CompareOpts compare_opts;
  CLI::App* compare = app.add_subcommand(
      "compare", "side-by-side profile of two or more partitions");
  compare->add_option("INPUTS", compare_opts.inputs,
                      "two or more partitions; the union is the reference")
      ->required();
  compare->add_option("--watch", compare_opts.watch,
                      "pronoun lemmas to profile (comma-separated)")
      ->default_str("nous,je,il,vous");
  add_alpha(compare, compare_opts.alpha);
  add_reference_mode(compare, compare_opts.mode);
  compare->add_option("--aliases", compare_opts.aliases_path,
                      "spelling alias file for tagged inputs");
  add_format(compare, compare_opts.format);

  try {
    app.parse(argc, argv);
    if (*ingest) return run_ingest(ingest_opts);
    if (*metrics) return run_metrics(metrics_opts);
    if (*charvocab) return run_charvocab(charvocab_opts);
    if (*pronouns) return run_pronouns(pronoun_opts);
    if (*top_lemmas) return run_top_lemmas(top_opts);
    if (*compare) return run_compare(compare_opts);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
