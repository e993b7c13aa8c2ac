#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "rhetorica/metrics.hpp"

using namespace rhetorica;

namespace {

Document doc_from(std::vector<Token> tokens,
                  std::vector<std::size_t> breaks) {
  Document doc;
  doc.id = "d";
  doc.author = "a";
  doc.period_label = "p";
  doc.tokens = std::move(tokens);
  doc.sentence_breaks = std::move(breaks);
  return doc;
}

}  // namespace

TEST_CASE("nine-word sentence measurements") {
  const std::vector<Document> docs = {fixtures::harsh_law_doc()};
  const FrequencyIndex idx = build_index(docs, "law");

  const MetricsReport r = metrics_report(docs, idx);
  CHECK(r.partition == "law");
  CHECK(r.n == 9);
  CHECK(r.types == 6);
  CHECK(r.ttr.ratio == 6.0 / 9.0);
  CHECK(r.ttr.windows_used == 1);
  CHECK(r.ttr.sub_window);
  CHECK(r.ld == 3.0 / 9.0);
  CHECK(r.bw == 0.0);
  CHECK(r.mean_word_length == 26.0 / 9.0);
  CHECK(r.msl.mean == 9.0);
  CHECK(r.msl.median == 9);
  CHECK(r.msl.sentences == 1);
  CHECK(r.hapax_density == 3.0 / 6.0);
  CHECK(r.options.window_size == 10000);
  CHECK(r.options.bw_threshold == 6);
}

TEST_CASE("word stream bases") {
  const std::vector<Document> docs = {fixtures::harsh_law_doc()};
  CHECK(word_stream(docs, TtrBasis::Surface) ==
        std::vector<std::string>{"the", "law", "is", "harsh", "but", "it",
                                 "is", "the", "law"});
  CHECK(word_stream(docs, TtrBasis::Lemma) ==
        std::vector<std::string>{"the", "law", "be", "harsh", "but", "it",
                                 "be", "the", "law"});

  const std::vector<Document> mixed = {doc_from(
      {{"is", "be", PosTag::Aux}, {"are", "be", PosTag::Aux}}, {2})};
  CHECK(windowed_ttr(word_stream(mixed, TtrBasis::Surface), 2).ratio == 1.0);
  CHECK(windowed_ttr(word_stream(mixed, TtrBasis::Lemma), 2).ratio == 0.5);
}

TEST_CASE("windowed ttr") {
  const std::vector<std::string> stream = {"a", "b", "c", "a", "b",
                                           "a", "a", "a", "x", "y"};
  SUBCASE("full windows") {
    const TtrResult r = windowed_ttr(stream, 5);
    CHECK(r.ratio == 6.0 / 10.0);
    CHECK(r.windows_used == 2);
    CHECK(!r.sub_window);
  }
  SUBCASE("trailing partial window is dropped") {
    std::vector<std::string> longer = stream;
    longer.insert(longer.end(), {"fresh1", "fresh2", "fresh3"});
    const TtrResult r = windowed_ttr(longer, 5);
    CHECK(r.ratio == 6.0 / 10.0);
    CHECK(r.windows_used == 2);
  }
  SUBCASE("short stream falls back to whole-stream ttr") {
    const TtrResult r = windowed_ttr(std::vector<std::string>{"a", "b", "a"}, 10);
    CHECK(r.ratio == 2.0 / 3.0);
    CHECK(r.windows_used == 1);
    CHECK(r.sub_window);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(windowed_ttr(std::vector<std::string>{}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(windowed_ttr(stream, 0), std::invalid_argument);
  }
}

TEST_CASE("letter-based measurements are utf-8 aware") {
  const std::vector<Token> words = {{"café", "café", PosTag::Noun},
                                    {"naïveté", "naïveté", PosTag::Noun},
                                    {"Straße", "straße", PosTag::Noun},
                                    {".", ".", PosTag::Punct}};
  const std::vector<Document> docs = {doc_from(words, {4})};
  CHECK(big_word_ratio(docs, 6) == 2.0 / 3.0);
  CHECK(big_word_ratio(docs, 4) == 1.0);
  CHECK(big_word_ratio(docs, 8) == 0.0);
  CHECK(mean_word_length(docs) == 17.0 / 3.0);

  const std::vector<Document> digits = {
      doc_from({{"42", "42", PosTag::Num}}, {1})};
  CHECK(mean_word_length(digits) == 0.0);

  const std::vector<Document> punct_only = {
      doc_from({{".", ".", PosTag::Punct}}, {1})};
  CHECK_THROWS_AS(big_word_ratio(punct_only, 6), std::invalid_argument);
  CHECK_THROWS_AS(mean_word_length(punct_only), std::invalid_argument);
}

TEST_CASE("sentence length statistics") {
  // Word counts per sentence: 3, 9, 1 (one punctuation-only sentence skipped).
  std::vector<Token> tokens;
  const auto word = [](const std::string& s) {
    return Token{s, s, PosTag::Noun};
  };
  for (int i = 0; i < 3; ++i) tokens.push_back(word("a"));
  tokens.push_back({".", ".", PosTag::Punct});
  for (int i = 0; i < 9; ++i) tokens.push_back(word("b"));
  tokens.push_back({".", ".", PosTag::Punct});
  tokens.push_back({"!", "!", PosTag::Punct});
  tokens.push_back(word("c"));
  const std::vector<Document> docs = {
      doc_from(tokens, {4, 14, 15, tokens.size()})};

  const SentenceStats s =
      sentence_length_stats(docs, {0.25, 0.5, 0.75, 1.0});
  CHECK(s.sentences == 3);
  CHECK(s.mean == 13.0 / 3.0);
  CHECK(s.median == 3);
  CHECK(s.quantiles.at(0.25) == 1);
  CHECK(s.quantiles.at(0.5) == 3);
  CHECK(s.quantiles.at(0.75) == 9);
  CHECK(s.quantiles.at(1.0) == 9);

  SUBCASE("upper median on even counts") {
    const std::vector<Document> even = {
        doc_from({word("a"), word("a"), word("a"),
                  {".", ".", PosTag::Punct}, word("b")},
                 {4, 5})};
    CHECK(sentence_length_stats(even).median == 3);
    const std::vector<Document> two = {
        doc_from({word("a"), {".", ".", PosTag::Punct}, word("b"), word("b"),
                  word("b")},
                 {2, 5})};
    CHECK(sentence_length_stats(two).median == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(sentence_length_stats(docs, {1.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sentence_length_stats(docs, {-0.1}),
                    std::invalid_argument);
    const std::vector<Document> wordless = {
        doc_from({{".", ".", PosTag::Punct}}, {1})};
    CHECK_THROWS_AS(sentence_length_stats(wordless), std::invalid_argument);
  }
}

TEST_CASE("density measures and their errors") {
  const FrequencyIndex idx =
      build_index({fixtures::harsh_law_doc()}, "law");
  CHECK(lexical_density(idx) == 3.0 / 9.0);
  CHECK(function_word_ratio(idx) == 6.0 / 9.0);
  CHECK(hapax_density(idx) == 0.5);

  const FrequencyIndex empty;
  CHECK_THROWS_AS(lexical_density(empty), std::invalid_argument);
  CHECK_THROWS_AS(function_word_ratio(empty), std::invalid_argument);
  CHECK_THROWS_AS(hapax_density(empty), std::invalid_argument);
}

TEST_CASE("density identity holds on seeded corpora") {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    const auto docs = fixtures::random_corpus(seed, 2, 120);
    const FrequencyIndex idx = build_index(docs, "all");
    REQUIRE(idx.n > 0);
    CHECK(idx.lexical_count() + idx.function_word_count() == idx.n);
    const double total = lexical_density(idx) + function_word_ratio(idx);
    CHECK(std::abs(total - 1.0) <= 1e-15);
  }
}

TEST_CASE("pronoun profile") {
  FrequencyIndex sample;
  sample.source = "sample";
  sample.n = 30;
  sample.nc[static_cast<std::size_t>(PosTag::Pron)] = 10;
  sample.nc[static_cast<std::size_t>(PosTag::Noun)] = 20;
  sample.tf[Term{"je", PosTag::Pron}] = 4;
  sample.tf[Term{"nous", PosTag::Pron}] = 6;
  sample.tf[Term{"chat", PosTag::Noun}] = 20;

  FrequencyIndex reference;
  reference.source = "all";
  reference.n = 300;
  reference.nc[static_cast<std::size_t>(PosTag::Pron)] = 100;
  reference.nc[static_cast<std::size_t>(PosTag::Noun)] = 200;
  reference.tf[Term{"je", PosTag::Pron}] = 40;
  reference.tf[Term{"nous", PosTag::Pron}] = 40;
  reference.tf[Term{"il", PosTag::Pron}] = 20;
  reference.tf[Term{"chat", PosTag::Noun}] = 200;

  const PronounProfile p =
      pronoun_profile(sample, reference, {"nous", "je", "il", "on"}, 0.01);
  CHECK(p.pronoun_tokens == 10);
  REQUIRE(p.rows.size() == 4);

  CHECK(p.rows[0].lemma == "nous");
  CHECK(p.rows[0].tf1 == 6);
  CHECK(p.rows[0].percent == 60.0);
  CHECK(p.rows[0].expected == doctest::Approx(4.0));

  CHECK(p.rows[1].lemma == "je");
  CHECK(p.rows[1].percent == 40.0);
  CHECK(p.rows[1].expected == doctest::Approx(4.0));

  CHECK(p.rows[2].lemma == "il");
  CHECK(p.rows[2].tf1 == 0);
  CHECK(p.rows[2].percent == 0.0);
  CHECK(p.rows[2].expected == doctest::Approx(2.0));

  // A lemma the whole population lacks stays a typical zero row.
  CHECK(p.rows[3].lemma == "on");
  CHECK(p.rows[3].percent == 0.0);
  CHECK(p.rows[3].expected == 0.0);
  CHECK(p.rows[3].classification == Classification::Typical);

  SUBCASE("no pronouns in the sample") {
    FrequencyIndex none;
    none.n = 5;
    none.nc[static_cast<std::size_t>(PosTag::Noun)] = 5;
    none.tf[Term{"chat", PosTag::Noun}] = 5;
    CHECK_THROWS_AS(pronoun_profile(none, reference), std::invalid_argument);
  }
  SUBCASE("default watchlist") {
    CHECK(default_pronoun_watchlist() ==
          std::vector<std::string>{"nous", "je", "il", "vous"});
    const PronounProfile d = pronoun_profile(sample, reference);
    REQUIRE(d.rows.size() == 4);
    CHECK(d.rows[3].lemma == "vous");
  }
}

TEST_CASE("index metrics") {
  const FrequencyIndex idx =
      build_index({fixtures::harsh_law_doc()}, "law");
  const IndexMetrics m = index_metrics(idx);
  CHECK(m.partition == "law");
  CHECK(m.n == 9);
  CHECK(m.types == 6);
  CHECK(m.ld == 3.0 / 9.0);
  CHECK(m.hapax_density == 0.5);
}
