// Copyright 2026 The qaconcur Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qaconcur/converters/babi.hpp"
#include "qaconcur/converters/cloze.hpp"
#include "qaconcur/converters/cnn_vocab.hpp"
#include "qaconcur/converters/downsample.hpp"
#include "qaconcur/converters/nq_html.hpp"
#include "qaconcur/converters/qamr.hpp"
#include "qaconcur/mrqa_jsonl.hpp"
#include "helpers.hpp"

using qaconcur::ClozeExample;
using qaconcur::ExtractiveBenchmark;
using qaconcur::Paragraph;
using qaconcur::QamrItem;
using qaconcur::SplitConversion;

namespace {

std::vector<std::string> skipped_ids(const SplitConversion& conv) {
  std::vector<std::string> out;
  for (const auto& s : conv.report.skipped) out.push_back(s.id);
  return out;
}

std::vector<std::string> split_ids(const std::vector<Paragraph>& split) {
  std::vector<std::string> out;
  for (const Paragraph& p : split) {
    for (const auto& qa : p.qas) out.push_back(qa.id);
  }
  return out;
}

}  // namespace

TEST_CASE("cloze conversion anchors the first whole-token occurrence") {
  const auto examples =
      qaconcur::parse_cloze_jsonl(testutil::fixture("cloze/cloze_sample.jsonl"));
  REQUIRE(examples.size() == 3);
  const auto conv = qaconcur::cloze_split_to_extractive(examples);

  REQUIRE(conv.report.n_input == 3);
  REQUIRE(conv.report.n_converted == 2);
  REQUIRE(skipped_ids(conv) == std::vector<std::string>{"cz-3"});
  REQUIRE(conv.report.n_input ==
          conv.report.n_converted + conv.report.skipped.size());

  const Paragraph& p1 = conv.paragraphs[0];
  REQUIRE(p1.qas[0].id == "cz-1");
  REQUIRE(p1.qas[0].answers[0].text == "north");
  REQUIRE(p1.qas[0].answers[0].char_start == p1.context.find("north"));

  // "barn" appears twice; the span must be the first occurrence.
  const Paragraph& p2 = conv.paragraphs[1];
  REQUIRE(p2.qas[0].answers[0].char_start == p2.context.find("barn"));
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("cloze conversion is token matching, not substring matching") {
  ClozeExample ex;
  ex.id = "tok-1";
  ex.passage = "category cat";
  ex.question = "find the XXXXX now";
  ex.answer_token = "cat";
  std::string reason;
  const auto p = qaconcur::cloze_to_extractive(ex, &reason);
  REQUIRE(p.has_value());
  REQUIRE(p->qas[0].answers[0].char_start == 9);  // not 0 inside "category"
}

TEST_CASE("cloze conversion rejects malformed mask usage") {
  ClozeExample ex;
  ex.id = "bad";
  ex.passage = "a b c";
  ex.answer_token = "b";
  std::string reason;

  ex.question = "no mask here";
  REQUIRE_FALSE(qaconcur::cloze_to_extractive(ex, &reason).has_value());
  REQUIRE(reason == "question must contain the mask token exactly once");

  ex.question = "XXXXX and XXXXX";
  REQUIRE_FALSE(qaconcur::cloze_to_extractive(ex, &reason).has_value());

  ex.question = "one XXXXX only";
  ex.answer_token = "";
  REQUIRE_FALSE(qaconcur::cloze_to_extractive(ex, &reason).has_value());
  REQUIRE(reason == "empty answer token");
}

TEST_CASE("cbt blocks convert with sentences joined by single spaces") {
  const auto examples =
      qaconcur::parse_cbt(testutil::fixture("cbt/cbt_sample.txt"));
  REQUIRE(examples.size() == 2);
  REQUIRE(examples[0].id == "cbt_sample-1");
  REQUIRE(examples[1].id == "cbt_sample-2");
  REQUIRE(examples[0].question == "she drained the XXXXX .");
  REQUIRE(examples[0].answer_token == "cup");

  const auto conv = qaconcur::cloze_split_to_extractive(examples);
  REQUIRE(conv.report.n_converted == 2);
  const Paragraph& p = conv.paragraphs[0];
  REQUIRE(p.context ==
          "The kettle sang on the stove . Ana poured the tea into her cup . "
          "The cup was warm in her hands . "
          "She sat by the window for a while .");
  // First token occurrence: the "cup" in the second sentence.
  REQUIRE(p.qas[0].answers[0].char_start == p.context.find("cup"));
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("cnn question directories convert in sorted filename order") {
  const auto examples = qaconcur::parse_cnn_dir(testutil::fixture("cnn"));
  REQUIRE(examples.size() == 3);
  REQUIRE(examples[0].id == "0001");
  REQUIRE(examples[1].id == "0002");
  REQUIRE(examples[2].id == "0003");
  REQUIRE(examples[0].mask_token == "@placeholder");

  const auto conv = qaconcur::cloze_split_to_extractive(examples);
  REQUIRE(conv.report.n_input == 3);
  REQUIRE(conv.report.n_converted == 2);
  // 0002 asks for an entity that never appears in its passage.
  REQUIRE(skipped_ids(conv) == std::vector<std::string>{"0002"});
  REQUIRE(conv.paragraphs[0].qas[0].answers[0].text == "@entity0");
  REQUIRE(conv.paragraphs[0].qas[0].answers[0].char_start == 0);
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("the vocab guard lists every distinct entity marker") {
  const auto examples = qaconcur::parse_cnn_dir(testutil::fixture("cnn"));
  ExtractiveBenchmark b;
  b.name = "cnn";
  b.train = qaconcur::cloze_split_to_extractive(examples).paragraphs;
  const auto guard = qaconcur::cnn_vocab_guard(b);
  REQUIRE(guard.markers ==
          std::vector<std::string>{"@entity0", "@entity1", "@entity3",
                                   "@entity5", "@placeholder"});
}

TEST_CASE("record json converts placeholder queries") {
  const auto examples = qaconcur::parse_record_json(
      testutil::fixture("record/record_sample.json"));
  REQUIRE(examples.size() == 2);
  REQUIRE(examples[0].id == "rec-0001-q1");
  REQUIRE(examples[0].mask_token == "@placeholder");

  const auto conv = qaconcur::cloze_split_to_extractive(examples);
  REQUIRE(conv.report.n_converted == 2);
  REQUIRE(conv.paragraphs[0].qas[0].answers[0].text == "comet");
  REQUIRE(conv.paragraphs[0].qas[0].answers[0].char_start == 22);
  REQUIRE(conv.paragraphs[1].qas[0].answers[0].text == "Darmstadt");
  REQUIRE(conv.paragraphs[1].qas[0].answers[0].char_start == 81);
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("babi stories convert with pluralization fallback spans") {
  const auto examples =
      qaconcur::parse_babi(testutil::fixture("babi/qa_sample.txt"));
  REQUIRE(examples.size() == 4);
  const auto conv = qaconcur::babi_split_to_extractive(examples);
  REQUIRE(conv.report.n_input == 4);
  REQUIRE(conv.report.n_converted == 3);
  REQUIRE(skipped_ids(conv) == std::vector<std::string>{"qa_sample-s3-q1"});

  // "cat" only appears pluralized; the span text is the matched form.
  const Paragraph& cats = conv.paragraphs[0];
  REQUIRE(cats.qas[0].id == "qa_sample-s0-q1");
  REQUIRE(cats.qas[0].answers[0].text == "cats");
  REQUIRE(cats.context.substr(cats.qas[0].answers[0].char_start, 4) == "cats");

  const Paragraph& bathroom = conv.paragraphs[1];
  REQUIRE(bathroom.context ==
          "Mary moved to the bathroom. John went to the hallway.");
  REQUIRE(bathroom.qas[0].answers[0].text == "bathroom");
  REQUIRE(bathroom.qas[0].answers[0].char_start == 18);

  // Multi-fact annotation "3 2": the first listed fact that contains the
  // answer (as "buses") wins, and the span lands inside that sentence.
  const Paragraph& buses = conv.paragraphs[2];
  REQUIRE(buses.qas[0].answers[0].text == "buses");
  REQUIRE(buses.qas[0].answers[0].char_start ==
          buses.context.find("buses"));
  REQUIRE(buses.context.find("Foxes are afraid of buses.") <
          buses.qas[0].answers[0].char_start);
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("babi parsing rejects broken annotations") {
  testutil::TempDir dir;
  const std::string path = dir.file("bad.txt");
  testutil::write_text(path, "1 Mary ran.\n2 Where is Mary?\tgarden\t7\n");
  REQUIRE_THROWS_WITH(qaconcur::parse_babi(path),
                      Catch::Matchers::ContainsSubstring("missing line"));
  testutil::write_text(path, "1 Mary ran.\n2 Where is Mary?\tgarden\n");
  REQUIRE_THROWS(qaconcur::parse_babi(path));
  testutil::write_text(path, "one Mary ran.\n");
  REQUIRE_THROWS(qaconcur::parse_babi(path));
}

TEST_CASE("nq html markers rewrite without shifting a single byte") {
  const std::string original =
      "<P> The lighthouse was automated in 1910 . </P> <Table> tides "
      "</Table>";
  const std::string rewritten = qaconcur::normalize_nq_html(original);
  REQUIRE(rewritten ==
          "BPB The lighthouse was automated in 1910 . EEPE BTableB tides "
          "EETableE");
  REQUIRE(rewritten.size() == original.size());
  // Applying the rewrite again changes nothing.
  REQUIRE(qaconcur::normalize_nq_html(rewritten) == rewritten);
  // Non-tag uses of angle brackets pass through untouched.
  REQUIRE(qaconcur::normalize_nq_html("a < b and x <3> y < P>") ==
          "a < b and x <3> y < P>");
  REQUIRE(qaconcur::normalize_nq_html("<P attr=1>") == "<P attr=1>");
}

TEST_CASE("nq html split normalization keeps offsets and re-reads texts") {
  auto split = qaconcur::load_mrqa_jsonl(testutil::fixture("nq/nq_sample.jsonl"));
  const auto before = split[0].qas[0].answers[0];
  REQUIRE(qaconcur::normalize_nq_html_split(split) == 2);
  const auto& after = split[0].qas[0].answers[0];
  REQUIRE(after.char_start == before.char_start);
  REQUIRE(after.text == "1910");
  REQUIRE(qaconcur::validate_split(split).empty());
  // A second pass finds nothing left to change.
  REQUIRE(qaconcur::normalize_nq_html_split(split) == 0);

  // Spans covering a tag keep their offsets; the text is re-read.
  std::vector<Paragraph> covering;
  Paragraph p;
  p.context = "<P> x </P>";
  p.qas.push_back({"c1", "q", {{"<P> x", 0}}});
  covering.push_back(p);
  REQUIRE(qaconcur::normalize_nq_html_split(covering) == 1);
  REQUIRE(covering[0].qas[0].answers[0].text == "BPB x");
  REQUIRE(covering[0].qas[0].answers[0].char_start == 0);
}

TEST_CASE("qamr passages rebuild with shifted spans and duplicate removal") {
  const auto items =
      qaconcur::parse_qamr_tsv(testutil::fixture("qamr/qamr_sample.tsv"));
  const auto conv = qaconcur::qamr_reconstruct(items);

  REQUIRE(conv.paragraphs.size() == 2);
  REQUIRE(conv.report.n_input == 7);
  REQUIRE(conv.report.n_converted == 5);
  REQUIRE(skipped_ids(conv) ==
          std::vector<std::string>{"mill-q4", "mill-q5"});
  for (const auto& s : conv.report.skipped) {
    REQUIRE(s.reason == "question duplicated across sentences");
  }

  const Paragraph& mill = conv.paragraphs[0];
  REQUIRE(mill.context ==
          "The old mill stands beside the river . "
          "Its wheel turns slowly in the current . "
          "A miller once lived upstairs .");
  REQUIRE(mill.qas.size() == 3);
  for (const auto& qa : mill.qas) {
    const auto& a = qa.answers[0];
    REQUIRE(mill.context.substr(a.char_start, a.text.size()) == a.text);
  }
  // Sentence-relative offset 2 in sentence 2 shifts past two sentences.
  REQUIRE(mill.qas[2].answers[0].text == "miller");
  REQUIRE(mill.qas[2].answers[0].char_start == 81);

  const Paragraph& harbor = conv.paragraphs[1];
  REQUIRE(harbor.qas.size() == 2);
  REQUIRE(harbor.qas[1].answers[0].text == "pier");
  REQUIRE(harbor.context.substr(harbor.qas[1].answers[0].char_start, 4) ==
          "pier");
  REQUIRE(qaconcur::validate_split(conv.paragraphs).empty());
}

TEST_CASE("qamr reconstruction rejects inconsistent sentence sets") {
  std::vector<QamrItem> gap;
  gap.push_back({"p1", 0, "First .", "", std::nullopt});
  gap.push_back({"p1", 2, "Third .", "", std::nullopt});
  REQUIRE_THROWS_WITH(qaconcur::qamr_reconstruct(gap),
                      Catch::Matchers::ContainsSubstring("p1") &&
                          Catch::Matchers::ContainsSubstring("gap"));

  std::vector<QamrItem> conflict;
  conflict.push_back({"p2", 0, "First .", "", std::nullopt});
  conflict.push_back({"p2", 0, "Something else .", "", std::nullopt});
  REQUIRE_THROWS_WITH(qaconcur::qamr_reconstruct(conflict),
                      Catch::Matchers::ContainsSubstring("conflicting"));
}

TEST_CASE("qamr tsv parsing enforces the row shapes") {
  testutil::TempDir dir;
  const std::string path = dir.file("bad.tsv");
  testutil::write_text(path, "p1\t0\tA .\tWho ?\n");  // 4 fields
  REQUIRE_THROWS_WITH(qaconcur::parse_qamr_tsv(path),
                      Catch::Matchers::ContainsSubstring("3 or 6"));
  testutil::write_text(path, "p1\tzero\tA .\n");
  REQUIRE_THROWS_WITH(qaconcur::parse_qamr_tsv(path),
                      Catch::Matchers::ContainsSubstring("sentence index"));
}

TEST_CASE("downsampled subsets nest and keep original ordering") {
  ExtractiveBenchmark b;
  b.name = "nest";
  for (int p = 0; p < 3; ++p) {
    Paragraph para;
    para.context = "paragraph " + std::to_string(p) + " text";
    for (int q = 0; q < 4; ++q) {
      const std::string id =
          "p" + std::to_string(p) + "-q" + std::to_string(q);
      para.qas.push_back({id, "question ?", {{"text", 13}}});
    }
    b.train.push_back(para);
  }
  Paragraph dev;
  dev.context = "dev text";
  dev.qas.push_back({"d0", "q ?", {{"dev", 0}}});
  b.dev.push_back(dev);

  const auto all_ids = split_ids(b.train);
  const std::uint64_t seed = 47;
  const auto six = qaconcur::downsample(b, 6, seed);
  const auto three = qaconcur::downsample(b, 3, seed);

  REQUIRE(qaconcur::n_examples(six.train) == 6);
  REQUIRE(qaconcur::n_examples(three.train) == 3);
  REQUIRE(six.dev == b.dev);
  REQUIRE(three.dev == b.dev);
  REQUIRE(six.name == "nest");

  // Nesting: the 3-example subset is inside the 6-example subset.
  const auto six_ids = split_ids(six.train);
  const std::set<std::string> six_set(six_ids.begin(), six_ids.end());
  for (const auto& id : split_ids(three.train)) {
    REQUIRE(six_set.contains(id));
  }

  // Kept ids appear in their original relative order.
  std::size_t cursor = 0;
  for (const auto& id : six_ids) {
    while (cursor < all_ids.size() && all_ids[cursor] != id) ++cursor;
    REQUIRE(cursor < all_ids.size());
    ++cursor;
  }

  // Same seed, same subset; full-size sampling keeps everything.
  REQUIRE(split_ids(qaconcur::downsample(b, 6, seed).train) == six_ids);
  REQUIRE(qaconcur::n_examples(qaconcur::downsample(b, 12, seed).train) == 12);
  REQUIRE_THROWS_AS(qaconcur::downsample(b, 13, seed), std::invalid_argument);
}

TEST_CASE("downsampling drops paragraphs that lose all examples") {
  ExtractiveBenchmark b;
  b.name = "drop";
  for (int p = 0; p < 6; ++p) {
    Paragraph para;
    para.context = "ctx";
    para.qas.push_back({"q" + std::to_string(p), "q ?", {{"ctx", 0}}});
    b.train.push_back(para);
  }
  const auto down = qaconcur::downsample(b, 2, 7);
  REQUIRE(down.train.size() == 2);  // one surviving paragraph per example
  REQUIRE(qaconcur::n_examples(down.train) == 2);
}
