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
//
// qaconcur: one binary for dataset conversion, synthetic benchmark
// generation, downsampling, EM evaluation, and concurrence reporting.
// Every output-producing command writes a RunManifest next to its first
// output; identical invocations produce byte-identical outputs.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qaconcur/concurrence.hpp"
#include "qaconcur/converters/babi.hpp"
#include "qaconcur/converters/cloze.hpp"
#include "qaconcur/converters/cnn_vocab.hpp"
#include "qaconcur/converters/downsample.hpp"
#include "qaconcur/converters/nq_html.hpp"
#include "qaconcur/converters/qamr.hpp"
#include "qaconcur/dataset.hpp"
#include "qaconcur/fuzzypm/generator.hpp"
#include "qaconcur/manifest.hpp"
#include "qaconcur/metrics.hpp"
#include "qaconcur/mrqa_jsonl.hpp"
#include "qaconcur/score_table.hpp"
#include "qaconcur/squad_json.hpp"
#include "qaconcur/wikidata/generate.hpp"

namespace {

using qaconcur::AggregatePolicy;
using qaconcur::ExtractiveBenchmark;
using qaconcur::Paragraph;
using qaconcur::RunManifest;
using qaconcur::Subset;
using qaconcur::format_double;

std::string manifest_path(const std::string& output) {
  return output + ".manifest.json";
}

Subset parse_subset(const std::string& s) {
  if (s == "pretrained") return Subset::kPretrained;
  if (s == "non-pretrained") return Subset::kNonPretrained;
  return Subset::kAll;
}

AggregatePolicy parse_policy(const std::string& s) {
  return s == "mean" ? AggregatePolicy::kMean : AggregatePolicy::kBest;
}

std::vector<Paragraph> load_split(const std::string& path,
                                  const std::string& format) {
  if (format == "mrqa") return qaconcur::load_mrqa_jsonl(path);
  return qaconcur::load_squad_json(path);
}

void print_conversion_report(const qaconcur::ConversionReport& report) {
  std::cout << "input " << report.n_input << "\nconverted "
            << report.n_converted << "\nskipped " << report.skipped.size()
            << "\n";
  for (const auto& skip : report.skipped) {
    std::cerr << "skipped " << skip.id << ": " << skip.reason << "\n";
  }
}

// ---------------------------------------------------------------- convert

struct ConvertClozeOpts {
  std::string in;
  std::string format = "jsonl";
  std::string out;
  std::string title = "data";
};

void run_convert_cloze(const ConvertClozeOpts& o) {
  std::vector<qaconcur::ClozeExample> examples;
  if (o.format == "cbt") {
    examples = qaconcur::parse_cbt(o.in);
  } else if (o.format == "cnn") {
    examples = qaconcur::parse_cnn_dir(o.in);
  } else if (o.format == "record") {
    examples = qaconcur::parse_record_json(o.in);
  } else {
    examples = qaconcur::parse_cloze_jsonl(o.in);
  }
  const qaconcur::SplitConversion conv =
      qaconcur::cloze_split_to_extractive(examples);
  qaconcur::save_squad_json(o.out, o.title, conv.paragraphs);
  print_conversion_report(conv.report);

  if (o.format == "cnn" || o.format == "record") {
    ExtractiveBenchmark b;
    b.name = o.title;
    b.dev = conv.paragraphs;
    const auto guard = qaconcur::cnn_vocab_guard(b);
    std::cout << "preserved_markers " << guard.markers.size() << "\n";
  }

  RunManifest m;
  m.command = "convert cloze";
  m.params = {{"in", o.in}, {"format", o.format}, {"out", o.out},
              {"title", o.title}};
  if (o.format == "cnn") {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(o.in)) {
      if (entry.path().extension() == ".question") {
        paths.push_back(entry.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
    for (const std::string& p : paths) m.add_input(p);
  } else {
    m.add_input(o.in);
  }
  m.add_output(o.out);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

struct ConvertBabiOpts {
  std::string in;
  std::string out;
  std::string title = "data";
};

void run_convert_babi(const ConvertBabiOpts& o) {
  const auto examples = qaconcur::parse_babi(o.in);
  const qaconcur::SplitConversion conv =
      qaconcur::babi_split_to_extractive(examples);
  qaconcur::save_squad_json(o.out, o.title, conv.paragraphs);
  print_conversion_report(conv.report);

  RunManifest m;
  m.command = "convert babi";
  m.params = {{"in", o.in}, {"out", o.out}, {"title", o.title}};
  m.add_input(o.in);
  m.add_output(o.out);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

struct ConvertQamrOpts {
  std::string in;
  std::string out;
  std::string title = "data";
};

void run_convert_qamr(const ConvertQamrOpts& o) {
  const auto items = qaconcur::parse_qamr_tsv(o.in);
  const qaconcur::SplitConversion conv = qaconcur::qamr_reconstruct(items);
  qaconcur::save_squad_json(o.out, o.title, conv.paragraphs);
  print_conversion_report(conv.report);

  RunManifest m;
  m.command = "convert qamr";
  m.params = {{"in", o.in}, {"out", o.out}, {"title", o.title}};
  m.add_input(o.in);
  m.add_output(o.out);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

struct ConvertNqHtmlOpts {
  std::string in;
  std::string format = "mrqa";
  std::string out;
  std::string title = "data";
};

void run_convert_nq_html(const ConvertNqHtmlOpts& o) {
  std::vector<Paragraph> split = load_split(o.in, o.format);
  const std::size_t n_changed = qaconcur::normalize_nq_html_split(split);
  qaconcur::save_squad_json(o.out, o.title, split);
  std::cout << "paragraphs " << split.size() << "\nnormalized " << n_changed
            << "\n";

  RunManifest m;
  m.command = "convert nq-html";
  m.params = {{"in", o.in}, {"format", o.format}, {"out", o.out},
              {"title", o.title}};
  m.add_input(o.in);
  m.add_output(o.out);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

// --------------------------------------------------------------- generate

struct GenFuzzyOpts {
  std::string vocab;
  std::string embeddings;
  std::string source = "uniform";
  std::string corpus;
  std::size_t ngram_order = 3;
  std::string out_train;
  std::string out_dev;
  qaconcur::fuzzypm::GeneratorConfig config;
};

void run_generate_fuzzypm(const GenFuzzyOpts& o) {
  const qaconcur::fuzzypm::Vocabulary vocab =
      qaconcur::fuzzypm::load_vocabulary(o.vocab);
  const qaconcur::fuzzypm::EmbeddingIndex index =
      qaconcur::fuzzypm::build_neighbor_index(o.embeddings, vocab,
                                              o.config.corruption.neighbor_k);
  for (const std::string& w : index.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  std::unique_ptr<qaconcur::fuzzypm::PassageSource> source;
  if (o.source == "corpus" || o.source == "ngram") {
    if (o.corpus.empty()) {
      throw std::invalid_argument("generate fuzzypm: --corpus is required for "
                                  "source '" + o.source + "'");
    }
    auto paragraphs = qaconcur::fuzzypm::load_corpus_paragraphs(o.corpus);
    if (o.source == "corpus") {
      source = std::make_unique<qaconcur::fuzzypm::CorpusSource>(
          std::move(paragraphs));
    } else {
      source = std::make_unique<qaconcur::fuzzypm::NgramSource>(o.ngram_order,
                                                                paragraphs);
    }
  } else {
    source = std::make_unique<qaconcur::fuzzypm::UniformSource>(vocab);
  }

  const ExtractiveBenchmark b =
      qaconcur::fuzzypm::generate_fuzzypm(o.config, *source, vocab, index);
  qaconcur::save_squad_json(o.out_train, b.name, b.train);
  qaconcur::save_squad_json(o.out_dev, b.name, b.dev);
  std::cout << "train_passages " << b.train.size() << "\ntrain_questions "
            << qaconcur::n_examples(b.train) << "\ndev_passages "
            << b.dev.size() << "\ndev_questions "
            << qaconcur::n_examples(b.dev) << "\n";

  RunManifest m;
  m.command = "generate fuzzypm";
  m.params = {{"vocab", o.vocab},
              {"embeddings", o.embeddings},
              {"source", o.source},
              {"corpus", o.corpus},
              {"ngram-order", std::to_string(o.ngram_order)},
              {"name", o.config.name},
              {"n-passages", std::to_string(o.config.n_passages)},
              {"questions", std::to_string(o.config.questions_per_passage)},
              {"passage-len", std::to_string(o.config.passage_len)},
              {"window", std::to_string(o.config.cloze_window)},
              {"replace-prob", format_double(o.config.corruption.replace_prob)},
              {"neighbor-k", std::to_string(o.config.corruption.neighbor_k)},
              {"permute-window",
               std::to_string(o.config.corruption.permute_window)},
              {"dropout", format_double(o.config.corruption.dropout_rate)},
              {"mask", o.config.corruption.mask_token},
              {"seed", std::to_string(o.config.seed)},
              {"out-train", o.out_train},
              {"out-dev", o.out_dev}};
  m.add_input(o.vocab);
  m.add_input(o.embeddings);
  if (!o.corpus.empty()) m.add_input(o.corpus);
  m.add_output(o.out_train);
  m.add_output(o.out_dev);
  qaconcur::write_manifest(m, manifest_path(o.out_train));
}

struct GenWikidataOpts {
  std::string entities;
  std::string properties;
  std::string triples;
  std::string out_train;
  std::string out_dev;
  qaconcur::wikidata::WikidataGenConfig config;
};

void run_generate_wikidata(const GenWikidataOpts& o) {
  const qaconcur::wikidata::KnowledgeGraph graph =
      qaconcur::wikidata::load_graph(o.entities, o.properties, o.triples);
  for (const std::string& w : graph.report.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  qaconcur::wikidata::GenerationReport report;
  const ExtractiveBenchmark b =
      qaconcur::wikidata::generate_wikidata_qa(graph, o.config, &report);
  qaconcur::save_squad_json(o.out_train, b.name, b.train);
  qaconcur::save_squad_json(o.out_dev, b.name, b.dev);
  std::cout << "entities " << graph.entities.size() << "\ntriples "
            << graph.triples.size() << "\npassages " << report.n_passages
            << "\nquestions " << report.n_questions
            << "\nduplicates_dropped " << report.n_duplicates_dropped
            << "\nsmall_candidate_passages "
            << report.n_small_candidate_passages << "\n";

  RunManifest m;
  m.command = "generate wikidata";
  m.params = {{"entities", o.entities},
              {"properties", o.properties},
              {"triples", o.triples},
              {"name", o.config.name},
              {"n-train", std::to_string(o.config.n_train)},
              {"n-dev", std::to_string(o.config.n_dev)},
              {"pool", std::to_string(o.config.pool)},
              {"n-triples", std::to_string(o.config.n_triples)},
              {"train-q-min", std::to_string(o.config.train_questions_min)},
              {"train-q-max", std::to_string(o.config.train_questions_max)},
              {"dev-q", std::to_string(o.config.dev_questions)},
              {"inverse-prob", format_double(o.config.inverse_prob)},
              {"hypernym-prob", format_double(o.config.hypernym_prob)},
              {"mask", o.config.mask_token},
              {"damping", format_double(o.config.pagerank.damping)},
              {"tol", format_double(o.config.pagerank.tol)},
              {"max-iter", std::to_string(o.config.pagerank.max_iter)},
              {"seed", std::to_string(o.config.seed)},
              {"out-train", o.out_train},
              {"out-dev", o.out_dev}};
  m.add_input(o.entities);
  m.add_input(o.properties);
  m.add_input(o.triples);
  m.add_output(o.out_train);
  m.add_output(o.out_dev);
  qaconcur::write_manifest(m, manifest_path(o.out_train));
}

// ------------------------------------------------------------- downsample

struct DownsampleOpts {
  std::string in;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string title = "data";
};

void run_downsample(const DownsampleOpts& o) {
  const std::vector<Paragraph> split = qaconcur::load_squad_json(o.in);
  const std::vector<Paragraph> sampled =
      qaconcur::downsample_split(split, o.n, o.seed);
  qaconcur::save_squad_json(o.out, o.title, sampled);
  std::cout << "input_examples " << qaconcur::n_examples(split)
            << "\noutput_examples " << qaconcur::n_examples(sampled) << "\n";

  RunManifest m;
  m.command = "downsample";
  m.params = {{"in", o.in},
              {"n", std::to_string(o.n)},
              {"seed", std::to_string(o.seed)},
              {"out", o.out},
              {"title", o.title}};
  m.add_input(o.in);
  m.add_output(o.out);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

// --------------------------------------------------------------- evaluate

struct EvaluateOpts {
  std::string gold;
  std::string pred;
  std::string format = "squad";
  bool strict = false;
  bool per_example = false;
  std::string out;
};

void run_evaluate(const EvaluateOpts& o) {
  const std::vector<Paragraph> gold = load_split(o.gold, o.format);
  const qaconcur::PredictionSet predictions =
      qaconcur::load_predictions(o.pred);
  const qaconcur::EvalResult result =
      qaconcur::evaluate(predictions, gold, o.strict);
  std::cout << "exact_match " << format_double(result.em) << "\nn_examples "
            << result.n_examples << "\nn_scored " << result.n_scored
            << "\nn_missing " << result.n_missing << "\n";
  for (const std::string& id : result.unknown_prediction_ids) {
    std::cerr << "unknown prediction id: " << id << "\n";
  }
  if (!o.out.empty()) {
    qaconcur::write_file(o.out,
                         qaconcur::to_eval_report_json(result, o.per_example));
    RunManifest m;
    m.command = "evaluate";
    m.params = {{"gold", o.gold},
                {"pred", o.pred},
                {"format", o.format},
                {"strict", o.strict ? "true" : "false"},
                {"per-example", o.per_example ? "true" : "false"},
                {"out", o.out}};
    m.add_input(o.gold);
    m.add_input(o.pred);
    m.add_output(o.out);
    qaconcur::write_manifest(m, manifest_path(o.out));
  }
}

// ----------------------------------------------------------------- concur

struct ConcurOpts {
  std::string scores;
  std::string a;
  std::string b;
  std::string subset = "all";
  std::string aggregate = "best";
  std::string scatter;
};

void run_concur(const ConcurOpts& o) {
  const qaconcur::ScoreTable table = qaconcur::load_score_csv(o.scores);
  const qaconcur::ConcurrenceReport report =
      qaconcur::concur(table, o.a, o.b, parse_subset(o.subset),
                       parse_policy(o.aggregate));
  std::cout << "benchmark_a " << report.benchmark_a << "\nbenchmark_b "
            << report.benchmark_b << "\nn " << report.n << "\nkendall_tau "
            << (report.kendall_tau ? format_double(*report.kendall_tau)
                                   : "undefined")
            << "\npearson_r "
            << (report.pearson_r ? format_double(*report.pearson_r)
                                 : "undefined")
            << "\n";
  if (!o.scatter.empty()) {
    qaconcur::export_scatter(report, o.scatter);
    RunManifest m;
    m.command = "concur";
    m.params = {{"scores", o.scores}, {"a", o.a},
                {"b", o.b},           {"subset", o.subset},
                {"aggregate", o.aggregate}, {"scatter", o.scatter}};
    m.add_input(o.scores);
    m.add_output(o.scatter);
    qaconcur::write_manifest(m, manifest_path(o.scatter));
  }
}

// ----------------------------------------------------------------- matrix

struct MatrixOpts {
  std::string scores;
  std::string subset = "all";
  std::string aggregate = "best";
  std::string out;
  std::string out_r;
};

void run_matrix(const MatrixOpts& o) {
  const qaconcur::ScoreTable table = qaconcur::load_score_csv(o.scores);
  const qaconcur::ConcurrenceMatrix matrix = qaconcur::concurrence_matrix(
      table, parse_subset(o.subset), parse_policy(o.aggregate));
  std::string out_r = o.out_r;
  if (out_r.empty()) {
    const std::filesystem::path p(o.out);
    out_r = (p.parent_path() / (p.stem().string() + ".r" +
                                p.extension().string()))
                .string();
  }
  qaconcur::write_file(o.out,
                       qaconcur::to_matrix_csv(matrix.benchmarks, matrix.tau));
  qaconcur::write_file(out_r,
                       qaconcur::to_matrix_csv(matrix.benchmarks, matrix.r));
  std::cout << "benchmarks " << matrix.benchmarks.size() << "\n";

  RunManifest m;
  m.command = "matrix";
  m.params = {{"scores", o.scores},
              {"subset", o.subset},
              {"aggregate", o.aggregate},
              {"out", o.out},
              {"out-r", out_r}};
  m.add_input(o.scores);
  m.add_output(o.out);
  m.add_output(out_r);
  qaconcur::write_manifest(m, manifest_path(o.out));
}

// ------------------------------------------------------------------ stats

struct StatsOpts {
  std::string train;
  std::string dev;
  std::string format = "squad";
  std::string name = "data";
};

void run_stats(const StatsOpts& o) {
  if (o.train.empty() && o.dev.empty()) {
    throw std::invalid_argument("stats: provide --train and/or --dev");
  }
  ExtractiveBenchmark b;
  b.name = o.name;
  if (!o.train.empty()) b.train = load_split(o.train, o.format);
  if (!o.dev.empty()) b.dev = load_split(o.dev, o.format);
  const qaconcur::BenchmarkStats s = qaconcur::stats(b);
  std::cout << "n_train_examples " << s.n_train_qas << "\nn_dev_examples "
            << s.n_dev_qas << "\navg_question_tokens "
            << format_double(s.avg_question_tokens) << "\navg_passage_tokens "
            << format_double(s.avg_passage_tokens) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qaconcur: extractive QA benchmarks, synthetic generators, "
               "and concurrence analysis"};
  app.set_version_flag("--version",
                       std::string(qaconcur::kToolName) + " " +
                           qaconcur::kToolVersion);
  app.set_config("--config", "",
                 "key = value file; '#' comments; keys namespaced by "
                 "subcommand (e.g. downsample.n = 100)");
  app.allow_config_extras(true);
  app.require_subcommand(1);

  // convert
  CLI::App* convert =
      app.add_subcommand("convert", "Convert source datasets to SQuAD format");
  convert->require_subcommand(1);

  auto cloze_opts = std::make_shared<ConvertClozeOpts>();
  CLI::App* conv_cloze =
      convert->add_subcommand("cloze", "Cloze-style sources (CBT, CNN, ...)");
  conv_cloze->add_option("--in", cloze_opts->in,
                         "Input file (or directory for --format cnn)")
      ->required();
  conv_cloze->add_option("--format", cloze_opts->format,
                         "Input layout")
      ->check(CLI::IsMember({"jsonl", "cbt", "cnn", "record"}));
  conv_cloze->add_option("--out", cloze_opts->out, "Output SQuAD JSON")
      ->required();
  conv_cloze->add_option("--title", cloze_opts->title, "Dataset title");
  conv_cloze->callback([cloze_opts] { run_convert_cloze(*cloze_opts); });

  auto babi_opts = std::make_shared<ConvertBabiOpts>();
  CLI::App* conv_babi =
      convert->add_subcommand("babi", "bAbI tasks with supporting facts");
  conv_babi->add_option("--in", babi_opts->in, "bAbI task file")->required();
  conv_babi->add_option("--out", babi_opts->out, "Output SQuAD JSON")
      ->required();
  conv_babi->add_option("--title", babi_opts->title, "Dataset title");
  conv_babi->callback([babi_opts] { run_convert_babi(*babi_opts); });

  auto qamr_opts = std::make_shared<ConvertQamrOpts>();
  CLI::App* conv_qamr =
      convert->add_subcommand("qamr", "QAMR TSV sentence/question rows");
  conv_qamr->add_option("--in", qamr_opts->in, "QAMR TSV file")->required();
  conv_qamr->add_option("--out", qamr_opts->out, "Output SQuAD JSON")
      ->required();
  conv_qamr->add_option("--title", qamr_opts->title, "Dataset title");
  conv_qamr->callback([qamr_opts] { run_convert_qamr(*qamr_opts); });

  auto nq_opts = std::make_shared<ConvertNqHtmlOpts>();
  CLI::App* conv_nq = convert->add_subcommand(
      "nq-html", "Replace NQ HTML tags with plain-token markers");
  conv_nq->add_option("--in", nq_opts->in, "Input dataset")->required();
  conv_nq->add_option("--format", nq_opts->format, "Input layout")
      ->check(CLI::IsMember({"squad", "mrqa"}));
  conv_nq->add_option("--out", nq_opts->out, "Output SQuAD JSON")->required();
  conv_nq->add_option("--title", nq_opts->title, "Dataset title");
  conv_nq->callback([nq_opts] { run_convert_nq_html(*nq_opts); });

  // generate
  CLI::App* generate =
      app.add_subcommand("generate", "Generate synthetic benchmarks");
  generate->require_subcommand(1);

  auto fz = std::make_shared<GenFuzzyOpts>();
  CLI::App* gen_fuzzy = generate->add_subcommand(
      "fuzzypm", "Corrupted-cloze passages over a vocabulary");
  gen_fuzzy->add_option("--vocab", fz->vocab, "Vocabulary file, one token per line")
      ->required();
  gen_fuzzy->add_option("--embeddings", fz->embeddings,
                        "Embedding file: token then vector components")
      ->required();
  gen_fuzzy->add_option("--source", fz->source, "Passage source")
      ->check(CLI::IsMember({"uniform", "corpus", "ngram"}));
  gen_fuzzy->add_option("--corpus", fz->corpus,
                        "Corpus file for corpus/ngram sources");
  gen_fuzzy->add_option("--ngram-order", fz->ngram_order, "n-gram order");
  gen_fuzzy->add_option("--name", fz->config.name, "Benchmark name");
  gen_fuzzy->add_option("--n-passages", fz->config.n_passages,
                        "Passages per split");
  gen_fuzzy->add_option("--questions", fz->config.questions_per_passage,
                        "Questions per passage");
  gen_fuzzy->add_option("--passage-len", fz->config.passage_len,
                        "Tokens per passage");
  gen_fuzzy->add_option("--window", fz->config.cloze_window,
                        "Cloze window size in tokens");
  gen_fuzzy->add_option("--replace-prob", fz->config.corruption.replace_prob,
                        "Neighbor-replacement probability");
  gen_fuzzy->add_option("--neighbor-k", fz->config.corruption.neighbor_k,
                        "Nearest-neighbor pool size");
  gen_fuzzy->add_option("--permute-window",
                        fz->config.corruption.permute_window,
                        "Local permutation window");
  gen_fuzzy->add_option("--dropout", fz->config.corruption.dropout_rate,
                        "Word-dropout probability");
  gen_fuzzy->add_option("--mask", fz->config.corruption.mask_token,
                        "Mask token");
  gen_fuzzy->add_option("--seed", fz->config.seed, "Generation seed")
      ->envname("QACONCUR_SEED");
  gen_fuzzy->add_option("--out-train", fz->out_train, "Train split output")
      ->required();
  gen_fuzzy->add_option("--out-dev", fz->out_dev, "Dev split output")
      ->required();
  gen_fuzzy->callback([fz] { run_generate_fuzzypm(*fz); });

  auto wd = std::make_shared<GenWikidataOpts>();
  CLI::App* gen_wd = generate->add_subcommand(
      "wikidata", "Triple-based passages over a knowledge graph");
  gen_wd->add_option("--entities", wd->entities, "Entities JSONL")->required();
  gen_wd->add_option("--properties", wd->properties, "Properties JSONL")
      ->required();
  gen_wd->add_option("--triples", wd->triples, "Triples JSONL")->required();
  gen_wd->add_option("--name", wd->config.name, "Benchmark name");
  gen_wd->add_option("--n-train", wd->config.n_train, "Train question quota");
  gen_wd->add_option("--n-dev", wd->config.n_dev, "Dev question quota");
  gen_wd->add_option("--pool", wd->config.pool,
                     "Seed entities drawn from the top pool by PageRank");
  gen_wd->add_option("--n-triples", wd->config.n_triples,
                     "Triples sampled per passage");
  gen_wd->add_option("--train-q-min", wd->config.train_questions_min,
                     "Min questions per train passage");
  gen_wd->add_option("--train-q-max", wd->config.train_questions_max,
                     "Max questions per train passage");
  gen_wd->add_option("--dev-q", wd->config.dev_questions,
                     "Questions per dev passage");
  gen_wd->add_option("--inverse-prob", wd->config.inverse_prob,
                     "Inverse-relation transform probability");
  gen_wd->add_option("--hypernym-prob", wd->config.hypernym_prob,
                     "Hypernym transform probability");
  gen_wd->add_option("--mask", wd->config.mask_token, "Mask token");
  gen_wd->add_option("--damping", wd->config.pagerank.damping,
                     "PageRank damping factor");
  gen_wd->add_option("--tol", wd->config.pagerank.tol,
                     "PageRank L1 convergence tolerance");
  gen_wd->add_option("--max-iter", wd->config.pagerank.max_iter,
                     "PageRank iteration cap");
  gen_wd->add_option("--seed", wd->config.seed, "Generation seed")
      ->envname("QACONCUR_SEED");
  gen_wd->add_option("--out-train", wd->out_train, "Train split output")
      ->required();
  gen_wd->add_option("--out-dev", wd->out_dev, "Dev split output")->required();
  gen_wd->callback([wd] { run_generate_wikidata(*wd); });

  // downsample
  auto ds = std::make_shared<DownsampleOpts>();
  CLI::App* downsample = app.add_subcommand(
      "downsample", "Seeded random subset of a SQuAD-format split");
  downsample->add_option("--in", ds->in, "Input SQuAD JSON")->required();
  downsample->add_option("--n", ds->n, "Examples to keep")->required();
  downsample->add_option("--seed", ds->seed, "Sampling seed")
      ->envname("QACONCUR_SEED");
  downsample->add_option("--out", ds->out, "Output SQuAD JSON")->required();
  downsample->add_option("--title", ds->title, "Dataset title");
  downsample->callback([ds] { run_downsample(*ds); });

  // evaluate
  auto ev = std::make_shared<EvaluateOpts>();
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Exact-match score of predictions");
  evaluate->add_option("--gold", ev->gold, "Gold dataset")->required();
  evaluate->add_option("--pred", ev->pred,
                       "Predictions JSON object: id -> answer")
      ->required();
  evaluate->add_option("--format", ev->format, "Gold layout")
      ->check(CLI::IsMember({"squad", "mrqa"}));
  evaluate->add_flag("--strict", ev->strict,
                     "Fail when any gold example lacks a prediction");
  evaluate->add_flag("--per-example", ev->per_example,
                     "Include per-example scores in the report");
  evaluate->add_option("--out", ev->out, "Write a JSON report here");
  evaluate->callback([ev] { run_evaluate(*ev); });

  // concur
  auto co = std::make_shared<ConcurOpts>();
  CLI::App* concur = app.add_subcommand(
      "concur", "Concurrence (tau and r) between two benchmarks");
  concur->add_option("--scores", co->scores, "Score table CSV")->required();
  concur->add_option("--a", co->a, "First benchmark column")->required();
  concur->add_option("--b", co->b, "Second benchmark column")->required();
  concur->add_option("--subset", co->subset, "Approach filter")
      ->check(CLI::IsMember({"all", "pretrained", "non-pretrained"}));
  concur->add_option("--aggregate", co->aggregate, "Multi-run aggregation")
      ->check(CLI::IsMember({"best", "mean"}));
  concur->add_option("--scatter", co->scatter, "Write scatter points CSV");
  concur->callback([co] { run_concur(*co); });

  // matrix
  auto mx = std::make_shared<MatrixOpts>();
  CLI::App* matrix = app.add_subcommand(
      "matrix", "Pairwise concurrence heatmap over all benchmarks");
  matrix->add_option("--scores", mx->scores, "Score table CSV")->required();
  matrix->add_option("--subset", mx->subset, "Approach filter")
      ->check(CLI::IsMember({"all", "pretrained", "non-pretrained"}));
  matrix->add_option("--aggregate", mx->aggregate, "Multi-run aggregation")
      ->check(CLI::IsMember({"best", "mean"}));
  matrix->add_option("--out", mx->out, "Tau heatmap CSV")->required();
  matrix->add_option("--out-r", mx->out_r,
                     "Companion Pearson CSV (default: <out>.r.csv)");
  matrix->callback([mx] { run_matrix(*mx); });

  // stats
  auto st = std::make_shared<StatsOpts>();
  CLI::App* stats =
      app.add_subcommand("stats", "Example counts and average token lengths");
  stats->add_option("--train", st->train, "Train split");
  stats->add_option("--dev", st->dev, "Dev split");
  stats->add_option("--format", st->format, "Input layout")
      ->check(CLI::IsMember({"squad", "mrqa"}));
  stats->add_option("--name", st->name, "Benchmark name");
  stats->callback([st] { run_stats(*st); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const qaconcur::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
