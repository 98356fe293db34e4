// Copyright 2026 The symnet Authors
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

#include "symnet/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <ostream>

#include "symnet/corpus.hpp"
#include "symnet/error.hpp"
#include "symnet/evaluation.hpp"
#include "symnet/features.hpp"
#include "symnet/io.hpp"
#include "symnet/log.hpp"
#include "symnet/logistic_fit.hpp"
#include "symnet/measurements.hpp"
#include "symnet/parallel.hpp"
#include "symnet/statistics.hpp"
#include "symnet/wan.hpp"

namespace symnet::cli {
namespace {

namespace fs = std::filesystem;
using concentric::SymmetryKind;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string number(double v) { return fmt::format("{:.17g}", v); }

std::vector<int> levels_of(const RunConfig& c) {
  auto levels = c.levels.empty() ? std::vector<int>{c.h} : c.levels;
  for (int h : levels) {
    if (h < 1) throw UsageError("h must be >= 1, got " + std::to_string(h));
  }
  return levels;
}

void require_file(const fs::path& p, const std::string& what) {
  if (p.empty()) throw UsageError(what + " path is required");
  if (!fs::is_regular_file(p)) throw UsageError(what + " '" + p.string() + "' does not exist");
}

fs::path output_dir(const RunConfig& c) {
  fs::path dir = c.out.value_or(fs::path("."));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw UsageError("cannot create output directory '" + dir.string() + "'");
  return dir;
}

corpus::PreprocessConfig preprocess_config(const RunConfig& c) {
  corpus::PreprocessConfig pc;
  if (c.stopwords) pc.stopword_list = corpus::load_stopwords(*c.stopwords);
  if (c.lemmas) pc.lemma_map = corpus::load_lemma_map(*c.lemmas);
  pc.cross_sentence_edges = c.cross_sentence;
  pc.strip_boilerplate = c.strip_boilerplate;
  return pc;
}

void validate_corpus_inputs(const RunConfig& c) {
  require_file(c.manifest, "manifest");
  if (c.stopwords) require_file(*c.stopwords, "stopword list");
  if (c.lemmas) require_file(*c.lemmas, "lemma map");
}

std::string file_stem_for(const std::string& id) {
  std::string s = id;
  std::replace_if(s.begin(), s.end(), [](char ch) { return ch == '/' || ch == '\\'; }, '_');
  return s;
}

struct LoadedBook {
  std::optional<stylometry::BookNetwork> book;
  std::size_t tokens = 0;
  std::string error;
};

// Loads and networks every manifest row; failures are reported per row.
std::vector<LoadedBook> load_books(const std::vector<corpus::ManifestEntry>& entries,
                                   const corpus::PreprocessConfig& pc, unsigned threads) {
  std::vector<LoadedBook> out(entries.size());
  parallel_for(entries.size(), threads, [&](std::size_t i) {
    const auto& e = entries[i];
    try {
      auto doc = corpus::load_document(e, pc);
      out[i].tokens = doc.tokens.size();
      out[i].book = stylometry::BookNetwork{
          doc.id, doc.author, wan::build_wan(doc.tokens, pc.cross_sentence_edges)};
      spdlog::info("{}: {} tokens, {} nodes", e.id, doc.tokens.size(),
                   out[i].book->network.node_count());
    } catch (const std::exception& ex) {
      out[i].error = fmt::format("manifest row {} ({}): {}", e.row, e.id, ex.what());
    }
  });
  return out;
}

std::vector<stylometry::BookNetwork> load_all_books(const RunConfig& c, std::ostream& err) {
  const auto entries = corpus::load_manifest(c.manifest);
  auto loaded = load_books(entries, preprocess_config(c), c.threads);
  std::vector<stylometry::BookNetwork> books;
  bool failed = false;
  for (auto& l : loaded) {
    if (!l.error.empty()) {
      err << l.error << '\n';
      failed = true;
    } else {
      books.push_back(std::move(*l.book));
    }
  }
  if (failed) throw Error("some books could not be loaded");
  return books;
}

std::string fit_json(const netstats::LogisticFit& f) {
  nlohmann::ordered_json j{{"A1", f.A1},   {"A2", f.A2},
                           {"S0", f.S0},   {"p", f.p},
                           {"r_squared", f.r_squared},
                           {"chi_squared", f.chi_squared},
                           {"iterations", f.iterations},
                           {"full_form", f.full_form}};
  return j.dump(2) + "\n";
}

std::string histogram_csv(const netstats::Histogram& h) {
  std::string out = "bin_center,density\n";
  const auto centers = h.centers();
  for (std::size_t i = 0; i < h.bins(); ++i) {
    out += number(centers[i]) + "," + number(h.densities[i]) + "\n";
  }
  return out;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kFailure;
  }
}

}  // namespace

std::string symmetry_csv(const WordNetwork& net, int h, SymmetryKind kind, unsigned threads) {
  const auto values = concentric::symmetry_all(net, h, kind, threads);
  std::string out = "lemma,degree,frequency,kind,h,symmetry\n";
  const auto kind_name = std::string(concentric::to_string(kind));
  for (NodeId v = 0; v < net.node_count(); ++v) {
    out += csv_field(net.lemma(v));
    out += fmt::format(",{},", net.degree(v));
    if (net.has_frequencies()) out += std::to_string(net.frequency(v));
    out += fmt::format(",{},{},", kind_name, h);
    if (values[v].value) out += number(*values[v].value);
    out += '\n';
  }
  return out;
}

int cmd_build(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_corpus_inputs(c);
    const auto dir = output_dir(c);
    const auto entries = corpus::load_manifest(c.manifest);
    auto loaded = load_books(entries, preprocess_config(c), c.threads);
    int status = kOk;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
      auto& l = loaded[i];
      if (!l.error.empty()) {
        err << l.error << '\n';
        status = kFailure;
        continue;
      }
      const auto& net = l.book->network;
      const auto stem = file_stem_for(entries[i].id);
      try {
        wan::export_network(net, dir / (stem + ".tsv"));
        wan::export_json(net, dir / (stem + ".json"));
      } catch (const std::exception& ex) {
        err << fmt::format("manifest row {} ({}): {}\n", entries[i].row, entries[i].id, ex.what());
        status = kFailure;
        continue;
      }
      out << fmt::format("{} {} {} {}\n", entries[i].id, net.node_count(), net.edge_count(),
                         l.tokens);
    }
    return status;
  });
}

int cmd_symmetry(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (c.h < 1) throw UsageError("h must be >= 1, got " + std::to_string(c.h));
    require_file(c.network, "network");
    const auto net = wan::load_network(c.network);
    const auto csv = symmetry_csv(net, c.h, c.kind, c.threads);
    if (c.out) {
      const auto path = output_dir(c) / fmt::format("{}.{}.h{}.csv", c.network.stem().string(),
                                                     concentric::to_string(c.kind), c.h);
      io::write_file_atomic(path, csv);
      out << path.string() << '\n';
    } else {
      out << csv;
    }
    return kOk;
  });
}

int cmd_analyze(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto levels = levels_of(c);
    if (c.bins < 1) throw UsageError("bins must be >= 1");
    require_file(c.network, "network");
    const auto dir = output_dir(c);
    const auto net = wan::load_network(c.network);

    std::vector<netstats::MeasurementVector> measurements;
    for (auto name : netstats::supported_measurements()) {
      measurements.push_back(netstats::compute_measurement(net, name));
    }

    std::string correlations = "measurement,kind,h,pearson\n";
    for (int h : levels) {
      const auto pairs = concentric::symmetry_all_kinds(net, h, c.threads);
      for (auto kind : {SymmetryKind::backbone, SymmetryKind::merged}) {
        const auto kind_name = std::string(concentric::to_string(kind));
        std::vector<double> values(pairs.size(), std::numeric_limits<double>::quiet_NaN());
        for (std::size_t v = 0; v < pairs.size(); ++v) {
          const auto& s = kind == SymmetryKind::backbone ? pairs[v].backbone : pairs[v].merged;
          if (s) values[v] = *s;
        }
        const bool any = std::any_of(values.begin(), values.end(),
                                     [](double v) { return !std::isnan(v); });
        if (any) {
          const auto hist = netstats::histogram(values, c.bins);
          io::write_file_atomic(dir / fmt::format("histogram_{}_h{}.csv", kind_name, h),
                                histogram_csv(hist));
          if (kind == SymmetryKind::merged) {
            std::string report;
            try {
              const auto fit = netstats::fit_logistic(hist, c.full_form_fit);
              report = fit_json(fit);
              out << fmt::format("h={} merged logistic fit: R^2={:.5f} chi^2={:.5g}\n", h,
                                 fit.r_squared, fit.chi_squared);
            } catch (const netstats::FitError& ex) {
              nlohmann::ordered_json j{{"error", ex.what()}};
              report = j.dump(2) + "\n";
              out << fmt::format("h={} merged logistic fit failed: {}\n", h, ex.what());
            }
            io::write_file_atomic(dir / fmt::format("fit_merged_h{}.json", h), report);
          }
        } else {
          out << fmt::format("h={} {}: no defined symmetry values\n", h, kind_name);
        }
        for (const auto& m : measurements) {
          correlations += fmt::format("{},{},{},", m.name, kind_name, h);
          try {
            correlations += number(netstats::pearson(m.values, values));
          } catch (const Error&) {
            // Undefined correlation: left empty.
          }
          correlations += '\n';
        }
      }
    }
    io::write_file_atomic(dir / "correlations.csv", correlations);
    return kOk;
  });
}

namespace {

stylometry::FeatureMatrix features_for(const RunConfig& c, std::ostream& err) {
  const auto levels = levels_of(c);
  validate_corpus_inputs(c);
  const auto books = load_all_books(c, err);
  return stylometry::build_features(books, c.kind, levels, c.threads);
}

}  // namespace

int cmd_classify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto dir = output_dir(c);
    const auto features = features_for(c, err);
    const auto report = stylometry::loocv(c.classifier, features, c.threads);
    const auto path =
        dir / fmt::format("report_{}_{}.json", concentric::to_string(c.kind),
                          stylometry::to_string(c.classifier.kind));
    io::write_file_atomic(path, stylometry::report_to_json(report, features.book_ids));
    out << fmt::format("accuracy {:.4f} ({}/{}), p-value {:.3g}, {} features\n", report.accuracy,
                       report.correct, report.total, report.p_value, features.columns.size());
    return kOk;
  });
}

int cmd_features(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto dir = output_dir(c);
    const auto features = features_for(c, err);
    const auto path = dir / fmt::format("features_{}.csv", concentric::to_string(c.kind));
    io::write_file_atomic(path, stylometry::features_to_csv(features));
    out << fmt::format("{} books x {} features -> {}\n", features.values.rows,
                       features.columns.size(), path.string());
    return kOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  init_logging();
  RunConfig c;
  std::string kind_name;
  std::string classifier_name = "svm";
  std::string fit_form = "full";
  std::string out_dir;
  std::string stopwords, lemmas;

  CLI::App app{"Concentric symmetry of word adjacency networks"};
  app.require_subcommand(1);
  // -h would collide with --h.
  app.set_help_flag("--help", "Print this help message and exit");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
    sub->add_option("--out", out_dir, "Output directory");
  };
  auto add_corpus = [&](CLI::App* sub) {
    sub->add_option("manifest", c.manifest, "Corpus manifest CSV (id,author,title,path)")
        ->required();
    sub->add_option("--stopwords", stopwords, "Stopword list, one word per line");
    sub->add_option("--lemmas", lemmas, "Lemma map TSV (surface<TAB>lemma)");
    sub->add_flag("--cross-sentence", c.cross_sentence, "Link words across sentence boundaries");
    sub->add_flag("!--keep-boilerplate", c.strip_boilerplate,
                  "Do not strip e-text START/END boilerplate");
  };
  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--h", c.h, "Concentric level")->check(CLI::PositiveNumber);
    sub->add_option("--levels", c.levels, "Comma-separated levels (overrides --h)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
  };
  auto* build = app.add_subcommand("build", "Build one network (TSV + JSON) per book");
  add_corpus(build);
  add_common(build);

  auto* symmetry = app.add_subcommand("symmetry", "Per-node symmetry CSV for a network file");
  symmetry->add_option("network", c.network, "Network file (.tsv edge list or .json)")->required();
  symmetry->add_option("--h", c.h, "Concentric level")->check(CLI::PositiveNumber);
  symmetry->add_option("--kind", kind_name, "Symmetry kind")
      ->check(CLI::IsMember({"backbone", "merged"}));
  add_common(symmetry);

  auto* analyze = app.add_subcommand("analyze", "Histograms, logistic fit and correlations");
  analyze->add_option("network", c.network, "Network file (.tsv edge list or .json)")->required();
  add_levels(analyze);
  analyze->add_option("--bins", c.bins, "Histogram bins")->check(CLI::PositiveNumber);
  analyze->add_option("--fit-form", fit_form, "Logistic form")
      ->check(CLI::IsMember({"full", "reduced"}));
  add_common(analyze);

  auto* classify = app.add_subcommand("classify", "Leave-one-out authorship attribution");
  add_corpus(classify);
  add_levels(classify);
  add_common(classify);
  classify->add_option("--kind", kind_name, "Symmetry kind")
      ->check(CLI::IsMember({"backbone", "merged"}));
  classify->add_option("--classifier", classifier_name, "Classifier")
      ->check(CLI::IsMember({"svm", "mlp", "knn", "nby"}));
  classify->add_option("--k", c.classifier.k, "KNN neighbors")->check(CLI::PositiveNumber);
  classify->add_option("--seed", c.classifier.seed, "Seed for SVM/MLP initialization");
  classify->add_option("--svm-c", c.classifier.svm_c, "SVM regularization constant")
      ->check(CLI::PositiveNumber);
  classify->add_option("--svm-epochs", c.classifier.svm_epochs, "SVM epochs")
      ->check(CLI::PositiveNumber);
  classify->add_option("--mlp-hidden", c.classifier.mlp_hidden, "MLP hidden units")
      ->check(CLI::PositiveNumber);
  classify->add_option("--mlp-rate", c.classifier.mlp_learning_rate, "MLP learning rate")
      ->check(CLI::PositiveNumber);
  classify->add_option("--mlp-epochs", c.classifier.mlp_epochs, "MLP epochs")
      ->check(CLI::NonNegativeNumber);

  auto* features = app.add_subcommand("features", "Write the book x shared-word feature CSV");
  add_corpus(features);
  add_levels(features);
  add_common(features);
  features->add_option("--kind", kind_name, "Symmetry kind")
      ->check(CLI::IsMember({"backbone", "merged"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  auto* chosen = app.get_subcommands().front();
  c.subcommand = chosen->get_name();
  if (kind_name.empty()) kind_name = c.subcommand == "symmetry" ? "backbone" : "merged";
  c.kind = concentric::parse_kind(kind_name);
  c.classifier.kind = stylometry::parse_classifier(classifier_name);
  c.full_form_fit = fit_form == "full";
  if (!out_dir.empty()) c.out = out_dir;
  if (!stopwords.empty()) c.stopwords = stopwords;
  if (!lemmas.empty()) c.lemmas = lemmas;

  if (c.subcommand == "build") return cmd_build(c, out, err);
  if (c.subcommand == "symmetry") return cmd_symmetry(c, out, err);
  if (c.subcommand == "analyze") return cmd_analyze(c, out, err);
  if (c.subcommand == "classify") return cmd_classify(c, out, err);
  return cmd_features(c, out, err);
}

}  // namespace symnet::cli
