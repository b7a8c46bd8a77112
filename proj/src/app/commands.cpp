#include "tdahrv/app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tdahrv/bottleneck.hpp"
#include "tdahrv/diagram_io.hpp"
#include "tdahrv/errors.hpp"
#include "tdahrv/feature_io.hpp"
#include "tdahrv/hrv.hpp"
#include "tdahrv/point_cloud.hpp"
#include "tdahrv/rips.hpp"
#include "tdahrv/sampling.hpp"
#include "tdahrv/sublevel.hpp"
#include "tdahrv/svm.hpp"
#include "tdahrv/text_format.hpp"

namespace tdahrv::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kModelVersion = 1;

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("error writing " + path.string());
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, n) on `threads` workers; rethrows the failure of
// the smallest index so errors do not depend on scheduling.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) run(i);
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string fixed(double v, int digits = 3) {
  if (std::isnan(v)) return "-";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

// ---- tasks -------------------------------------------------------------

Task parse_task(std::string_view name) {
  if (name == "sleep-wake") return Task::kSleepWake;
  if (name == "rem-nrem") return Task::kRemNrem;
  if (name == "3-class") return Task::kThreeClass;
  throw UsageError("unknown task '" + std::string(name) + "' (expected sleep-wake, rem-nrem or 3-class)");
}

std::string task_name(Task task) {
  switch (task) {
    case Task::kSleepWake: return "sleep-wake";
    case Task::kRemNrem: return "rem-nrem";
    case Task::kThreeClass: return "3-class";
  }
  throw std::logic_error("bad task");
}

std::vector<int> task_classes(Task task) {
  if (task == Task::kThreeClass) return {0, 1, 2};
  return {0, 1};
}

std::string class_name(Task task, int cls) {
  static const char* const sleep_wake[] = {"wake", "sleep"};
  static const char* const rem_nrem[] = {"rem", "nrem"};
  static const char* const three[] = {"wake", "rem", "nrem"};
  const auto classes = task_classes(task);
  if (cls < 0 || cls >= static_cast<int>(classes.size())) throw std::invalid_argument("class out of range");
  switch (task) {
    case Task::kSleepWake: return sleep_wake[cls];
    case Task::kRemNrem: return rem_nrem[cls];
    case Task::kThreeClass: return three[cls];
  }
  throw std::logic_error("bad task");
}

std::vector<FeatureVector> apply_task(std::vector<FeatureVector> rows, Task task) {
  std::vector<FeatureVector> out;
  out.reserve(rows.size());
  for (auto& row : rows) {
    int label = row.label;
    if (label < 0) continue;
    if (label > kNrem) throw std::invalid_argument("unknown stage label " + std::to_string(label));
    switch (task) {
      case Task::kSleepWake: label = label == kWake ? 0 : 1; break;
      case Task::kRemNrem:
        if (label == kWake) continue;
        label = label == kRem ? 0 : 1;
        break;
      case Task::kThreeClass: break;
    }
    row.label = label;
    out.push_back(std::move(row));
  }
  return out;
}

// ---- synth -------------------------------------------------------------

std::vector<SyntheticRecording> run_synth(const RunConfig& config, const SynthOptions& options,
                                          const std::filesystem::path& out_dir) {
  config.validate();
  if (options.recordings < 1) throw UsageError("need at least one recording");
  if (!(options.minutes > 0.0) || !std::isfinite(options.minutes)) throw UsageError("minutes must be positive");
  auto recordings =
      synthesize_recordings(options.recordings, options.minutes, config.epoch_sec, config.seed, options.prefix);
  std::filesystem::create_directories(out_dir);
  for (const auto& rec : recordings) {
    const auto peaks_path = out_dir / (rec.id + ".peaks");
    auto peaks = open_output(peaks_path);
    for (double t : rec.peaks) peaks << format_real(t) << '\n';
    finish(peaks, peaks_path);
    const auto labels_path = out_dir / (rec.id + ".labels");
    auto labels = open_output(labels_path);
    for (int l : rec.labels) labels << l << '\n';
    finish(labels, labels_path);
  }
  return recordings;
}

// ---- extract -----------------------------------------------------------

RecordingFiles recording_files(const std::filesystem::path& peaks) {
  auto labels = peaks;
  labels.replace_extension(".labels");
  return {peaks, labels};
}

std::vector<FeatureVector> extract_recordings(const std::vector<RecordingFiles>& files, const RunConfig& config,
                                              std::ostream* log) {
  config.validate();
  struct Loaded {
    std::string id;
    std::vector<EpochWindow> windows;
    std::vector<DroppedEpoch> dropped;
  };
  std::vector<Loaded> loaded;
  for (const auto& f : files) {
    Loaded rec;
    rec.id = f.peaks.stem().string();
    for (const auto& other : loaded)
      if (other.id == rec.id) throw std::invalid_argument("duplicate recording id " + rec.id);
    auto peaks_in = open_input(f.peaks);
    const auto peaks = read_peaks(peaks_in, f.peaks.string());
    auto labels_in = open_input(f.labels);
    const auto labels = read_labels(labels_in, f.labels.string());
    try {
      const auto ihr = ihr_from_peaks(peaks, config.fs, config.rr_bounds());
      rec.windows = build_epochs(ihr, labels, peaks, config.epoch_config(), rec.id, &rec.dropped);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(f.peaks.string() + ": " + e.what());
    }
    loaded.push_back(std::move(rec));
  }
  std::sort(loaded.begin(), loaded.end(), [](const Loaded& a, const Loaded& b) { return a.id < b.id; });

  std::vector<EpochWindow> windows;
  for (auto& rec : loaded) {
    if (log) {
      for (const auto& d : rec.dropped)
        *log << rec.id << ": epoch " << d.epoch_index << " dropped (" << d.reason << ")\n";
      *log << rec.id << ": " << rec.windows.size() << " epochs kept, " << rec.dropped.size() << " dropped\n";
    }
    std::move(rec.windows.begin(), rec.windows.end(), std::back_inserter(windows));
  }
  return extract_all(windows, config.embedding(), resolve_threads(config.threads));
}

std::size_t run_extract(const std::vector<RecordingFiles>& files, const RunConfig& config,
                        const std::filesystem::path& out_csv, std::ostream* log) {
  const auto rows = extract_recordings(files, config, log);
  auto out = open_output(out_csv);
  write_features_csv(out, rows);
  finish(out, out_csv);
  return rows.size();
}

std::vector<FeatureVector> read_feature_files(const std::vector<std::filesystem::path>& paths) {
  std::vector<FeatureVector> rows;
  for (const auto& p : paths) {
    auto in = open_input(p);
    auto part = read_features_csv(in, p.string());
    std::move(part.begin(), part.end(), std::back_inserter(rows));
  }
  return rows;
}

// ---- train -------------------------------------------------------------

TrainedModel train_model(std::vector<FeatureVector> rows, Task task, const RunConfig& config,
                         TrainSummary* summary) {
  config.validate();
  if (config.normalize) rows = normalize_recordings(std::move(rows));
  rows = apply_task(std::move(rows), task);
  const auto classes = task_classes(task);

  std::vector<std::size_t> available(classes.size(), 0);
  for (const auto& r : rows) ++available[static_cast<std::size_t>(r.label)];
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (available[k] == 0)
      throw std::invalid_argument("no training epochs of class '" + class_name(task, classes[k]) + "'");

  const auto chosen = downsample_balance(rows, classes, config.seed);
  FeatureMatrix x(kFeatureCount);
  std::vector<int> labels;
  labels.reserve(chosen.size());
  for (const auto& r : chosen) {
    x.add_row(r.features);
    labels.push_back(r.label);
  }
  if (summary) {
    summary->available = available;
    summary->used_per_class = chosen.size() / classes.size();
  }

  TrainedModel model;
  model.task = task;
  model.normalize = config.normalize;
  model.ecoc = train_ecoc_ovo(x, labels, classes);
  return model;
}

void write_model(std::ostream& out, const TrainedModel& model) {
  nlohmann::ordered_json j;
  j["version"] = kModelVersion;
  j["task"] = task_name(model.task);
  j["normalize"] = model.normalize;
  j["feature_count"] = kFeatureCount;
  j["classes"] = model.ecoc.classes;
  auto members = nlohmann::ordered_json::array();
  for (const auto& m : model.ecoc.members) {
    nlohmann::ordered_json member;
    member["class_pair"] = {m.class_pair.first, m.class_pair.second};
    member["weights"] = m.weights;
    member["bias"] = m.bias;
    members.push_back(std::move(member));
  }
  j["models"] = std::move(members);
  out << j.dump(2) << '\n';
}

TrainedModel read_model(std::istream& in, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(source + ": " + what); };
  try {
    if (j.at("version").get<int>() != kModelVersion) throw fail("unsupported model version");
    TrainedModel model;
    try {
      model.task = parse_task(j.at("task").get<std::string>());
    } catch (const UsageError& e) {
      throw fail(e.what());
    }
    model.normalize = j.at("normalize").get<bool>();
    if (j.at("feature_count").get<std::size_t>() != kFeatureCount) throw fail("feature count mismatch");
    model.ecoc.classes = j.at("classes").get<std::vector<int>>();
    if (model.ecoc.classes != task_classes(model.task)) throw fail("classes do not match the task");
    const std::size_t m = model.ecoc.classes.size();
    const auto& members = j.at("models");
    if (!members.is_array() || members.size() != m * (m - 1) / 2) throw fail("wrong number of binary models");
    std::size_t index = 0;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b, ++index) {
        const auto& item = members.at(index);
        LinearModel lm;
        const auto pair = item.at("class_pair").get<std::vector<int>>();
        if (pair.size() != 2 || pair[0] != model.ecoc.classes[a] || pair[1] != model.ecoc.classes[b])
          throw fail("unexpected class_pair in model " + std::to_string(index));
        lm.class_pair = {pair[0], pair[1]};
        lm.weights = item.at("weights").get<std::vector<double>>();
        if (lm.weights.size() != kFeatureCount) throw fail("model " + std::to_string(index) + " has wrong weight count");
        lm.bias = item.at("bias").get<double>();
        model.ecoc.members.push_back(std::move(lm));
      }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
}

TrainSummary run_train(const std::vector<std::filesystem::path>& feature_csvs, Task task, const RunConfig& config,
                       const std::filesystem::path& model_path) {
  TrainSummary summary;
  const auto model = train_model(read_feature_files(feature_csvs), task, config, &summary);
  auto out = open_output(model_path);
  write_model(out, model);
  finish(out, model_path);
  return summary;
}

// ---- eval --------------------------------------------------------------

Aggregate aggregate(const std::vector<double>& values) {
  Aggregate a;
  double sum = 0.0;
  for (double v : values)
    if (!std::isnan(v)) {
      sum += v;
      ++a.count;
    }
  if (a.count == 0) return {kNaN, kNaN, 0};
  a.mean = sum / static_cast<double>(a.count);
  if (a.count < 2) {
    a.std = kNaN;
    return a;
  }
  double ss = 0.0;
  for (double v : values)
    if (!std::isnan(v)) ss += (v - a.mean) * (v - a.mean);
  a.std = std::sqrt(ss / static_cast<double>(a.count - 1));
  return a;
}

EvalReport evaluate(const TrainedModel& model, std::vector<FeatureVector> rows, unsigned threads) {
  if (model.normalize) rows = normalize_recordings(std::move(rows));
  rows = apply_task(std::move(rows), model.task);
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i) groups[rows[i].recording_id].push_back(i);

  const auto& ecoc = model.ecoc;
  const std::size_t m = ecoc.classes.size();
  const bool binary = m == 2;
  EvalReport report;
  report.task = model.task;
  report.recordings.resize(groups.size());
  std::vector<const std::pair<const std::string, std::vector<std::size_t>>*> order;
  for (const auto& g : groups) order.push_back(&g);

  parallel_for(order.size(), resolve_threads(threads), [&](std::size_t gi) {
    const auto& [id, idx] = *order[gi];
    std::vector<int> truth, pred;
    std::vector<double> binary_scores;
    std::size_t positives = 0;
    std::vector<double> scores(ecoc.members.size());
    for (std::size_t i : idx) {
      const auto& row = rows[i];
      for (std::size_t k = 0; k < scores.size(); ++k) scores[k] = decision_score(ecoc.members[k], row.features);
      truth.push_back(row.label);
      pred.push_back(resolve_votes(ecoc, scores));
      if (binary) {
        binary_scores.push_back(scores[0]);
        positives += row.label == ecoc.classes[1];
      }
    }
    RecordingResult r;
    r.recording_id = id;
    r.epochs = idx.size();
    r.metrics = metrics(confusion(truth, pred, m));
    r.auc = kNaN;
    if (binary && positives > 0 && positives < idx.size()) {
      auto flags = std::make_unique<bool[]>(idx.size());
      for (std::size_t k = 0; k < idx.size(); ++k) flags[k] = truth[k] == ecoc.classes[1];
      r.auc = auc(binary_scores, std::span<const bool>(flags.get(), idx.size()));
    }
    report.recordings[gi] = std::move(r);
  });
  return report;
}

namespace {

struct Column {
  std::string name;
  std::function<double(const RecordingResult&)> get;
};

std::vector<Column> report_columns(Task task) {
  std::vector<Column> cols = {
      {"epochs", [](const RecordingResult& r) { return static_cast<double>(r.epochs); }},
      {"accuracy", [](const RecordingResult& r) { return r.metrics.accuracy; }},
      {"expected_accuracy", [](const RecordingResult& r) { return r.metrics.expected_accuracy; }},
      {"kappa", [](const RecordingResult& r) { return r.metrics.kappa; }},
      {"auc", [](const RecordingResult& r) { return r.auc; }},
  };
  const auto classes = task_classes(task);
  for (const char* kind : {"se", "ppv", "f1"})
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const std::string what = kind;
      cols.push_back({what + "_" + class_name(task, classes[k]), [what, k](const RecordingResult& r) {
                        const auto& v = what == "se" ? r.metrics.sensitivity
                                         : what == "ppv" ? r.metrics.precision
                                                         : r.metrics.f1;
                        return v[k];
                      }});
    }
  return cols;
}

}  // namespace

void write_report_csv(std::ostream& out, const EvalReport& report) {
  const auto cols = report_columns(report.task);
  out << "recording";
  for (const auto& c : cols) out << ',' << c.name;
  out << '\n';
  std::vector<Aggregate> aggs;
  for (const auto& c : cols) {
    std::vector<double> values;
    for (const auto& r : report.recordings) values.push_back(c.get(r));
    aggs.push_back(aggregate(values));
  }
  for (const auto& r : report.recordings) {
    out << r.recording_id;
    for (const auto& c : cols) out << ',' << format_real(c.get(r));
    out << '\n';
  }
  out << "mean";
  for (const auto& a : aggs) out << ',' << format_real(a.mean);
  out << "\nstd";
  for (const auto& a : aggs) out << ',' << format_real(a.std);
  out << '\n';
}

void write_report_table(std::ostream& out, const EvalReport& report) {
  const auto cols = report_columns(report.task);
  out << "task " << task_name(report.task) << ", " << report.recordings.size() << " recordings\n";
  std::size_t id_width = 9;
  for (const auto& r : report.recordings) id_width = std::max(id_width, r.recording_id.size());
  auto cell = [&](const std::string& s, std::size_t w) {
    out << s;
    for (std::size_t i = s.size(); i < w; ++i) out << ' ';
  };
  cell("recording", id_width + 2);
  for (const auto& c : cols) cell(c.name, std::max<std::size_t>(c.name.size(), 6) + 2);
  out << '\n';
  for (const auto& r : report.recordings) {
    cell(r.recording_id, id_width + 2);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double v = cols[k].get(r);
      cell(k == 0 ? std::to_string(r.epochs) : fixed(v), std::max<std::size_t>(cols[k].name.size(), 6) + 2);
    }
    out << '\n';
  }
  for (const char* label : {"mean", "std"}) {
    cell(label, id_width + 2);
    for (const auto& c : cols) {
      std::vector<double> values;
      for (const auto& r : report.recordings) values.push_back(c.get(r));
      const auto a = aggregate(values);
      cell(fixed(std::string(label) == "mean" ? a.mean : a.std, c.name == "epochs" ? 1 : 3),
           std::max<std::size_t>(c.name.size(), 6) + 2);
    }
    out << '\n';
  }
}

EvalReport run_eval(const std::filesystem::path& model_path, const std::vector<std::filesystem::path>& feature_csvs,
                    const RunConfig& config, const std::filesystem::path& report_csv) {
  auto model_in = open_input(model_path);
  const auto model = read_model(model_in, model_path.string());
  auto report = evaluate(model, read_feature_files(feature_csvs), config.threads);
  if (report.recordings.empty()) throw std::invalid_argument("no epochs to evaluate for task " + task_name(model.task));
  if (!report_csv.empty()) {
    auto out = open_output(report_csv);
    write_report_csv(out, report);
    finish(out, report_csv);
  }
  return report;
}

// ---- pd ----------------------------------------------------------------

std::vector<double> parse_thresholds(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) {
    auto v = parse_real(trim(part));
    if (!v || !std::isfinite(*v)) throw UsageError("invalid threshold '" + std::string(part) + "'");
    if (!out.empty() && !(*v > out.back())) throw UsageError("thresholds must be strictly ascending");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("no thresholds given");
  return out;
}

namespace {

struct Table {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> lines;
};

Table read_table(std::istream& in, const std::string& source) {
  Table t;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    std::vector<double> row;
    for (auto field : split(text, ',')) {
      auto v = parse_real(trim(field));
      if (!v || !std::isfinite(*v)) throw ParseError(source, number, "invalid number '" + std::string(trim(field)) + "'");
      row.push_back(*v);
    }
    if (!t.rows.empty() && row.size() != t.rows.front().size())
      throw ParseError(source, number, "expected " + std::to_string(t.rows.front().size()) + " fields, got " +
                                           std::to_string(row.size()));
    t.rows.push_back(std::move(row));
    t.lines.push_back(number);
  }
  if (t.rows.empty()) throw ParseError(source + ": no data");
  return t;
}

std::vector<double> as_series(const Table& t, const std::string& source) {
  if (t.rows.front().size() != 1) throw ParseError(source, t.lines.front(), "series input needs one value per line");
  std::vector<double> out;
  for (const auto& r : t.rows) out.push_back(r[0]);
  return out;
}

}  // namespace

std::vector<PersistenceDiagram> run_pd(std::istream& in, const std::string& source, const PdOptions& options,
                                       const RunConfig& config) {
  config.validate();
  if (options.filtration != "sublevel" && options.filtration != "vr")
    throw UsageError("unknown filtration '" + options.filtration + "' (expected sublevel or vr)");
  const bool sublevel = options.filtration == "sublevel";
  if (sublevel && (options.embed || options.matrix)) throw UsageError("--embed and --matrix apply to vr only");
  if (!sublevel && options.thresholds) throw UsageError("--thresholds applies to sublevel only");
  if (options.embed && options.matrix) throw UsageError("--embed and --matrix are exclusive");

  const auto table = read_table(in, source);
  if (sublevel) {
    const auto series = as_series(table, source);
    if (options.thresholds) return {sublevel_pd0_at(series, *options.thresholds)};
    return {sublevel_pd0(series)};
  }
  if (options.matrix) {
    const std::size_t n = table.rows.size();
    std::vector<double> values;
    for (std::size_t i = 0; i < n; ++i) {
      if (table.rows[i].size() != n)
        throw ParseError(source, table.lines[i], "distance matrix row needs " + std::to_string(n) + " entries");
      values.insert(values.end(), table.rows[i].begin(), table.rows[i].end());
    }
    return vr_pd(DistanceMatrix(n, std::move(values)), config.vr_max_dim);
  }
  if (options.embed) {
    const auto series = as_series(table, source);
    return vr_pd(lag_map(series, config.embed_dim, config.lag), config.vr_max_dim);
  }
  PointCloud cloud(table.rows.front().size());
  for (const auto& r : table.rows) cloud.add_point(r);
  return vr_pd(cloud, config.vr_max_dim);
}

std::vector<DiagramDistance> diagram_distances(std::istream& a, const std::string& source_a, std::istream& b,
                                               const std::string& source_b) {
  std::map<int, std::pair<PersistenceDiagram, PersistenceDiagram>> by_dim;
  for (auto& d : read_diagram_csv(a, source_a))
    by_dim.try_emplace(d.dim(), PersistenceDiagram(d.dim()), PersistenceDiagram(d.dim())).first->second.first = d;
  for (auto& d : read_diagram_csv(b, source_b))
    by_dim.try_emplace(d.dim(), PersistenceDiagram(d.dim()), PersistenceDiagram(d.dim())).first->second.second = d;
  std::vector<DiagramDistance> out;
  for (const auto& [dim, pair] : by_dim) out.push_back({dim, bottleneck(pair.first, pair.second)});
  return out;
}

}  // namespace tdahrv::app
