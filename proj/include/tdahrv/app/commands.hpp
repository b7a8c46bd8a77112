#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdahrv/app/config.hpp"
#include "tdahrv/diagram.hpp"
#include "tdahrv/ecoc.hpp"
#include "tdahrv/features.hpp"
#include "tdahrv/metrics.hpp"
#include "tdahrv/synth.hpp"

namespace tdahrv::app {

// ---- tasks -------------------------------------------------------------

enum class Task { kSleepWake, kRemNrem, kThreeClass };

/// "sleep-wake", "rem-nrem" or "3-class"; throws UsageError otherwise.
Task parse_task(std::string_view name);
std::string task_name(Task task);
std::vector<int> task_classes(Task task);
std::string class_name(Task task, int cls);

/// Relabels stage labels (0 wake, 1 REM, 2 NREM) into the task's classes.
/// sleep-wake: wake -> 0, REM/NREM -> 1. rem-nrem: REM -> 0, NREM -> 1, wake
/// rows removed. 3-class: unchanged. Unscored rows are removed.
std::vector<FeatureVector> apply_task(std::vector<FeatureVector> rows, Task task);

// ---- synth -------------------------------------------------------------

struct SynthOptions {
  int recordings = 10;
  double minutes = 30.0;
  std::string prefix = "rec";
};

/// Writes <id>.peaks and <id>.labels per recording into `out_dir` (created
/// if missing). Uses config.seed and config.epoch_sec.
std::vector<SyntheticRecording> run_synth(const RunConfig& config, const SynthOptions& options,
                                          const std::filesystem::path& out_dir);

// ---- extract -----------------------------------------------------------

struct RecordingFiles {
  std::filesystem::path peaks;
  std::filesystem::path labels;
};

/// Pairs a peaks file with the labels file of the same stem.
RecordingFiles recording_files(const std::filesystem::path& peaks);

/// Reads each recording, builds its epoch windows and extracts raw
/// (unnormalized) features. Rows come out sorted by (recording, epoch);
/// recording ids are the peaks file stems. Dropped epochs are reported to
/// `log` when given.
std::vector<FeatureVector> extract_recordings(const std::vector<RecordingFiles>& files, const RunConfig& config,
                                              std::ostream* log = nullptr);

/// extract_recordings + feature CSV. Returns the row count.
std::size_t run_extract(const std::vector<RecordingFiles>& files, const RunConfig& config,
                        const std::filesystem::path& out_csv, std::ostream* log = nullptr);

std::vector<FeatureVector> read_feature_files(const std::vector<std::filesystem::path>& paths);

// ---- train -------------------------------------------------------------

struct TrainedModel {
  Task task = Task::kSleepWake;
  bool normalize = true;
  EcocModel ecoc;
};

struct TrainSummary {
  std::vector<std::size_t> available;  // rows per class before balancing
  std::size_t used_per_class = 0;
};

/// Optional per-recording normalization, task relabelling, class-balanced
/// down-sampling (config.seed) and one-versus-one training.
TrainedModel train_model(std::vector<FeatureVector> rows, Task task, const RunConfig& config,
                         TrainSummary* summary = nullptr);

/// JSON model: version, task, normalize, classes, models[{class_pair,
/// weights, bias}].
void write_model(std::ostream& out, const TrainedModel& model);
TrainedModel read_model(std::istream& in, const std::string& source);

TrainSummary run_train(const std::vector<std::filesystem::path>& feature_csvs, Task task, const RunConfig& config,
                       const std::filesystem::path& model_path);

// ---- eval --------------------------------------------------------------

struct RecordingResult {
  std::string recording_id;
  std::size_t epochs = 0;
  ClassificationMetrics metrics;
  double auc = 0.0;  // NaN unless the task is binary and both classes occur
};

struct EvalReport {
  Task task = Task::kSleepWake;
  std::vector<RecordingResult> recordings;  // sorted by id
};

struct Aggregate {
  double mean = 0.0;
  double std = 0.0;      // sample standard deviation
  std::size_t count = 0;  // recordings with a defined value
};

/// Mean and sample std over recordings, skipping NaN values.
Aggregate aggregate(const std::vector<double>& values);

/// Per-recording evaluation; recordings are processed on config.threads
/// workers with order-independent results.
EvalReport evaluate(const TrainedModel& model, std::vector<FeatureVector> rows, unsigned threads = 1);

/// Per-recording rows followed by `mean` and `std` rows.
void write_report_csv(std::ostream& out, const EvalReport& report);
void write_report_table(std::ostream& out, const EvalReport& report);

EvalReport run_eval(const std::filesystem::path& model_path, const std::vector<std::filesystem::path>& feature_csvs,
                    const RunConfig& config, const std::filesystem::path& report_csv);

// ---- pd ----------------------------------------------------------------

struct PdOptions {
  std::string filtration = "sublevel";  // or "vr"
  std::optional<std::vector<double>> thresholds;
  bool embed = false;     // vr on the lag map of a series
  bool matrix = false;  // vr on a distance matrix
};

/// Parses "a,b,c" into ascending reals; throws UsageError.
std::vector<double> parse_thresholds(std::string_view text);

/// Series: one value per line. Cloud: one point per line, comma-separated
/// coordinates. Matrix: one distance-matrix row per line. Blank lines and
/// lines starting with '#' are skipped.
std::vector<PersistenceDiagram> run_pd(std::istream& in, const std::string& source, const PdOptions& options,
                                       const RunConfig& config);

struct DiagramDistance {
  int dim;
  double bottleneck;
};

/// Bottleneck distance per dimension between two diagram CSVs; a dimension
/// missing from one side counts as an empty diagram.
std::vector<DiagramDistance> diagram_distances(std::istream& a, const std::string& source_a, std::istream& b,
                                               const std::string& source_b);

}  // namespace tdahrv::app
