#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdahrv/app/commands.hpp"
#include "tdahrv/diagram_io.hpp"
#include "tdahrv/feature_io.hpp"
#include "tdahrv/rank_test.hpp"
#include "tdahrv/text_format.hpp"

namespace fs = std::filesystem;
using namespace tdahrv;
using namespace tdahrv::app;

namespace {

// Flags left unset keep the value from --config (or the default).
struct ConfigFlags {
  std::optional<std::string> config_file;
  std::optional<double> fs, epoch, rr_low, rr_high;
  std::optional<int> window, vr_max_dim;
  std::optional<std::size_t> dim, lag;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool no_normalize = false;

  RunConfig resolve() const {
    RunConfig c;
    if (config_file) {
      std::ifstream in(*config_file);
      if (!in) throw UsageError("cannot open config file " + *config_file);
      read_config(in, *config_file, c);
    }
    if (fs) c.fs = *fs;
    if (epoch) c.epoch_sec = *epoch;
    if (window) c.window_epochs = *window;
    if (dim) c.embed_dim = *dim;
    if (lag) c.lag = *lag;
    if (vr_max_dim) c.vr_max_dim = *vr_max_dim;
    if (seed) c.seed = *seed;
    if (no_normalize) c.normalize = false;
    if (rr_low) c.rr_low = *rr_low;
    if (rr_high) c.rr_high = *rr_high;
    if (threads) c.threads = *threads;
    c.validate();
    return c;
  }
};

void add_config_flags(CLI::App& app, ConfigFlags& f) {
  app.add_option("--config", f.config_file, "key = value configuration file; flags override it");
  app.add_option("--fs", f.fs, "IHR resampling rate in Hz (4)");
  app.add_option("--epoch", f.epoch, "epoch length in seconds (30)");
  app.add_option("--window", f.window, "epochs per analysis window (3)");
  app.add_option("--dim", f.dim, "lag-map embedding dimension (120)");
  app.add_option("--lag", f.lag, "lag-map delay in samples (1)");
  app.add_option("--vr-max-dim", f.vr_max_dim, "highest Rips homology dimension, 0 or 1 (1)");
  app.add_option("--seed", f.seed, "random seed (1)");
  app.add_flag("--no-normalize", f.no_normalize, "skip per-recording feature normalization");
  app.add_option("--rr-low", f.rr_low, "lower RR acceptance factor (0.6)");
  app.add_option("--rr-high", f.rr_high, "upper RR acceptance factor (1.8)");
  app.add_option("--threads", f.threads, "worker threads, 0 = all cores (1)");
}

std::vector<fs::path> to_paths(const std::vector<std::string>& names) { return {names.begin(), names.end()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistent-homology features of heart-rate series and sleep-stage classification"};
  app.require_subcommand(1);
  app.fallthrough();
  ConfigFlags flags;
  add_config_flags(app, flags);

  // synth
  auto* synth = app.add_subcommand("synth", "generate synthetic R-peak and hypnogram files");
  SynthOptions synth_opts;
  std::string synth_out;
  synth->add_option("-n,--recordings", synth_opts.recordings, "number of recordings")->capture_default_str();
  synth->add_option("--minutes", synth_opts.minutes, "length of each recording")->capture_default_str();
  synth->add_option("--prefix", synth_opts.prefix, "recording id prefix")->capture_default_str();
  synth->add_option("-o,--out-dir", synth_out, "output directory")->required();

  // extract
  auto* extract = app.add_subcommand("extract", "R peaks + labels -> feature CSV");
  std::vector<std::string> extract_peaks;
  std::string extract_labels, extract_out;
  extract->add_option("peaks", extract_peaks, "peak files; labels are read from <stem>.labels")->required();
  extract->add_option("--labels", extract_labels, "labels file (single peaks file only)");
  extract->add_option("-o,--output", extract_out, "feature CSV")->required();

  // train
  auto* train = app.add_subcommand("train", "feature CSVs -> model file");
  std::vector<std::string> train_inputs;
  std::string task_text = "sleep-wake", model_out;
  train->add_option("features", train_inputs, "feature CSVs")->required();
  train->add_option("--task", task_text, "sleep-wake, rem-nrem or 3-class")->capture_default_str();
  train->add_option("-o,--model", model_out, "model file")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "model + feature CSVs -> per-recording metrics");
  std::vector<std::string> eval_inputs;
  std::string eval_model, eval_report;
  eval->add_option("features", eval_inputs, "feature CSVs")->required();
  eval->add_option("-m,--model", eval_model, "model file")->required();
  eval->add_option("-o,--report", eval_report, "report CSV");

  // pd
  auto* pd = app.add_subcommand("pd", "series or point cloud -> persistence diagram CSV");
  PdOptions pd_opts;
  std::vector<std::string> pd_inputs;
  std::string pd_out, pd_thresholds;
  bool pd_distance = false;
  pd->add_option("input", pd_inputs, "input CSV, '-' for stdin (two diagram CSVs with --distance)")->required();
  pd->add_option("--filtration", pd_opts.filtration, "sublevel or vr")->capture_default_str();
  pd->add_option("--thresholds", pd_thresholds, "comma-separated ascending thresholds (sublevel)");
  pd->add_flag("--embed", pd_opts.embed, "vr on the lag map of a series (--dim, --lag)");
  pd->add_flag("--matrix", pd_opts.matrix, "input is a distance matrix (vr)");
  pd->add_flag("--distance", pd_distance, "print the bottleneck distance between two diagram CSVs");
  pd->add_option("-o,--output", pd_out, "diagram CSV (default stdout)");

  // screen
  auto* screen = app.add_subcommand("screen", "rank-sum screening of features between two stages");
  std::vector<std::string> screen_inputs;
  std::vector<int> screen_groups{0, 2};
  double screen_alpha = 0.05;
  screen->add_option("features", screen_inputs, "feature CSVs")->required();
  screen->add_option("--groups", screen_groups, "two stage labels")->expected(2)->delimiter(',')->capture_default_str();
  screen->add_option("--alpha", screen_alpha, "family-wise significance level")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const RunConfig config = flags.resolve();
    if (*synth) {
      const auto recs = run_synth(config, synth_opts, synth_out);
      std::cerr << "wrote " << recs.size() << " recordings to " << synth_out << '\n';
    } else if (*extract) {
      std::vector<RecordingFiles> files;
      for (const auto& p : extract_peaks) files.push_back(recording_files(p));
      if (!extract_labels.empty()) {
        if (files.size() != 1) throw UsageError("--labels needs exactly one peaks file");
        files[0].labels = extract_labels;
      }
      const auto rows = run_extract(files, config, extract_out, &std::cerr);
      std::cerr << "wrote " << rows << " feature rows to " << extract_out << '\n';
    } else if (*train) {
      const Task task = parse_task(task_text);
      const auto summary = run_train(to_paths(train_inputs), task, config, model_out);
      std::cerr << "task " << task_name(task) << ":";
      for (std::size_t k = 0; k < summary.available.size(); ++k)
        std::cerr << ' ' << class_name(task, static_cast<int>(k)) << '=' << summary.available[k];
      std::cerr << " epochs, " << summary.used_per_class << " per class after balancing\n";
    } else if (*eval) {
      const auto report = run_eval(eval_model, to_paths(eval_inputs), config, eval_report);
      write_report_table(std::cout, report);
    } else if (*pd) {
      std::ofstream file_out;
      if (!pd_out.empty()) {
        file_out.open(pd_out, std::ios::binary);
        if (!file_out) throw std::runtime_error("cannot write " + pd_out);
      }
      std::ostream& out = pd_out.empty() ? std::cout : file_out;
      if (pd_distance) {
        if (pd_inputs.size() != 2) throw UsageError("--distance needs exactly two diagram files");
        std::ifstream a(pd_inputs[0]), b(pd_inputs[1]);
        if (!a) throw std::runtime_error("cannot open " + pd_inputs[0]);
        if (!b) throw std::runtime_error("cannot open " + pd_inputs[1]);
        out << "dim,bottleneck\n";
        for (const auto& d : diagram_distances(a, pd_inputs[0], b, pd_inputs[1]))
          out << d.dim << ',' << format_real(d.bottleneck) << '\n';
        return 0;
      }
      if (pd_inputs.size() != 1) throw UsageError("pd takes one input file");
      const std::string& pd_input = pd_inputs[0];
      if (!pd_thresholds.empty()) pd_opts.thresholds = parse_thresholds(pd_thresholds);
      std::vector<PersistenceDiagram> diagrams;
      if (pd_input == "-") {
        diagrams = run_pd(std::cin, "<stdin>", pd_opts, config);
      } else {
        std::ifstream in(pd_input);
        if (!in) throw std::runtime_error("cannot open " + pd_input);
        diagrams = run_pd(in, pd_input, pd_opts, config);
      }
      write_diagram_csv(out, diagrams);
    } else if (*screen) {
      const auto rows = read_feature_files(to_paths(screen_inputs));
      const std::string header_line = feature_csv_header();
      const auto header = split(header_line, ',');
      std::cout << "feature,p_value,significant\n";
      for (const auto& s : screen_features(rows, screen_groups[0], screen_groups[1], screen_alpha))
        std::cout << header[3 + s.feature] << ',' << format_real(s.p_value) << ',' << (s.significant ? 1 : 0)
                  << '\n';
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
