#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "cli/run_config.hpp"
#include "cli/svg.hpp"
#include "cli/wav.hpp"
#include "consonoscope/amplifier.hpp"
#include "consonoscope/errors.hpp"
#include "consonoscope/format.hpp"
#include "consonoscope/graph_io.hpp"

namespace consonoscope::cli {

namespace {

namespace fs = std::filesystem;

// Shortest round-trip spelling, used in file names ("2.5", "50").
std::string short_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

class Emitter {
 public:
  Emitter(fs::path dir, std::ostream& out) : dir_(std::move(dir)), out_(out) {}

  void write(const std::string& name, const std::string& content) {
    fs::create_directories(dir_);
    const auto path = dir_ / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed for '" + path.string() + "'");
    out_ << "wrote " << path.string() << '\n';
  }

 private:
  fs::path dir_;
  std::ostream& out_;
};

std::vector<GraphFormat> graph_formats(const RunConfig& cfg) {
  std::vector<GraphFormat> out;
  if (cfg.wants(OutputFormat::Dot)) out.push_back(GraphFormat::Dot);
  if (cfg.wants(OutputFormat::Json)) out.push_back(GraphFormat::Json);
  return out;
}

void emit_graphs(Emitter& emit, const RunConfig& cfg, const ScaleAnalysis& analysis) {
  const std::string stem(to_string(analysis.scale.kind));
  for (auto kind : {GraphKind::Consonance, GraphKind::Dissonance}) {
    const auto graph = build_graph(analysis, kind);
    for (auto f : graph_formats(cfg))
      emit.write(stem + "_" + std::string(to_string(kind)) + "." + std::string(extension(f)),
                 export_graph(graph, f));
  }
}

void cmd_interval(const RunConfig& cfg, double f1, double f2, Emitter& emit, std::ostream& out) {
  const auto a = harmonic_spectrum(f1, cfg.model);
  const auto b = harmonic_spectrum(f2, cfg.model);
  auto doc = assessment_to_json(assess_interval(a, b, cfg.model));
  doc["f1"] = f1;
  doc["f2"] = f2;
  doc["mode"] = std::string(to_string(cfg.model.weighting_mode));
  const auto text = to_fixed_json(doc) + "\n";
  out << text;
  if (cfg.wants(OutputFormat::Json)) emit.write("interval.json", text);
}

void cmd_scale(const RunConfig& cfg, const std::string& kind_name, Emitter& emit) {
  const auto analysis =
      scale_matrix(build_scale(temperament_from_string(kind_name), cfg.base_frequency), cfg.model);
  const std::string stem(to_string(analysis.scale.kind));
  if (cfg.wants(OutputFormat::Csv)) emit.write(stem + "_matrix.csv", export_matrix_csv(analysis));
  if (cfg.wants(OutputFormat::Svg))
    emit.write(stem + "_bipartite.svg", render_bipartite_svg(analysis));
  emit_graphs(emit, cfg, analysis);
}

void cmd_graphs(const RunConfig& cfg, const std::string& kind_name, Emitter& emit) {
  std::vector<Temperament> kinds;
  if (kind_name == "all") kinds.assign(kAllTemperaments.begin(), kAllTemperaments.end());
  else kinds.push_back(temperament_from_string(kind_name));
  for (auto kind : kinds)
    emit_graphs(emit, cfg, scale_matrix(build_scale(kind, cfg.base_frequency), cfg.model));
}

void cmd_triads(const RunConfig& cfg, Emitter& emit) {
  const auto report = temperament_report(cfg.base_frequency, cfg.model);
  if (cfg.wants(OutputFormat::Csv)) emit.write("triads.csv", export_triads_csv(report.triads));
  if (cfg.wants(OutputFormat::Svg)) {
    HeatMap map{"triad consonance", {}, {}, {}};
    const auto& names = pitch_names();
    map.column_labels.assign(names.begin(), names.begin() + 12);
    for (std::size_t k = 0; k < report.triads.size(); k += 12) {
      const auto& t = report.triads[k];
      map.row_labels.push_back(std::string(to_string(t.temperament)) + " " +
                               std::string(to_string(t.quality)));
      std::vector<double> row;
      for (std::size_t r = 0; r < 12; ++r) row.push_back(report.triads[k + r].total_consonance);
      map.values.push_back(std::move(row));
    }
    emit.write("triads.svg", render_heatmap_svg(map));
  }
}

struct BeatOptions {
  double duration = 1.0;
  double sample_rate = 44100.0;
};

void cmd_beats(const RunConfig& cfg, double f1, double f2, const BeatOptions& opt, Emitter& emit,
               std::ostream& out) {
  if (!(f1 > 0.0) || !(f2 > 0.0)) throw DomainError("beat frequencies must be positive");
  const std::vector<Voice> voices = {{Spectrum(f1, {{f1, 1.0, 1}}), {}},
                                     {Spectrum(f2, {{f2, 1.0, 1}}), {}}};
  const auto w = render_waveform(voices, opt.duration, opt.sample_rate);
  const double beat = std::abs(f2 - f1);

  std::vector<double> peak_times;
  if (beat > 0.0) {
    const auto half =
        std::max<std::size_t>(1, static_cast<std::size_t>(opt.sample_rate / beat / 4.0));
    for (auto k : envelope_maxima(w.samples, half)) peak_times.push_back(w.time_of(k));
  }
  std::optional<double> spacing;
  if (peak_times.size() >= 2)
    spacing = (peak_times.back() - peak_times.front()) / static_cast<double>(peak_times.size() - 1);

  out << "beat_frequency_hz=" << fixed(beat) << '\n';
  out << "peak_spacing_s=" << (spacing ? fixed(*spacing) : std::string("none")) << '\n';

  if (cfg.wants(OutputFormat::Csv)) {
    std::string csv = "time_s,amplitude\n";
    for (std::size_t k = 0; k < w.samples.size(); ++k)
      csv += fixed(w.time_of(k)) + "," + fixed(w.samples[k]) + "\n";
    emit.write("beats.csv", csv);
  }
  if (cfg.wants(OutputFormat::Json)) {
    nlohmann::json doc = {{"f1", f1},
                          {"f2", f2},
                          {"sample_rate", opt.sample_rate},
                          {"beat_frequency", beat},
                          {"peak_times", peak_times},
                          {"peak_spacing", spacing ? nlohmann::json(*spacing) : nlohmann::json()}};
    emit.write("beats.json", to_fixed_json(doc) + "\n");
  }
  if (cfg.wants(OutputFormat::Svg)) {
    Series s{"sum", {}, w.samples};
    for (std::size_t k = 0; k < w.samples.size(); ++k) s.x.push_back(w.time_of(k));
    emit.write("beats.svg", render_svg({short_number(f1) + " Hz + " + short_number(f2) + " Hz",
                                        "time (s)", "amplitude", {std::move(s)}, false}));
  }
  if (cfg.wants(OutputFormat::Wav))
    emit.write("beats.wav", encode_wav(w.samples, static_cast<int>(std::lround(opt.sample_rate))));
}

struct AmpOptions {
  std::vector<double> biases = AmplifierConfig{}.biases_sweep;
  double window = 0.02;  // seconds of waveform written to CSV/SVG
};

void cmd_amp(const RunConfig& cfg, const AmpOptions& opt, Emitter& emit, std::ostream& out) {
  const auto tones = just_major_triad_tones(cfg.base_frequency);
  AmplifierConfig amp;
  amp.biases_sweep = opt.biases;
  if (!(opt.window > 0.0)) throw UsageError("window must be positive");
  const auto sweep = bias_sweep(tones, amp, cfg.model);

  for (const auto& e : sweep)
    out << "bias=" << short_number(e.bias) << " linearity=" << fixed(e.linearity)
        << " consonance_edges=" << e.graph.edges.size() << '\n';

  if (cfg.wants(OutputFormat::Json))
    emit.write("amp_sweep.json", to_fixed_json(sweep_to_json(tones, sweep)) + "\n");
  for (const auto& e : sweep)
    for (auto f : graph_formats(cfg))
      emit.write("amp_bias_" + short_number(e.bias) + "." + std::string(extension(f)),
                 export_graph(e.graph, f));

  if (!cfg.wants(OutputFormat::Csv) && !cfg.wants(OutputFormat::Svg)) return;

  // AC part of each output, scaled to unit peak, next to the unit-peak input.
  auto normalized = [](std::vector<double> v) {
    double mean = 0.0;
    for (double s : v) mean += s;
    mean /= static_cast<double>(v.size());
    double peak = 0.0;
    for (double& s : v) peak = std::max(peak, std::abs(s -= mean));
    if (peak > 0.0)
      for (double& s : v) s /= peak;
    return v;
  };
  const auto input = render_tones(tones, opt.window, amp.sample_rate);
  std::vector<Series> series;
  series.push_back({"input", {}, normalized(input.samples)});
  for (const auto& e : sweep)
    series.push_back({"a=" + short_number(e.bias), {},
                      normalized(render_expanded(e.spectrum, opt.window, amp.sample_rate).samples)});
  for (auto& s : series)
    for (std::size_t k = 0; k < s.y.size(); ++k) s.x.push_back(input.time_of(k));

  if (cfg.wants(OutputFormat::Csv)) {
    std::string csv = "time_s";
    for (const auto& s : series) csv += "," + s.name;
    csv += '\n';
    for (std::size_t k = 0; k < input.samples.size(); ++k) {
      csv += fixed(input.time_of(k));
      for (const auto& s : series) csv += "," + fixed(s.y[k]);
      csv += '\n';
    }
    emit.write("amp_waveforms.csv", csv);

    std::string spectra = "bias,frequency_hz,amplitude\n";
    for (const auto& e : sweep) {
      spectra += short_number(e.bias) + ",0.000000," + fixed(e.spectrum.dc) + "\n";
      for (const auto& p : e.spectrum.partials)
        spectra += short_number(e.bias) + "," + fixed(p.frequency) + "," + fixed(p.magnitude) + "\n";
    }
    emit.write("amp_spectra.csv", spectra);
  }
  if (cfg.wants(OutputFormat::Svg))
    emit.write("amp_waveforms.svg",
               render_svg({"squared output vs input", "time (s)", "normalized amplitude",
                           std::move(series), false}));
}

void cmd_decay(const RunConfig& cfg, Emitter& emit) {
  const auto s = harmonic_spectrum(cfg.base_frequency, cfg.model, HearingBand::Ignore);
  if (cfg.wants(OutputFormat::Csv)) {
    std::string csv = "index,frequency_hz,magnitude\n";
    for (const auto& p : s.partials())
      csv += std::to_string(p.index) + "," + fixed(p.frequency) + "," + fixed(p.magnitude) + "\n";
    emit.write("decay.csv", csv);
  }
  if (cfg.wants(OutputFormat::Svg)) {
    Series series{"M(i)", {}, {}};
    for (const auto& p : s.partials()) {
      series.x.push_back(p.index);
      series.y.push_back(p.magnitude);
    }
    emit.write("decay.svg", render_svg({"partial magnitudes", "partial index", "magnitude",
                                        {std::move(series)}, true}));
  }
}

struct FlagValue {
  const char* flag;
  const char* key;
  std::optional<std::string> value;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Consonance and dissonance analysis of tones, scales and amplified chords",
               "consonoscope"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  std::vector<FlagValue> flags = {
      {"--base-freq", "base_freq", {}},   {"--decay", "decay", {}},
      {"--partials", "partials", {}},     {"--fc", "fc", {}},
      {"--fd", "fd", {}},                 {"--cons-threshold", "cons_threshold", {}},
      {"--diss-threshold", "diss_threshold", {}},
      {"--mode", "mode", {}},             {"--out", "out", {}},
      {"--format", "format", {}},
  };
  for (auto& f : flags) app.add_option(f.flag, f.value);

  std::function<void(const RunConfig&, Emitter&)> action;

  double f1 = 0.0, f2 = 0.0;
  auto* interval = app.add_subcommand("interval", "Score one pair of harmonic tones");
  interval->add_option("f1", f1, "first fundamental (Hz)")->required();
  interval->add_option("f2", f2, "second fundamental (Hz)")->required();
  interval->callback([&] {
    action = [&](const RunConfig& c, Emitter& e) { cmd_interval(c, f1, f2, e, out); };
  });

  std::string kind;
  auto* scale = app.add_subcommand("scale", "Pairwise matrices, bipartite plot and graphs");
  scale->add_option("kind", kind, "equal|pythagorean|just_major|mean_tone|werckmeister")
      ->required();
  scale->callback([&] { action = [&](const RunConfig& c, Emitter& e) { cmd_scale(c, kind, e); }; });

  auto* graphs = app.add_subcommand("graphs", "Consonance and dissonance graphs");
  graphs->add_option("kind", kind, "temperament name or 'all'")->required();
  graphs->callback(
      [&] { action = [&](const RunConfig& c, Emitter& e) { cmd_graphs(c, kind, e); }; });

  auto* triads = app.add_subcommand("triads", "Minor and major triads in every temperament");
  triads->callback([&] { action = [&](const RunConfig& c, Emitter& e) { cmd_triads(c, e); }; });

  BeatOptions beat_opt;
  auto* beats = app.add_subcommand("beats", "Two-tone beating waveform");
  beats->add_option("f1", f1, "first frequency (Hz)")->required();
  beats->add_option("f2", f2, "second frequency (Hz)")->required();
  beats->add_option("--duration", beat_opt.duration, "seconds to render");
  beats->add_option("--rate", beat_opt.sample_rate, "sample rate (Hz)");
  beats->callback([&] {
    action = [&](const RunConfig& c, Emitter& e) { cmd_beats(c, f1, f2, beat_opt, e, out); };
  });

  AmpOptions amp_opt;
  auto* amp = app.add_subcommand("amp", "Quadratic amplifier bias sweep on the just major triad");
  amp->add_option("--biases", amp_opt.biases, "ascending bias list")->delimiter(',');
  amp->add_option("--window", amp_opt.window, "seconds of waveform to export");
  amp->callback([&] { action = [&](const RunConfig& c, Emitter& e) { cmd_amp(c, amp_opt, e, out); }; });

  auto* decay = app.add_subcommand("decay", "Partial magnitude profile");
  decay->callback([&] { action = [&](const RunConfig& c, Emitter& e) { cmd_decay(c, e); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    RunConfig cfg = config_path ? load_config(*config_path) : RunConfig{};
    for (const auto& f : flags)
      if (f.value) apply_setting(cfg, f.key, *f.value);
    cfg.validate();
    Emitter emit(resolve_out_dir(cfg), out);
    action(cfg, emit);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace consonoscope::cli
