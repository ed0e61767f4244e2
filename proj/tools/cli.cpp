#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "qcolor/image_io.hpp"
#include "qcolor/palette.hpp"
#include "qcolor/parallel.hpp"
#include "qcolor/report.hpp"

namespace qcolor::cli {

namespace fs = std::filesystem;

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  const RunConfig& cfg;
  std::ostream& out;
  std::ostream& err;
};

std::string_view to_string(CmcrMode mode) { return mode == CmcrMode::kSelf ? "self" : "target"; }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ImageIoError("cannot write " + path.string());
  f << text;
  if (!f) throw ImageIoError("cannot write " + path.string());
}

void ensure_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec) throw ImageIoError("cannot create output directory " + cfg.out_dir.string());
}

ColorImage load(const Context& ctx, const fs::path& path) {
  DecodedImage d = read_image(path);
  if (d.alpha_dropped) ctx.err << "warning: alpha channel dropped from " << path.string() << '\n';
  return std::move(d.image);
}

std::string report_ext(ReportFormat f) { return f == ReportFormat::kJson ? ".json" : ".csv"; }

std::string record_report(const MeasureRecord& rec, ReportFormat f) {
  if (f == ReportFormat::kJson) return report::to_json(rec).dump(2) + "\n";
  return report::to_csv(std::span(&rec, 1));
}

SweepOptions sweep_options(const RunConfig& cfg, std::size_t workers) {
  return {cfg.criterion, cfg.real_mode, cfg.measures, workers};
}

std::string sanitize(std::string_view label) {
  std::string s;
  for (char ch : label) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s.empty() ? "corpus" : s;
}

// ---- commands -------------------------------------------------------------

int cmd_analyze(const Context& ctx) {
  const fs::path& input = ctx.cfg.inputs.front();
  const ColorImage img = load(ctx, input);
  const MeasureRecord rec = measure_record(img, 1.0, ctx.cfg.measures);
  const std::string text = record_report(rec, ctx.cfg.format);
  ctx.out << text;
  if (ctx.cfg.out_given) {
    ensure_out_dir(ctx.cfg);
    write_text(ctx.cfg.out_dir / (input.stem().string() + "_analyze" + report_ext(ctx.cfg.format)), text);
  }
  return kOk;
}

void write_contact_sheet(const Context& ctx, const fs::path& input, const ColorImage& img,
                         const std::vector<double>& alphas) {
  std::vector<ColorImage> tiles;
  tiles.reserve(alphas.size());
  for (double a : alphas) tiles.push_back(alpha_root(img, a, ctx.cfg.real_mode));
  const ColorImage sheet = report::contact_sheet(img, tiles, alphas);
  write_png(ctx.cfg.out_dir / (input.stem().string() + "_sheet.png"), sheet);
}

std::string sweep_report(const AlphaSweepResult& result, ReportFormat f) {
  if (f == ReportFormat::kJson) return report::sweep_to_json(result).dump(2) + "\n";
  return report::to_csv(result.records);
}

int cmd_sweep(const Context& ctx) {
  const fs::path& input = ctx.cfg.inputs.front();
  const ColorImage img = load(ctx, input);
  const auto alphas = ctx.cfg.grid.value_or(kTableGrid).values();
  const AlphaSweepResult result = sweep(img, alphas, sweep_options(ctx.cfg, ctx.cfg.workers));
  const std::string text = sweep_report(result, ctx.cfg.format);
  ensure_out_dir(ctx.cfg);
  write_text(ctx.cfg.out_dir / (input.stem().string() + "_sweep" + report_ext(ctx.cfg.format)), text);
  if (ctx.cfg.contact_sheet) write_contact_sheet(ctx, input, img, alphas);
  ctx.out << text;
  ctx.err << fmt::format("best alpha {} by {} = {}\n", report::alpha_label(result.best_alpha),
                         qcolor::to_string(result.criterion),
                         report::fixed4(result.criterion_values[result.best_index]));
  return kOk;
}

int cmd_enhance(const Context& ctx) {
  if (!ctx.cfg.alpha) throw ConfigError("enhance requires --alpha");
  const fs::path& input = ctx.cfg.inputs.front();
  const ColorImage img = load(ctx, input);
  const ColorImage enhanced = alpha_root(img, *ctx.cfg.alpha, ctx.cfg.real_mode);
  ensure_out_dir(ctx.cfg);
  write_png(ctx.cfg.out_dir / enhanced_filename(input, *ctx.cfg.alpha), enhanced);
  ctx.out << record_report(measure_record(enhanced, *ctx.cfg.alpha, ctx.cfg.measures), ctx.cfg.format);
  return kOk;
}

ColorImage apply_cmcr(const RunConfig& cfg, const ColorImage& img, double& target_used) {
  if (cfg.cmcr_mode == CmcrMode::kSelf) {
    target_used = 0.0;
    return cmcr_self(img);
  }
  target_used = cfg.target_ratio.value_or(cr(img, cfg.measures));
  return cmcr_target(img, target_used);
}

int cmd_correct(const Context& ctx) {
  const fs::path& input = ctx.cfg.inputs.front();
  const ColorImage img = load(ctx, input);
  double target = 0.0;
  const ColorImage corrected = apply_cmcr(ctx.cfg, img, target);
  ensure_out_dir(ctx.cfg);
  write_png(ctx.cfg.out_dir / cmcr_filename(input), corrected);
  ctx.out << record_report(measure_record(corrected, 1.0, ctx.cfg.measures), ctx.cfg.format);
  return kOk;
}

int cmd_predict(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const fs::path& input = cfg.inputs.front();
  const ColorImage img = load(ctx, input);
  const auto alphas = cfg.grid.value_or(kSearchGrid).values();
  const AlphaSweepResult result = sweep(img, alphas, sweep_options(cfg, cfg.workers));
  const double best = result.best_alpha;

  const ColorImage enhanced = alpha_root(img, best, cfg.real_mode);
  double target = 0.0;
  const ColorImage corrected = apply_cmcr(cfg, enhanced, target);

  ensure_out_dir(cfg);
  write_png(cfg.out_dir / enhanced_filename(input, best), enhanced);
  write_png(cfg.out_dir / cmcr_filename(input), corrected);
  if (cfg.contact_sheet) write_contact_sheet(ctx, input, img, alphas);

  const double cr_original = cr(img, cfg.measures);
  const double cr_enhanced = result.records[result.best_index].cr;
  const double cr_corrected = cr(corrected, cfg.measures);
  const double value = result.criterion_values[result.best_index];

  std::string text;
  if (cfg.format == ReportFormat::kJson) {
    nlohmann::json j{{"image", input.filename().string()},
                     {"criterion", std::string(qcolor::to_string(cfg.criterion))},
                     {"best_alpha", best},
                     {"criterion_value", value},
                     {"cr_original", cr_original},
                     {"cr_enhanced", cr_enhanced},
                     {"cr_corrected", cr_corrected},
                     {"cmcr_mode", std::string(to_string(cfg.cmcr_mode))},
                     {"target_ratio", target},
                     {"record", report::to_json(result.records[result.best_index])}};
    text = j.dump(2) + "\n";
  } else {
    text = "image,criterion,best_alpha,criterion_value,cr_original,cr_enhanced,cr_corrected,cmcr_mode,target_ratio\n";
    text += fmt::format("{},{},{},{},{},{},{},{},{}\n", input.filename().string(),
                        qcolor::to_string(cfg.criterion), report::fixed4(best), report::fixed4(value),
                        report::fixed4(cr_original), report::fixed4(cr_enhanced), report::fixed4(cr_corrected),
                        to_string(cfg.cmcr_mode), report::fixed4(target));
  }
  write_text(cfg.out_dir / (input.stem().string() + "_predict" + report_ext(cfg.format)), text);
  ctx.out << text;
  return kOk;
}

bool is_image_name(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::string batch_report(const CorpusReport& report, ReportFormat f) {
  return f == ReportFormat::kJson ? batch_to_json(report).dump(2) + "\n" : batch_to_csv(report);
}

int cmd_batch(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const fs::path& dir = cfg.inputs.front();
  if (!fs::is_directory(dir)) throw ImageIoError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_image_name(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  const auto alphas = cfg.grid.value_or(kSearchGrid).values();
  struct Slot {
    bool ok = false;
    std::string warning;
    MeasureRecord original;
    MeasureRecord enhanced;
  };
  std::vector<Slot> slots(files.size());
  parallel_for(files.size(), cfg.workers, [&](std::size_t i) {
    Slot& s = slots[i];
    try {
      DecodedImage d = read_image(files[i]);
      if (d.alpha_dropped) s.warning = "warning: alpha channel dropped from " + files[i].string();
      const AlphaSweepResult r = sweep(d.image, alphas, sweep_options(cfg, 1));
      s.original = measure_record(d.image, 1.0, cfg.measures);
      s.enhanced = r.records[r.best_index];
      s.ok = true;
    } catch (const ImageIoError& e) {
      s.warning = std::string("warning: skipped: ") + e.what();
    } catch (const std::invalid_argument& e) {
      s.warning = "warning: skipped " + files[i].string() + ": " + e.what();
    }
  });

  std::vector<CorpusRow> original_rows;
  std::vector<CorpusRow> enhanced_rows;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!slots[i].warning.empty()) ctx.err << slots[i].warning << '\n';
    if (!slots[i].ok) continue;
    original_rows.push_back({files[i].filename().string(), slots[i].original});
    enhanced_rows.push_back({files[i].filename().string(), slots[i].enhanced});
  }
  if (enhanced_rows.empty()) throw ImageIoError("no decodable images in " + dir.string());

  const std::string artist = cfg.artist.empty() ? dir.filename().string() : cfg.artist;
  const CorpusReport enhanced = summarize(artist, std::move(enhanced_rows));
  const CorpusReport original = summarize(artist, std::move(original_rows));

  ensure_out_dir(cfg);
  const std::string stem = sanitize(artist);
  const std::string text = batch_report(enhanced, cfg.format);
  write_text(cfg.out_dir / (stem + "_batch" + report_ext(cfg.format)), text);
  write_text(cfg.out_dir / (stem + "_batch_original" + report_ext(cfg.format)), batch_report(original, cfg.format));
  ctx.out << text;
  ctx.err << fmt::format("artist ratio ({}): original {} / enhanced {} -> nearest {}\n", artist,
                         report::fixed4(original.mean.cr), report::fixed4(enhanced.mean.cr),
                         classify_ratio(original.mean.cr).name);
  return kOk;
}

// ---- argument handling ----------------------------------------------------

template <typename T, typename Parse>
T parse_enum(const std::string& text, Parse parse, const char* what) {
  auto v = parse(text);
  if (!v) throw ConfigError(fmt::format("invalid {}: '{}'", what, text));
  return *v;
}

}  // namespace

CorpusReport summarize(std::string artist, std::vector<CorpusRow> rows) {
  CorpusReport rep{std::move(artist), std::move(rows), {}};
  if (rep.rows.empty()) return rep;
  MeasureRecord acc{0, 0, 0, 0, 0, 0, 0, 0};
  for (const auto& r : rep.rows) {
    acc.alpha += r.record.alpha;
    acc.cr += r.record.cr;
    acc.m1 += r.record.m1;
    acc.m2 += r.record.m2;
    acc.m3 += r.record.m3;
    acc.m += r.record.m;
    acc.emec += r.record.emec;
    acc.emec2 += r.record.emec2;
  }
  const auto k = static_cast<double>(rep.rows.size());
  rep.mean = {acc.alpha / k, acc.cr / k, acc.m1 / k, acc.m2 / k,
              acc.m3 / k,    acc.m / k,  acc.emec / k, acc.emec2 / k};
  return rep;
}

std::string batch_to_csv(const CorpusReport& report) {
  std::string out(kBatchCsvHeader);
  out += '\n';
  for (const auto& row : report.rows) out += row.image + "," + report::csv_row(row.record) + "\n";
  out += fmt::format("Average (over {} paintings),{}\n", report.rows.size(), report::csv_row(report.mean));
  return out;
}

nlohmann::json batch_to_json(const CorpusReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json j = report::to_json(row.record);
    j["image"] = row.image;
    rows.push_back(std::move(j));
  }
  nlohmann::json mean = report::to_json(report.mean);
  mean["image"] = fmt::format("Average (over {} paintings)", report.rows.size());
  return {{"artist", report.artist}, {"rows", rows}, {"average", mean}};
}

std::string enhanced_filename(const fs::path& input, double alpha) {
  return input.stem().string() + "_alpha" + report::alpha_label(alpha) + ".png";
}

std::string cmcr_filename(const fs::path& input) { return input.stem().string() + "_cmcr.png"; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion alpha-rooting enhancement and colour-ratio analysis of painting images", "qcolor"};
  app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  std::string alpha_grid;
  std::string criterion = "CR";
  std::string real_mode = "brightness";
  std::string format = "csv";
  std::string cmcr_mode = "target";
  std::string out_dir = ".";
  std::optional<double> alpha;
  std::optional<double> target_ratio;
  std::string artist;
  bool contact = false;
  std::size_t workers = 1;
  MeasureConfig measures;

  app.add_option("--alpha", alpha, "Alpha for enhance, in (0, 1]");
  app.add_option("--alpha-grid", alpha_grid, "Alpha grid LO:STEP:HI");
  app.add_option("--criterion", criterion, "Best-alpha criterion: EMEQ, EMEC, CR or M")->capture_default_str();
  app.add_option("--real-mode", real_mode, "Quaternion real part: brightness, zero or gray_mean")
      ->capture_default_str();
  app.add_option("--block-size", measures.block_size, "EMEC/EMEQ block size L")->capture_default_str();
  app.add_option("--eps-denominator", measures.eps_denominator, "Epsilon in the M1..M3 denominators")
      ->capture_default_str();
  app.add_option("--eps-log", measures.eps_log, "Channel floor before log10")->capture_default_str();
  app.add_option("--eps-block", measures.eps_block, "Epsilon in EMEC/EMEQ block ratios")->capture_default_str();
  app.add_option("--eps-cr", measures.eps_cr, "Epsilon in the colour ratio")->capture_default_str();
  app.add_option("--cmcr-mode", cmcr_mode, "Colour correction: self or target")->capture_default_str();
  app.add_option("--target-ratio", target_ratio, "Target ratio for --cmcr-mode target (default: image CR)");
  app.add_option("--format", format, "Report format: csv or json")->capture_default_str();
  app.add_flag("--contact-sheet", contact, "Also write a contact sheet of the sweep");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--workers", workers, "Worker threads")->capture_default_str();
  app.add_option("--artist", artist, "Artist label for batch reports (default: directory name)");

  std::string input;
  auto add_cmd = [&](const char* name, const char* help, const char* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option(what, input, what)->required();
    return sub;
  };
  auto* analyze = add_cmd("analyze", "Measures of one image (alpha = 1)", "image");
  auto* sweep_cmd = add_cmd("sweep", "Measure table over an alpha grid (default 0.80:0.02:1.00)", "image");
  auto* enhance = add_cmd("enhance", "Alpha-root one image", "image");
  auto* correct = add_cmd("correct", "Colour-ratio correction of one image", "image");
  auto* predict = add_cmd("predict", "Best-alpha enhancement followed by colour-ratio correction", "image");
  auto* batch = add_cmd("batch", "Corpus report over a directory of images", "directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  RunConfig cfg;
  try {
    cfg.inputs = {fs::path(input)};
    cfg.out_dir = out_dir;
    cfg.out_given = out_opt->count() > 0;
    if (!alpha_grid.empty()) {
      cfg.grid = AlphaGrid::parse(alpha_grid);
      if (!cfg.grid) throw ConfigError("invalid --alpha-grid '" + alpha_grid + "', expected LO:STEP:HI");
      (void)cfg.grid->values();
    }
    cfg.alpha = alpha;
    if (alpha && !(*alpha > 0.0 && *alpha <= 1.0)) throw ConfigError("--alpha must lie in (0, 1]");
    cfg.criterion = parse_enum<Criterion>(criterion, parse_criterion, "criterion");
    cfg.real_mode = parse_enum<RealMode>(real_mode, parse_real_mode, "real mode");
    measures.validate();
    cfg.measures = measures;
    if (format == "csv") {
      cfg.format = ReportFormat::kCsv;
    } else if (format == "json") {
      cfg.format = ReportFormat::kJson;
    } else {
      throw ConfigError("invalid --format '" + format + "'");
    }
    if (cmcr_mode == "self") {
      cfg.cmcr_mode = CmcrMode::kSelf;
    } else if (cmcr_mode == "target") {
      cfg.cmcr_mode = CmcrMode::kTarget;
    } else {
      throw ConfigError("invalid --cmcr-mode '" + cmcr_mode + "'");
    }
    if (target_ratio && !(*target_ratio >= 1.0)) throw ConfigError("--target-ratio must be >= 1");
    cfg.target_ratio = target_ratio;
    cfg.contact_sheet = contact;
    cfg.artist = artist;
    if (workers == 0) throw ConfigError("--workers must be >= 1");
    cfg.workers = workers;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  const Context ctx{cfg, out, err};
  try {
    if (*analyze) return cmd_analyze(ctx);
    if (*sweep_cmd) return cmd_sweep(ctx);
    if (*enhance) return cmd_enhance(ctx);
    if (*correct) return cmd_correct(ctx);
    if (*predict) return cmd_predict(ctx);
    if (*batch) return cmd_batch(ctx);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ImageIoError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return kConfigError;
}

}  // namespace qcolor::cli
