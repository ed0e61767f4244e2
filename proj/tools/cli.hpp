#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcolor/alpha_rooting.hpp"
#include "qcolor/measures.hpp"

namespace qcolor::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kConfigError = 3,
  kNumericError = 4,
};

enum class CmcrMode { kSelf, kTarget };
enum class ReportFormat { kCsv, kJson };

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_dir = ".";
  bool out_given = false;
  std::optional<AlphaGrid> grid;  // command default when unset
  std::optional<double> alpha;
  Criterion criterion = Criterion::kCr;
  RealMode real_mode = RealMode::kBrightness;
  MeasureConfig measures{};
  ReportFormat format = ReportFormat::kCsv;
  bool contact_sheet = false;
  CmcrMode cmcr_mode = CmcrMode::kTarget;
  std::optional<double> target_ratio;
  std::string artist;
  std::size_t workers = 1;
};

struct CorpusRow {
  std::string image;
  MeasureRecord record;
};

/// Per-image rows plus their column means.
struct CorpusReport {
  std::string artist;
  std::vector<CorpusRow> rows;
  MeasureRecord mean;
};

CorpusReport summarize(std::string artist, std::vector<CorpusRow> rows);

inline constexpr std::string_view kBatchCsvHeader = "image,alpha,CR,M1,M2,M3,M,EMEC,EMEC2";

/// Rows followed by "Average (over K paintings)".
std::string batch_to_csv(const CorpusReport& report);
nlohmann::json batch_to_json(const CorpusReport& report);

/// "<stem>_alpha<label>.png"
std::string enhanced_filename(const std::filesystem::path& input, double alpha);
/// "<stem>_cmcr.png"
std::string cmcr_filename(const std::filesystem::path& input);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcolor::cli
