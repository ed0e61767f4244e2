#include "qcolor/alpha_rooting.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qcolor/parallel.hpp"

namespace qcolor {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

std::optional<double> parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

QSpectrum root_magnitudes(const QSpectrum& spectrum, double alpha) {
  check_alpha(alpha);
  QSpectrum out = spectrum;
  if (alpha == 1.0) return out;
  for (Quaternion& q : out.data()) {
    const double mod = qmod(q);
    if (mod <= kZeroMagnitude) continue;
    q = q * std::pow(mod, alpha - 1.0);
  }
  return out;
}

QuaternionImage alpha_root_quaternion(const QSpectrum& spectrum, double alpha) {
  return inverse(root_magnitudes(spectrum, alpha));
}

ColorImage alpha_root(const ColorImage& img, double alpha, RealMode mode) {
  check_alpha(alpha);
  return from_quaternion(alpha_root_quaternion(forward(to_quaternion(img, mode)), alpha));
}

std::vector<double> AlphaGrid::values() const {
  if (!(lo > 0.0 && lo <= hi && hi <= 1.0)) {
    throw std::invalid_argument("alpha grid must satisfy 0 < lo <= hi <= 1");
  }
  if (!(step > 0.0)) throw std::invalid_argument("alpha grid step must be > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 1e-12 so 0.8 + 10 * 0.02 lands on 1.0 rather than 1.0000000000000002.
    const double a = std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
    out.push_back(std::min(a, hi));
  }
  return out;
}

std::optional<AlphaGrid> AlphaGrid::parse(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return std::nullopt;
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) return std::nullopt;
  const auto lo = parse_double(text.substr(0, c1));
  const auto step = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const auto hi = parse_double(text.substr(c2 + 1));
  if (!lo || !step || !hi) return std::nullopt;
  return AlphaGrid{*lo, *hi, *step};
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::kEmeq:
      return "EMEQ";
    case Criterion::kEmec:
      return "EMEC";
    case Criterion::kCr:
      return "CR";
    case Criterion::kM:
      return "M";
  }
  return "CR";
}

std::optional<Criterion> parse_criterion(std::string_view text) {
  std::string upper(text);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "EMEQ") return Criterion::kEmeq;
  if (upper == "EMEC") return Criterion::kEmec;
  if (upper == "CR") return Criterion::kCr;
  if (upper == "M") return Criterion::kM;
  return std::nullopt;
}

std::size_t select_best(const std::vector<double>& values) {
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (double v : values) {
    if (std::isnan(v)) continue;
    any = true;
    best = std::max(best, v);
  }
  if (!any) throw NumericError("no finite criterion value to maximise");
  const double tol = std::isfinite(best) ? 1e-9 * std::max(1.0, std::abs(best)) : 0.0;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isnan(values[i]) && values[i] >= best - tol) idx = i;
  }
  return idx;
}

QuaternionImage clamp_components(const QuaternionImage& img) {
  QuaternionImage out = img;
  for (Quaternion& q : out.data()) {
    q = {clamp_channel(q.w), clamp_channel(q.x), clamp_channel(q.y), clamp_channel(q.z)};
  }
  return out;
}

double criterion_value(Criterion c, const MeasureRecord& rec, const QuaternionImage& rooted,
                       const MeasureConfig& cfg) {
  switch (c) {
    case Criterion::kEmeq:
      return emeq(clamp_components(rooted), cfg);
    case Criterion::kEmec:
      return rec.emec;
    case Criterion::kCr:
      return rec.cr;
    case Criterion::kM:
      return rec.m;
  }
  return rec.cr;
}

AlphaSweepResult sweep(const ColorImage& img, const std::vector<double>& alphas, const SweepOptions& opts) {
  if (alphas.empty()) throw std::invalid_argument("sweep: empty alpha grid");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    check_alpha(alphas[i]);
    if (i > 0 && !(alphas[i] > alphas[i - 1])) {
      throw std::invalid_argument("sweep: alphas must be strictly increasing");
    }
  }
  opts.measures.validate();

  const QSpectrum spectrum = forward(to_quaternion(img, opts.real_mode));
  AlphaSweepResult result;
  result.criterion = opts.criterion;
  result.records.resize(alphas.size());
  result.criterion_values.resize(alphas.size());

  parallel_for(alphas.size(), opts.workers, [&](std::size_t i) {
    const QuaternionImage rooted = alpha_root_quaternion(spectrum, alphas[i]);
    const MeasureRecord rec = measure_record(from_quaternion(rooted), alphas[i], opts.measures);
    result.records[i] = rec;
    result.criterion_values[i] = criterion_value(opts.criterion, rec, rooted, opts.measures);
  });

  result.best_index = select_best(result.criterion_values);
  result.best_alpha = alphas[result.best_index];
  return result;
}

}  // namespace qcolor
