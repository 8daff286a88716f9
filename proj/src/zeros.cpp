#include "spnt/zeros.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "spnt/builtin_zeros.hpp"
#include "spnt/errors.hpp"
#include "spnt/format.hpp"
#include "spnt/kernels.hpp"
#include "spnt/specfun.hpp"
#include "spnt/summation.hpp"

namespace spnt {
namespace {

constexpr double kFinderStep = 0.05;
constexpr double kBisectionWidth = 1e-12;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view token) {
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw ParseError("zero table line " + std::to_string(line) + ": " + what);
}

double bisect_sign_change(double lo, double hi, double z_lo) {
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double z_mid = hardy_Z(mid);
    if (z_mid == 0.0) return mid;
    if ((z_mid < 0.0) == (z_lo < 0.0)) {
      lo = mid;
      z_lo = z_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ZeroSet::ZeroSet(std::vector<Zero> zeros, double height) : zeros_(std::move(zeros)), height_(height) {
  for (std::size_t i = 0; i < zeros_.size(); ++i) {
    const Zero& z = zeros_[i];
    if (!(z.beta > 0.0 && z.beta < 1.0)) throw DomainError("zero beta must lie in (0, 1)");
    if (!(z.gamma > 0.0) || !std::isfinite(z.gamma)) throw DomainError("zero gamma must be positive");
    if (i > 0 && !(z.gamma > zeros_[i - 1].gamma)) {
      throw OrderError("zero ordinates must be strictly ascending (entry " + std::to_string(i + 1) + ")");
    }
    if (z.beta != 0.5) assume_rh_ = false;
  }
  if (!zeros_.empty() && height_ < zeros_.back().gamma) height_ = zeros_.back().gamma;
}

ZeroSet ZeroSet::truncated(double max_gamma) const {
  std::vector<Zero> kept;
  for (const Zero& z : zeros_) {
    if (z.gamma <= max_gamma) kept.push_back(z);
  }
  ZeroSet out(std::move(kept), 0.0);
  out.height_ = std::min(height_, max_gamma);
  if (!out.zeros_.empty()) out.height_ = std::max(out.height_, out.zeros_.back().gamma);
  return out;
}

ZeroSet builtin_zeros() {
  std::vector<Zero> zs;
  for (double g : builtin_zero_ordinates()) zs.push_back({0.5, g});
  return ZeroSet(std::move(zs), builtin_zero_height());
}

ZeroSet parse_zeros(std::istream& in) {
  std::vector<Zero> zs;
  std::optional<double> height;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto words = split_ws(line.substr(1));
      if (words.size() == 2 && words[0] == "height") {
        height = parse_number(words[1]);
        if (!height) parse_fail(line_no, "malformed height comment");
      }
      continue;
    }
    const auto tokens = split_ws(line);
    if (tokens.size() > 2) parse_fail(line_no, "expected \"gamma\" or \"beta gamma\"");
    Zero z;
    const auto gamma = parse_number(tokens.back());
    if (!gamma) parse_fail(line_no, "cannot parse '" + std::string(tokens.back()) + "'");
    z.gamma = *gamma;
    if (tokens.size() == 2) {
      const auto beta = parse_number(tokens[0]);
      if (!beta) parse_fail(line_no, "cannot parse '" + std::string(tokens[0]) + "'");
      z.beta = *beta;
    }
    if (!(z.gamma > 0.0)) parse_fail(line_no, "gamma must be positive");
    if (!(z.beta > 0.0 && z.beta < 1.0)) parse_fail(line_no, "beta must lie in (0, 1)");
    if (!zs.empty() && !(z.gamma > zs.back().gamma)) {
      throw OrderError("zero table line " + std::to_string(line_no) + ": gamma not ascending");
    }
    zs.push_back(z);
  }
  if (zs.empty()) throw EmptySetError("zero table contains no zeros");
  const double last = zs.back().gamma;
  return ZeroSet(std::move(zs), height.value_or(last));
}

ZeroSet load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open zero table " + path.string());
  return parse_zeros(in);
}

void write_zeros(std::ostream& out, const ZeroSet& zeros) {
  out << "# height " << format_double(zeros.height()) << '\n';
  for (const Zero& z : zeros.zeros()) {
    if (z.beta != 0.5) out << format_double(z.beta) << ' ';
    out << format_double(z.gamma) << '\n';
  }
}

void save_zeros(const std::filesystem::path& path, const ZeroSet& zeros) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write zero table " + path.string());
  write_zeros(out, zeros);
}

ZeroSet find_zeros(double T) {
  if (!(T >= 10.0 && T <= kMaxZetaHeight)) throw RangeError("find_zeros: T must lie in [10, 1000]");
  const auto steps = static_cast<std::size_t>(std::ceil(T / kFinderStep));
  const double h = T / static_cast<double>(steps);
  const std::vector<double> z = kernels::parallel_map<double>(
      steps + 1, [&](std::size_t i) { return hardy_Z(std::min(T, h * static_cast<double>(i))); });

  struct Bracket {
    double lo, hi, z_lo;
  };
  std::vector<Bracket> brackets;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    if (z[i] == 0.0) {
      if (i > 0) brackets.push_back({t, t, 0.0});
    } else if (z[i + 1] != 0.0 && (z[i] < 0.0) != (z[i + 1] < 0.0)) {
      brackets.push_back({t, std::min(T, h * static_cast<double>(i + 1)), z[i]});
    }
  }
  const std::vector<double> roots = kernels::parallel_map<double>(brackets.size(), [&](std::size_t i) {
    const Bracket& b = brackets[i];
    return b.lo == b.hi ? b.lo : bisect_sign_change(b.lo, b.hi, b.z_lo);
  });

  std::vector<Zero> zs;
  for (double g : roots) zs.push_back({0.5, g});
  return ZeroSet(std::move(zs), T);
}

double riemann_von_mangoldt(double T) {
  const double two_pi = 2.0 * std::numbers::pi;
  return T / two_pi * std::log(T / (two_pi * std::numbers::e)) + 7.0 / 8.0;
}

double explicit_constant(ExplicitConstant mode) {
  const double log_two_pi = std::log(2.0 * std::numbers::pi);
  return mode == ExplicitConstant::Paper ? -log_two_pi : 0.5 - log_two_pi;
}

double explicit_delta(double x, const ZeroSet& zeros, ExplicitConstant mode) {
  if (!(x >= 1.0)) throw RangeError("explicit_delta: requires x >= 1");
  if (zeros.empty()) throw EmptySetError("explicit_delta: empty zero set");
  const double log_x = std::log(x);
  NeumaierSum sum;
  for (const Zero& z : zeros.zeros()) {
    const Complex rho(z.beta, z.gamma);
    sum.add(2.0 * (gamma_complex(rho) * std::exp(rho * log_x)).real());
  }
  return -sum.value() + explicit_constant(mode);
}

}  // namespace spnt
