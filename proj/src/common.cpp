#include <charconv>
#include <numeric>
#include <string>

#include "virality/error.hpp"
#include "virality/metric_kind.hpp"
#include "virality/rational.hpp"

namespace virality {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den == 0) throw ParameterError("denominator", "must be non-zero");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_decimal(int places) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-static_cast<__int128>(num_))
               : static_cast<unsigned __int128>(num_);
  const unsigned __int128 den = static_cast<unsigned __int128>(den_);
  const unsigned __int128 scaled = (magnitude * scale * 2 + den) / (den * 2);

  const auto whole = static_cast<unsigned long long>(scaled / scale);
  auto frac = static_cast<unsigned long long>(scaled % scale);
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string digits(static_cast<std::size_t>(places), '0');
    for (int i = places - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<char>('0' + frac % 10);
      frac /= 10;
    }
    out += '.';
    out += digits;
  }
  return out;
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParameterError("number", "cannot parse '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParameterError("number", "empty value");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(text.substr(0, slash), text),
                    parse_integer(text.substr(slash + 1), text));
  }
  bool negative = false;
  std::string_view rest = text;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  const auto dot = rest.find('.');
  std::string_view int_part = rest.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view() : rest.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw ParameterError("number", "cannot parse '" + std::string(text) + "'");
  if (int_part.size() + frac_part.size() > 18)
    throw ParameterError("number", "too many digits in '" + std::string(text) + "'");
  std::string digits(int_part);
  digits += frac_part;
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
  const std::int64_t num = parse_integer(digits, text);
  return Rational(negative ? -num : num, den);
}

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::appreciation: return "appreciation";
    case MetricKind::buzz: return "buzz";
    case MetricKind::raising_discussion: return "raising_discussion";
    case MetricKind::controversiality: return "controversiality";
    case MetricKind::white_buzz: return "white_buzz";
    case MetricKind::black_buzz: return "black_buzz";
  }
  return "unknown";
}

std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept {
  for (const MetricKind kind : kAllMetrics) {
    if (to_string(kind) == name) return kind;
  }
  if (name == "raising-discussion") return MetricKind::raising_discussion;
  if (name == "white-buzz") return MetricKind::white_buzz;
  if (name == "black-buzz") return MetricKind::black_buzz;
  return std::nullopt;
}

std::string_view display_name(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::appreciation: return "Appreciation";
    case MetricKind::buzz: return "Buzz";
    case MetricKind::raising_discussion: return "Raising-Discussions";
    case MetricKind::controversiality: return "Controversiality";
    case MetricKind::white_buzz: return "White-Buzz";
    case MetricKind::black_buzz: return "Black-Buzz";
  }
  return "Unknown";
}

}  // namespace virality
