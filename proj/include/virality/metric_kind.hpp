#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace virality {

enum class MetricKind {
  appreciation,
  buzz,
  raising_discussion,
  controversiality,
  white_buzz,
  black_buzz,
};

inline constexpr std::array<MetricKind, 6> kAllMetrics = {
    MetricKind::appreciation,       MetricKind::buzz,
    MetricKind::raising_discussion, MetricKind::controversiality,
    MetricKind::white_buzz,         MetricKind::black_buzz,
};

// Row/column order of the classification and overlap tables:
// App, Buzz, Cont, Rais.
inline constexpr std::array<MetricKind, 4> kTableMetrics = {
    MetricKind::appreciation,
    MetricKind::buzz,
    MetricKind::controversiality,
    MetricKind::raising_discussion,
};

std::string_view to_string(MetricKind kind) noexcept;
std::optional<MetricKind> parse_metric_kind(std::string_view name) noexcept;

// Display label used in rendered tables ("Appreciation", "Raising-Discussions").
std::string_view display_name(MetricKind kind) noexcept;

}  // namespace virality
