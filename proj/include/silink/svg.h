#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace silink {

// FNV-1a, used to stamp plot files with a digest of the config that
// produced them.
uint64_t fnv1a64(std::string_view data);

struct SvgSeries {
	std::string label;
	std::vector<double> x;
	std::vector<double> y; // NaN breaks the polyline
};

// Self-contained line chart (fixed canvas, no external resources).  When
// `config_digest` is non-empty it is embedded as a comment for provenance.
std::string svg_line_chart(const std::string &title, const std::string &x_label,
                           const std::string &y_label,
                           const std::vector<SvgSeries> &series,
                           const std::string &config_digest = "");

} // namespace silink
