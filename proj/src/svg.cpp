#include "silink/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "silink/errors.h"

namespace silink {

uint64_t fnv1a64(std::string_view data) {
	uint64_t h = 14695981039346656037ull;
	for (unsigned char c : data) {
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

namespace {

std::string fmt(double v) {
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

std::string escape(const std::string &s) {
	std::string out;
	for (char c : s) {
		switch (c) {
		case '&': out += "&amp;"; break;
		case '<': out += "&lt;"; break;
		case '>': out += "&gt;"; break;
		default: out += c;
		}
	}
	return out;
}

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

std::string svg_line_chart(const std::string &title, const std::string &x_label,
                           const std::string &y_label,
                           const std::vector<SvgSeries> &series,
                           const std::string &config_digest) {
	if (series.empty())
		throw InvalidArgument("svg_line_chart: no series");
	for (const auto &s : series)
		if (s.x.size() != s.y.size() || s.x.empty())
			throw InvalidArgument("svg_line_chart: series must be non-empty, equal length");

	double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
	bool first = true;
	for (const auto &s : series)
		for (size_t i = 0; i < s.x.size(); ++i) {
			if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]))
				continue;
			if (first) {
				xmin = xmax = s.x[i];
				ymin = ymax = s.y[i];
				first = false;
			} else {
				xmin = std::min(xmin, s.x[i]);
				xmax = std::max(xmax, s.x[i]);
				ymin = std::min(ymin, s.y[i]);
				ymax = std::max(ymax, s.y[i]);
			}
		}
	if (first)
		throw InvalidArgument("svg_line_chart: no finite data");
	if (xmax == xmin) xmax = xmin + 1.0;
	if (ymax == ymin) ymax = ymin + 1.0;
	double ypad = 0.05 * (ymax - ymin);
	ymin -= ypad;
	ymax += ypad;

	const double w = 800, h = 520;
	const double ml = 70, mr = 160, mt = 40, mb = 55;
	auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
	auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

	std::string out;
	out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
	if (!config_digest.empty())
		out += "<!-- config-digest: " + config_digest + " -->\n";
	out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) +
	       "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) +
	       "\">\n";
	out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	out += "<text x=\"" + fmt(w / 2) + "\" y=\"24\" text-anchor=\"middle\" "
	       "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";

	// grid and ticks
	const int nticks = 6;
	out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
	for (int t = 0; t <= nticks; ++t) {
		double fx = xmin + (xmax - xmin) * t / nticks;
		double fy = ymin + (ymax - ymin) * t / nticks;
		out += "<line x1=\"" + fmt(px(fx)) + "\" y1=\"" + fmt(mt) + "\" x2=\"" +
		       fmt(px(fx)) + "\" y2=\"" + fmt(h - mb) +
		       "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
		out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(py(fy)) + "\" x2=\"" +
		       fmt(w - mr) + "\" y2=\"" + fmt(py(fy)) +
		       "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
		out += "<text x=\"" + fmt(px(fx)) + "\" y=\"" + fmt(h - mb + 16) +
		       "\" text-anchor=\"middle\">" + fmt(fx) + "</text>\n";
		out += "<text x=\"" + fmt(ml - 6) + "\" y=\"" + fmt(py(fy) + 4) +
		       "\" text-anchor=\"end\">" + fmt(fy) + "</text>\n";
	}
	out += "</g>\n";
	out += "<rect x=\"" + fmt(ml) + "\" y=\"" + fmt(mt) + "\" width=\"" +
	       fmt(w - ml - mr) + "\" height=\"" + fmt(h - mt - mb) +
	       "\" fill=\"none\" stroke=\"#333\"/>\n";
	out += "<text x=\"" + fmt((ml + w - mr) / 2) + "\" y=\"" + fmt(h - 12) +
	       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
	       escape(x_label) + "</text>\n";
	out += "<text x=\"18\" y=\"" + fmt((mt + h - mb) / 2) +
	       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
	       "transform=\"rotate(-90 18 " + fmt((mt + h - mb) / 2) + ")\">" +
	       escape(y_label) + "</text>\n";

	for (size_t si = 0; si < series.size(); ++si) {
		const char *color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
		std::string points;
		bool open = false;
		auto flush = [&]() {
			if (open && !points.empty())
				out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
				       "\" stroke-width=\"1.8\" points=\"" + points + "\"/>\n";
			points.clear();
			open = false;
		};
		for (size_t i = 0; i < series[si].x.size(); ++i) {
			double xv = series[si].x[i], yv = series[si].y[i];
			if (!std::isfinite(xv) || !std::isfinite(yv)) {
				flush();
				continue;
			}
			points += fmt(px(xv)) + "," + fmt(py(yv)) + " ";
			open = true;
		}
		flush();
		double ly = mt + 18.0 * static_cast<double>(si) + 10;
		out += "<line x1=\"" + fmt(w - mr + 10) + "\" y1=\"" + fmt(ly) +
		       "\" x2=\"" + fmt(w - mr + 34) + "\" y2=\"" + fmt(ly) +
		       "\" stroke=\"" + color + "\" stroke-width=\"1.8\"/>\n";
		out += "<text x=\"" + fmt(w - mr + 40) + "\" y=\"" + fmt(ly + 4) +
		       "\" font-family=\"sans-serif\" font-size=\"11\">" +
		       escape(series[si].label) + "</text>\n";
	}
	out += "</svg>\n";
	return out;
}

} // namespace silink
