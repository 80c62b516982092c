#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "silink/elements.h"
#include "silink/nports.h"

namespace silink {

// Reflection floor used when converting traces to dB for hull fitting.
inline constexpr double kFloorDb = -80.0;

// Shunt capacitance hung on the outermost node of a leg (die / package
// loading).  Only legal as the first or last element of a topology.
struct TerminalCap {
	double c = 0.0; // farads
};

using Element = std::variant<StriplineSpec, LumpedViaSpec, TlineViaSpec, TerminalCap>;

enum class AggressorRoute {
	None,          // no aggressor, victim-only analysis
	SameDirection, // aggressor TX on the same side as the victim TX
	Opposing       // aggressor driven from the far end
};

struct ChannelTopology {
	double data_rate = 10e9; // bits/s; Nyquist f1 = data_rate / 2
	std::vector<Element> elements;
	double z0 = 50.0; // single-ended reference, per leg
	AggressorRoute aggressor_route = AggressorRoute::None;
};

// Throws InvalidArgument on an ill-formed topology: empty element list,
// an element whose f1 disagrees with data_rate/2, or a TerminalCap that
// is neither first nor last.
void validate(const ChannelTopology &top);

// Differential 2-port of the victim path (port 0 = TX, port 1 = RX).
// Coupled elements contribute their victim path only.
NPortS assemble_victim(const ChannelTopology &top, const FrequencyGrid &grid);

// 4-port with the aggressor retained.  Requires exactly one coupled
// element (a LumpedViaSpec with xtalk_db, or a TlineViaSpec) and an
// aggressor_route other than None; anything else is UnsupportedTopology.
// Ports: 0 victim TX, 1 victim RX, 2 aggressor on the TX side,
// 3 aggressor on the RX side.
NPortS assemble_coupled(const ChannelTopology &top, const FrequencyGrid &grid);

// Which port of assemble_coupled() the aggressor transmitter drives.
size_t aggressor_drive_port(AggressorRoute route);

// Broad-band reflected (or coupled) voltage figure: upper convex hull of
// the local maxima of `trace_db` over (0, 2*f1], evaluated at f1 and
// clamped to [kFloorDb, 0].  Degenerates to plain interpolation when the
// trace has fewer than two interior maxima.
double broadband_level(const std::vector<double> &trace_db,
                       const FrequencyGrid &grid, double f1);

struct ChannelMetrics {
	double il_at_nyquist;  // dB, insertion loss (negative)
	double rv_at_nyquist;  // dB, raw return level at f1
	double brv;            // dB, hull-based broadband reflected voltage
	double total_delay;    // s, group delay of S21 at f1
};

ChannelMetrics metrics(const ChannelTopology &top, const FrequencyGrid &grid);

} // namespace silink
