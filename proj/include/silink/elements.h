#pragma once

#include <optional>

#include "silink/nports.h"
#include "silink/twoport.h"

namespace silink {

// dB per neper, 20/ln(10).
inline constexpr double kNpDb = 8.685889638;
inline constexpr double kC0 = 299792458.0; // vacuum light speed, m/s

// Stripline defined electrically: Nyquist frequency f1, length in UI, and the
// dB losses *at f1* it should realize. No physical geometry involved.
struct StriplineSpec {
  double f1 = 0;       // Hz
  double len_ui = 0;   // electrical length in unit intervals
  double skew_ui = 0;  // P/N skew in UI, split +/- between the two legs
  double z_ohf = 50.0; // high-frequency characteristic impedance, ohms
  double db_rdc = 0;   // DC resistive loss, dB
  double db_rac = 0;   // AC (skin) resistive loss at f1, dB
  double db_gac = 0;   // dielectric loss at f1, dB
};

void validate(const StriplineSpec &s);

struct RlcgTotals {
  double r;            // ohms (total for the line, at evaluated_at)
  double l;            // henries (external + internal)
  double c;            // farads
  double g;            // siemens
  double evaluated_at; // Hz
};

RlcgTotals stripline_rlcg(const StriplineSpec &s, double f);

enum class Leg { A, B }; // A runs len - skew/2, B runs len + skew/2

TwoPortABCD stripline_abcd(const StriplineSpec &s, const FrequencyGrid &grid,
                           Leg leg = Leg::A);

// Lumped element values realizing |S11(f1)| = 10^(rv_db/20) in a z0 system.
double cap_from_rv(double rv_db, double f1, double z0);
double ind_from_rv(double rv_db, double f1, double z0);

enum class ViaFlavor { Capacitive, Inductive };

struct LumpedViaSpec {
  double f1 = 0;
  double rv_db = 0; // target reflected voltage at f1, strictly negative
  ViaFlavor flavor = ViaFlavor::Capacitive;
  std::optional<double> xtalk_db; // coupling at f1; absent = uncoupled
};

void validate(const LumpedViaSpec &s);

// One leg of the identical-leg differential pair; the differential response
// equals the leg response.
TwoPortABCD lumped_via_pairleg(const LumpedViaSpec &s, const FrequencyGrid &grid,
                               double z0);

// Ports: 0 victim-in, 1 victim-out, 2 aggressor-in, 3 aggressor-out.
// Capacitive: per-leg shunt C plus a bridge capacitor between the victim and
// aggressor nodes. Inductive: per-leg series L plus (negative) mutual M, which
// yields negative NEXT / positive FEXT step polarity; the capacitive flavor
// gives both positive.
NPortS coupled_lumped_via_4port(const LumpedViaSpec &s, const FrequencyGrid &grid,
                                double z0);

struct TlineViaSpec {
  double barrel_len = 0; // meters, top pad to stripline egress
  double stub_len = 0;   // meters, egress to via bottom (open)
  double z_leg = 0;      // ohms per leg (half the differential impedance)
  double er = 1;         // relative dielectric constant
  double k_xtalk = 0;    // victim/aggressor coupling coefficient, in (0,1)
};

void validate(const TlineViaSpec &s);

// Modal 2-ports (even, odd) of one leg system: barrel line section followed by
// the open stub as a shunt tap at the egress. Exposed so callers can embed
// additional per-mode elements before forming the 4-port.
std::pair<TwoPortABCD, TwoPortABCD> tline_via_modal_legs(const TlineViaSpec &s,
                                                         const FrequencyGrid &grid);

// Ports: 0 victim-top, 1 victim-stripline, 2 aggressor-top, 3 aggressor-stripline.
NPortS tline_via_4port(const TlineViaSpec &s, const FrequencyGrid &grid, double z0);

} // namespace silink
