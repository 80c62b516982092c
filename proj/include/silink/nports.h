#pragma once

#include <cstddef>

#include "silink/twoport.h"

namespace silink {

// Per-frequency n x n scattering matrix, one real reference impedance per leg.
struct NPortS {
	FrequencyGrid grid;
	size_t ports;
	double z_ref;
	std::vector<cplx> data; // [k * ports * ports + i * ports + j]

	NPortS(const FrequencyGrid &g, size_t n_ports, double z);

	cplx &at(size_t k, size_t i, size_t j) { return data[(k * ports + i) * ports + j]; }
	const cplx &at(size_t k, size_t i, size_t j) const { return data[(k * ports + i) * ports + j]; }

	// max |S_ij - S_ji|
	double max_reciprocity_error() const;
	// max | sum_i |S_ij|^2 - 1 | over columns (meaningful for lossless nets)
	double max_unitarity_error() const;
	// max column power sum (passivity: <= 1 for passive nets)
	double max_column_power() const;
};

NPortS abcd_to_s(const TwoPortABCD &net, double z_ref);
TwoPortABCD s_to_abcd(const NPortS &net);

// Symmetric coupled pair from modal 2-ports. Ports: 1 = line1-in, 2 = line1-out,
// 3 = line2-in, 4 = line2-out. Like-line entries are (Se + So)/2, cross-line
// entries (Se - So)/2.
NPortS coupled4_from_modes(const TwoPortABCD &even, const TwoPortABCD &odd, double z_ref);

// Differential reduction of two uncoupled legs: Sdd_ij = (A_ij + B_ij)/2.
NPortS differential_from_legs(const NPortS &leg_a, const NPortS &leg_b);

// Connect port `port_a` of network a to port `port_b` of network b. The result
// keeps a's remaining ports (original order) followed by b's remaining ports.
NPortS connect(const NPortS &a, size_t port_a, const NPortS &b, size_t port_b);

// 2-port sub-network seen between ports `p` and `q` with every other port
// terminated in z_ref (exact for matched terminations).
NPortS subnetwork2(const NPortS &net, size_t p, size_t q);

// Reorder ports: new port i is old port perm[i].
NPortS permute_ports(const NPortS &net, const std::vector<size_t> &perm);

} // namespace silink
