#include "silink/nports.h"

#include <cmath>

#include "silink/errors.h"

namespace silink {

NPortS::NPortS(const FrequencyGrid &g, size_t n_ports, double z)
	: grid(g), ports(n_ports), z_ref(z), data(g.size() * n_ports * n_ports, cplx(0.0, 0.0)) {
	if (n_ports == 0)
		throw InvalidArgument("NPortS: port count must be positive");
	if (!(z > 0.0))
		throw InvalidArgument("NPortS: reference impedance must be positive");
}

double NPortS::max_reciprocity_error() const {
	double worst = 0.0;
	for (size_t k = 0; k < grid.size(); ++k)
		for (size_t i = 0; i < ports; ++i)
			for (size_t j = i + 1; j < ports; ++j)
				worst = std::max(worst, std::abs(at(k, i, j) - at(k, j, i)));
	return worst;
}

double NPortS::max_unitarity_error() const {
	double worst = 0.0;
	for (size_t k = 0; k < grid.size(); ++k)
		for (size_t j = 0; j < ports; ++j) {
			double p = 0.0;
			for (size_t i = 0; i < ports; ++i)
				p += std::norm(at(k, i, j));
			worst = std::max(worst, std::abs(p - 1.0));
		}
	return worst;
}

double NPortS::max_column_power() const {
	double worst = 0.0;
	for (size_t k = 0; k < grid.size(); ++k)
		for (size_t j = 0; j < ports; ++j) {
			double p = 0.0;
			for (size_t i = 0; i < ports; ++i)
				p += std::norm(at(k, i, j));
			worst = std::max(worst, p);
		}
	return worst;
}

NPortS abcd_to_s(const TwoPortABCD &net, double z_ref) {
	if (!(z_ref > 0.0))
		throw InvalidArgument("abcd_to_s: reference impedance must be positive");
	NPortS s(net.grid, 2, z_ref);
	for (size_t k = 0; k < net.grid.size(); ++k) {
		cplx a = net.a[k], b = net.b[k], c = net.c[k], d = net.d[k];
		cplx bz = b / z_ref, cz = c * z_ref;
		cplx den = a + bz + cz + d;
		if (std::abs(den) < 1e-300)
			throw NumericalError("abcd_to_s: singular conversion denominator");
		s.at(k, 0, 0) = (a + bz - cz - d) / den;
		s.at(k, 0, 1) = 2.0 * (a * d - b * c) / den;
		s.at(k, 1, 0) = 2.0 / den;
		s.at(k, 1, 1) = (-a + bz - cz + d) / den;
	}
	return s;
}

TwoPortABCD s_to_abcd(const NPortS &net) {
	if (net.ports != 2)
		throw InvalidArgument("s_to_abcd: expects a 2-port");
	TwoPortABCD m(net.grid);
	double z = net.z_ref;
	for (size_t k = 0; k < net.grid.size(); ++k) {
		cplx s11 = net.at(k, 0, 0), s12 = net.at(k, 0, 1);
		cplx s21 = net.at(k, 1, 0), s22 = net.at(k, 1, 1);
		if (std::abs(s21) < 1e-300)
			throw NumericalError("s_to_abcd: S21 = 0 has no chain representation");
		cplx two_s21 = 2.0 * s21;
		m.a[k] = ((1.0 + s11) * (1.0 - s22) + s12 * s21) / two_s21;
		m.b[k] = z * ((1.0 + s11) * (1.0 + s22) - s12 * s21) / two_s21;
		m.c[k] = ((1.0 - s11) * (1.0 - s22) - s12 * s21) / (z * two_s21);
		m.d[k] = ((1.0 - s11) * (1.0 + s22) + s12 * s21) / two_s21;
	}
	return m;
}

NPortS coupled4_from_modes(const TwoPortABCD &even, const TwoPortABCD &odd, double z_ref) {
	if (even.grid != odd.grid)
		throw InvalidArgument("coupled4_from_modes: frequency grids differ");
	NPortS se = abcd_to_s(even, z_ref);
	NPortS so = abcd_to_s(odd, z_ref);
	NPortS out(even.grid, 4, z_ref);
	for (size_t k = 0; k < even.grid.size(); ++k) {
		for (size_t i = 0; i < 4; ++i) {
			for (size_t j = 0; j < 4; ++j) {
				size_t mi = i % 2, mj = j % 2;
				cplx e = se.at(k, mi, mj), o = so.at(k, mi, mj);
				bool same_line = (i / 2) == (j / 2);
				out.at(k, i, j) = same_line ? 0.5 * (e + o) : 0.5 * (e - o);
			}
		}
	}
	return out;
}

NPortS differential_from_legs(const NPortS &leg_a, const NPortS &leg_b) {
	if (leg_a.grid != leg_b.grid)
		throw InvalidArgument("differential_from_legs: frequency grids differ");
	if (leg_a.ports != 2 || leg_b.ports != 2)
		throw InvalidArgument("differential_from_legs: expects 2-port legs");
	if (leg_a.z_ref != leg_b.z_ref)
		throw InvalidArgument("differential_from_legs: reference impedances differ");
	NPortS out(leg_a.grid, 2, leg_a.z_ref);
	for (size_t i = 0; i < out.data.size(); ++i)
		out.data[i] = 0.5 * (leg_a.data[i] + leg_b.data[i]);
	return out;
}

// Joining waves: a_p = b_q and a_q = b_p for the connected pair. Solving the
// 2x2 system per frequency and substituting back into the external rows.
NPortS connect(const NPortS &a, size_t port_a, const NPortS &b, size_t port_b) {
	if (a.grid != b.grid)
		throw InvalidArgument("connect: frequency grids differ");
	if (a.z_ref != b.z_ref)
		throw InvalidArgument("connect: reference impedances differ");
	if (port_a >= a.ports || port_b >= b.ports)
		throw InvalidArgument("connect: port index out of range");

	size_t na = a.ports, nb = b.ports;
	size_t n_out = na + nb - 2;
	NPortS out(a.grid, n_out, a.z_ref);

	// external index -> (network, port)
	std::vector<std::pair<int, size_t>> ext;
	ext.reserve(n_out);
	for (size_t i = 0; i < na; ++i)
		if (i != port_a)
			ext.emplace_back(0, i);
	for (size_t i = 0; i < nb; ++i)
		if (i != port_b)
			ext.emplace_back(1, i);

	for (size_t k = 0; k < a.grid.size(); ++k) {
		auto sa = [&](size_t i, size_t j) { return a.at(k, i, j); };
		auto sb = [&](size_t i, size_t j) { return b.at(k, i, j); };

		// Unknowns: x = a-wave into port_a of A (= b-wave out of port_b of B),
		//           y = a-wave into port_b of B (= b-wave out of port_a of A).
		// x = sb(port_b,port_b)*y ... no: x = b_B(port_b) = sum_j sb(port_b,j) a_B(j)
		// with a_B(port_b) = x's counterpart. Set up per external drive below.
		cplx m11 = 1.0, m12 = -sb(port_b, port_b);
		cplx m21 = -sa(port_a, port_a), m22 = 1.0;
		cplx det = m11 * m22 - m12 * m21;
		if (std::abs(det) < 1e-300)
			throw NumericalError("connect: singular interconnection");

		for (size_t src = 0; src < n_out; ++src) {
			auto [net_s, p_s] = ext[src];
			// RHS for unit incident wave at the source port
			cplx r1 = (net_s == 1) ? sb(port_b, p_s) : cplx(0.0, 0.0);
			cplx r2 = (net_s == 0) ? sa(port_a, p_s) : cplx(0.0, 0.0);
			cplx x = (r1 * m22 - m12 * r2) / det;
			cplx y = (m11 * r2 - m21 * r1) / det;
			for (size_t dst = 0; dst < n_out; ++dst) {
				auto [net_d, p_d] = ext[dst];
				cplx v;
				if (net_d == 0)
					v = sa(p_d, port_a) * x + ((net_s == 0) ? sa(p_d, p_s) : cplx(0.0, 0.0));
				else
					v = sb(p_d, port_b) * y + ((net_s == 1) ? sb(p_d, p_s) : cplx(0.0, 0.0));
				out.at(k, dst, src) = v;
			}
		}
	}
	return out;
}

NPortS subnetwork2(const NPortS &net, size_t p, size_t q) {
	if (p >= net.ports || q >= net.ports || p == q)
		throw InvalidArgument("subnetwork2: bad port pair");
	NPortS out(net.grid, 2, net.z_ref);
	for (size_t k = 0; k < net.grid.size(); ++k) {
		out.at(k, 0, 0) = net.at(k, p, p);
		out.at(k, 0, 1) = net.at(k, p, q);
		out.at(k, 1, 0) = net.at(k, q, p);
		out.at(k, 1, 1) = net.at(k, q, q);
	}
	return out;
}

NPortS permute_ports(const NPortS &net, const std::vector<size_t> &perm) {
	if (perm.size() != net.ports)
		throw InvalidArgument("permute_ports: permutation size mismatch");
	std::vector<bool> seen(net.ports, false);
	for (size_t p : perm) {
		if (p >= net.ports || seen[p])
			throw InvalidArgument("permute_ports: not a permutation");
		seen[p] = true;
	}
	NPortS out(net.grid, net.ports, net.z_ref);
	for (size_t k = 0; k < net.grid.size(); ++k)
		for (size_t i = 0; i < net.ports; ++i)
			for (size_t j = 0; j < net.ports; ++j)
				out.at(k, i, j) = net.at(k, perm[i], perm[j]);
	return out;
}

} // namespace silink
