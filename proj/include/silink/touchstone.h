#pragma once

#include <iosfwd>
#include <string>

#include "silink/nports.h"

namespace silink {

// Touchstone v1. Files are written as `# Hz S RI R <z_ref>` with full-precision
// scientific notation; readers additionally accept kHz/MHz/GHz units and MA/DB
// formats. v2 keyword lines are rejected. Port counts 1, 2, 4 and 8 only.
void touchstone_write(const NPortS &net, std::ostream &out);
void touchstone_write(const NPortS &net, const std::string &path);

NPortS touchstone_read(std::istream &in, size_t n_ports);
// Port count inferred from the .sNp extension.
NPortS touchstone_read(const std::string &path);

} // namespace silink
