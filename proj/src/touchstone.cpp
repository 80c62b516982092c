#include "silink/touchstone.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "silink/errors.h"

namespace silink {

namespace {

bool valid_port_count(size_t n) { return n == 1 || n == 2 || n == 4 || n == 8; }

void write_pair(std::ostream &out, cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), " %.12e %.12e", v.real(), v.imag());
  out << buf;
}

struct Token {
  std::string text;
  size_t line;
};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

double to_number(const Token &t) {
  const char *s = t.text.c_str();
  char *end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw ParseError("expected a number, got '" + t.text + "'", t.line);
  return v;
}

} // namespace

void touchstone_write(const NPortS &net, std::ostream &out) {
  const size_t n = net.ports;
  if (!valid_port_count(n))
    throw InvalidArgument("touchstone_write: unsupported port count " +
                          std::to_string(n));
  char opt[64];
  std::snprintf(opt, sizeof(opt), "# Hz S RI R %g\n", net.z_ref);
  out << opt;
  for (size_t k = 0; k < net.grid.size(); ++k) {
    char fbuf[48];
    std::snprintf(fbuf, sizeof(fbuf), "%.12e", net.grid[k]);
    out << fbuf;
    if (n == 1) {
      write_pair(out, net.at(k, 0, 0));
      out << "\n";
    } else if (n == 2) {
      // 2-port data runs column-major per convention: S11 S21 S12 S22.
      write_pair(out, net.at(k, 0, 0));
      write_pair(out, net.at(k, 1, 0));
      write_pair(out, net.at(k, 0, 1));
      write_pair(out, net.at(k, 1, 1));
      out << "\n";
    } else {
      // Row-major, one matrix row per line, wrapped at four entries.
      for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
          if (j > 0 && j % 4 == 0)
            out << "\n";
          write_pair(out, net.at(k, i, j));
        }
        out << "\n";
      }
    }
  }
}

void touchstone_write(const NPortS &net, const std::string &path) {
  std::ofstream f(path);
  if (!f)
    throw InvalidArgument("cannot open '" + path + "' for writing");
  touchstone_write(net, f);
}

NPortS touchstone_read(std::istream &in, size_t n_ports) {
  if (!valid_port_count(n_ports))
    throw UnsupportedFormat("unsupported port count " +
                            std::to_string(n_ports));

  double unit_scale = 1e9; // default GHz
  char fmt = 'M';          // default MA
  double z_ref = 50.0;
  bool have_options = false;

  std::vector<Token> data;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto bang = raw.find('!'); bang != std::string::npos)
      raw.erase(bang);
    size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    if (raw[first] == '[')
      throw UnsupportedFormat("Touchstone v2 keyword on line " +
                              std::to_string(line_no));
    if (raw[first] == '#') {
      if (have_options)
        continue; // per spec, later option lines are ignored
      have_options = true;
      std::istringstream os(raw.substr(first + 1));
      std::string tok;
      while (os >> tok) {
        std::string t = lower(tok);
        if (t == "hz")
          unit_scale = 1.0;
        else if (t == "khz")
          unit_scale = 1e3;
        else if (t == "mhz")
          unit_scale = 1e6;
        else if (t == "ghz")
          unit_scale = 1e9;
        else if (t == "s")
          ; // scattering parameters, the only supported type
        else if (t == "y" || t == "z" || t == "h" || t == "g")
          throw UnsupportedFormat("only S-parameter files are supported (line " +
                                  std::to_string(line_no) + ")");
        else if (t == "ri")
          fmt = 'R';
        else if (t == "ma")
          fmt = 'M';
        else if (t == "db")
          fmt = 'D';
        else if (t == "r") {
          std::string rv;
          if (!(os >> rv))
            throw ParseError("option 'R' without a resistance", line_no);
          z_ref = to_number({rv, line_no});
        } else
          throw ParseError("unknown option token '" + tok + "'", line_no);
      }
      continue;
    }
    std::istringstream ds(raw);
    std::string tok;
    while (ds >> tok)
      data.push_back({tok, line_no});
  }

  const size_t per_point = 1 + 2 * n_ports * n_ports;
  if (data.empty())
    throw ParseError("no data", line_no ? line_no : 1);
  if (data.size() % per_point != 0)
    throw ParseError("incomplete data block (have " +
                         std::to_string(data.size()) + " values, need a multiple of " +
                         std::to_string(per_point) + ")",
                     data.back().line);
  const size_t n_freq = data.size() / per_point;
  if (n_freq < 2)
    throw ParseError("need at least two frequency points", data.back().line);

  std::vector<double> freqs(n_freq);
  std::vector<size_t> freq_lines(n_freq);
  for (size_t k = 0; k < n_freq; ++k) {
    const Token &t = data[k * per_point];
    freqs[k] = to_number(t) * unit_scale;
    freq_lines[k] = t.line;
    if (k > 0 && freqs[k] <= freqs[k - 1])
      throw ParseError("frequencies must be strictly increasing", t.line);
  }
  // The engine works on uniform DC-excluded grids: f_k = (k+1)*df.
  const double df = freqs[0];
  for (size_t k = 0; k < n_freq; ++k) {
    double expect = double(k + 1) * df;
    if (std::abs(freqs[k] - expect) > 1e-6 * expect)
      throw ParseError("frequency grid is not uniform with f_k = (k+1)*df",
                       freq_lines[k]);
  }

  NPortS net(FrequencyGrid(freqs.back(), n_freq), n_ports, z_ref);
  for (size_t k = 0; k < n_freq; ++k) {
    const Token *vals = &data[k * per_point + 1];
    auto entry = [&](size_t idx) -> cplx {
      double a = to_number(vals[2 * idx]);
      double b = to_number(vals[2 * idx + 1]);
      switch (fmt) {
      case 'R':
        return {a, b};
      case 'M':
        return std::polar(a, b * M_PI / 180.0);
      default: // 'D'
        return std::polar(std::pow(10.0, a / 20.0), b * M_PI / 180.0);
      }
    };
    if (n_ports == 2) {
      net.at(k, 0, 0) = entry(0);
      net.at(k, 1, 0) = entry(1);
      net.at(k, 0, 1) = entry(2);
      net.at(k, 1, 1) = entry(3);
    } else {
      for (size_t i = 0; i < n_ports; ++i)
        for (size_t j = 0; j < n_ports; ++j)
          net.at(k, i, j) = entry(i * n_ports + j);
    }
  }
  return net;
}

NPortS touchstone_read(const std::string &path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos)
    throw InvalidArgument("cannot infer port count from '" + path + "'");
  std::string ext = lower(path.substr(dot + 1));
  size_t n = 0;
  if (ext.size() >= 3 && ext.front() == 's' && ext.back() == 'p') {
    try {
      n = std::stoul(ext.substr(1, ext.size() - 2));
    } catch (...) {
      n = 0;
    }
  }
  if (n == 0)
    throw InvalidArgument("cannot infer port count from '" + path + "'");
  std::ifstream f(path);
  if (!f)
    throw InvalidArgument("cannot open '" + path + "'");
  return touchstone_read(f, n);
}

} // namespace silink
