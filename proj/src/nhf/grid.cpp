#include "nhf/grid.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace nhf {

double grid_l2(const GridField& f) {
  f.check();
  long double acc = 0.0L;
  for (const cplx& z : f.values) acc += static_cast<long double>(std::norm(z));
  return static_cast<double>(std::sqrt(acc / static_cast<long double>(f.spec.size())));
}

double grid_linf_diff(const GridField& a, const GridField& b) {
  a.check();
  b.check();
  require(a.spec == b.spec, Status::parse, "grid shape mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

void write_grid_csv(const GridField& f, const std::string& path) {
  f.check();
  std::ofstream out(path);
  require(out.good(), Status::parse, "cannot open for writing: " + path);
  char buf[64];
  for (int k1 = 0; k1 < f.spec.n1; ++k1) {
    std::string line;
    for (int k2 = 0; k2 < f.spec.n2; ++k2) {
      const cplx z = f.at(k1, k2);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
      if (k2) line += ',';
      line += buf;
    }
    out << line << '\n';
  }
  require(out.good(), Status::parse, "write failed: " + path);
}

GridField read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Status::parse, "cannot open: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> nums;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        const double v = std::stod(tok, &used);
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        require(used == tok.size(), Status::parse, "");
        nums.push_back(v);
      } catch (...) {
        throw Error(Status::parse, "grid csv: bad number at line " +
                                       std::to_string(lineno) + ": '" + tok + "'");
      }
    }
    require(!nums.empty() && nums.size() % 2 == 0, Status::parse,
            "grid csv: line " + std::to_string(lineno) +
                " must hold an even number of values (re,im pairs)");
    if (!rows.empty())
      require(nums.size() == rows.front().size(), Status::parse,
              "grid csv: ragged row at line " + std::to_string(lineno));
    rows.push_back(std::move(nums));
  }
  require(!rows.empty(), Status::parse, "grid csv: empty file " + path);
  GridSpec spec{static_cast<int>(rows.size()),
                static_cast<int>(rows.front().size() / 2)};
  spec.check();
  GridField f(spec);
  for (int k1 = 0; k1 < spec.n1; ++k1)
    for (int k2 = 0; k2 < spec.n2; ++k2)
      f.at(k1, k2) = cplx(rows[k1][2 * k2], rows[k1][2 * k2 + 1]);
  return f;
}

namespace {
void put_i64(std::ofstream& out, std::int64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), 8);
}
std::int64_t get_i64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return static_cast<std::int64_t>(v);
}
void put_f64(std::ofstream& out, double x) {
  std::uint64_t v;
  std::memcpy(&v, &x, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char*>(b), 8);
}
double get_f64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double x;
  std::memcpy(&x, &v, 8);
  return x;
}
}  // namespace

void write_grid_bin(const GridField& f, const std::string& path) {
  f.check();
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Status::parse, "cannot open for writing: " + path);
  put_i64(out, f.spec.n1);
  put_i64(out, f.spec.n2);
  for (const cplx& z : f.values) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  require(out.good(), Status::parse, "write failed: " + path);
}

GridField read_grid_bin(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), Status::parse, "cannot open: " + path);
  const std::int64_t n1 = get_i64(in), n2 = get_i64(in);
  require(in.good() && n1 >= 4 && n2 >= 4 && n1 <= (1 << 20) && n2 <= (1 << 20),
          Status::parse, "grid bin: bad header in " + path);
  GridField f(GridSpec{static_cast<int>(n1), static_cast<int>(n2)});
  for (cplx& z : f.values) {
    const double re = get_f64(in), im = get_f64(in);
    z = cplx(re, im);
  }
  require(!in.fail(), Status::parse, "grid bin: truncated data in " + path);
  return f;
}

}  // namespace nhf
