#include "wavent/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace wavent {

namespace {
constexpr char kMagic[9] = "WVFLD001";
}

void write_fields(const std::string& path, const std::vector<const Field*>& fields,
                  double mass) {
  if (fields.empty()) throw BadField("write_fields: nothing to write");
  const GridSpec& g = fields.front()->grid;
  for (const Field* f : fields) require_same_grid(g, f->grid, "write_fields");

  std::ostringstream buf(std::ios::binary);
  buf.write(kMagic, 8);
  const std::int32_t d = g.d, n = g.n, nf = static_cast<std::int32_t>(fields.size());
  const double L = g.half_extent;
  buf.write(reinterpret_cast<const char*>(&d), 4);
  buf.write(reinterpret_cast<const char*>(&n), 4);
  buf.write(reinterpret_cast<const char*>(&L), 8);
  buf.write(reinterpret_cast<const char*>(&mass), 8);
  buf.write(reinterpret_cast<const char*>(&nf), 4);
  for (const Field* f : fields)
    buf.write(reinterpret_cast<const char*>(f->v.data()),
              static_cast<std::streamsize>(f->v.size() * sizeof(double)));
  write_text_atomic(path, buf.str());
}

LoadedFields read_fields(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadField("read_fields: cannot open " + path);
  char magic[8];
  std::int32_t d = 0, n = 0, nf = 0;
  double L = 0.0, mass = 0.0;
  in.read(magic, 8);
  if (std::memcmp(magic, kMagic, 8) != 0)
    throw BadField("read_fields: bad magic in " + path);
  in.read(reinterpret_cast<char*>(&d), 4);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&L), 8);
  in.read(reinterpret_cast<char*>(&mass), 8);
  in.read(reinterpret_cast<char*>(&nf), 4);
  LoadedFields out;
  out.grid = GridSpec(d, n, L);
  out.mass = mass;
  for (int k = 0; k < nf; ++k) {
    Field f(out.grid);
    in.read(reinterpret_cast<char*>(f.v.data()),
            static_cast<std::streamsize>(f.v.size() * sizeof(double)));
    if (!in) throw BadField("read_fields: truncated payload in " + path);
    out.fields.push_back(std::move(f));
  }
  return out;
}

void write_cauchy(const std::string& path, const CauchyData& a) {
  write_fields(path, {&a.f, &a.g}, a.mass);
}

CauchyData read_cauchy(const std::string& path) {
  LoadedFields lf = read_fields(path);
  if (lf.fields.size() != 2) throw BadField("read_cauchy: expected two fields");
  return CauchyData(std::move(lf.fields[0]), std::move(lf.fields[1]), lf.mass);
}

std::string CsvWriter::fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void CsvWriter::add_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  rows_.push_back(std::move(line));
}

void CsvWriter::add_row_numeric(const std::vector<double>& values,
                                const std::string& tail) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += fmt(values[i]);
  }
  if (!tail.empty()) {
    if (!line.empty()) line += ',';
    line += tail;
  }
  rows_.push_back(std::move(line));
}

std::string CsvWriter::str() const {
  std::string out;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ',';
    out += header_[i];
  }
  out += '\n';
  for (const std::string& r : rows_) {
    out += r;
    out += '\n';
  }
  return out;
}

void CsvWriter::write(const std::string& path) const { write_text_atomic(path, str()); }

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("write: cannot open " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("write: cannot rename into " + path);
}

void write_csv_1d(const std::string& path, const Field& f, const Field* g) {
  if (f.grid.d != 1) throw BadField("write_csv_1d: 1-d field required");
  CsvWriter csv(g ? std::vector<std::string>{"x", "f", "g"}
                  : std::vector<std::string>{"x", "f"});
  for (int k = 0; k < f.grid.n; ++k) {
    std::vector<double> row{f.grid.coord(k), f.v[k]};
    if (g) row.push_back(g->v[k]);
    csv.add_row_numeric(row);
  }
  csv.write(path);
}

Field read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadField("read_profile_csv: cannot open " + path);
  std::vector<double> xs, fs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',')) continue;
    try {
      const double x = std::stod(a);
      const double f = std::stod(b);
      xs.push_back(x);
      fs.push_back(f);
    } catch (...) {
      continue;  // header or comment line
    }
  }
  const int n = static_cast<int>(xs.size());
  if (n < 16 || (n & (n - 1)) != 0)
    throw BadField("read_profile_csv: need a power-of-two sample count >= 16");
  const double dx = xs[1] - xs[0];
  const double L = -xs[0];
  for (int k = 0; k < n; ++k)
    if (std::abs(xs[k] - (-L + k * dx)) > 1e-9 * std::max(1.0, L))
      throw BadField("read_profile_csv: samples must sit on a uniform grid");
  if (std::abs(dx * n - 2 * L) > 1e-9 * L)
    throw BadField("read_profile_csv: grid must span [-L, L)");
  return Field(GridSpec(1, n, L), std::move(fs));
}

}  // namespace wavent
