#pragma once

#include <string>
#include <vector>

#include "wavent/cauchy.hpp"

namespace wavent {

// Flat binary field container: header (magic "WVFLD001", int32 d, int32 n,
// float64 L, float64 mass, int32 nfields), then nfields row-major float64
// payloads of n^d samples each.
void write_fields(const std::string& path, const std::vector<const Field*>& fields,
                  double mass);
struct LoadedFields {
  GridSpec grid;
  double mass = 0.0;
  std::vector<Field> fields;
};
LoadedFields read_fields(const std::string& path);

void write_cauchy(const std::string& path, const CauchyData& a);
CauchyData read_cauchy(const std::string& path);

// d = 1 CSV: "x,f" or "x,f,g" rows with full double precision.
void write_csv_1d(const std::string& path, const Field& f, const Field* g = nullptr);
// Reads "x,f" (header optional); requires a uniform power-of-two grid.
Field read_profile_csv(const std::string& path);

// Deterministic CSV table writer ("%.17g", atomic rename into place).
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}
  void add_row(const std::vector<std::string>& cells);
  void add_row_numeric(const std::vector<double>& values, const std::string& tail = "");
  const std::vector<std::string>& lines() const { return rows_; }
  std::string str() const;
  void write(const std::string& path) const;

  static std::string fmt(double v);

 private:
  std::vector<std::string> header_;
  std::vector<std::string> rows_;
};

// Atomic text write (temp file + rename).
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace wavent
