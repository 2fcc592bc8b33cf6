#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boussinesq::csv {

/// Shortest round-trip-safe rendering used everywhere: 17 significant digits.
[[nodiscard]] std::string format_double(double value);

/// Header once, then numeric rows. Writes straight to the stream.
class Writer {
 public:
  Writer(std::ostream& out, std::vector<std::string> columns);

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values);

  [[nodiscard]] std::size_t columns() const noexcept { return columns_.size(); }

 private:
  std::ostream& out_;
  std::vector<std::string> columns_;
};

/// Rows t,x,zeta,v for one snapshot; header only when requested.
void write_snapshot(std::ostream& out, double t, std::span<const double> x, std::span<const double> zeta,
                    std::span<const double> v, bool header);

}  // namespace boussinesq::csv
