#include "boussinesq/csv.hpp"

#include <cstdio>

#include "boussinesq/model.hpp"

namespace boussinesq::csv {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Writer::Writer(std::ostream& out, std::vector<std::string> columns) : out_(out), columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
  out_ << '\n';
}

void Writer::row(std::span<const double> values) {
  if (values.size() != columns_.size()) throw ConfigError("csv row has the wrong number of columns");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

void Writer::row(std::initializer_list<double> values) { row(std::span<const double>(values.begin(), values.size())); }

void write_snapshot(std::ostream& out, double t, std::span<const double> x, std::span<const double> zeta,
                    std::span<const double> v, bool header) {
  if (x.size() != zeta.size() || x.size() != v.size()) throw ConfigError("snapshot columns differ in length");
  if (header) out << "t,x,zeta,v\n";
  const std::string ts = format_double(t);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << ts << ',' << format_double(x[i]) << ',' << format_double(zeta[i]) << ',' << format_double(v[i]) << '\n';
  }
}

}  // namespace boussinesq::csv
