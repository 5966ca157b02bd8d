#include "signorini/csv.hpp"

#include <charconv>
#include <fstream>

#include "signorini/error.hpp"

namespace signorini {

std::string format_real(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void CsvTable::add(const std::vector<std::optional<double>>& row) {
  if (row.size() != header_.size()) throw ConfigError("csv row width does not match header");
  rows_.push_back(row);
}

std::string CsvTable::str() const {
  std::string out;
  for (std::size_t c = 0; c < header_.size(); ++c) {
    if (c) out += ',';
    out += header_[c];
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      if (row[c]) out += format_real(*row[c]);
    }
    out += '\n';
  }
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << str();
}

CsvTable profile_table(const FrequencyProfile& p) {
  CsvTable t({"r", "D", "H", "N", "beta", "rellich_defect", "green_defect"});
  for (std::size_t i = 0; i < p.radii.size(); ++i) {
    t.add({p.radii[i], p.D[i], p.H[i], p.N[i], p.beta[i], p.rellich_defect[i], p.green_defect[i]});
  }
  return t;
}

CsvTable field_table(const ScalarField& u) {
  CsvTable t({"i", "j", "x1", "x2", "u"});
  const Grid& g = *u.grid;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (!u.valid(k)) continue;
    const Vec2 x = g.coord(k);
    t.add({double(g.col(k)), double(g.row(k)), x.x1, x.x2, u[k]});
  }
  return t;
}

CsvTable cdc_table(const std::vector<CdcSample>& samples) {
  CsvTable t({"r", "capacity", "c0", "reliable"});
  for (const auto& s : samples) {
    t.add({s.r, s.reliable ? std::optional<double>(s.capacity) : std::nullopt, s.running_min,
           s.reliable ? 1.0 : 0.0});
  }
  return t;
}

CsvTable mazya_table(const std::vector<MazyaSample>& samples) {
  CsvTable t({"r", "sup_half", "capacity", "ratio"});
  for (const auto& s : samples) {
    t.add({s.r, s.sup_half, s.capacity, s.defined ? std::optional<double>(s.ratio) : std::nullopt});
  }
  return t;
}

CsvTable oscillation_table(const ScalarField& u, std::size_t center_node, const std::vector<double>& radii) {
  CsvTable t({"r", "osc"});
  for (double r : radii) t.add({r, oscillation(u, center_node, r)});
  return t;
}

}  // namespace signorini
