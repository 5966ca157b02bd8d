#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "signorini/capacity.hpp"
#include "signorini/diagnostics.hpp"
#include "signorini/grid.hpp"

namespace signorini {

/// Shortest decimal that reads back to the same double.
std::string format_real(double v);

/// Comma-separated table with a header row. Missing values are empty cells.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(const std::vector<std::optional<double>>& row);
  std::string str() const;
  void write(const std::filesystem::path& path) const;
  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::optional<double>>> rows_;
};

CsvTable profile_table(const FrequencyProfile& p);
/// i, j, x1, x2, u over the nodes that carry a value.
CsvTable field_table(const ScalarField& u);
CsvTable cdc_table(const std::vector<CdcSample>& samples);
CsvTable mazya_table(const std::vector<MazyaSample>& samples);
CsvTable oscillation_table(const ScalarField& u, std::size_t center_node, const std::vector<double>& radii);

}  // namespace signorini
