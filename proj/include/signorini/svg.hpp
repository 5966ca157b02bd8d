#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "signorini/grid.hpp"

namespace signorini::svg {

/// Heatmap of the nodes that carry a value, one square per node. Blue for
/// negative, red for positive, white at u = 0; the scale is symmetric in
/// max |u|.
std::string heatmap(const ScalarField& u, const std::string& title);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Polyline plot; non-finite points break the line.
std::string curves(const std::string& title, const std::string& xlabel, const std::vector<Series>& series,
                   bool log_x = false, bool log_y = false);

void write(const std::filesystem::path& path, const std::string& document);

}  // namespace signorini::svg
