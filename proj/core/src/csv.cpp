#include "dglab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dglab {

int CsvTable::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string csv_format(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values) {
  if (static_cast<size_t>(values.cols()) != header.size()) {
    throw std::invalid_argument("write_csv: header/column count mismatch");
  }
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      if (c) out << ',';
      out << csv_format(values(r, c));
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_csv: cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("read_csv: empty file '" + path + "'");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      size_t pos = 0;
      row.push_back(std::stod(cell, &pos));
    }
    if (row.size() != table.header.size()) {
      throw std::runtime_error("read_csv: ragged row in '" + path + "'");
    }
    rows.push_back(std::move(row));
  }
  table.values.resize(rows.size(), table.header.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < table.header.size(); ++c) {
      table.values(r, c) = rows[r][c];
    }
  }
  return table;
}

}  // namespace dglab
