#ifndef DGLAB_CSV_HPP
#define DGLAB_CSV_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace dglab {

// Minimal CSV table: header row + numeric matrix. One format everywhere:
// comma separator, 17 significant digits, LF line endings.

struct CsvTable {
  std::vector<std::string> header;
  Eigen::MatrixXd values;  // rows x header.size()

  int column(const std::string& name) const;  // -1 when absent
};

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values);

CsvTable read_csv(const std::string& path);

/// One value formatted the way write_csv does it (%.17g).
std::string csv_format(double value);

}  // namespace dglab

#endif
