#include "localmodel/profile.hpp"

#include "localmodel/errors.hpp"

#include <numeric>
#include <sstream>

namespace localmodel {

bool is_cyclic_interval(const std::vector<std::uint8_t>& column) {
  // A cyclic interval of ones has at most one 0 -> 1 transition going around.
  const std::size_t len = column.size();
  int rises = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (column[i] > 1) return false;
    if (column[i] == 1 && column[(i + len - 1) % len] == 0) ++rises;
  }
  return rises <= 1;
}

TypeProfile::TypeProfile(std::vector<Row> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw DomainError("type profile needs at least one row");
  n_ = static_cast<int>(rows_.front().size());
  r_ = -1;
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n_) throw DomainError("type profile rows differ in length");
    int sum = 0;
    for (auto v : row) {
      if (v > 1) throw DomainError("type profile entries must be 0 or 1");
      sum += v;
    }
    if (r_ < 0) r_ = sum;
    if (sum != r_) throw DomainError("type profile rows have different sums");
  }
  for (int j = 0; j < n_; ++j)
    if (!is_cyclic_interval(column(j)))
      throw DomainError("type profile column " + std::to_string(j + 1) + " is not a cyclic interval");
}

std::vector<std::uint8_t> TypeProfile::column(int j) const {
  std::vector<std::uint8_t> col;
  col.reserve(rows_.size());
  for (const auto& row : rows_) col.push_back(row[static_cast<std::size_t>(j)]);
  return col;
}

std::vector<std::uint8_t> TypeProfile::flattened() const {
  std::vector<std::uint8_t> flat;
  flat.reserve(rows_.size() * static_cast<std::size_t>(n_));
  for (const auto& row : rows_) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

std::string TypeProfile::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ',';
    os << '(';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << int(rows_[i][j]);
    os << ')';
  }
  os << ')';
  return os.str();
}

} // namespace localmodel
