#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace localmodel {

/// 0/1 matrix (t_i(j)) selecting a chart. Row i belongs to step i of the
/// chain, column j (0-based here) to basis vector e_{j+1}.
class TypeProfile {
public:
  using Row = std::vector<std::uint8_t>;

  TypeProfile() = default;

  /// Validates entries, equal row sums and the cyclic-interval column
  /// condition. Throws DomainError otherwise.
  explicit TypeProfile(std::vector<Row> rows);

  int n() const { return n_; }
  int m() const { return static_cast<int>(rows_.size()); }
  int r() const { return r_; }

  const std::vector<Row>& rows() const { return rows_; }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::uint8_t at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// Column j read down the steps.
  std::vector<std::uint8_t> column(int j) const;

  /// Row-major flattening, used for the canonical enumeration order.
  std::vector<std::uint8_t> flattened() const;

  std::string to_string() const;

  friend bool operator==(const TypeProfile&, const TypeProfile&) = default;

private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Row> rows_;
};

/// True iff the sequence is a cyclic rotation of (1^k, 0^{len-k}) for some k.
bool is_cyclic_interval(const std::vector<std::uint8_t>& column);

} // namespace localmodel
