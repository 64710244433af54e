#ifndef GRASSCALC_PARTITION_HPP
#define GRASSCALC_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grasscalc {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction, so equality is structural.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // i is 0-based; parts beyond length() read as 0.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool fits_box(int rows, int cols) const;

  // Canonical text form: parts joined by ','; the empty partition is "0".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// "2,1;1,1" -> [(2,1), (1,1)]. Spaces around parts are tolerated.
std::vector<Partition> parse_class_list(std::string_view text);
std::string render_class_list(std::span<const Partition> classes);

}  // namespace grasscalc

#endif
