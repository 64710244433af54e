#include "grasscalc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace grasscalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      throw std::invalid_argument("partition part must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

bool Partition::fits_box(int rows, int cols) const {
  return length() <= rows && part(0) <= cols;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_part(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw std::invalid_argument("bad partition part '" + std::string(tok) +
                                "'");
  return value;
}

template <typename Fn>
void split(std::string_view text, char sep, Fn&& fn) {
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    fn(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  if (trim(text).empty())
    throw std::invalid_argument("empty partition literal");
  std::vector<int> parts;
  split(text, ',', [&](std::string_view tok) { parts.push_back(parse_part(tok)); });
  return Partition(std::move(parts));
}

std::vector<Partition> parse_class_list(std::string_view text) {
  if (trim(text).empty())
    throw std::invalid_argument("empty class list");
  std::vector<Partition> classes;
  split(text, ';',
        [&](std::string_view tok) { classes.push_back(Partition::parse(tok)); });
  return classes;
}

std::string render_class_list(std::span<const Partition> classes) {
  std::string out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += ';';
    out += classes[i].to_string();
  }
  return out;
}

}  // namespace grasscalc
