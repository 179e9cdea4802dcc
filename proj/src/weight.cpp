#include "fusionkit/weight.hpp"

#include <algorithm>
#include <charconv>

#include "fusionkit/errors.hpp"
#include "fusionkit/linalg.hpp"

namespace fusionkit {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank())
    throw DimensionMismatch("weights of rank " + std::to_string(a.rank()) + " and " +
                            std::to_string(b.rank()) + " combined");
}

}  // namespace

bool Weight::is_zero() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](Label n) { return n == 0; });
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](Label n) { return n >= 0; });
}

bool Weight::is_regular_dominant() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(), [](Label n) { return n > 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] = checked_add(labels_[i], other.labels_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] = checked_add(labels_[i], -other.labels_[i]);
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& n : r.labels_) n = -n;
  return r;
}

Weight& Weight::operator*=(Label scalar) {
  for (auto& n : labels_) n = checked_mul(n, scalar);
  return *this;
}

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(labels_[i]);
  }
  return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ w.rank();
  for (Label n : w) h = (h ^ static_cast<std::size_t>(n)) * 0x100000001b3ull + (h >> 29);
  return h;
}

Weight parse_weight(const std::string& text) {
  std::vector<Label> labels;
  std::size_t pos = 0;
  std::size_t n = text.size();
  while (pos < n && text[pos] == ' ') ++pos;
  while (n > pos && text[n - 1] == ' ') --n;
  if (pos < n && text[pos] == '(') {
    if (text[n - 1] != ')') throw ParseError("unbalanced '('", pos);
    ++pos;
    --n;
  }
  while (true) {
    while (pos < n && text[pos] == ' ') ++pos;
    if (pos >= n) throw ParseError("expected an integer label", pos);
    Label value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + n;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) throw ParseError("expected an integer label", pos);
    labels.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < n && text[pos] == ' ') ++pos;
    if (pos == n) break;
    if (text[pos] != ',') throw ParseError("expected ',' between labels", pos);
    ++pos;
  }
  return Weight(std::move(labels));
}

}  // namespace fusionkit
