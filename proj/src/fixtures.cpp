#include "fusionkit/fixtures.hpp"

#include <algorithm>
#include <cctype>

#include "fusionkit/errors.hpp"

namespace fusionkit {

SparseRow parse_product(const std::string& text, const std::vector<std::string>& names) {
  std::map<std::size_t, Label> terms;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_space();
    Label coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) coeff = coeff * 10 + (text[pos++] - '0');
      if (coeff == 0) throw ParseError("zero coefficient in '" + text + "'", pos - 1);
    }
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '[' in '" + text + "'", pos);
    const std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw ParseError("unterminated label in '" + text + "'", pos);
    const std::string name = text.substr(pos + 1, close - pos - 1);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ParseError("unknown label [" + name + "]", pos);
    terms[static_cast<std::size_t>(it - names.begin())] += coeff;
    pos = close + 1;
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '+') throw ParseError("expected '+' in '" + text + "'", pos);
    ++pos;
  }
  return {terms.begin(), terms.end()};
}

std::string format_product(const SparseRow& row, const std::vector<std::string>& names) {
  if (row.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : row) {
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += "[" + names.at(k) + "]";
  }
  return s;
}

NamedTable table_from_upper(std::string caption, std::vector<std::string> names,
                            const std::vector<std::vector<std::string>>& upper) {
  const std::size_t n = names.size();
  if (upper.size() != n) throw std::invalid_argument("upper triangle needs one row per label");
  FusionTable t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (upper[i].size() != n - i) throw std::invalid_argument("upper triangle row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = i; j < n; ++j) {
      SparseRow row = parse_product(upper[i][j - i], names);
      t.set_product(j, i, row);
      t.set_product(i, j, std::move(row));
    }
  }
  return NamedTable{std::move(caption), std::move(names), std::move(t)};
}

namespace fixtures {

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<GroupElement> elems(std::initializer_list<GroupElement> list) { return list; }

}  // namespace

NamedTable a1_level2() {
  return table_from_upper("A1 level 2", numbered(3), {
      {"[0]", "[1]", "[2]"},
      {"[0]", "[2]"},
      {"[0]+[1]"},
  });
}

NamedTable a1_level3() {
  return table_from_upper("A1 level 3", numbered(4), {
      {"[0]", "[1]", "[2]", "[3]"},
      {"[0]", "[3]", "[2]"},
      {"[0]+[2]", "[1]+[3]"},
      {"[0]+[2]"},
  });
}

NamedTable a2_level2() {
  return table_from_upper("A2 level 2", numbered(6), {
      {"[0]", "[1]", "[2]", "[3]", "[4]", "[5]"},
      {"[2]", "[0]", "[4]", "[5]", "[3]"},
      {"[1]", "[5]", "[3]", "[4]"},
      {"[0]+[3]", "[1]+[4]", "[2]+[5]"},
      {"[2]+[5]", "[0]+[3]"},
      {"[1]+[4]"},
  });
}

NamedTable a2_level3_part() {
  return table_from_upper("A2 level 3 (partial)", {"0", "1", "2", "9"}, {
      {"[0]", "[1]", "[2]", "[9]"},
      {"[2]", "[0]", "[9]"},
      {"[1]", "[9]"},
      {"[0]+[1]+[2]+2[9]"},
  });
}

NamedTable b2_level2() {
  return table_from_upper("B2 level 2", numbered(6), {
      {"[0]", "[1]", "[2]", "[3]", "[4]", "[5]"},
      {"[0]", "[3]", "[2]", "[4]", "[5]"},
      {"[0]+[4]+[5]", "[1]+[4]+[5]", "[2]+[3]", "[2]+[3]"},
      {"[0]+[4]+[5]", "[2]+[3]", "[2]+[3]"},
      {"[0]+[1]+[5]", "[4]+[5]"},
      {"[0]+[1]+[4]"},
  });
}

NamedTable w3_11() {
  return table_from_upper("W3(1,1)", numbered(6), {
      {"[0]", "[1]", "[2]", "[3]", "[4]", "[5]"},
      {"[0]+[1]", "[3]", "[2]+[3]", "[5]", "[4]+[5]"},
      {"[4]", "[5]", "[0]", "[1]"},
      {"[4]+[5]", "[1]", "[0]+[1]"},
      {"[2]", "[3]"},
      {"[2]+[3]"},
  });
}

std::vector<Weight> a1_level2_weights() { return {Weight{0}, Weight{2}, Weight{1}}; }
std::vector<Weight> a1_level3_weights() { return {Weight{0}, Weight{3}, Weight{2}, Weight{1}}; }

std::vector<Weight> a2_level2_weights() {
  return {Weight{0, 0}, Weight{2, 0}, Weight{0, 2}, Weight{1, 1}, Weight{0, 1}, Weight{1, 0}};
}

std::vector<Weight> b2_level1_weights() { return {Weight{0, 0}, Weight{0, 1}, Weight{1, 0}}; }

std::vector<Weight> b2_level2_weights() {
  return {Weight{0, 0}, Weight{0, 2}, Weight{1, 0}, Weight{1, 1}, Weight{2, 0}, Weight{0, 1}};
}

std::vector<Weight> a2_level3_weights() {
  // (i_2, i_1, i_0) -> i_1 lambda_1 + i_2 lambda_2
  return {Weight{0, 0}, Weight{3, 0}, Weight{0, 3}, Weight{1, 0}, Weight{2, 1},
          Weight{0, 2}, Weight{2, 0}, Weight{1, 2}, Weight{0, 1}, Weight{1, 1}};
}

std::vector<Weight> a2_level3_part_weights() { return {Weight{0, 0}, Weight{3, 0}, Weight{0, 3}, Weight{1, 1}}; }

FixtureCover a1_level2_cover() {
  GroupPartition p(FiniteAbelianGroup({2, 2}), {
      elems({{0, 0}}),
      elems({{1, 1}}),
      elems({{1, 0}, {0, 1}}),
  });
  return {"Z2^2 covering A1 level 2", std::move(p), a1_level2(), {0, 1, 2}};
}

FixtureCover a1_level3_cover() {
  GroupPartition p(FiniteAbelianGroup({2, 2, 2}), {
      elems({{0, 0, 0}}),
      elems({{1, 1, 1}}),
      elems({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
      elems({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
  });
  return {"Z2^3 covering A1 level 3", std::move(p), a1_level3(), {0, 1, 2, 3}};
}

FixtureCover a2_level2_cover() {
  GroupPartition p(FiniteAbelianGroup({3, 3}), {
      elems({{0, 0}}),
      elems({{1, 1}}),
      elems({{2, 2}}),
      elems({{1, 2}, {2, 1}}),
      elems({{2, 0}, {0, 2}}),
      elems({{1, 0}, {0, 1}}),
  });
  return {"Z3^2 covering A2 level 2", std::move(p), a2_level2(), {0, 1, 2, 3, 4, 5}};
}

FixtureCover w3_11_cover() {
  GroupPartition p(FiniteAbelianGroup({3, 3}), {
      elems({{0, 0}}),
      elems({{1, 2}, {2, 1}}),
      elems({{1, 1}}),
      elems({{0, 2}, {2, 0}}),
      elems({{2, 2}}),
      elems({{1, 0}, {0, 1}}),
  });
  return {"Z3^2 covering W3(1,1)", std::move(p), w3_11(), {0, 1, 2, 3, 4, 5}};
}

}  // namespace fixtures

}  // namespace fusionkit
