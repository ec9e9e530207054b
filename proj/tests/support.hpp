#ifndef VEECH_TESTS_SUPPORT_HPP
#define VEECH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "veech/complex.hpp"
#include "veech/perm.hpp"
#include "veech/twist.hpp"

namespace test {

inline std::optional<veech::PermutationPair> parse_pair(const std::string &r, const std::string &r_down)
{
  try {
    const veech::Perm a = veech::parse_cycles(r);
    const veech::Perm b = veech::parse_cycles(r_down);
    const int n = std::max(a.size(), b.size());
    return veech::PermutationPair(veech::parse_cycles(r, n), veech::parse_cycles(r_down, n));
  } catch (const std::invalid_argument &) {
    return std::nullopt;
  }
}

inline veech::TwistVector parse_tuple(const std::string &text)
{
  veech::TwistVector out;
  std::string digits;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits += c;
    } else if (!digits.empty()) {
      out.push_back(std::stoi(digits));
      digits.clear();
    }
  }
  if (!digits.empty())
    out.push_back(std::stoi(digits));
  return out;
}

inline veech::Perm random_perm(int n, std::mt19937 &rng)
{
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    images[static_cast<std::size_t>(i)] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return veech::Perm(images);
}

/// Random transitive pair on n points.
inline veech::PermutationPair random_transitive_pair(int n, std::mt19937 &rng)
{
  for (;;) {
    veech::PermutationPair p(random_perm(n, rng), random_perm(n, rng));
    if (veech::is_transitive(p))
      return p;
  }
}

/// "D,value" CSV rows.
inline std::map<long long, double> read_fixture(const std::string &path)
{
  std::ifstream in(path);
  std::map<long long, double> out;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string d, v;
    std::getline(row, d, ',');
    std::getline(row, v);
    out[std::stoll(d)] = std::stod(v);
  }
  return out;
}

// (A, V, H, D) up to reordering cylinders of equal length: for each row
// order within the equal-length blocks, sort the columns within theirs and
// keep the least column-major encoding.
inline std::vector<int> tuple_form(const veech::RectangleComplex &cx)
{
  const auto rows = cx.h_sizes(), cols = cx.v_sizes();
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best;
  const auto next_within_blocks = [&]() {
    for (std::size_t end = rows.size(); end > 0;) {
      std::size_t begin = end - 1;
      while (begin > 0 && rows[begin - 1] == rows[end - 1])
        --begin;
      if (std::next_permutation(order.begin() + static_cast<long>(begin), order.begin() + static_cast<long>(end)))
        return true;
      end = begin;
    }
    return false;
  };
  do {
    std::vector<std::vector<int>> columns;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      std::vector<int> col{cols[j]};
      for (int i : order)
        for (const veech::IntMatrix *m : {&cx.A, &cx.V, &cx.H, &cx.D})
          col.push_back((*m)(i, static_cast<Eigen::Index>(j)));
      columns.push_back(std::move(col));
    }
    for (std::size_t end = cols.size(); end > 0;) {
      std::size_t begin = end - 1;
      while (begin > 0 && cols[begin - 1] == cols[end - 1])
        --begin;
      std::sort(columns.begin() + static_cast<long>(begin), columns.begin() + static_cast<long>(end));
      end = begin;
    }
    std::vector<int> flat;
    for (const auto &c : columns)
      flat.insert(flat.end(), c.begin(), c.end());
    if (best.empty() || flat < best)
      best = std::move(flat);
  } while (next_within_blocks());
  return best;
}

} // namespace test

#endif // VEECH_TESTS_SUPPORT_HPP
