#include "veech/perm.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace veech {

Perm::Perm(int n)
{
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("Perm: size out of range");
  size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i)
    images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Perm::Perm(std::span<const int> images)
{
  const auto n = static_cast<int>(images.size());
  if (n > kMaxPoints)
    throw std::invalid_argument("Perm: too many points");
  std::array<bool, kMaxPoints> seen{};
  for (int i = 0; i < n; ++i) {
    const int x = images[static_cast<std::size_t>(i)];
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("Perm: images are not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
    images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
  size_ = static_cast<std::uint8_t>(n);
}

Perm::Perm(std::initializer_list<int> images)
: Perm(std::span<const int>(images.begin(), images.size()))
{}

Perm Perm::from_raw(const std::uint8_t *images, int n)
{
  Perm p;
  std::copy(images, images + n, p.images_.begin());
  p.size_ = static_cast<std::uint8_t>(n);
  return p;
}

Perm Perm::inverse() const
{
  Perm q;
  q.size_ = size_;
  for (int i = 0; i < size_; ++i) {
    const std::size_t j = images_[static_cast<std::size_t>(i)];
    if (j < images_.size())
      q.images_[j] = static_cast<std::uint8_t>(i);
  }
  return q;
}

bool Perm::is_identity() const
{
  for (int i = 0; i < size_; ++i)
    if (images_[static_cast<std::size_t>(i)] != i)
      return false;
  return true;
}

Perm operator*(const Perm &a, const Perm &b)
{
  if (a.size_ != b.size_)
    throw std::invalid_argument("Perm: size mismatch in composition");
  Perm c;
  c.size_ = a.size_;
  for (int i = 0; i < a.size_; ++i)
    c.images_[static_cast<std::size_t>(i)] = a.images_[b.images_[static_cast<std::size_t>(i)]];
  return c;
}

std::vector<int> Perm::images() const
{
  return {images_.begin(), images_.begin() + size_};
}

PermutationPair::PermutationPair(Perm right, Perm down)
: r(right), r_down(down)
{
  if (r.size() != r_down.size())
    throw std::invalid_argument("PermutationPair: permutations act on different sets");
}

std::vector<Cycle> cycle_decomposition(const Perm &p)
{
  std::vector<Cycle> cycles;
  std::array<bool, kMaxPoints> seen{};
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    Cycle c;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<int> cycle_type(const Perm &p)
{
  std::vector<int> lengths;
  std::array<bool, kMaxPoints> seen{};
  for (int i = 0; i < p.size(); ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

bool is_transitive(const PermutationPair &pair)
{
  const int n = pair.size();
  if (n == 0)
    return false;
  std::array<bool, kMaxPoints> seen{};
  std::array<int, kMaxPoints> stack{};
  int top = 0, reached = 1;
  stack[static_cast<std::size_t>(top++)] = 0;
  seen[0] = true;
  while (top > 0) {
    const int u = stack[static_cast<std::size_t>(--top)];
    for (const int x : {pair.r(u), pair.r_down(u)}) {
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        stack[static_cast<std::size_t>(top++)] = x;
        ++reached;
      }
    }
  }
  return reached == n;
}

PermutationPair conjugate(const PermutationPair &pair, const Perm &sigma)
{
  const int n = pair.size();
  if (sigma.size() != n)
    throw std::invalid_argument("conjugate: size mismatch");
  std::array<std::uint8_t, kMaxPoints> r{}, d{};
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(sigma(i))] = static_cast<std::uint8_t>(sigma(pair.r(i)));
    d[static_cast<std::size_t>(sigma(i))] = static_cast<std::uint8_t>(sigma(pair.r_down(i)));
  }
  return {Perm::from_raw(r.data(), n), Perm::from_raw(d.data(), n)};
}

namespace {

// Breadth-first relabelling from `seed`. Returns false as soon as the
// relabelled r is lexicographically greater than `best_r` (when given).
// On success fills r_out/d_out/labels and reports the comparison result.
struct Relabelling
{
  std::array<std::uint8_t, kMaxPoints> r{};
  std::array<std::uint8_t, kMaxPoints> d{};
  std::array<std::uint8_t, kMaxPoints> labels{};
};

// -1: smaller than best, 0: equal, 1: greater (aborted early)
int relabel_from(const PermutationPair &pair, int seed, const Relabelling *best, Relabelling &out)
{
  const int n = pair.size();
  std::array<int, kMaxPoints> order{};
  std::array<std::int8_t, kMaxPoints> label;
  label.fill(-1);
  label[static_cast<std::size_t>(seed)] = 0;
  order[0] = seed;
  int next = 1;
  int cmp = best ? 0 : -1;
  for (int pos = 0; pos < n; ++pos) {
    if (pos >= next)
      throw std::invalid_argument("canonical_form: pair is not transitive");
    const int u = order[static_cast<std::size_t>(pos)];
    const int ru = pair.r(u);
    if (label[static_cast<std::size_t>(ru)] < 0) {
      label[static_cast<std::size_t>(ru)] = static_cast<std::int8_t>(next);
      order[static_cast<std::size_t>(next++)] = ru;
    }
    const int du = pair.r_down(u);
    if (label[static_cast<std::size_t>(du)] < 0) {
      label[static_cast<std::size_t>(du)] = static_cast<std::int8_t>(next);
      order[static_cast<std::size_t>(next++)] = du;
    }
    const auto rv = static_cast<std::uint8_t>(label[static_cast<std::size_t>(ru)]);
    out.r[static_cast<std::size_t>(pos)] = rv;
    out.d[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(label[static_cast<std::size_t>(du)]);
    if (cmp == 0) {
      if (rv < best->r[static_cast<std::size_t>(pos)])
        cmp = -1;
      else if (rv > best->r[static_cast<std::size_t>(pos)])
        return 1;
    }
  }
  for (int i = 0; i < n; ++i)
    out.labels[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = static_cast<std::uint8_t>(i);
  if (cmp == 0) {
    for (int i = 0; i < n; ++i) {
      if (out.d[static_cast<std::size_t>(i)] != best->d[static_cast<std::size_t>(i)])
        return out.d[static_cast<std::size_t>(i)] < best->d[static_cast<std::size_t>(i)] ? -1 : 1;
    }
  }
  return cmp;
}

} // namespace

CanonicalForm canonical_form(const PermutationPair &pair)
{
  const int n = pair.size();
  if (n == 0)
    throw std::invalid_argument("canonical_form: empty pair");
  Relabelling best, trial;
  relabel_from(pair, 0, nullptr, best);
  for (int seed = 1; seed < n; ++seed) {
    if (relabel_from(pair, seed, &best, trial) < 0)
      best = trial;
  }
  return {PermutationPair(Perm::from_raw(best.r.data(), n), Perm::from_raw(best.d.data(), n)),
          Perm::from_raw(best.labels.data(), n)};
}

PermutationPair canonical_pair(const PermutationPair &pair)
{
  return canonical_form(pair).pair;
}

bool are_conjugate(const PermutationPair &a, const PermutationPair &b)
{
  const int n = a.size();
  if (b.size() != n)
    return false;
  for (int x = 0; x < n; ++x) {
    std::array<std::int8_t, kMaxPoints> sigma;
    sigma.fill(-1);
    std::array<int, kMaxPoints> queue{};
    int head = 0, tail = 0;
    sigma[0] = static_cast<std::int8_t>(x);
    queue[static_cast<std::size_t>(tail++)] = 0;
    bool ok = true;
    while (ok && head < tail) {
      const int u = queue[static_cast<std::size_t>(head++)];
      const int su = sigma[static_cast<std::size_t>(u)];
      const std::pair<int, int> steps[2] = {{a.r(u), b.r(su)}, {a.r_down(u), b.r_down(su)}};
      for (const auto &[from, to] : steps) {
        if (sigma[static_cast<std::size_t>(from)] < 0) {
          sigma[static_cast<std::size_t>(from)] = static_cast<std::int8_t>(to);
          queue[static_cast<std::size_t>(tail++)] = from;
        } else if (sigma[static_cast<std::size_t>(from)] != to) {
          ok = false;
          break;
        }
      }
    }
    if (!ok || tail != n)
      continue;
    std::array<bool, kMaxPoints> hit{};
    for (int i = 0; i < n && ok; ++i) {
      if (hit[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])])
        ok = false;
      hit[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = true;
    }
    if (ok)
      return true;
  }
  return false;
}

Perm parse_cycles(std::string_view text, int n)
{
  std::vector<Cycle> cycles;
  Cycle current;
  bool open = false;
  int max_label = -1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (open)
        throw std::invalid_argument("parse_cycles: nested '('");
      open = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      if (!open)
        throw std::invalid_argument("parse_cycles: unmatched ')'");
      open = false;
      cycles.push_back(current);
      ++i;
    } else if (c >= '0' && c <= '9') {
      if (!open)
        throw std::invalid_argument("parse_cycles: label outside a cycle");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc())
        throw std::invalid_argument("parse_cycles: bad label");
      i = static_cast<std::size_t>(ptr - text.data());
      current.push_back(value);
      max_label = std::max(max_label, value);
    } else if (c == ',' || c == ' ' || c == '\t') {
      ++i;
    } else {
      throw std::invalid_argument(std::string("parse_cycles: unexpected character '") + c + "'");
    }
  }
  if (open)
    throw std::invalid_argument("parse_cycles: unterminated cycle");
  if (n == 0)
    n = max_label + 1;
  if (max_label >= n || n > kMaxPoints)
    throw std::invalid_argument("parse_cycles: label out of range");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto &cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[static_cast<std::size_t>(cyc[k])])
        throw std::invalid_argument("parse_cycles: label " + std::to_string(cyc[k]) + " repeated");
      used[static_cast<std::size_t>(cyc[k])] = true;
      images[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    }
  }
  return Perm(std::span<const int>(images));
}

std::string format_cycles(const Perm &p)
{
  std::string out;
  for (const auto &c : cycle_decomposition(p)) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

Perm permutation_of_type(std::span<const int> lengths)
{
  std::vector<int> images;
  int base = 0;
  for (const int len : lengths) {
    for (int k = 0; k < len; ++k)
      images.push_back(base + (k + 1) % len);
    base += len;
  }
  return Perm(std::span<const int>(images));
}

std::vector<std::vector<int>> partitions(int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::size_t factorial(int n)
{
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t permutation_rank(const Perm &p)
{
  const int n = p.size();
  std::size_t rank = 0;
  std::array<bool, kMaxPoints> used{};
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int v = 0; v < p(i); ++v)
      if (!used[static_cast<std::size_t>(v)])
        ++smaller;
    used[static_cast<std::size_t>(p(i))] = true;
    rank = rank * static_cast<std::size_t>(n - i) + static_cast<std::size_t>(smaller);
  }
  return rank;
}

CycleTypeTable::CycleTypeTable(int n)
: n_(n), types_(partitions(n))
{
  if (n < 1 || n > 10)
    throw std::invalid_argument("CycleTypeTable: supported for 1 <= n <= 10");
  std::map<std::vector<int>, int> index;
  for (std::size_t t = 0; t < types_.size(); ++t)
    index.emplace(types_[t], static_cast<int>(t));
  table_.resize(factorial(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::size_t rank = 0;
  do {
    table_[rank++] = static_cast<std::uint8_t>(index.at(cycle_type(Perm(std::span<const int>(images)))));
  } while (std::next_permutation(images.begin(), images.end()));
}

int CycleTypeTable::type_of(const Perm &p) const
{
  if (p.size() != n_)
    throw std::invalid_argument("CycleTypeTable: size mismatch");
  return table_[permutation_rank(p)];
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
  std::size_t h = static_cast<std::size_t>(p.size());
  for (int i = 0; i < p.size(); ++i)
    h = h * 131u + p(i);
  return h;
}

std::size_t PairHash::operator()(const PermutationPair &p) const noexcept
{
  return PermHash{}(p.r) * 1000003u ^ PermHash{}(p.r_down);
}

} // namespace veech
