#include "procat/fincat/finite_poset.hpp"

#include <algorithm>

#include "procat/error.hpp"

namespace procat::fincat {

FinitePoset::FinitePoset(std::size_t n) : n_(n), leq_(n * n, false) {
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
}

FinitePoset::FinitePoset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less_pairs)
    : FinitePoset(n) {
  for (auto [u, v] : less_pairs) {
    require(u < n && v < n, ErrorKind::kInvalidArgument, "poset pair out of range");
    leq_[u * n + v] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(!(leq_[i * n + j] && leq_[j * n + i]), ErrorKind::kInvalidArgument, "poset relation has a cycle");
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return FinitePoset(n, pairs);
}

std::vector<std::size_t> FinitePoset::strictly_below(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (less(u, v)) out.push_back(u);
  return out;
}

std::vector<std::size_t> FinitePoset::strictly_above(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < n_; ++u)
    if (less(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v) {
      if (!less(u, v)) continue;
      bool covered = true;
      for (std::size_t w = 0; w < n_ && covered; ++w)
        if (less(u, w) && less(w, v)) covered = false;
      if (covered) out.emplace_back(u, v);
    }
  return out;
}

std::size_t FinitePoset::degree(std::size_t v) const {
  require(v < n_, ErrorKind::kInvalidArgument, "degree: element out of range");
  // Longest strict chain ending at v; elements below v have strictly smaller degree.
  std::vector<long> memo(n_, -1);
  auto rec = [&](auto&& self, std::size_t x) -> std::size_t {
    if (memo[x] >= 0) return static_cast<std::size_t>(memo[x]);
    std::size_t best = 0;
    for (std::size_t u = 0; u < n_; ++u)
      if (less(u, x)) best = std::max(best, self(self, u) + 1);
    memo[x] = static_cast<long>(best);
    return best;
  };
  return rec(rec, v);
}

std::vector<std::size_t> FinitePoset::degree_section(long n) const {
  std::vector<std::size_t> out;
  if (n < 0) return out;
  for (std::size_t v = 0; v < n_; ++v)
    if (static_cast<long>(degree(v)) <= n) out.push_back(v);
  return out;
}

std::vector<std::size_t> FinitePoset::degree_order() const {
  std::vector<std::pair<std::size_t, std::size_t>> keyed;
  for (std::size_t v = 0; v < n_; ++v) keyed.emplace_back(degree(v), v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (auto& [d, v] : keyed) out.push_back(v);
  return out;
}

bool FinitePoset::is_section(const std::vector<std::size_t>& subset) const {
  std::vector<bool> in(n_, false);
  for (std::size_t v : subset) {
    if (v >= n_) return false;
    in[v] = true;
  }
  for (std::size_t v : subset)
    for (std::size_t u = 0; u < n_; ++u)
      if (leq(u, v) && !in[u]) return false;
  return true;
}

std::vector<std::vector<std::size_t>> FinitePoset::sections() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> order = degree_order();
  std::vector<bool> in(n_, false);
  std::vector<std::size_t> current;
  // Decide elements in degree order; an element may join only if its whole down-set already has.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      std::vector<std::size_t> s = current;
      std::sort(s.begin(), s.end());
      out.push_back(std::move(s));
      return;
    }
    self(self, pos + 1);
    std::size_t v = order[pos];
    bool allowed = true;
    for (std::size_t u = 0; u < n_ && allowed; ++u)
      if (less(u, v) && !in[u]) allowed = false;
    if (allowed) {
      in[v] = true;
      current.push_back(v);
      self(self, pos + 1);
      current.pop_back();
      in[v] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset FinitePoset::cone_extend() const {
  FinitePoset out(n_ + 1);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v) out.leq_[u * (n_ + 1) + v] = leq(u, v);
  for (std::size_t u = 0; u < n_; ++u) out.leq_[u * (n_ + 1) + n_] = true;
  return out;
}

}  // namespace procat::fincat
