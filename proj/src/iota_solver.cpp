#include "lascar/iota_solver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lascar {

std::size_t IotaSystem::add(std::optional<Rational> fixed) {
  fixed_.push_back(std::move(fixed));
  return fixed_.size() - 1;
}

void IotaSystem::relate(std::size_t i, std::size_t j, int sign) {
  if (sign > 0)
    less(i, j);
  else if (sign < 0)
    less(j, i);
  else
    equal(i, j);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// A value in the open interval (lo, hi), either bound possibly absent, not in `used`.
Rational pick(const std::optional<Rational>& lo, const std::optional<Rational>& hi, const std::set<Rational>& used) {
  for (long t = 1;; ++t) {
    Rational v;
    if (lo && hi)
      v = *lo + (*hi - *lo) / (t + 1);
    else if (lo)
      v = *lo + t;
    else if (hi)
      v = *hi - t;
    else
      v = t - 1;
    if (!used.count(v)) return v;
  }
}

}  // namespace

std::optional<std::vector<Rational>> IotaSystem::solve() const {
  const std::size_t n = fixed_.size();
  UnionFind uf(n);
  for (const auto& e : equal_) uf.unite(e.i, e.j);

  std::vector<std::optional<Rational>> value(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!fixed_[v]) continue;
    auto& slot = value[uf.find(v)];
    if (slot && *slot != *fixed_[v]) return std::nullopt;
    slot = fixed_[v];
  }

  std::vector<std::vector<std::size_t>> succ(n), pred(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : strict_) {
    std::size_t a = uf.find(e.i), b = uf.find(e.j);
    if (a == b) return std::nullopt;
    succ[a].push_back(b);
    pred[b].push_back(a);
    ++indegree[b];
  }
  for (const auto& e : distinct_)
    if (uf.find(e.i) == uf.find(e.j)) return std::nullopt;

  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) == v && indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t s : succ[order[head]])
      if (--indegree[s] == 0) order.push_back(s);
  std::size_t roots = 0;
  for (std::size_t v = 0; v < n; ++v) roots += uf.find(v) == v;
  if (order.size() != roots) return std::nullopt;  // strict cycle

  // Tightest fixed bound reachable below and above each class.
  std::vector<std::optional<Rational>> lower(n), upper(n);
  auto tighten = [](std::optional<Rational>& bound, const std::optional<Rational>& candidate, bool take_max) {
    if (!candidate) return;
    if (!bound || (take_max ? *candidate > *bound : *candidate < *bound)) bound = candidate;
  };
  for (std::size_t v : order)
    for (std::size_t p : pred[v]) tighten(lower[v], value[p] ? value[p] : lower[p], true);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t s : succ[*it]) tighten(upper[*it], value[s] ? value[s] : upper[s], false);
  for (std::size_t v : order)
    if (value[v] && lower[v] && !(*lower[v] < *value[v])) return std::nullopt;

  std::set<Rational> used;
  for (const auto& f : value)
    if (f) used.insert(*f);
  for (std::size_t v : order) {
    if (value[v]) continue;
    std::optional<Rational> lo = lower[v];
    for (std::size_t p : pred[v]) tighten(lo, value[p], true);
    value[v] = pick(lo, upper[v], used);
    used.insert(*value[v]);
  }

  std::vector<Rational> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = *value[uf.find(v)];
  for (const auto& e : distinct_)
    if (out[e.i] == out[e.j]) return std::nullopt;
  return out;
}

}  // namespace lascar
