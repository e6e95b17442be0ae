#include "sandwich/kernels.hpp"

#include <omp.h>

#include <deque>
#include <unordered_map>

namespace sandwich {

namespace {

void check_generators(std::span<const GroupElement> gens) {
  for (const auto& g : gens)
    if (g.dim() != gens.front().dim()) throw std::invalid_argument("group_closure: generator dimensions differ");
  if (gens.size() > std::numeric_limits<std::uint16_t>::max())
    throw std::invalid_argument("group_closure: too many generators");
}

GroupElement closure_identity(std::span<const GroupElement> gens, const ClosureOptions& opts) {
  if (gens.empty()) return GroupElement::identity(opts.dimension, opts.domain);
  return GroupElement::identity(gens.front().dim(), gens.front().domain());
}

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw ClosureCapExceeded("group closure exceeded the element cap of " + std::to_string(cap) +
                           " (input may generate an infinite group)");
}

}  // namespace

FiniteGroup group_closure(std::span<const GroupElement> gens, const ClosureOptions& opts) {
  check_generators(gens);
  std::vector<GroupElement> elements{closure_identity(gens, opts)};
  std::vector<std::vector<std::uint16_t>> words{{}};
  std::unordered_map<std::string, std::uint32_t> seen{{elements.front().key(), 0}};

  std::vector<std::uint32_t> frontier{0};
  const std::size_t ng = gens.size();
  while (!frontier.empty() && ng > 0) {
    const auto total = static_cast<std::int64_t>(frontier.size() * ng);
    std::vector<GroupElement> products(frontier.size() * ng);
    parallel_for(static_cast<std::size_t>(total), [&](std::size_t u) {
      products[u] = element_multiply(elements[frontier[u / ng]], gens[u % ng]);
    });

    std::vector<std::uint32_t> next;
    for (std::size_t k = 0; k < products.size(); ++k) {
      auto& p = products[k];
      if (seen.count(p.key())) continue;
      const auto idx = static_cast<std::uint32_t>(elements.size());
      seen.emplace(p.key(), idx);
      auto w = words[frontier[k / ng]];
      w.push_back(static_cast<std::uint16_t>(k % ng));
      words.push_back(std::move(w));
      elements.push_back(std::move(p));
      next.push_back(idx);
      if (elements.size() > opts.cap) cap_exceeded(opts.cap);
    }
    std::sort(next.begin(), next.end(),
              [&](std::uint32_t a, std::uint32_t b) { return elements[a].key() < elements[b].key(); });
    frontier = std::move(next);
  }
  return FiniteGroup(std::move(elements), {gens.begin(), gens.end()}, std::move(words));
}

FiniteGroup group_closure_serial(std::span<const GroupElement> gens, const ClosureOptions& opts) {
  check_generators(gens);
  std::vector<GroupElement> elements{closure_identity(gens, opts)};
  std::vector<std::vector<std::uint16_t>> words(1);
  std::unordered_map<std::string, std::size_t> seen{{elements.front().key(), 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      GroupElement p = element_multiply(elements[cur], gens[k]);
      if (seen.count(p.key())) continue;
      seen.emplace(p.key(), elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(p));
      words.push_back(words[cur]);
      words.back().push_back(static_cast<std::uint16_t>(k));
      if (elements.size() > opts.cap) cap_exceeded(opts.cap);
    }
  }
  return FiniteGroup(std::move(elements), {gens.begin(), gens.end()}, std::move(words));
}

std::vector<std::uint32_t> multiplication_table(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> table(n * n, kNotInGroup);
  parallel_for(n, [&](std::size_t u) {
    for (std::size_t j = 0; j < n; ++j) {
      auto k = g.index_of(element_multiply(g[u], g[j]).key());
      if (k) table[u * n + j] = static_cast<std::uint32_t>(*k);
    }
  });
  return table;
}

std::vector<std::uint32_t> multiplication_table_serial(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> table(n * n, kNotInGroup);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto k = g.index_of(element_multiply(g[i], g[j]).key());
      if (k) table[i * n + j] = static_cast<std::uint32_t>(*k);
    }
  return table;
}

namespace {

RatVec beta_at(const RootSet& m, std::size_t b) { return b < m.size() ? m[b] : RatVec(m.dim()); }

void fill_killing_row(const RootSet& m, KillingTable& t, std::size_t b) {
  RatVec beta = beta_at(m, b);
  for (std::size_t a = 0; a < t.n; ++a) {
    Chain c = root_chain(m, beta, m[a]);
    t.q[b * t.n + a] = c.q;
    t.p[b * t.n + a] = c.p;
    t.values[b * t.n + a] = c.q - c.p;
  }
}

KillingTable empty_killing(const RootSet& m) {
  KillingTable t;
  t.n = m.size();
  t.values.assign((t.n + 1) * t.n, 0);
  t.q = t.values;
  t.p = t.values;
  return t;
}

}  // namespace

KillingTable killing_table(const RootSet& membership) {
  KillingTable t = empty_killing(membership);
  parallel_for(t.n + 1, [&](std::size_t b) { fill_killing_row(membership, t, b); });
  return t;
}

KillingTable killing_table_serial(const RootSet& membership) {
  KillingTable t = empty_killing(membership);
  for (std::size_t b = 0; b <= t.n; ++b) fill_killing_row(membership, t, b);
  return t;
}

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace sandwich
