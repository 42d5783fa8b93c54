#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "efl/classify.hpp"
#include "efl/hypergraph.hpp"

namespace efl {

// ---------------------------------------------------------------------------
// Seeded randomness
//
// Every random instance is a pure function of (parameters, seed). The engine
// is std::mt19937_64, whose output sequence is fixed by the C++ standard.
// Bounded draws use rejection sampling on the raw 64-bit outputs rather than
// std::uniform_int_distribution, whose algorithm is implementation-defined.
// Per-attempt seeds in streams are derived with SplitMix64.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the index-th instance drawn from a stream rooted at `seed`.
constexpr std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// True with probability numerator/denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) { return below(denominator) < numerator; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Deterministic constructions

constexpr bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

/// Dual of the affine plane AG(2, q), q prime.
///
/// Vertices are the q^2 + q lines: y = m*x + b has id m*q + b, and the
/// vertical x = c has id q^2 + c. Edges are the q^2 points; point (x, y) has
/// index x*q + y and holds the q + 1 lines through it. Every vertex has
/// degree q, and any two edges meet in exactly one vertex.
inline Hypergraph dual_affine_plane(std::size_t q) {
  if (!is_prime(q)) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not prime");
  std::vector<Edge> edges;
  edges.reserve(q * q);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      Edge lines;
      for (std::size_t m = 0; m < q; ++m) {
        const std::size_t b = (y + q * q - (m * x) % q) % q;
        lines.push_back(m * q + b);
      }
      lines.push_back(q * q + x);
      edges.push_back(std::move(lines));
    }
  return Hypergraph::build(q * q + q, std::move(edges));
}

/// n edges through vertex 0, each padded with n-1 private vertices.
inline Hypergraph pencil(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "pencil needs n >= 1");
  if (n == 1) return Hypergraph::build(1, {{0}});
  std::vector<Edge> edges(n);
  VertexId next = 1;
  for (auto& edge : edges) {
    edge.push_back(0);
    for (std::size_t j = 1; j < n; ++j) edge.push_back(next++);
  }
  return Hypergraph::build(next, std::move(edges));
}

// ---------------------------------------------------------------------------
// Random linear n-uniform instances

// Reuse probabilities. Vertices already on two or more edges are reused
// often and degree-1 vertices rarely, so degrees concentrate on a few hubs
// and most instances stay weakly dense.
inline constexpr std::uint64_t kHubReuseNumerator = 3;
inline constexpr std::uint64_t kHubReuseDenominator = 4;
inline constexpr std::uint64_t kLeafReuseNumerator = 2;  // over n^2

/// n edges of size n, built one at a time. Each new edge scans the existing
/// vertices by degree (highest first, random order within a degree) and
/// takes a vertex with probability 3/4 if its degree is at least 2, or 2/n^2
/// if its degree is 1, provided it shares no earlier edge with a vertex
/// already taken. The rest of the edge is fresh vertices. The result is
/// always linear and n-uniform.
inline Hypergraph random_linear_uniform(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolated, "random_linear_uniform needs n >= 2");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeId>> incidence;

  for (EdgeId e = 0; e < n; ++e) {
    std::vector<VertexId> candidates(incidence.size());
    for (VertexId v = 0; v < candidates.size(); ++v) candidates[v] = v;
    rng.shuffle(candidates);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](VertexId a, VertexId b) { return incidence[a].size() > incidence[b].size(); });

    Edge edge;
    std::vector<bool> blocked(e, false);  // earlier edges already met by this one
    for (VertexId v : candidates) {
      if (edge.size() == n) break;
      const auto& inc = incidence[v];
      const bool take = inc.size() >= 2 ? rng.chance(kHubReuseNumerator, kHubReuseDenominator)
                                        : rng.chance(kLeafReuseNumerator, n * n);
      if (!take) continue;
      if (std::any_of(inc.begin(), inc.end(), [&](EdgeId f) { return blocked[f]; })) continue;
      for (EdgeId f : inc) blocked[f] = true;
      edge.push_back(v);
    }
    while (edge.size() < n) {
      edge.push_back(incidence.size());
      incidence.emplace_back();
    }
    for (VertexId v : edge) incidence[v].push_back(e);
    std::sort(edge.begin(), edge.end());
    edges.push_back(std::move(edge));
  }
  return Hypergraph::build(incidence.size(), std::move(edges));
}

inline constexpr std::size_t kDefaultStreamAttempts = 1'000'000;

struct StreamResult {
  std::vector<Hypergraph> instances;
  std::vector<std::uint64_t> seeds;  // seed each instance was generated from
  std::size_t attempts = 0;
  std::size_t rejected = 0;
};

/// First `count` weakly dense instances among random_linear_uniform(n, s_i)
/// with s_i = derived_seed(seed, i), i = 0, 1, ...
inline StreamResult weakly_dense_stream(std::size_t n, std::uint64_t seed, std::size_t count,
                                        std::size_t max_attempts = kDefaultStreamAttempts) {
  if (n < 2 || count == 0) throw Error(ErrorCode::PreconditionViolated, "weakly_dense_stream needs n >= 2, count >= 1");
  StreamResult out;
  while (out.instances.size() < count) {
    if (out.attempts == max_attempts)
      throw Error(ErrorCode::ExhaustedAttempts, "found " + std::to_string(out.instances.size()) + " of " +
                                                    std::to_string(count) + " instances in " +
                                                    std::to_string(max_attempts) + " attempts");
    const auto s = derived_seed(seed, out.attempts++);
    auto h = random_linear_uniform(n, s);
    if (density_report(h, n).weakly_dense) {
      out.instances.push_back(std::move(h));
      out.seeds.push_back(s);
    } else {
      ++out.rejected;
    }
  }
  return out;
}

}  // namespace efl
