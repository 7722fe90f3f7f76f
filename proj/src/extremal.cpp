#include "twomode/extremal.hpp"

#include <string>
#include <vector>

#include "twomode/error.hpp"

namespace twomode {

namespace {

void require_sizes(std::size_t n0, std::size_t n1) {
  if (n0 == 0 || n1 == 0) {
    throw Error(ErrorKind::InvalidSize, "part sizes must be positive, got (" +
                                            std::to_string(n0) + "," +
                                            std::to_string(n1) + ")");
  }
}

Rational frac(std::uint64_t num, std::uint64_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

ExtremalParams extremal_params(std::size_t n0, std::size_t n1) {
  require_sizes(n0, n1);
  ExtremalParams params;
  params.n0 = n0;
  params.n1 = n1;
  params.m = n0 - 1;
  params.p = params.m / n1;
  params.r = params.m % n1;
  return params;
}

ExtremalTree build_extremal_tree(std::size_t n0, std::size_t n1) {
  const auto params = extremal_params(n0, n1);
  const std::size_t n = n0 + n1;

  std::vector<Part> parts(n, Part::A0);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (NodeId spoke = 1; spoke <= n1; ++spoke) {
    parts[spoke] = Part::A1;
    edges.emplace_back(0, spoke);
  }
  for (std::size_t k = 1; k <= params.m; ++k) {
    edges.emplace_back((k - 1) % n1 + 1, n1 + k);
  }
  std::vector<std::string> labels(n);
  for (NodeId v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return {BipartiteGraph(std::move(parts), edges, std::move(labels)), 0};
}

std::uint64_t closed_form_root_distance(std::size_t n0, std::size_t n1) {
  const auto params = extremal_params(n0, n1);
  return n1 + 2 * params.m;
}

WProfile closed_form_w_profile(std::size_t n0, std::size_t n1) {
  const auto params = extremal_params(n0, n1);
  const std::uint64_t m = params.m;
  WProfile profile;
  profile[n1 + 2 * m] += 1;

  // A spoke with c leaves: its c leaves and the root at 1, the other spokes
  // at 2, every other leaf at 3.
  const auto spoke_w = [&](std::uint64_t c) { return c + 1 + 2 * (n1 - 1) + 3 * (m - c); };
  // A leaf whose spoke has c leaves: spoke at 1, root and siblings at 2,
  // other spokes at 3, other leaves at 4.
  const auto leaf_w = [&](std::uint64_t c) {
    return 1 + 2 * c + 3 * (n1 - 1) + 4 * (m - c);
  };

  const std::uint64_t heavy = params.ceil_share();
  const std::uint64_t light = params.floor_share();
  if (params.r > 0) {
    profile[spoke_w(heavy)] += params.r;
    if (heavy > 0) profile[leaf_w(heavy)] += params.r * heavy;
  }
  profile[spoke_w(light)] += n1 - params.r;
  if (light > 0) profile[leaf_w(light)] += (n1 - params.r) * light;
  return profile;
}

WProfile w_profile(const Graph& g) {
  WProfile profile;
  for (std::uint64_t w : total_distances(g)) profile[w] += 1;
  return profile;
}

Rational closed_form_centralization(std::size_t n0, std::size_t n1) {
  const std::uint64_t n = n0 + n1;
  const std::uint64_t root_w = closed_form_root_distance(n0, n1);
  Rational value = frac(n, root_w);
  for (auto [w, count] : closed_form_w_profile(n0, n1)) value -= frac(count, w);
  return value;
}

Rational closed_form_centralization_reduced(std::size_t n0, std::size_t n1) {
  const auto params = extremal_params(n0, n1);
  if (params.r == 0) {
    throw Error(ErrorKind::InvalidSize, "reduced closed form needs r > 0");
  }
  const auto k = static_cast<std::int64_t>(n1);
  const auto m = static_cast<std::int64_t>(params.m);
  const auto r = static_cast<std::int64_t>(params.r);
  return Rational(k + m, k + 2 * m) -
         Rational(r * k, 3 * m * k - 2 * m + 2 * k * k - 3 * k + 2 * r) -
         Rational(k * (k - r), 3 * m * k - 2 * m + 2 * k * k - k + 2 * r) -
         Rational(r * (m + k - r), 4 * m * k - 2 * m + 3 * k * k - 4 * k + 2 * r) -
         Rational((k - r) * (m - r), 4 * m * k - 2 * m + 3 * k * k - 2 * k + 2 * r);
}

Rational lower_bound(std::size_t n1) {
  require_sizes(1, n1);
  const auto k = static_cast<std::int64_t>(n1);
  return Rational(k - 1, 2 * (2 * k - 1));
}

Rational asymptotic_limit(std::size_t n1) {
  require_sizes(1, n1);
  const auto k = static_cast<std::int64_t>(n1);
  return Rational(k - 1, 4 * k - 2);
}

}  // namespace twomode
