#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordlip/extension.hpp"
#include "ordlip/radiality.hpp"

namespace ordlip {

namespace detail {

inline MetricPoset build_checked(const Matrix& dist, std::vector<std::vector<bool>> geq, bool closure,
                                 std::vector<std::string> labels, const Context& ctx) {
  auto mv = validate_metric(dist, ctx);
  if (!mv.ok()) throw Error(Errc::InvalidMetric, "generated distance matrix failed validation");
  auto ov = validate_order(std::move(geq), closure, ctx);
  if (!ov.ok()) throw Error(Errc::InvalidOrder, "generated order relation failed validation");
  return make_metric_poset(std::move(*mv.metric), std::move(*ov.order), std::move(labels));
}

inline std::string short_number(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace detail

// Four points, x1 above the incomparable pair x2, x3, all above x4. The metric
// is parametric; it is valid iff min{a, 1-a} >= b/2 and radial iff
// min{a, 1-a} >= b, which makes this the workhorse for regime tests.
inline MetricPoset gen_example1(double a, double b, const Context& ctx = {}) {
  if (!(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0))
    throw Error(Errc::InvalidMetricParams, "parameters must lie in (0,1)");
  const Matrix dist = {{0.0, a, a, 1.0},
                       {a, 0.0, b, 1.0 - a},
                       {a, b, 0.0, 1.0 - a},
                       {1.0, 1.0 - a, 1.0 - a, 0.0}};
  auto mv = validate_metric(dist, ctx);
  if (!mv.ok())
    throw Error(Errc::InvalidMetricParams, "min{a,1-a} < b/2: the parametric matrix is not a metric");
  auto ov = order_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, true, ctx);
  return make_metric_poset(std::move(*mv.metric), std::move(*ov.order), {"x1", "x2", "x3", "x4"});
}

// Rooted tree carrier with the ancestor order (x >= y iff y lies on the path
// from the root to x), under two metrics: the path metric rho, and the
// truncated d_T which is 1 across branches and min{rho, 2} along root paths.
struct TreeInstances {
  MetricPoset rho;
  MetricPoset dt;
};

inline TreeInstances gen_example2(const std::vector<std::pair<int, int>>& edges, int root,
                                  const Context& ctx = {}) {
  const int n = static_cast<int>(edges.size()) + 1;
  if (root < 0 || root >= n)
    throw Error(Errc::RootMissing, "root " + std::to_string(root) + " outside 0.." + std::to_string(n - 1));
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw Error(Errc::NotATree, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                      ") is not between distinct vertices 0.." + std::to_string(n - 1));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  auto bfs = [&](int src) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        }
    }
    return std::make_pair(dist, parent);
  };

  auto [depth, parent] = bfs(root);
  for (int v = 0; v < n; ++v)
    if (depth[v] < 0) throw Error(Errc::NotATree, "edge list does not connect all vertices");
  // n-1 edges and connected: a tree, so every BFS distance is the path length.

  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int v = x; v != -1; v = parent[v]) geq[x][v] = true;  // ancestors of x, x itself included

  Matrix rho(n, std::vector<double>(n, 0.0));
  for (int src = 0; src < n; ++src) {
    auto [dist, par] = bfs(src);
    (void)par;
    for (int v = 0; v < n; ++v) rho[src][v] = dist[v];
  }
  Matrix dt(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      dt[x][y] = (geq[x][y] || geq[y][x]) ? std::min(rho[x][y], 2.0) : 1.0;
    }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));

  TreeInstances out;
  if (n == 1) {
    // One vertex: both metrics are the trivial 1x1 zero matrix.
    out.rho = detail::build_checked({{0.0}}, {{true}}, false, labels, ctx);
    out.dt = out.rho;
    return out;
  }
  out.rho = detail::build_checked(rho, geq, false, labels, ctx);
  out.dt = detail::build_checked(dt, std::move(geq), false, std::move(labels), ctx);
  return out;
}

// Disjoint sum of two radially convex losets, with every cross distance set to
// theta/2. theta must dominate both diameters (and be positive so the cross
// distance stays a metric).
inline MetricPoset gen_example3(const MetricPoset& A, const MetricPoset& B, double theta,
                                const Context& ctx = {}) {
  auto check_component = [&](const MetricPoset& comp, const char* name) {
    for (int i = 0; i < comp.size(); ++i)
      for (int j = 0; j < comp.size(); ++j)
        if (!comp.ge(i, j) && !comp.ge(j, i))
          throw Error(Errc::NotRadiallyConvex,
                      std::string(name) + " is not a loset: its order leaves a pair incomparable");
    if (!check_radial_convexity(comp, ctx, ScanOptions{1}).holds)
      throw Error(Errc::NotRadiallyConvex, std::string(name) + " is not radially convex");
  };
  check_component(A, "component A");
  check_component(B, "component B");
  const double need = std::max(diameter(A), diameter(B));
  if (theta < need)
    throw Error(Errc::ThetaTooSmall, "theta = " + std::to_string(theta) + " is below max diameter " +
                                         std::to_string(need));
  if (theta <= 2.0 * ctx.epsilon)
    throw Error(Errc::ThetaTooSmall, "theta must be positive to keep cross distances a metric");

  const int na = A.size(), nb = B.size(), n = na + nb;
  Matrix dist(n, std::vector<double>(n, 0.5 * theta));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      dist[i][j] = A.d(i, j);
      geq[i][j] = A.ge(i, j);
    }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      dist[na + i][na + j] = B.d(i, j);
      geq[na + i][na + j] = B.ge(i, j);
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < na; ++i)
    labels.push_back("A:" + (A.labels.empty() ? std::to_string(i) : A.labels[i]));
  for (int i = 0; i < nb; ++i)
    labels.push_back("B:" + (B.labels.empty() ? std::to_string(i) : B.labels[i]));
  return detail::build_checked(dist, std::move(geq), false, std::move(labels), ctx);
}

// Finite sample of the unit interval joined with a discrete antichain J. The
// interval keeps the usual order and metric, J points are mutually at distance
// 1, and the cross distance is 1 + t against interval point t. The interval
// sits above the antichain; that direction makes every strict chain lengthen
// distances, so the space is radial.
inline MetricPoset gen_example4(const std::vector<double>& interval_samples, int antichain_size,
                                const Context& ctx = {}) {
  if (interval_samples.empty()) throw Error(Errc::TooFewPoints, "need at least one interval sample");
  if (antichain_size < 0) throw Error(Errc::InvalidMetricParams, "antichain size cannot be negative");
  for (double s : interval_samples)
    if (!(s >= 0.0 && s <= 1.0))
      throw Error(Errc::InvalidMetricParams, "interval samples must lie in [0,1]");
  std::vector<double> samples = interval_samples;
  std::sort(samples.begin(), samples.end());
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i] - samples[i - 1] <= ctx.epsilon)
      throw Error(Errc::DuplicateSamples, "interval samples must be distinct");

  const int k = static_cast<int>(samples.size());
  const int n = k + antichain_size;
  Matrix dist(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) geq[i][i] = true;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      dist[i][j] = std::abs(samples[i] - samples[j]);
      geq[i][j] = samples[i] >= samples[j];
    }
  for (int a = 0; a < antichain_size; ++a) {
    for (int b = 0; b < antichain_size; ++b)
      if (a != b) dist[k + a][k + b] = 1.0;
    for (int i = 0; i < k; ++i) {
      dist[i][k + a] = dist[k + a][i] = 1.0 + samples[i];
      geq[i][k + a] = true;  // interval above antichain
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < k; ++i) labels.push_back("t" + detail::short_number(samples[i]));
  for (int a = 0; a < antichain_size; ++a) labels.push_back("j" + std::to_string(a));
  return detail::build_checked(dist, std::move(geq), false, std::move(labels), ctx);
}

// Loset over explicit reals: usual order, absolute-value metric.
inline MetricPoset loset_from_reals(const std::vector<double>& xs, const Context& ctx = {}) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) throw Error(Errc::TooFewPoints, "need at least one real");
  Matrix dist(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dist[i][j] = std::abs(xs[i] - xs[j]);
      geq[i][j] = xs[i] >= xs[j];
      if (i != j && dist[i][j] <= ctx.epsilon)
        throw Error(Errc::DuplicatePoint, "reals must be pairwise distinct");
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (double x : xs) labels.push_back(detail::short_number(x));
  return detail::build_checked(dist, std::move(geq), false, std::move(labels), ctx);
}

// Random partial order (transitive closure of a random DAG over a shuffled
// index sequence) with the discrete metric; radial for every order.
inline MetricPoset random_discrete(int n, double edge_prob, std::uint64_t seed, const Context& ctx = {}) {
  if (n < 1) throw Error(Errc::TooFewPoints, "need at least one point");
  edge_prob = std::clamp(edge_prob, 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) geq[perm[i]][perm[j]] = true;  // earlier position sits higher
  Matrix dist(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) dist[i][i] = 0.0;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return detail::build_checked(dist, std::move(geq), true, std::move(labels), ctx);
}

// Random plane points under the coordinatewise order and Euclidean metric:
// radially convex always, radial only in degenerate layouts, which makes this
// the source of necessity witnesses.
inline MetricPoset random_euclidean(int n, std::uint64_t seed, const Context& ctx = {}) {
  if (n < 1) throw Error(Errc::TooFewPoints, "need at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    const double x = unit(rng), y = unit(rng);
    bool clear = true;
    for (const auto& [px, py] : pts)
      if (std::hypot(px - x, py - y) < 1e-4) {
        clear = false;
        break;
      }
    if (clear) pts.emplace_back(x, y);
  }
  Matrix dist(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      dist[i][j] = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
      geq[i][j] = pts[i].first >= pts[j].first && pts[i].second >= pts[j].second;
    }
    labels.push_back("(" + detail::short_number(pts[i].first) + "," + detail::short_number(pts[i].second) +
                     ")");
  }
  return detail::build_checked(dist, std::move(geq), false, std::move(labels), ctx);
}

// Random reals under the usual order: a radial loset.
inline MetricPoset random_loset(int n, std::uint64_t seed, const Context& ctx = {}) {
  if (n < 1) throw Error(Errc::TooFewPoints, "need at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs;
  xs.reserve(n);
  while (static_cast<int>(xs.size()) < n) {
    const double x = unit(rng);
    bool clear = true;
    for (double p : xs)
      if (std::abs(p - x) < 1e-4) {
        clear = false;
        break;
      }
    if (clear) xs.push_back(x);
  }
  return loset_from_reals(xs, ctx);
}

// Random metric (symmetric draw repaired to the triangle inequality by
// shortest paths) under a random total order. Unlike losets built from reals,
// these are not radially convex in general, which is what the equivalence
// test between radiality and radial convexity on losets needs.
inline MetricPoset random_metric_loset(int n, std::uint64_t seed, const Context& ctx = {}) {
  if (n < 1) throw Error(Errc::TooFewPoints, "need at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  Matrix dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dist[i][j] = dist[j][i] = weight(rng);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) geq[i][j] = rank[i] >= rank[j];
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return detail::build_checked(dist, std::move(geq), false, std::move(labels), ctx);
}

// Random order-preserving K-Lipschitz partial function on a random domain of
// the given size. Built as the lower envelope F(x) = max_u (g(u) - sp(x,u))
// over random anchors g, where sp are the constraint-graph shortest paths, so
// validity holds by construction on any poset, radial or not.
inline PartialFunction random_partial_function(const MetricPoset& poset, double K, int width,
                                               int domain_size, std::uint64_t seed,
                                               const Context& ctx = {}) {
  (void)ctx;
  if (K < 0) throw Error(Errc::NegativeK, "Lipschitz budget K = " + std::to_string(K));
  if (width < 1) throw Error(Errc::WidthMismatch, "width must be at least 1");
  const int n = poset.size();
  domain_size = std::clamp(domain_size, 1, n);
  std::mt19937_64 rng(seed);
  const double amp = 1.0 + K * diameter(poset);
  std::uniform_real_distribution<double> anchor(-amp, amp);
  const auto sp = detail::constraint_shortest_paths(poset, K);

  std::vector<std::vector<double>> total(n, std::vector<double>(width, 0.0));
  for (int t = 0; t < width; ++t) {
    std::vector<double> g(n);
    for (int u = 0; u < n; ++u) g[u] = anchor(rng);
    for (int x = 0; x < n; ++x) {
      double v = -kInf;
      for (int u = 0; u < n; ++u) v = std::max(v, g[u] - sp[x][u]);
      total[x][t] = v;
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> domain(idx.begin(), idx.begin() + domain_size);
  std::vector<std::vector<double>> rows;
  rows.reserve(domain.size());
  for (int x : domain) rows.push_back(total[x]);
  return make_partial_function(std::move(domain), std::move(rows), K);
}

// Random bounded increasing scalar function with no useful Lipschitz budget:
// a positive combination of up-set indicators, which jumps across short
// distances. K is set to the smallest budget the sampled domain happens to
// satisfy, purely so the record is self-consistent.
inline PartialFunction random_monotone_bounded(const MetricPoset& poset, int domain_size,
                                               std::uint64_t seed, const Context& ctx = {}) {
  (void)ctx;
  const int n = poset.size();
  if (n < 2) throw Error(Errc::TooFewPoints, "need at least two points");
  domain_size = std::clamp(domain_size, 2, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> term_count(1, 4);
  std::uniform_real_distribution<double> coef(0.1, 1.0);
  std::bernoulli_distribution pick(0.3);
  std::uniform_int_distribution<int> point(0, n - 1);

  std::vector<double> f(n, 0.0);
  const int terms = term_count(rng);
  for (int r = 0; r < terms; ++r) {
    PointSet seeds;
    for (int x = 0; x < n; ++x)
      if (pick(rng)) seeds.members.push_back(x);
    if (seeds.empty()) seeds.members.push_back(point(rng));
    const auto up = monotone_closure(poset, seeds, ClosureDirection::Up);
    const double c = coef(rng);
    for (int x : up.members) f[x] += c;
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<int> domain(idx.begin(), idx.begin() + domain_size);
  double kfit = 0.0;
  for (std::size_t a = 0; a < domain.size(); ++a)
    for (std::size_t b = a + 1; b < domain.size(); ++b)
      kfit = std::max(kfit, std::abs(f[domain[a]] - f[domain[b]]) / poset.d(domain[a], domain[b]));
  std::vector<std::vector<double>> rows;
  rows.reserve(domain.size());
  for (int x : domain) rows.push_back({f[x]});
  return make_partial_function(std::move(domain), std::move(rows), kfit);
}

// ---------------------------------------------------------------------------
// Declarative specs, so instances can be described in files and on the CLI

enum class GeneratorKind {
  Example1,
  Example2Tree,
  Example3Sum,
  Example4Mixed,
  RandomDiscrete,
  RandomEuclidean,
  RandomLoset,
  RandomMetricLoset,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomDiscrete;
  double a = 0.6, b = 0.3;                 // Example1
  std::vector<std::pair<int, int>> edges;  // Example2Tree
  int root = 0;
  bool rho_metric = false;                 // Example2Tree: emit the path metric instead of d_T
  std::vector<double> a_points, b_points;  // Example3Sum components as real losets
  double theta = 1.0;
  std::vector<double> samples;             // Example4Mixed
  int antichain = 1;
  int n = 6;                               // Random* kinds
  double edge_prob = 0.3;
  std::uint64_t seed = 1;
};

inline MetricPoset make_instance(const GeneratorSpec& spec, const Context& ctx = {}) {
  switch (spec.kind) {
    case GeneratorKind::Example1:
      return gen_example1(spec.a, spec.b, ctx);
    case GeneratorKind::Example2Tree: {
      auto pair = gen_example2(spec.edges, spec.root, ctx);
      return spec.rho_metric ? std::move(pair.rho) : std::move(pair.dt);
    }
    case GeneratorKind::Example3Sum:
      return gen_example3(loset_from_reals(spec.a_points, ctx), loset_from_reals(spec.b_points, ctx),
                          spec.theta, ctx);
    case GeneratorKind::Example4Mixed:
      return gen_example4(spec.samples, spec.antichain, ctx);
    case GeneratorKind::RandomDiscrete:
      return random_discrete(spec.n, spec.edge_prob, spec.seed, ctx);
    case GeneratorKind::RandomEuclidean:
      return random_euclidean(spec.n, spec.seed, ctx);
    case GeneratorKind::RandomLoset:
      return random_loset(spec.n, spec.seed, ctx);
    case GeneratorKind::RandomMetricLoset:
      return random_metric_loset(spec.n, spec.seed, ctx);
  }
  throw Error(Errc::ParseError, "unknown generator kind");
}

}  // namespace ordlip
