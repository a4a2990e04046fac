#include "um/generate.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace um {

namespace {

class Builder {
 public:
  Builder(const GeneratorSpec& spec, const std::vector<Weight>& pool)
      : pool_(pool),
        branching_(spec.branching),
        rng_(spec.seed),
        n_(spec.n),
        dist_(static_cast<std::size_t>(spec.n) * spec.n) {}

  std::vector<Weight> run() {
    std::vector<int> points(n_);
    for (int i = 0; i < n_; ++i) points[i] = i;
    split(std::move(points), static_cast<int>(pool_.size()) - 1);
    return std::move(dist_);
  }

 private:
  // Raw draws are reduced modulo the range so that every platform sees
  // the same sequence; the bias is irrelevant for test data.
  int draw(int lo, int hi) {
    return lo + static_cast<int>(rng_() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  void set_distance(int u, int v, const Weight& w) {
    dist_[static_cast<std::size_t>(u) * n_ + v] = w;
    dist_[static_cast<std::size_t>(v) * n_ + u] = w;
  }

  void split(std::vector<int> points, int max_label) {
    const int m = static_cast<int>(points.size());
    if (m < 2) return;
    // Pick the diameter of this cluster, then scatter the points over
    // k parts that sit pairwise at that diameter. Label index 0 leaves
    // no smaller labels for the parts, so they must all be singletons.
    const int label = max_label == 0 ? 0 : draw(0, max_label);
    const int k = label == 0 ? m : draw(2, std::min(branching_, m));
    for (int i = m - 1; i > 0; --i)
      std::swap(points[i], points[draw(0, i)]);
    std::vector<std::vector<int>> parts(k);
    for (int i = 0; i < k; ++i) parts[i].push_back(points[i]);
    for (int i = k; i < m; ++i) parts[draw(0, k - 1)].push_back(points[i]);
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        for (int u : parts[a])
          for (int v : parts[b]) set_distance(u, v, pool_[label]);
    for (auto& part : parts) split(std::move(part), label - 1);
  }

  const std::vector<Weight>& pool_;
  int branching_;
  std::mt19937_64 rng_;
  int n_;
  std::vector<Weight> dist_;
};

}  // namespace

UltrametricSpace generate_space(const GeneratorSpec& spec) {
  if (spec.n < 1)
    throw Error(errc::invalid_spec, "n must be at least 1");
  if (spec.branching < 2)
    throw Error(errc::invalid_spec, "branching must be at least 2");

  std::vector<Weight> pool = spec.label_pool;
  if (pool.empty())
    for (int i = 1; i <= std::max(1, spec.n - 1); ++i)
      pool.push_back(Weight::from_int(i));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (pool[i] <= Weight{})
      throw Error(errc::invalid_spec, "distance pool values must be positive");
    if (i > 0 && !(pool[i - 1] < pool[i]))
      throw Error(errc::invalid_spec,
                  "distance pool must be strictly increasing");
  }

  Builder builder(spec, pool);
  std::vector<Weight> dist = builder.run();

  std::vector<std::string> labels;
  labels.reserve(spec.n);
  for (int i = 1; i <= spec.n; ++i) labels.push_back("x" + std::to_string(i));
  return UltrametricSpace::create(labels, dist);
}

}  // namespace um
