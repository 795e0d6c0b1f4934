#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coxext/pmf.hpp"
#include "coxext/random.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

enum class SamplerMethod { decomposition, inverse_cdf };

std::string to_string(SamplerMethod m);
SamplerMethod parse_sampler_method(std::string_view text);

/// Binary search on the upper-tail table of a materialized PMF.
class InverseCdfSampler {
 public:
  explicit InverseCdfSampler(const Pmf& pmf) : table_(pmf.mass) {}
  explicit InverseCdfSampler(CdfTable table) : table_(std::move(table)) {}
  std::int64_t draw(RandomStream& rng) const noexcept {
    return table_.quantile_from_tail(rng.uniform_open_closed());
  }
  const CdfTable& table() const noexcept { return table_; }

 private:
  CdfTable table_;
};

/// Sum of independent U{0, ..., d_i - 1}, one per degree.
class UniformSumSampler {
 public:
  explicit UniformSumSampler(std::vector<std::uint64_t> degrees) : degrees_(std::move(degrees)) {}
  std::int64_t draw(RandomStream& rng) const noexcept;

 private:
  std::vector<std::uint64_t> degrees_;
};

/// Sum of independent Bernoulli(p_i).
class BernoulliSumSampler {
 public:
  explicit BernoulliSumSampler(std::vector<double> p) : p_(std::move(p)) {}
  std::int64_t draw(RandomStream& rng) const noexcept;

 private:
  std::vector<double> p_;
};

class StatisticSampler {
 public:
  using Impl = std::variant<InverseCdfSampler, UniformSumSampler, BernoulliSumSampler>;
  explicit StatisticSampler(Impl impl) : impl_(std::move(impl)) {}

  std::int64_t draw(RandomStream& rng) const noexcept {
    return std::visit([&rng](const auto& s) { return s.draw(rng); }, impl_);
  }
  SamplerMethod method() const noexcept {
    return std::holds_alternative<InverseCdfSampler>(impl_) ? SamplerMethod::inverse_cdf
                                                            : SamplerMethod::decomposition;
  }

 private:
  Impl impl_;
};

/// Builds a sampler. Inverse-CDF materializes the PMF (Mahonian via floating
/// convolution, Eulerian via eulerian_pmf); decomposition needs only degrees
/// (inv) or Bernoulli parameters (des, subject to the root-extraction cap).
StatisticSampler make_sampler(const GroupDescriptor& g, Statistic stat, SamplerMethod method,
                              const Limits& limits = {});
StatisticSampler make_sampler(const Pmf& pmf);

std::vector<std::int64_t> sample(const GroupDescriptor& g, Statistic stat, std::size_t count,
                                 RandomStream& rng, SamplerMethod method,
                                 const Limits& limits = {});

}  // namespace coxext
