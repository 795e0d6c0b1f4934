#include "coxext/sampling.hpp"

#include "coxext/errors.hpp"

namespace coxext {

// ---------------------------------------------------------------------------
// RandomStream

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) noexcept : key_(splitmix64(seed)), lineage_(0) {}

RandomStream::RandomStream(std::uint64_t key, std::uint64_t lineage) noexcept
    : key_(key), lineage_(lineage) {}

RandomStream RandomStream::split(std::uint64_t id) const noexcept {
  const std::uint64_t child = splitmix64(key_ ^ splitmix64(id + 0x632BE59BD9B4E019ULL));
  return RandomStream(child, splitmix64(lineage_ + id + 1));
}

std::uint64_t RandomStream::next_u64() noexcept {
  if (buffered_ == 0) {
    const std::array<std::uint32_t, 4> ctr{
        static_cast<std::uint32_t>(draw_), static_cast<std::uint32_t>(draw_ >> 32),
        static_cast<std::uint32_t>(lineage_), static_cast<std::uint32_t>(lineage_ >> 32)};
    const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(key_),
                                           static_cast<std::uint32_t>(key_ >> 32)};
    const auto out = philox4x32(ctr, key);
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    ++draw_;
    buffered_ = 2;
  }
  return buffer_[2 - buffered_--];
}

double RandomStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform_open_closed() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RandomStream::below(std::uint64_t n) noexcept {
  using u128 = unsigned __int128;
  std::uint64_t x = next_u64();
  u128 m = static_cast<u128>(x) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = next_u64();
      m = static_cast<u128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// ---------------------------------------------------------------------------
// Samplers

std::string to_string(SamplerMethod m) {
  return m == SamplerMethod::decomposition ? "decomposition" : "inverse_cdf";
}

SamplerMethod parse_sampler_method(std::string_view text) {
  if (text == "decomposition") return SamplerMethod::decomposition;
  if (text == "inverse_cdf" || text == "inverse-cdf") return SamplerMethod::inverse_cdf;
  throw DomainError("unknown sampler method '" + std::string(text) + "'");
}

std::int64_t UniformSumSampler::draw(RandomStream& rng) const noexcept {
  std::int64_t total = 0;
  for (auto d : degrees_) total += static_cast<std::int64_t>(rng.below(d));
  return total;
}

std::int64_t BernoulliSumSampler::draw(RandomStream& rng) const noexcept {
  std::int64_t total = 0;
  for (double p : p_) total += rng.uniform() < p ? 1 : 0;
  return total;
}

StatisticSampler make_sampler(const Pmf& pmf) { return StatisticSampler(InverseCdfSampler(pmf)); }

StatisticSampler make_sampler(const GroupDescriptor& g, Statistic stat, SamplerMethod method,
                              const Limits& limits) {
  if (method == SamplerMethod::inverse_cdf) {
    const Pmf pmf = statistic_pmf(g, stat, limits);
    return make_sampler(pmf);
  }
  if (stat == Statistic::inv) return StatisticSampler(UniformSumSampler(degrees(g).degrees));
  try {
    return StatisticSampler(BernoulliSumSampler(descent_bernoulli_params(g, 1e-12, limits).p));
  } catch (const DomainError& e) {
    throw DomainError(std::string("decomposition sampler unavailable: ") + e.what());
  }
}

std::vector<std::int64_t> sample(const GroupDescriptor& g, Statistic stat, std::size_t count,
                                 RandomStream& rng, SamplerMethod method, const Limits& limits) {
  const auto sampler = make_sampler(g, stat, method, limits);
  std::vector<std::int64_t> out(count);
  for (auto& v : out) v = sampler.draw(rng);
  return out;
}

}  // namespace coxext
