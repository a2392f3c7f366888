#include "paramcode/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include <fmt/format.h>

#include "paramcode/metrics.hpp"

namespace paramcode {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t ambient_size(std::uint32_t q, std::size_t n) noexcept {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    size *= q;
  }
  return size;
}

namespace {

class LetterSource {
 public:
  LetterSource(std::uint64_t seed, std::uint32_t q) : engine_(seed), q_(q) {}

  Letter next() { return static_cast<Letter>(below(q_)); }

  // Uniform on [0, bound): reject the top 2^64 mod bound engine outputs.
  std::uint64_t below(std::uint64_t bound) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % bound + 1) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x <= max - rem) return x % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
  std::uint32_t q_;
};

void check_config(const EnsembleConfig& c) {
  if (c.q < 2) throw Error(ErrorKind::InfeasibleConfig, "q must be at least 2");
  if (c.n < 1) throw Error(ErrorKind::InfeasibleConfig, "block length must be at least 1");
  if (c.m < 2) throw Error(ErrorKind::InfeasibleConfig, "need at least 2 words");
  if (c.trials < 1) throw Error(ErrorKind::InfeasibleConfig, "need at least 1 trial");
  if (c.m > ambient_size(c.q, c.n))
    throw Error(ErrorKind::InfeasibleConfig,
                fmt::format("{} distinct words do not fit in F_{}^{}", c.m, c.q, c.n));
}

std::vector<Letter> word_from_index(std::uint64_t index, std::size_t n, std::uint32_t q) {
  std::vector<Letter> letters(n);
  for (std::size_t k = n; k-- > 0;) {
    letters[k] = static_cast<Letter>(index % q);
    index /= q;
  }
  return letters;
}

}  // namespace

std::vector<SrceTrial> sample_srce(const EnsembleConfig& config) {
  check_config(config);
  std::vector<SrceTrial> trials;
  trials.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    LetterSource source(splitmix64(config.seed + t), config.q);
    std::set<std::vector<Letter>> seen;
    std::vector<Codeword> words;
    std::size_t redraws = 0;
    while (words.size() < config.m) {
      std::vector<Letter> letters(config.n);
      for (auto& l : letters) l = source.next();
      if (!seen.insert(letters).second) {
        ++redraws;
        continue;
      }
      words.push_back({std::move(letters), "w" + std::to_string(words.size() + 1)});
    }
    Code code(Alphabet(config.q), config.n, std::move(words));
    CodeParameters params = code_parameters(code);
    trials.push_back({std::move(code), std::move(params), redraws});
  }
  return trials;
}

std::size_t PointCloud::total() const noexcept {
  std::size_t sum = 0;
  for (const auto& p : points) sum += p.multiplicity;
  return sum;
}

namespace {

PointCloud aggregate(std::uint32_t q, const std::map<std::pair<Rational, double>, std::size_t>& counts,
                     const std::string& provenance) {
  PointCloud cloud;
  cloud.q = q;
  for (const auto& [key, count] : counts)
    cloud.points.push_back({key.first, key.second, count, provenance});
  return cloud;
}

}  // namespace

PointCloud to_point_cloud(const std::vector<SrceTrial>& trials, std::uint32_t q,
                          const std::string& provenance) {
  std::map<std::pair<Rational, double>, std::size_t> counts;
  for (const auto& t : trials) ++counts[{t.params.delta, t.params.rate}];
  return aggregate(q, counts, provenance);
}

std::uint64_t code_count(std::size_t n, std::size_t m, std::uint32_t q) noexcept {
  const std::uint64_t total = ambient_size(q, n);
  if (m > total) return 0;
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  if (total == saturated) return saturated;
  const std::uint64_t k = std::min<std::uint64_t>(m, total - m);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (total - k + i) / i;
    if (c > saturated) return saturated;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

void check_enumeration(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap) {
  if (n < 1 || n > 6 || q < 2 || q > 3)
    throw Error(ErrorKind::DomainError,
                fmt::format("enumeration needs 1 <= n <= 6 and q in {{2, 3}}, got n={} q={}", n, q));
  if (m < 2 || m > ambient_size(q, n))
    throw Error(ErrorKind::InfeasibleConfig,
                fmt::format("{} distinct words do not fit in F_{}^{}", m, q, n));
  const std::uint64_t count = code_count(n, m, q);
  if (count > cap)
    throw Error(ErrorKind::CapExceeded,
                fmt::format("enumeration would visit {} codes, cap is {}", count, cap));
}

// Calls visit(indices) for every m-subset of {0, .., total-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t total, std::size_t m, Visit&& visit) {
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t pos = m;
    while (pos > 0 && idx[pos - 1] == total - m + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PointCloud enumerate_codes(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap) {
  check_enumeration(n, m, q, cap);
  const auto total = static_cast<std::size_t>(ambient_size(q, n));

  std::vector<std::vector<Letter>> words(total);
  for (std::size_t w = 0; w < total; ++w) words[w] = word_from_index(w, n, q);
  std::vector<std::uint8_t> dist(total * total);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = 0; b < total; ++b) {
      std::uint8_t diff = 0;
      for (std::size_t k = 0; k < n; ++k) diff += words[a][k] != words[b][k];
      dist[a * total + b] = diff;
    }

  const double rate =
      std::log(static_cast<double>(m)) / std::log(static_cast<double>(q)) / static_cast<double>(n);
  std::vector<std::size_t> by_distance(n + 1, 0);
  for_each_subset(total, m, [&](const std::vector<std::size_t>& idx) {
    std::uint8_t d = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) d = std::min(d, dist[idx[i] * total + idx[j]]);
    ++by_distance[d];
  });

  std::map<std::pair<Rational, double>, std::size_t> counts;
  for (std::size_t d = 1; d <= n; ++d)
    if (by_distance[d] > 0)
      counts[{Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n)), rate}] =
          by_distance[d];
  return aggregate(q, counts, fmt::format("enumerate:n={},m={},q={}", n, m, q));
}

void for_each_code(std::size_t n, std::size_t m, std::uint32_t q, std::uint64_t cap,
                   const std::function<void(const Code&)>& visit) {
  check_enumeration(n, m, q, cap);
  const auto total = static_cast<std::size_t>(ambient_size(q, n));
  for_each_subset(total, m, [&](const std::vector<std::size_t>& idx) {
    std::vector<Codeword> words;
    words.reserve(m);
    for (std::size_t i : idx) words.push_back({word_from_index(i, n, q), "w" + std::to_string(i)});
    visit(Code(Alphabet(q), n, std::move(words)));
  });
}

std::vector<Code> sample_uniform_codes(std::size_t n, std::size_t m, std::uint32_t q,
                                       std::size_t count, std::uint64_t seed) {
  check_config({n, m, q, 1, seed});
  const std::uint64_t total = ambient_size(q, n);
  LetterSource source(splitmix64(seed), q);
  std::vector<Code> codes;
  codes.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    std::set<std::uint64_t> chosen;
    while (chosen.size() < m) chosen.insert(source.below(total));
    std::vector<Codeword> words;
    for (std::uint64_t i : chosen) words.push_back({word_from_index(i, n, q), "w" + std::to_string(i)});
    codes.emplace_back(Alphabet(q), n, std::move(words));
  }
  return codes;
}

CodeParameters oracle_code_parameters(const Code& code, RateBase base) {
  const auto& words = code.words();
  const std::size_t m = words.size();
  if (m < 2) throw Error(ErrorKind::TooFewWords, "oracle needs at least 2 words");

  CodeParameters p;
  p.n = code.block_length();
  p.m = m;
  p.rate_base = base == RateBase::Q ? code.q() : 2;
  p.k = std::log2(static_cast<double>(m)) / std::log2(static_cast<double>(p.rate_base));
  p.rate = p.k / static_cast<double>(p.n);

  // Full ordered double loop; each unordered pair is visited twice and kept once.
  std::size_t d = p.n + 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      std::size_t diff = 0;
      for (std::size_t pos = 0; pos < p.n; ++pos)
        if (words[i].letters[pos] != words[j].letters[pos]) ++diff;
      if (i < j) p.distance_multiset.push_back(diff);
      if (diff < d) d = diff;
    }
  }
  p.d = d;
  p.delta = Rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(p.n));
  return p;
}

std::string to_csv(const PointCloud& cloud) {
  std::string out = "delta,R,multiplicity,provenance\n";
  for (const auto& p : cloud.points)
    out += fmt::format("{},{},{},{}\n", p.delta.to_double(), p.rate, p.multiplicity, p.provenance);
  return out;
}

}  // namespace paramcode
