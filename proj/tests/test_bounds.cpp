#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "paramcode/bounds.hpp"
#include "test_support.hpp"

using namespace paramcode;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::UsageError;
}

}  // namespace

TEST_CASE("entropy values") {
  CHECK(entropy(0.5, 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entropy(0.0, 2) == 0.0);
  CHECK(entropy(0.0, 3) == 0.0);
  CHECK(entropy(0.0, 7) == 0.0);
  CHECK(entropy(1.0, 2) == 0.0);
  // -(1/6)log2(1/6) - (5/6)log2(5/6)
  CHECK(std::abs(entropy(1.0 / 6, 2) - 0.6500224216483541) < 1e-12);
  CHECK(std::abs(entropy(2.0 / 3, 3) - 1.0) < 1e-12);
  CHECK(kind_of([] { entropy(-0.1, 2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { entropy(1.5, 2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { entropy(0.5, 1); }) == ErrorKind::DomainError);
}

TEST_CASE("entropy is symmetric for q=2 and increasing up to (q-1)/q") {
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    CHECK(std::abs(entropy(x, 2) - entropy(1.0 - x, 2)) <= 1e-12);
  }
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const double top = static_cast<double>(q - 1) / q;
    double prev = -1.0;
    for (int i = 0; i <= 500; ++i) {
      const double x = top * i / 500.0;
      const double h = entropy(x, q);
      CHECK(h > prev);
      prev = h;
    }
    CHECK(std::abs(prev - 1.0) < 1e-12);
  }
}

TEST_CASE("bound curve values") {
  CHECK(std::abs(gv_value(1.0 / 6, 2) - 0.3499775783516459) < 1e-12);
  CHECK(gv_value(1.0 / 6, 2) > std::log2(3.0) / 6);
  CHECK(plotkin_exceeded(Rational(13, 25), 2));
  CHECK(plotkin_exceeded(0.52, 2));
  CHECK(plotkin_exceeded(Rational(1, 2), 2));
  CHECK_FALSE(plotkin_exceeded(Rational(49, 100), 2));
  CHECK(plotkin_exceeded(Rational(2, 3), 3));
  CHECK_FALSE(plotkin_exceeded(Rational(665, 1000), 3));
  CHECK(singleton_value(0.0) == 1.0);
  CHECK(singleton_value(1.0) == 0.0);
  CHECK(gv_value(0.5, 2) == 0.0);
  CHECK(gv_value(2.0 / 3, 3) == 0.0);
  CHECK(gv_value(1.0, 2) == 0.0);
  CHECK(gv_value(0.0, 3) == 1.0);
  CHECK(hamming_value(1.0, 2) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(kind_of([] { gv_value(1.2, 2); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { hamming_value(-0.2, 2); }) == ErrorKind::DomainError);
}

TEST_CASE("gv <= hamming on [0, (q-1)/q]") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const double top = static_cast<double>(q - 1) / q;
    for (int i = 0; i <= 1000; ++i) {
      const double x = top * i / 1000.0;
      CHECK(gv_value(x, q) <= hamming_value(x, q));
    }
  }
}

TEST_CASE("classify the worked examples") {
  SUBCASE("Arabic/Wolof/Basque: above via Plotkin") {
    const auto c = classify({Rational(13, 25), std::log2(3.0) / 25, 2});
    CHECK(c.verdict == Verdict::AboveAsymptotic);
    CHECK(c.certificate("plotkin").fires);
    CHECK_FALSE(c.certificate("hamming").fires);
    CHECK_FALSE(c.certificate("singleton").fires);
    CHECK_FALSE(c.certificate("gilbert_varshamov").fires);
    CHECK(c.certificates.size() == 4);
  }
  SUBCASE("Italian/Spanish/French: below GV") {
    const double R = std::log2(3.0) / 6;
    const auto c = classify({Rational(1, 6), R, 2});
    CHECK(c.verdict == Verdict::BelowGV);
    CHECK(std::abs(c.certificate("gilbert_varshamov").margin - 0.08581716156478653) < 1e-12);
  }
  SUBCASE("ternary point") {
    const auto c = classify({Rational::parse("0.4643"), 0.0252, 3});
    CHECK(c.verdict == Verdict::BelowGV);
    CHECK(std::abs(c.certificate("gilbert_varshamov").margin + 0.0252 - 0.07845171882567759) <
          1e-12);
  }
}

TEST_CASE("classify edge behaviour") {
  CHECK(kind_of([] { classify({Rational(1, 2), 0.0, 2}); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { classify({Rational(3, 2), 0.1, 2}); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { classify({Rational(1, 2), 1.5, 2}); }) == ErrorKind::DomainError);

  // On the GV curve exactly: indeterminate with an on-GV note.
  const double delta = 0.1;
  const auto on = classify({Rational(1, 10), gv_value(delta, 2), 2});
  CHECK(on.verdict == Verdict::Indeterminate);
  REQUIRE_FALSE(on.notes.empty());
  CHECK(on.notes.front().rfind("on-GV", 0) == 0);

  // Between GV and the Hamming bound.
  const double mid = (gv_value(delta, 2) + hamming_value(delta, 2)) / 2;
  CHECK(classify({Rational(1, 10), mid, 2}).verdict == Verdict::Indeterminate);

  // Above the Hamming bound.
  const auto high = classify({Rational(1, 10), hamming_value(delta, 2) + 0.01, 2});
  CHECK(high.verdict == Verdict::AboveAsymptotic);
  CHECK(high.certificate("hamming").fires);

  // R + delta = 1.05: over the asymptotic line, inside a 0.1 slack.
  const auto sing = classify({Rational(3, 10), 0.75, 64});
  CHECK(sing.certificate("singleton").fires);
  ClassifyOptions slack;
  slack.singleton_slack = 0.1;
  CHECK_FALSE(classify({Rational(3, 10), 0.75, 64}, slack).certificate("singleton").fires);
}

TEST_CASE("classify is monotone in R and never both above and below") {
  testing::Gen gen(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint32_t q = static_cast<std::uint32_t>(gen.size(2, 4));
    const auto den = static_cast<std::int64_t>(gen.size(1, 80));
    const auto num = static_cast<std::int64_t>(gen.size(0, static_cast<std::size_t>(den)));
    const Rational delta(num, den);
    const double r1 = static_cast<double>(gen.size(1, 1000)) / 1000.0;
    const double r2 = r1 * static_cast<double>(gen.size(1, 1000)) / 1000.0;

    const auto hi = classify({delta, r1, q});
    const auto lo = classify({delta, r2, q});
    if (hi.verdict == Verdict::BelowGV) CHECK(lo.verdict == Verdict::BelowGV);
    CHECK_FALSE((lo.verdict == Verdict::AboveAsymptotic && hi.verdict == Verdict::BelowGV));

    bool upper = false;
    for (std::size_t i = 0; i + 1 < hi.certificates.size(); ++i) upper = upper || hi.certificates[i].fires;
    CHECK_FALSE((upper && hi.certificate("gilbert_varshamov").fires));
  }
}

TEST_CASE("emit_bound_curves") {
  const BoundCurves c = emit_bound_curves(2, 3);
  REQUIRE(c.samples.size() == 3);
  CHECK(c.samples[0].delta == Rational(0, 1));
  CHECK(c.samples[1].delta == Rational(1, 2));
  CHECK(c.samples[2].delta == Rational(1, 1));
  CHECK(c.samples[0].gv == 1.0);
  CHECK(c.samples[1].gv == 0.0);
  CHECK(c.samples[2].gv == 0.0);

  const BoundCurves t = emit_bound_curves(3, 31);
  for (const auto& s : t.samples) CHECK(s.plotkin == (s.delta >= Rational(2, 3)));
  CHECK_FALSE(t.samples[19].plotkin);
  CHECK(t.samples[20].plotkin);  // delta = 20/30 = 2/3

  for (const auto& s : emit_bound_curves(2, 101).samples)
    if (s.delta < Rational(1, 2)) CHECK(s.gv <= s.hamming);

  CHECK(kind_of([] { emit_bound_curves(2, 1); }) == ErrorKind::DomainError);
}

TEST_CASE("bound curve CSV") {
  const std::string csv = to_csv(emit_bound_curves(2, 3));
  CHECK(csv.rfind("delta,gv,hamming,singleton,plotkin\n0,1,1,1,0\n", 0) == 0);
  CHECK(csv.find("\n1,0,0,0,1\n") != std::string::npos);
}
