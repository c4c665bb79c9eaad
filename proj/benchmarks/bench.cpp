#include <benchmark/benchmark.h>

#include <operant/bezout.hpp>
#include <operant/kernel.hpp>
#include <operant/modalg.hpp>

#include <complex>

using namespace operant;

namespace {

RingTag irreducible_tag() { return RingTag{SigmaSpec::indeterminate(), Rational(1)}; }
RingTag square_tag() {
  return RingTag{SigmaSpec::polynomial(Rational(1), Rational(0), Rational(0)), Rational(1)};
}

TrigElement C(const RingTag& tag, const Rational& a, const Rational& k = Rational(1)) {
  return make_term(tag, TrigKind::C, a, k);
}
TrigElement S(const RingTag& tag, const Rational& a, const Rational& k = Rational(1)) {
  return make_term(tag, TrigKind::S, a, k);
}

// A moderately dense element with indices up to `top`.
TrigElement dense(const RingTag& tag, int top) {
  TrigElement e = TrigElement::one(tag);
  for (int i = 1; i <= top; ++i) {
    e = e + C(tag, i, Rational(2 * i + 1, 3)) + S(tag, i, Rational(i, 2));
  }
  return e;
}

void BM_ring_mul(benchmark::State& state) {
  const RingTag tag = irreducible_tag();
  const TrigElement a = dense(tag, int(state.range(0)));
  const TrigElement b = dense(tag, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ring_mul)->Arg(4)->Arg(16)->Arg(64);

void BM_gcd_subset_chain(benchmark::State& state) {
  const RingTag tag = irreducible_tag();
  const TrigElement p = S(tag, 1);
  const TrigElement q = C(tag, 1) + TrigElement::one(tag);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_pair(p, q));
}
BENCHMARK(BM_gcd_subset_chain);

void BM_gcd_laurent(benchmark::State& state) {
  const RingTag tag = square_tag();
  const TrigElement p = dense(tag, 3);
  const TrigElement q = dense(tag, 2) + S(tag, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_pair(p, q));
}
BENCHMARK(BM_gcd_laurent);

void BM_hermite(benchmark::State& state) {
  const RingTag tag = irreducible_tag();
  RingMatrix m(tag, 3, 3);
  m.at(0, 0) = S(tag, 1);
  m.at(0, 1) = C(tag, 1) + TrigElement::one(tag);
  m.at(0, 2) = C(tag, 2);
  m.at(1, 0) = C(tag, 1);
  m.at(1, 1) = S(tag, 2);
  m.at(1, 2) = TrigElement::one(tag);
  m.at(2, 0) = S(tag, 1, 3);
  m.at(2, 1) = TrigElement::zero(tag);
  m.at(2, 2) = C(tag, 1) - TrigElement::one(tag);
  for (auto _ : state) benchmark::DoNotOptimize(hermite(m));
}
BENCHMARK(BM_hermite);

void BM_laplace_eval(benchmark::State& state) {
  const RingTag tag = irreducible_tag();
  const TrigElement e = dense(tag, int(state.range(0)));
  const std::complex<double> z(1.3, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(e.laplace_eval(z));
}
BENCHMARK(BM_laplace_eval)->Arg(8)->Arg(64);

void BM_kernel_quadrature(benchmark::State& state) {
  const SigmaSpec damped = SigmaSpec::polynomial(Rational(1), Rational(1), Rational(0));
  const std::complex<double> s0(2.0, 1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(laplace_numeric(damped, 1.0, s0, 1e-10, int(state.range(0))));
}
BENCHMARK(BM_kernel_quadrature)->Arg(10)->Arg(28);

}  // namespace

BENCHMARK_MAIN();
