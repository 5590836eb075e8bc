#include <benchmark/benchmark.h>

#include "polarlink/oracle.hpp"
#include "polarlink/parser.hpp"
#include "polarlink/polar.hpp"

using namespace polarlink;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

Ideal jacobian_of(const char* poly) { return jacobian_ideal(parse_polynomial(poly, XYZ)); }

void BM_Groebner(benchmark::State& state) {
  const Ideal ideal(3, {parse_polynomial("x^3+y^2*z-x*y", XYZ), parse_polynomial("y^3-z^2+x*z", XYZ),
                        parse_polynomial("z^3-x^2*y", XYZ)});
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(ideal));
}
BENCHMARK(BM_Groebner)->Unit(benchmark::kMillisecond);

void BM_Mora(benchmark::State& state) {
  const Ideal ideal = jacobian_of("x^4+y^4+z^4+x*y*z");
  for (auto _ : state) benchmark::DoNotOptimize(local_colength(ideal));
}
BENCHMARK(BM_Mora)->Unit(benchmark::kMillisecond);

void BM_OracleColength(benchmark::State& state) {
  const Ideal ideal = jacobian_of("x^3+y^3+z^3");
  for (auto _ : state) benchmark::DoNotOptimize(oracle::colength_until_stable(ideal, 4));
}
BENCHMARK(BM_OracleColength)->Unit(benchmark::kMillisecond);

void BM_GammaProfile(benchmark::State& state) {
  static const char* polys[] = {"x^2+y^2+z^2", "x^3+y^3+z^3", "y^2-x^2*z", "x^4+y^4+z^4"};
  const auto f = parse_polynomial(polys[state.range(0)], XYZ);
  GammaOptions o;
  o.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_profile(f, o));
  state.SetLabel(polys[state.range(0)]);
}
BENCHMARK(BM_GammaProfile)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
