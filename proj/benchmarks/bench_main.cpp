#include <benchmark/benchmark.h>

#include <random>

#include "uniso/gallery.hpp"
#include "uniso/iso.hpp"

namespace {

using namespace uniso;

Matrix random_matrix(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Matrix m(f, n, n);
  std::uniform_int_distribution<long long> d(-9, 9);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(d(rng)));
  }
  return m;
}

void BM_RrefGF(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::parse("GF(7)");
  std::mt19937_64 rng(7);
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefGF)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_RrefExtension(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::parse("GF(3^2)");
  std::mt19937_64 rng(9);
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefExtension)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefQ(benchmark::State& state) {
  const FieldSpec& f = FieldSpec::parse("Q");
  std::mt19937_64 rng(11);
  const Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefQ)->Arg(8)->Arg(16)->Arg(24);

// Hom(L, M) on the euclidean quiver, growing n.
void BM_HomBasis(benchmark::State& state) {
  const GalleryEntry e = gallery("euclidean_An", {state.range(0)});
  const Representation& l = e.module("L");
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(l, l).dimension());
}
BENCHMARK(BM_HomBasis)->DenseRange(3, 9, 2);

void BM_HomBasisCommutative(benchmark::State& state) {
  const GalleryEntry e = gallery("commutative_two_loops", {state.range(0)});
  const Representation& v = e.module("V");
  const Representation& w = e.module("W");
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(v, w).dimension());
}
BENCHMARK(BM_HomBasisCommutative)->DenseRange(2, 8, 2);

void BM_NFold(benchmark::State& state) {
  const GalleryEntry e = gallery("cyclic_uniserial", {state.range(0)});
  const Representation& u = e.module("U");
  for (auto _ : state) benchmark::DoNotOptimize(nfold_criterion(u, u).verdict);
}
BENCHMARK(BM_NFold)->DenseRange(1, 4);

void BM_NFoldNotIso(benchmark::State& state) {
  const GalleryEntry e = gallery("euclidean_An", {state.range(0)});
  const Representation& l = e.module("L");
  const Representation& m = e.module("M");
  for (auto _ : state) benchmark::DoNotOptimize(nfold_criterion(l, m).verdict);
}
BENCHMARK(BM_NFoldNotIso)->DenseRange(3, 6);

}  // namespace
BENCHMARK_MAIN();
