#include <benchmark/benchmark.h>

#include <random>

#include "parenbraid/artin_rep.hpp"
#include "parenbraid/normal_forms.hpp"
#include "parenbraid/ordering.hpp"
#include "parenbraid/reversing.hpp"
#include "parenbraid/text.hpp"

using namespace parenbraid;

namespace {

// Fixed seed so that every run times the same inputs.
Word random_word(std::mt19937& rng, std::size_t length, std::uint32_t max_index, bool with_sigma) {
  std::uniform_int_distribution<std::uint32_t> index(1, max_index);
  std::bernoulli_distribution coin(0.5);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    const bool inverse = coin(rng);
    const std::uint32_t k = index(rng);
    w.push_back(with_sigma && coin(rng) ? Letter::sigma(k, inverse) : Letter::a(k, inverse));
  }
  return w;
}

std::vector<Word> sample(std::size_t count, std::size_t length, bool with_sigma) {
  std::mt19937 rng(20261019);
  std::vector<Word> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_word(rng, length, 4, with_sigma));
  return out;
}

void BM_word_problem(benchmark::State& state) {
  const auto words = sample(64, static_cast<std::size_t>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) {
    const Word& w = words[i++ % words.size()];
    benchmark::DoNotOptimize(word_problem(w, w));
  }
}
BENCHMARK(BM_word_problem)->Arg(4)->Arg(8)->Arg(16);

void BM_fraction_form(benchmark::State& state) {
  const auto words = sample(64, static_cast<std::size_t>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fraction_form(words[i++ % words.size()]));
}
BENCHMARK(BM_fraction_form)->Arg(4)->Arg(8)->Arg(16);

void BM_cmp(benchmark::State& state) {
  const auto words = sample(64, static_cast<std::size_t>(state.range(0)), true);
  std::size_t i = 0;
  for (auto _ : state) {
    const Word& x = words[i % words.size()];
    const Word& y = words[(i + 1) % words.size()];
    ++i;
    benchmark::DoNotOptimize(cmp(x, y));
  }
}
BENCHMARK(BM_cmp)->Arg(4)->Arg(8);

void BM_cmp_F(benchmark::State& state) {
  const auto words = sample(64, static_cast<std::size_t>(state.range(0)), false);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cmp_F(words[i % words.size()], words[(i + 1) % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_cmp_F)->Arg(8)->Arg(32);

void BM_aut_apply(benchmark::State& state) {
  const auto words = sample(64, static_cast<std::size_t>(state.range(0)), true);
  const FWord u = parse_fword("x(1) x(2,1)");
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(aut_apply(words[i++ % words.size()], u));
}
BENCHMARK(BM_aut_apply)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
