// Copyright 2026 The agqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "agqc/css.h"
#include "agqc/minweight.h"
#include "agqc/riemann_roch.h"

namespace {

using namespace agqc;

void BM_FieldMul(benchmark::State &state) {
    const Field f = Field::make(7, 2);
    Field::Raw acc = 1;
    const Field::Raw g = f.generator();
    for (auto _ : state) {
        acc = f.mul(acc, g);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul);

void BM_RrSpaceTwoPoint(benchmark::State &state) {
    const Curve c = Curve::make(3, 4);
    Divisor g;
    g.add(c.rational_places()[26], 7);
    g.add(Place::infinity(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rr_space(c, g));
}
BENCHMARK(BM_RrSpaceTwoPoint)->Arg(8)->Arg(16);

void BM_RrSpaceDegreeTwo(benchmark::State &state) {
    const Curve c = Curve::make(5, 2);
    Divisor g;
    g.add(c.find_degree2_place(), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rr_space(c, g));
}
BENCHMARK(BM_RrSpaceDegreeTwo)->Arg(4)->Arg(20);

void BM_CssDistance(benchmark::State &state) {
    const CssCode code = one_point_build(Curve::make(3, 4), 7, 8);
    SearchOptions opts;
    opts.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(css_distance(code.c1, code.c2, opts));
}
BENCHMARK(BM_CssDistance)->Unit(benchmark::kMillisecond);

void BM_BzDual(benchmark::State &state) {
    Divisor g;
    g.add(Place::infinity(), 7);
    const LinearCode om = omega_code(evaluation_code(Curve::make(3, 4), g));
    SearchOptions opts;
    opts.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(bz_min_weight(om, opts));
}
BENCHMARK(BM_BzDual)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
