// Copyright 2026 The dloss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial vs OpenMP timings for the hot kernels. Also confirms both paths agree
// bit for bit.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "dloss/kernels.hpp"
#include "dloss/random.hpp"

namespace k = dloss::kernels;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

std::vector<float> random_vec(std::size_t n, std::uint64_t seed) {
  dloss::Rng rng(seed);
  std::vector<float> v(n);
  for (auto& x : v) x = static_cast<float>(rng.normal());
  return v;
}

bool same(const std::vector<float>& a, const std::vector<float>& b) {
  return std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

int failures = 0;

void row(const char* name, const std::function<void()>& s, const std::function<void()>& p,
         const std::vector<float>& out_s, const std::vector<float>& out_p, int reps) {
  const double ts = time_ms(s, reps);
  const double tp = time_ms(p, reps);
  const bool ok = same(out_s, out_p);
  failures += ok ? 0 : 1;
  std::printf("%-28s serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
              ok ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  k::configure_threads_from_env();
  const int reps = argc > 1 ? std::stoi(argv[1]) : 5;
  std::printf("threads: %d\n", k::max_threads());

  {
    const std::size_t m = 400, kk = 784, n = 256;
    const auto a = random_vec(m * kk, 1), b = random_vec(kk * n, 2);
    std::vector<float> cs(m * n), cp(m * n);
    row("matmul 400x784 * 784x256", [&] { k::serial::matmul<float>(a, b, cs, m, kk, n); },
        [&] { k::parallel::matmul<float>(a, b, cp, m, kk, n); }, cs, cp, reps);
  }
  {
    const std::size_t m = 784, kk = 400, n = 256;
    const auto a = random_vec(kk * m, 3), b = random_vec(kk * n, 4);
    std::vector<float> cs(m * n), cp(m * n);
    row("matmul_tn 784x400 * 400x256", [&] { k::serial::matmul_tn<float>(a, b, cs, m, kk, n); },
        [&] { k::parallel::matmul_tn<float>(a, b, cp, m, kk, n); }, cs, cp, reps);
  }
  {
    const std::size_t n = 400, d = 256;
    const auto e = random_vec(n * d, 5);
    std::vector<float> gs(n * n), gp(n * n);
    row("gram 400x256", [&] { k::serial::gram<float>(e, gs, n, d); },
        [&] { k::parallel::gram<float>(e, gp, n, d); }, gs, gp, reps);

    std::vector<float> ds(n * n), dp(n * n);
    std::vector<unsigned char> cls(n * n), clp(n * n);
    row("sq_distances_from_gram 400", [&] { k::serial::sq_distances_from_gram<float>(gs, ds, cls, n); },
        [&] { k::parallel::sq_distances_from_gram<float>(gs, dp, clp, n); }, ds, dp, reps);
  }
  {
    const std::size_t n = 3000, d = 256, rows = 256;
    const auto e = random_vec(n * d, 6);
    std::vector<float> et(d * n), norms(n);
    k::transpose<float>(e, et, n, d);
    k::row_sq_norms<float>(e, norms, n, d);
    std::vector<float> os(rows * n), op(rows * n);
    row("distance_rows 256 of 3000x256",
        [&] { k::serial::distance_rows<float>(e, et, norms, n, d, 0, rows, 1e-16f, os); },
        [&] { k::parallel::distance_rows<float>(e, et, norms, n, d, 0, rows, 1e-16f, op); }, os, op, reps);
  }
  return failures == 0 ? 0 : 1;
}
