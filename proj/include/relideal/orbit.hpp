/*
 * Copyright 2026 The relideal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef RELIDEAL_ORBIT_HPP
#define RELIDEAL_ORBIT_HPP

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relideal/multipoly.hpp"
#include "relideal/permgrp.hpp"

namespace relideal {

// A free orbit configuration: a base point with pairwise distinct
// coordinates acted on by G through sigma(x)_i = x_sigma(i), together with
// the stabilizer chain data of G.
template <class Ring>
struct OrbitConfig {
  const StabChain* chain = nullptr;
  std::vector<typename Ring::Elem> point;

  int n() const { return chain->n(); }
};

enum class ExecPolicy { serial, openmp };

namespace detail {

// prod_{y in B(rho, j+1)} (T_j - y) / (rho(x)_j - y)
template <class Ring>
MPoly<Ring> level_factor(const Ring& R, const OrbitConfig<Ring>& cfg,
                         const Perm& rho, int j) {
  const int n = cfg.n();
  MPoly<Ring> num = mp_const(R, n, R.one());
  auto den = R.one();
  for (int y : cfg.chain->b_index_set(rho, j)) {
    MPoly<Ring> lin(n);
    lin.add_term(R, Monomial::unit(n, j), R.one());
    lin.add_term(R, Monomial(n), R.neg(cfg.point[y]));
    num = mp_mul(R, num, lin);
    den = R.mul(den, R.sub(cfg.point[rho(j)], cfg.point[y]));
  }
  return mp_scale(R, num, R.inv(den));
}

// Sum of x_rho(k)^d * prod_{j<=k} level_factor(rho, j) over a contiguous
// run of coset representatives. Representatives are sorted by image tuple,
// so consecutive ones share prefix products; the run keeps a stack of
// partial products and only recomputes from the first differing level.
template <class Ring>
MPoly<Ring> coset_sum_run(const Ring& R, const OrbitConfig<Ring>& cfg, int k,
                          const std::vector<Perm>& reps, std::size_t lo,
                          std::size_t hi) {
  const int n = cfg.n();
  const int d = cfg.chain->indices()[k];
  MPoly<Ring> acc(n);
  std::vector<MPoly<Ring>> stack(k + 1);
  const Perm* prev = nullptr;
  for (std::size_t r = lo; r < hi; ++r) {
    const Perm& rho = reps[r];
    int j0 = 0;
    if (prev) {
      while (j0 <= k && (*prev)(j0) == rho(j0)) ++j0;
    }
    for (int j = j0; j <= k; ++j) {
      MPoly<Ring> f = level_factor(R, cfg, rho, j);
      stack[j] = (j == 0) ? std::move(f) : mp_mul(R, stack[j - 1], f);
    }
    auto w = R.one();
    const auto& v = cfg.point[rho(k)];
    for (int t = 0; t < d; ++t) w = R.mul(w, v);
    acc = mp_add(R, acc, mp_scale(R, stack[k], w));
    prev = &rho;
  }
  return acc;
}

}  // namespace detail

// The separator of the orbit point rho(x): 1 at rho(x), 0 on the rest of
// the orbit, supported on the order ideal.
template <class Ring>
MPoly<Ring> separator(const Ring& R, const OrbitConfig<Ring>& cfg,
                      const Perm& rho) {
  const int n = cfg.n();
  MPoly<Ring> h = mp_const(R, n, R.one());
  for (int j = 0; j < n; ++j)
    h = mp_mul(R, h, detail::level_factor(R, cfg, rho, j));
  return h;
}

// g_{k+1} of the lex Groebner basis of the vanishing ideal of the orbit.
template <class Ring>
MPoly<Ring> orbit_ideal_element(const Ring& R, const OrbitConfig<Ring>& cfg,
                                int k, ExecPolicy policy = ExecPolicy::serial) {
  const int n = cfg.n();
  const int d = cfg.chain->indices()[k];
  const std::vector<Perm>& reps = cfg.chain->reps(k);
  MPoly<Ring> sum(n);
  if (policy == ExecPolicy::serial || reps.size() < 8) {
    sum = detail::coset_sum_run(R, cfg, k, reps, 0, reps.size());
  } else {
#ifdef _OPENMP
    int nthreads = omp_get_max_threads();
    std::vector<MPoly<Ring>> partial(nthreads, MPoly<Ring>(n));
#pragma omp parallel num_threads(nthreads)
    {
      int t = omp_get_thread_num();
      int nt = omp_get_num_threads();
      std::size_t chunk = (reps.size() + nt - 1) / nt;
      std::size_t lo = t * chunk;
      std::size_t hi = std::min(reps.size(), lo + chunk);
      if (lo < hi) partial[t] = detail::coset_sum_run(R, cfg, k, reps, lo, hi);
    }
    for (const auto& part : partial) sum = mp_add(R, sum, part);
#else
    sum = detail::coset_sum_run(R, cfg, k, reps, 0, reps.size());
#endif
  }
  MPoly<Ring> g(n);
  g.add_term(R, Monomial::unit(n, k, d), R.one());
  return mp_sub(R, g, sum);
}

// [g_1..g_n]; a reduced lex Groebner basis of I(X) when the coefficients
// form a field
template <class Ring>
std::vector<MPoly<Ring>> orbit_ideal_basis(const Ring& R,
                                           const OrbitConfig<Ring>& cfg,
                                           ExecPolicy policy = ExecPolicy::serial) {
  std::vector<MPoly<Ring>> out;
  out.reserve(cfg.n());
  for (int k = 0; k < cfg.n(); ++k)
    out.push_back(orbit_ideal_element(R, cfg, k, policy));
  return out;
}

}  // namespace relideal

#endif
