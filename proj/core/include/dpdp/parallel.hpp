#pragma once

#include <exception>
#include <utility>

#include "dpdp/types.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Minimal binary fork-join layer. All algorithms in this library are written
// against par_do / parallel_for / parallel_reduce only, so results are
// schedule-independent: writes go to disjoint slots and reductions are
// evaluated over a fixed splitting tree.

namespace dpdp {

int num_workers();
void set_num_workers(int n);  // fork-join pool size; 0 = hardware default

namespace detail {

#ifdef _OPENMP
template <class Fa, class Fb>
void fork_join_impl(Fa& fa, Fb& fb) {
  std::exception_ptr ea, eb;
#pragma omp taskgroup
  {
#pragma omp task shared(fa, ea) untied
    {
      try {
        fa();
      } catch (...) {
        ea = std::current_exception();
      }
    }
    try {
      fb();
    } catch (...) {
      eb = std::current_exception();
    }
  }
  if (ea) std::rethrow_exception(ea);
  if (eb) std::rethrow_exception(eb);
}
#endif

}  // namespace detail

// Runs f inside one worker pool. Phase-parallel solvers wrap their whole
// round loop so per-round forks reuse the team instead of re-spawning it.
template <class F>
void with_pool(F&& f) {
#ifdef _OPENMP
  if (omp_in_parallel() || num_workers() == 1) {
    f();
    return;
  }
  std::exception_ptr ep;
#pragma omp parallel num_threads(num_workers())
#pragma omp single
  {
    try {
      f();
    } catch (...) {
      ep = std::current_exception();
    }
  }
  if (ep) std::rethrow_exception(ep);
#else
  f();
#endif
}

template <class Fa, class Fb>
void par_do(Fa&& fa, Fb&& fb) {
#ifdef _OPENMP
  if (num_workers() == 1) {
    fa();
    fb();
  } else if (omp_in_parallel()) {
    detail::fork_join_impl(fa, fb);
  } else {
    with_pool([&] { detail::fork_join_impl(fa, fb); });
  }
#else
  fa();
  fb();
#endif
}

namespace detail {

template <class F>
void pfor_rec(Index lo, Index hi, Index grain, const F& f) {
  if (hi - lo <= grain) {
    for (Index i = lo; i < hi; ++i) f(i);
    return;
  }
  const Index mid = lo + (hi - lo) / 2;
  par_do([&] { pfor_rec(lo, mid, grain, f); },
         [&] { pfor_rec(mid, hi, grain, f); });
}

}  // namespace detail

template <class F>
void parallel_for(Index lo, Index hi, const F& f, Index grain = 1024) {
  if (lo >= hi) return;
  if (hi - lo <= grain || num_workers() == 1) {
    for (Index i = lo; i < hi; ++i) f(i);
    return;
  }
  detail::pfor_rec(lo, hi, grain, f);
}

// reduce(map(lo), map(lo+1), ...) over a fixed binary tree.
template <class T, class Map, class Reduce>
T parallel_reduce(Index lo, Index hi, T identity, const Map& map,
                  const Reduce& reduce, Index grain = 1024) {
  if (lo >= hi) return identity;
  if (hi - lo <= grain || num_workers() == 1) {
    T acc = identity;
    for (Index i = lo; i < hi; ++i) acc = reduce(acc, map(i));
    return acc;
  }
  const Index mid = lo + (hi - lo) / 2;
  T left{}, right{};
  par_do([&] { left = parallel_reduce(lo, mid, identity, map, reduce, grain); },
         [&] { right = parallel_reduce(mid, hi, identity, map, reduce, grain); });
  return reduce(left, right);
}

}  // namespace dpdp
