// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <complex>

#include "sbhclock/su11.hpp"

using namespace sbhclock;
using namespace sbhclock::su11;

namespace {

double hermiticity_defect(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("ladder representation: matrix elements at K = 1/2") {
  const Su11Rep rep = build_rep(0.5, 8);
  CHECK(rep.dim() == 9);
  // Lowering weight: diag(1 + 2m) when K = 1/2.
  CHECK(rep.k0(0, 0).real() == doctest::Approx(1.0));
  CHECK(rep.k0(3, 3).real() == doctest::Approx(7.0));
  CHECK(rep.k0(2, 3) == Complex(0.0, 0.0));
  // Raising element (1/K) sqrt((m+1)(2K+m)) with m = 0.
  CHECK(rep.kplus(1, 0).real() == doctest::Approx(2.0));
  CHECK(rep.kplus(0, 1) == Complex(0.0, 0.0));
  CHECK(rep.kminus(0, 1).real() == doctest::Approx(2.0));
}

TEST_CASE("ladder representation: lowering is the adjoint of raising") {
  for (const double K : {0.5, 1.0, 2.5, 10.0}) {
    const Su11Rep rep = build_rep(K, 24);
    CHECK((rep.kminus - rep.kplus.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("ladder representation: rescaled commutators close on the interior block") {
  for (const double K : {0.5, 1.0, 2.5, 10.0}) {
    const Su11Rep rep = build_rep(K, 40);
    CHECK(commutator_residual(rep) <= 1e-12);
  }
}

TEST_CASE("ladder representation: interior Casimir is (K-1)/K, the top row is truncated") {
  for (const double K : {0.5, 1.0, 2.5, 10.0}) {
    const Su11Rep rep = build_rep(K, 30);
    const Eigen::MatrixXcd cas = casimir_matrix(rep);
    const double want = (K - 1.0) / K;
    for (int i = 0; i < rep.cutoff; ++i) {
      CHECK(std::abs(cas(i, i) - Complex(want, 0.0)) <= 1e-12);
      if (i > 0) CHECK(std::abs(cas(i, i - 1)) <= 1e-13);
    }
    // The highest basis state has no image under raising, so its Casimir
    // entry misses a whole ladder term.  It must NOT silently agree.
    CHECK(std::abs(cas(rep.cutoff, rep.cutoff) - Complex(want, 0.0)) > 1.0);
  }
}

TEST_CASE("ladder representation: parameter validation") {
  CHECK_THROWS_AS(build_rep(0.4, 10), ParameterError);
  CHECK_THROWS_AS(build_rep(0.0, 10), ParameterError);
  CHECK_THROWS_AS(build_rep(1.0, 1), ParameterError);
  CHECK_THROWS_AS(build_rep(1.0, 10, 0.0), ParameterError);
  CHECK_THROWS_AS(build_rep(1.0, 10, -2.0), ParameterError);
}

TEST_CASE("generator: hermitian with pinned corner elements") {
  const double J = 2.0;
  const Su11Rep rep = build_rep(0.5, 16, J);
  const HamiltonianXi H = build_H_xi(rep);
  CHECK(H.J == doctest::Approx(J));
  CHECK(hermiticity_defect(H.matrix) <= 1e-15);
  // <0|H|0> = J and <1|H|0> = -(i J / 2K) sqrt(2K); K = 1/2 gives -iJ.
  CHECK(H.matrix(0, 0) == Complex(J, 0.0));
  CHECK(std::abs(H.matrix(1, 0) - Complex(0.0, -J)) <= 1e-15);
  CHECK(std::abs(H.matrix(0, 1) - Complex(0.0, J)) <= 1e-15);
}

TEST_CASE("generator: explicit coupling overrides the stored one") {
  const Su11Rep rep = build_rep(2.5, 12, 3.0);
  const HamiltonianXi a = build_H_xi(rep);
  const HamiltonianXi b = build_H_xi(rep, 1.5);
  CHECK(a.J == doctest::Approx(3.0));
  CHECK(b.J == doctest::Approx(1.5));
  CHECK((a.matrix - 2.0 * b.matrix).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK_THROWS_AS(build_H_xi(rep, 0.0), ParameterError);
}

TEST_CASE("generator: tridiagonal structure") {
  const Su11Rep rep = build_rep(1.0, 20);
  const Eigen::MatrixXcd H = build_H_xi(rep).matrix;
  for (int i = 0; i < rep.dim(); ++i) {
    for (int j = 0; j < rep.dim(); ++j) {
      if (std::abs(i - j) > 1) CHECK(H(i, j) == Complex(0.0, 0.0));
    }
  }
}
