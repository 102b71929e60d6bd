#include <doctest.h>

#include <random>

#include "hlgap/matrix_kernel.hpp"
#include "oracles.hpp"

using namespace hlgap;

namespace {

SymMatrixd sym(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  Blockd m(n, n);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return SymMatrixd(m);
}

SymMatrixd cycle(int n) {
  Blockd a = Blockd::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, (i + 1) % n) = a((i + 1) % n, i) = 1.0;
  return SymMatrixd(a);
}

SymMatrixd fulvene() {
  Blockd a = Blockd::Zero(6, 6);
  for (auto [i, j] : {std::pair{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {4, 6}})
    a(i - 1, j - 1) = a(j - 1, i - 1) = 1.0;
  return SymMatrixd(a);
}

void check_values(const Vectord& got, std::initializer_list<double> want,
                  double tol) {
  REQUIRE(got.size() == static_cast<Index>(want.size()));
  Index k = 0;
  for (double w : want) CHECK(std::abs(got(k++) - w) <= tol);
}

}  // namespace

TEST_CASE("SymMatrix rejects malformed input") {
  Blockd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(SymMatrixd{asym}, Error);
  try {
    SymMatrixd{asym};
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
  try {
    SymMatrixd{Blockd(2, 3)};
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  try {
    SymMatrixd{Blockd(0, 0)};
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  Blockd near(2, 2);
  near << 1, 2, 2 + 1e-15, 1;
  CHECK(SymMatrixd::symmetrized(near)(0, 1) == SymMatrixd::symmetrized(near)(1, 0));
}

TEST_CASE("sym_eigen on small known spectra") {
  check_values(sym_eigen(sym({{0, 1}, {1, 0}})).values, {1, -1}, 1e-14);
  check_values(sym_eigen(cycle(6)).values, {2, 1, 1, -1, -1, -2}, 1e-12);
  check_values(sym_eigen(SymMatrixd::identity(4)).values, {1, 1, 1, 1}, 0);
}

TEST_CASE("sym_eigen reconstruction and orthonormality on random input") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto m = SymMatrixd(oracle::random_symmetric(rng, n, 5.0));
    const auto es = sym_eigen(m);
    const Blockd recon =
        es.vectors * es.values.asDiagonal() * es.vectors.transpose();
    CHECK(max_abs((recon - m.dense()).eval()) <= 1e-9 * m.scale());
    CHECK(max_abs((es.vectors.transpose() * es.vectors -
                   Blockd::Identity(n, n)).eval()) <= 1e-9);
    for (Index k = 1; k < n; ++k) CHECK(es.values(k - 1) >= es.values(k));
    const Vectord expected = oracle::eigenvalues_desc(m.dense());
    CHECK(max_abs((es.values - expected).eval()) <= 1e-10 * m.scale());
  }
}

TEST_CASE("sym_eigen is scalar-generic") {
  const Block<long double> c6 = cycle(6).dense().cast<long double>();
  const auto es = sym_eigen(SymMatrix<long double>(c6));
  CHECK(std::abs(es.values(0) - 2.0L) < 1e-15L);
  CHECK(std::abs(es.values(5) + 2.0L) < 1e-15L);
}

TEST_CASE("invert examples") {
  CHECK(max_abs((invert(SymMatrixd::identity(3)).dense() -
                 Blockd::Identity(3, 3)).eval()) <= 1e-15);

  const auto d = invert(sym({{2, 0}, {0, -4}}));
  CHECK(d(0, 0) == doctest::Approx(0.5));
  CHECK(d(1, 1) == doctest::Approx(-0.25));
  CHECK(std::abs(d(0, 1)) <= 1e-15);

  // fulvene inverse as printed, 1-based rows
  Blockd printed(6, 6);
  printed << 0, 0, 0, 0, 1, -1,  //
      0, 0, 1, 0, 0, -1,         //
      0, 1, 0, 0, -1, 1,         //
      0, 0, 0, 0, 0, 1,          //
      1, 0, -1, 0, 0, 1,         //
      -1, -1, 1, 1, 1, -2;
  const auto f_inv = invert(fulvene());
  CHECK(max_abs((f_inv.dense() - printed).eval()) <= 1e-9);
  CHECK(f_inv(5, 5) == doctest::Approx(-2));
  CHECK(f_inv(0, 4) == doctest::Approx(1));
  CHECK(max_abs(f_inv.dense().topLeftCorner(2, 2).eval()) <= 1e-9);
}

TEST_CASE("invert rejects singular matrices") {
  try {
    invert(sym({{1, 1}, {1, 1}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  CHECK_THROWS_AS(invert(SymMatrixd::zero(3)), Error);
}

TEST_CASE("inverse spectrum is the reciprocal spectrum") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const auto m = SymMatrixd(oracle::random_invertible(rng, n, false));
    const auto inv = invert(m);
    CHECK(max_abs((m.dense() * inv.dense() - Blockd::Identity(n, n)).eval()) <= 1e-9);

    std::vector<double> want;
    const Vectord values = eigenvalues(m);
    for (Index k = 0; k < n; ++k) want.push_back(1.0 / values(k));
    std::sort(want.begin(), want.end(), std::greater<>());
    const Vectord got = eigenvalues(inv);
    for (Index k = 0; k < n; ++k)
      CHECK(std::abs(got(k) - want[static_cast<std::size_t>(k)]) <=
            1e-8 * std::abs(want[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("is_psd examples") {
  CHECK(is_psd(SymMatrixd::identity(5), 1e-9));
  CHECK_FALSE(is_psd(sym({{0, 1}, {1, 0}}), 1e-9));
  // eigenvalues {2, 0}
  CHECK(is_psd(sym({{1, 1}, {1, 1}}), 1e-9));
  CHECK(min_eigenvalue(sym({{1, 1}, {1, 1}})) == doctest::Approx(0).scale(1));
}

TEST_CASE("loewner_leq examples and errors") {
  const auto a = sym({{2, 1}, {1, -3}});
  CHECK(loewner_leq(a, a, 1e-9));
  CHECK(loewner_leq(SymMatrixd::zero(3), SymMatrixd::identity(3), 1e-9));
  CHECK_FALSE(loewner_leq(SymMatrixd::identity(3), SymMatrixd::zero(3), 1e-9));
  try {
    loewner_leq(SymMatrixd::identity(2), SymMatrixd::identity(3), 1e-9);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("loewner_leq behaves as a partial order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    const auto a = SymMatrixd(oracle::random_symmetric(rng, n));
    const Blockd g1 = oracle::random_symmetric(rng, n);
    const Blockd g2 = oracle::random_symmetric(rng, n);
    const auto b = SymMatrixd::symmetrized(a.dense() + g1 * g1.transpose());
    const auto c = SymMatrixd::symmetrized(b.dense() + g2 * g2.transpose());

    CHECK(loewner_leq(a, a, 1e-9));
    CHECK(loewner_leq(a, b, 1e-9));
    CHECK(loewner_leq(b, c, 1e-9));
    CHECK(loewner_leq(a, c, 1e-9));
    // antisymmetry: both directions only when the matrices coincide
    if (loewner_leq(b, a, 1e-9)) CHECK(max_abs((b - a).dense()) <= 1e-7 * b.scale());
  }
}

TEST_CASE("schur_complement examples") {
  const auto a = sym({{1, 2}, {2, -1}});
  const auto b = sym({{3, 1}, {1, 2}});
  CHECK(schur_complement(a, b, Blockd::Zero(2, 2)) == a);
  const auto s = schur_complement(SymMatrixd::identity(2), SymMatrixd::identity(2),
                                  Blockd::Identity(2, 2));
  CHECK(max_abs(s.dense()) <= 1e-15);
  CHECK_THROWS_AS(schur_complement(a, b, Blockd::Zero(3, 2)), Error);
  CHECK_THROWS_AS(schur_complement(a, SymMatrixd::zero(2), Blockd::Zero(2, 2)), Error);

  // fulvene bridged over its first two vertices: S = A
  const auto f = fulvene();
  Blockd h = Blockd::Zero(6, 6);
  h(1, 1) = 1.0;
  h(3, 0) = 2.0;
  CHECK(max_abs((schur_complement(f, f, h).dense() - f.dense()).eval()) <= 1e-12);
}

TEST_CASE("block_inverse examples") {
  const auto a = sym({{1, 2}, {2, -1}});
  const auto b = sym({{3, 1}, {1, 2}});
  const auto bi = block_inverse(a, b, Blockd::Zero(2, 2));
  const auto want = block_diagonal(invert(a), invert(b));
  CHECK(max_abs((bi.dense() - want.dense()).eval()) <= 1e-12);

  Blockd h(2, 2);
  h << 0.5, -1, 2, 0.25;
  const auto b_inv = invert(b);
  const Blockd q = schur_q(h, b_inv);
  const Blockd z = schur_z(h, b_inv);
  CHECK(max_abs((q * z - Blockd::Identity(4, 4)).eval()) <= 1e-14);
  CHECK(max_abs((z * q - Blockd::Identity(4, 4)).eval()) <= 1e-14);

  // C^{-1} = Q^T diag(S^{-1}, B^{-1}) Q
  const auto s_inv = invert(schur_complement(a, b, h));
  const Blockd congruence =
      q.transpose() * block_diagonal(s_inv, b_inv).dense() * q;
  CHECK(max_abs((congruence - block_inverse(a, b, h).dense()).eval()) <= 1e-9);
}

TEST_CASE("block_inverse agrees with direct inversion on random instances") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const int n = dim(rng);
    const int m = dim(rng);
    const auto a = SymMatrixd(oracle::random_invertible(rng, n, false, 1.0, 3.0));
    const auto b = SymMatrixd(oracle::random_invertible(rng, m, false, 1.0, 3.0));
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    Blockd h(n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) h(i, j) = u(rng);

    const auto c = assemble(a, b, h);
    const auto s = schur_complement(a, b, h);
    if (oracle::eigenvalues_desc(s.dense()).cwiseAbs().minCoeff() < 0.05) continue;

    const auto bi = block_inverse(a, b, h);
    CHECK(max_abs((bi.dense() - invert(c).dense()).eval()) <= 1e-9);
    CHECK(max_abs((bi.dense() - oracle::inverse(c.dense())).eval()) <= 1e-9);

    const double det_c = oracle::determinant(c.dense());
    const double det_bs =
        oracle::determinant(b.dense()) * oracle::determinant(s.dense());
    CHECK(std::abs(det_c - det_bs) <= 1e-8 * std::abs(det_c));
    CHECK(std::abs(determinant(c) - det_c) <= 1e-8 * std::abs(det_c));
  }
}
