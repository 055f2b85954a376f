#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace hsoc;

TEST_CASE("rref of identity and zero matrices", "[matrix]") {
  auto F = test::f4();
  Matrix I(F, 3, 3);
  for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
  auto [R, piv] = rref(I);
  CHECK(R == I);
  CHECK(piv == std::vector<std::size_t>{0, 1, 2});

  Matrix Z(F, 2, 4);
  auto rz = rref(Z);
  CHECK(rz.mat == Z);
  CHECK(rz.pivots.empty());
}

TEST_CASE("rref preserves the row space and is idempotent", "[matrix]") {
  std::mt19937_64 rng(1);
  for (auto F : {test::f4(), test::f9()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix A = test::random_matrix(F, 4, 6, rng);
      Matrix R = rref(A).mat;
      CHECK(same_row_space(A, R));
      CHECK(rref(R).mat == R);
      // cross-check membership with the brute-force oracle on a small case
      if (trial == 0) {
        Matrix S = test::random_matrix(F, 2, 4, rng);
        Matrix RS = test::drop_zero_rows(rref(S).mat);
        for (std::size_t i = 0; i < RS.rows(); ++i) {
          std::vector<Fel> v(RS.row(i).begin(), RS.row(i).end());
          CHECK(test::brute_in_span(S, v));
        }
      }
    }
  }
}

TEST_CASE("rank equals rank of the transpose", "[matrix]") {
  std::mt19937_64 rng(2);
  auto F = test::f9();
  Matrix I(F, 5, 5);
  for (int i = 0; i < 5; ++i) I.at(i, i) = 1;
  CHECK(rank(I) == 5);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix A = test::random_matrix(F, 3 + trial % 3, 5, rng);
    CHECK(rank(A) == rank(transpose(A)));
  }
}

TEST_CASE("kernels annihilate and have complementary dimension", "[matrix]") {
  auto F = test::f4();
  Matrix I(F, 3, 3);
  for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
  CHECK(right_kernel(I).rows() == 0);

  Matrix Z(F, 2, 3);
  CHECK(right_kernel(Z).rows() == 3);

  std::mt19937_64 rng(3);
  for (auto Ff : {test::f4(), test::f9()}) {
    for (int trial = 0; trial < 25; ++trial) {
      Matrix A = test::random_matrix(Ff, 3, 6, rng);
      Matrix K = right_kernel(A);
      CHECK(rank(A) + K.rows() == A.cols());
      for (std::size_t i = 0; i < K.rows(); ++i)
        for (std::size_t r = 0; r < A.rows(); ++r) {
          Fel s = 0;
          for (std::size_t c = 0; c < A.cols(); ++c)
            s = Ff->add(s, Ff->mul(A.at(r, c), K.at(i, c)));
          CHECK(s == 0);
        }
      Matrix L = left_kernel(A);
      CHECK(rank(A) + L.rows() == A.rows());
      if (L.rows()) CHECK(test::drop_zero_rows(mat_mul(L, A)).rows() == 0);
      // canonical form: kernels come out already reduced
      CHECK(rref(K).mat == K);
    }
  }
}

TEST_CASE("in_span agrees with brute-force combination search", "[matrix]") {
  std::mt19937_64 rng(4);
  auto F = test::f4();
  Matrix A = test::random_matrix(F, 2, 4, rng);
  std::vector<Fel> first(A.row(0).begin(), A.row(0).end());
  CHECK(in_span(A, first));
  CHECK(in_span(A, std::vector<Fel>(4, 0)));
  for (int trial = 0; trial < 40; ++trial) {
    Matrix B = test::random_matrix(F, 2, 4, rng);
    std::vector<Fel> v(4);
    std::uniform_int_distribution<int> dist(0, 3);
    for (auto& x : v) x = Fel(dist(rng));
    CHECK(in_span(B, v) == test::brute_in_span(B, v));
  }
}

TEST_CASE("mixed-field operands are rejected", "[matrix]") {
  Matrix A(test::f4(), 2, 2);
  Matrix B(test::f9(), 2, 2);
  CHECK_THROWS_AS(mat_mul(A, B), error);
  CHECK_THROWS_AS(vstack(A, B), error);
}
