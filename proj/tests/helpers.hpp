#pragma once

#include <random>
#include <set>

#include "hsoc/io.hpp"
#include "hsoc/quantum.hpp"

namespace test {

using namespace hsoc;

inline FieldPtr f4() {
  static FieldPtr F = Field::make(2, 1);
  return F;
}
inline FieldPtr f9() {
  static FieldPtr F = Field::make(3, 1);
  return F;
}

inline Fel el(const FieldPtr& F, const std::string& s) { return parse_element(*F, s); }

inline Matrix mat(const FieldPtr& F, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Fel>> vals;
  for (const auto& r : rows) {
    std::vector<Fel> row;
    for (const auto& tok : r) row.push_back(el(F, tok));
    vals.push_back(std::move(row));
  }
  return Matrix::from_rows(F, vals);
}

inline std::string fixture(const std::string& name) {
  return std::string(HSOC_FIXTURE_DIR) + "/" + name;
}

// --- independent oracles (deliberately brute force) ---

// span membership by enumerating every linear combination
inline bool brute_in_span(const Matrix& rows, const std::vector<Fel>& v) {
  const Field& F = *rows.field();
  const std::size_t k = rows.rows(), n = rows.cols();
  std::vector<std::uint32_t> dig(k, 0);
  while (true) {
    std::vector<Fel> w(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j)
        w[j] = F.add(w[j], F.mul(Fel(dig[i]), rows.at(i, j)));
    if (w == v) return true;
    std::size_t i = 0;
    while (i < k && ++dig[i] == F.q2()) dig[i++] = 0;
    if (i == k) return false;
  }
}

// weight distribution by explicit matrix-vector products per message
inline std::map<int, std::uint64_t> brute_weight_distribution(const LinearCode& C) {
  const Field& F = *C.F;
  std::map<int, std::uint64_t> out;
  std::vector<std::uint32_t> dig(C.k, 0);
  while (true) {
    int wt = 0;
    for (std::size_t j = 0; j < C.n; ++j) {
      Fel s = 0;
      for (std::size_t i = 0; i < C.k; ++i)
        s = F.add(s, F.mul(Fel(dig[i]), C.gen.at(i, j)));
      wt += s != 0;
    }
    ++out[wt];
    std::size_t i = 0;
    while (i < C.k && ++dig[i] == F.q2()) dig[i++] = 0;
    if (i == C.k) break;
  }
  return out;
}

inline Matrix drop_zero_rows(const Matrix& A) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < A.cols(); ++j) nz |= A.at(i, j) != 0;
    if (nz) keep.push_back(i);
  }
  Matrix out(A.field(), keep.size(), A.cols());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out.at(i, j) = A.at(keep[i], j);
  return out;
}

// puncture code by filtering every lambda in F_q^n against T(G) directly
inline Matrix brute_puncture_basis(const LinearCode& C) {
  const Field& F = *C.F;
  Matrix T = build_T(C.gen);
  std::vector<std::vector<Fel>> sols;
  std::vector<std::uint32_t> dig(C.n, 0);
  while (true) {
    std::vector<Fel> lam(C.n);
    for (std::size_t j = 0; j < C.n; ++j) lam[j] = Fel(dig[j]);
    bool ok = true;
    for (std::size_t r = 0; r < T.rows() && ok; ++r) {
      Fel s = 0;
      for (std::size_t j = 0; j < C.n; ++j) s = F.add(s, F.mul(T.at(r, j), lam[j]));
      ok = s == 0;
    }
    if (ok) sols.push_back(std::move(lam));
    std::size_t j = 0;
    while (j < C.n && ++dig[j] == F.q()) dig[j++] = 0;
    if (j == C.n) break;
  }
  Matrix stacked(C.F, sols.size(), C.n);
  for (std::size_t i = 0; i < sols.size(); ++i)
    for (std::size_t j = 0; j < C.n; ++j) stacked.at(i, j) = sols[i][j];
  return drop_zero_rows(rref(stacked).mat);
}

// quantum distance by full enumeration: the least weight over the words of
// the Hermitian dual that lie outside the code itself (or over the nonzero
// words when the code is self-dual)
inline int brute_coset_distance(const LinearCode& Ct) {
  const Field& F = *Ct.F;
  LinearCode H = hermitian_dual(Ct);
  SpanChecker in_code(Ct.gen);
  int best = (int)Ct.n + 1;
  std::vector<std::uint32_t> dig(H.k, 0);
  while (true) {
    std::size_t i = 0;
    while (i < H.k && ++dig[i] == F.q2()) dig[i++] = 0;
    if (i == H.k) break;
    std::vector<Fel> w(Ct.n, 0);
    for (std::size_t r = 0; r < H.k; ++r)
      for (std::size_t j = 0; j < Ct.n; ++j)
        w[j] = F.add(w[j], F.mul(Fel(dig[r]), H.gen.at(r, j)));
    bool excluded = 2 * Ct.k != Ct.n && in_code.contains(w);
    if (excluded) continue;
    int wt = 0;
    for (Fel x : w) wt += x != 0;
    if (wt && wt < best) best = wt;
  }
  return best;
}

// the displayed double-sum definition of a Hermitian form, term by term
inline Fel literal_form_eval(const HermitianForm& H, const std::vector<Fel>& x) {
  const Field& F = *H.F;
  Fel acc = 0;
  for (std::size_t i = 0; i < H.k; ++i)
    for (std::size_t j = i + 1; j < H.k; ++j) {
      Fel hij = H.h(i, j);
      acc = F.add(acc, F.mul(F.mul(hij, x[i]), F.frobenius(x[j])));
      acc = F.add(acc, F.mul(F.mul(F.frobenius(hij), F.frobenius(x[i])), x[j]));
    }
  for (std::size_t i = 0; i < H.k; ++i)
    acc = F.add(acc, F.mul(H.d(i), F.norm(x[i])));
  return acc;
}

// --- randomized inputs ---

inline std::vector<std::vector<Fel>> all_projective_points(const FieldPtr& F, std::size_t k) {
  RunConfig cfg;
  auto Z = common_zeros({}, k, F, cfg);
  return Z.pts;
}

// distinct projective columns spanning F_{q^2}^k, i.e. a projective [n,k] code
inline LinearCode random_projective_code(const FieldPtr& F, std::size_t k, std::size_t n,
                                         std::mt19937_64& rng) {
  auto pts = all_projective_points(F, k);
  if (n > pts.size()) throw std::runtime_error("not enough projective points");
  while (true) {
    std::shuffle(pts.begin(), pts.end(), rng);
    Matrix gen(F, k, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < k; ++i) gen.at(i, j) = pts[j][i];
    if (rank(gen) == k) return from_generator(std::move(gen));
  }
}

inline Matrix random_matrix(const FieldPtr& F, std::size_t r, std::size_t c,
                            std::mt19937_64& rng) {
  Matrix A(F, r, c);
  std::uniform_int_distribution<std::uint32_t> dist(0, F->q2() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A.at(i, j) = Fel(dist(rng));
  return A;
}

inline Matrix random_invertible(const FieldPtr& F, std::size_t k, std::mt19937_64& rng) {
  while (true) {
    Matrix A = random_matrix(F, k, k, rng);
    if (rank(A) == k) return A;
  }
}

}  // namespace test
