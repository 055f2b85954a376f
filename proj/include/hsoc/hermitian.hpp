#pragma once

#include <map>
#include <optional>

#include "hsoc/code.hpp"

namespace hsoc {

// ---------------------------------------------------------------------------
// T(G): rows indexed by pairs {i,j}, i <= j, entry g_i g_j^q (i < j) or
// g_i^{q+1} (i == j).  Its right kernel intersected with F_q^n is the
// puncture code; kept as the small-instance cross-check route.
inline Matrix build_T(const Matrix& G) {
  const Field& F = *G.field();
  const std::size_t k = G.rows(), n = G.cols();
  Matrix T(G.field(), k * (k + 1) / 2, n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j, ++r)
      for (std::size_t l = 0; l < n; ++l) {
        Fel gi = G.at(i, l), gj = G.at(j, l);
        T.at(r, l) = (i == j) ? F.norm(gi) : F.mul(gi, F.frobenius(gj));
      }
  return T;
}

// M(G): k^2 rows indexed by ordered pairs (i,j) in row-major order.  Every
// entry is fixed by x -> x^q, so the whole matrix lives in F_q and the
// puncture code is its right kernel computed there.
inline Matrix build_M(const Matrix& G, Fel e) {
  const Field& F = *G.field();
  if (F.in_subfield(e)) throw error("e must lie outside F_q");
  const std::size_t k = G.rows(), n = G.cols();
  const Fel eq = F.frobenius(e);
  Matrix M(G.field(), k * k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t r = i * k + j;
      for (std::size_t l = 0; l < n; ++l) {
        Fel gi = G.at(i, l), gj = G.at(j, l);
        Fel v;
        if (i == j) {
          v = F.norm(gi);
        } else {
          Fel a = F.mul(gi, F.frobenius(gj));
          Fel b = F.mul(F.frobenius(gi), gj);
          v = (i < j) ? F.add(F.mul(e, a), F.mul(eq, b)) : F.add(a, b);
        }
        if (!F.in_subfield(v))
          throw verify_error("M(G) entry left the subfield");
        M.at(r, l) = v;
      }
    }
  return M;
}

inline Matrix build_M(const Matrix& G) { return build_M(G, G.field()->e()); }

// ---------------------------------------------------------------------------
// puncture code

struct PunctureWord {
  std::vector<Fel> lambda;  // entries in F_q
  int weight = 0;
};

struct PunctureCode {
  FieldPtr F;
  std::size_t n = 0;
  Matrix basis;  // rows over F_q, reduced echelon form
  std::size_t dim() const { return basis.rows(); }
};

inline PunctureCode puncture_code(const LinearCode& C, Fel e) {
  Matrix K = right_kernel(build_M(C.gen, e));
  for (std::size_t i = 0; i < K.rows(); ++i)
    for (std::size_t j = 0; j < K.cols(); ++j)
      if (!C.F->in_subfield(K.at(i, j)))
        throw verify_error("puncture basis entry left the subfield");
  return {C.F, C.n, std::move(K)};
}

inline PunctureCode puncture_code(const LinearCode& C) {
  return puncture_code(C, C.F->e());
}

// Independent route: split T(G) entrywise over the basis {1, e} of F_{q^2}
// as an F_q-space; a subfield vector kills T iff it kills both parts.
inline PunctureCode puncture_code_oracle(const LinearCode& C) {
  const Field& F = *C.F;
  Matrix T = build_T(C.gen);
  Matrix S(C.F, 2 * T.rows(), T.cols());
  for (std::size_t i = 0; i < T.rows(); ++i)
    for (std::size_t j = 0; j < T.cols(); ++j) {
      S.at(2 * i, j) = F.lo(T.at(i, j));
      S.at(2 * i + 1, j) = F.hi(T.at(i, j));
    }
  return {C.F, C.n, right_kernel(S)};
}

struct PunctureWeights {
  std::map<int, std::uint64_t> count;            // over all q^dim words
  std::map<int, PunctureWord> representative;    // lex-least word per weight
};

inline PunctureWeights weight_set(const PunctureCode& P, const RunConfig& cfg = {}) {
  const std::uint64_t total =
      detail::checked_pow(P.F->q(), P.dim(), cfg.cap_words);
  if (total > cfg.cap_words)
    throw cap_exceeded("puncture weight set: q^dim exceeds the word cap");
  unsigned workers = detail::effective_workers(cfg.workers);
  std::vector<std::vector<std::uint64_t>> counts(
      workers, std::vector<std::uint64_t>(P.n + 1, 0));
  std::vector<std::map<int, std::vector<Fel>>> reps(workers);
  detail::parallel_ranges(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    detail::scan_words(P.basis, P.F->q(), b, e,
                       [&](std::uint64_t, std::span<const Fel> word) {
                         int wt = detail::hamming_weight(word);
                         ++counts[w][wt];
                         auto it = reps[w].find(wt);
                         if (it == reps[w].end())
                           reps[w].emplace(wt, std::vector<Fel>(word.begin(), word.end()));
                         else if (std::lexicographical_compare(word.begin(), word.end(),
                                                               it->second.begin(),
                                                               it->second.end()))
                           it->second.assign(word.begin(), word.end());
                       });
  });
  PunctureWeights out;
  for (std::size_t wt = 0; wt <= P.n; ++wt) {
    std::uint64_t c = 0;
    for (auto& a : counts) c += a[wt];
    if (c) out.count[(int)wt] = c;
  }
  for (auto& r : reps)
    for (auto& [wt, word] : r) {
      auto it = out.representative.find(wt);
      if (it == out.representative.end())
        out.representative.emplace(wt, PunctureWord{word, wt});
      else if (word < it->second.lambda)
        it->second.lambda = word;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Hermitian forms

// H(x) = sum_{i<j} (h_ij x_i x_j^q + h_ij^q x_i^q x_j) + sum_i d_i x_i^{q+1},
// stored as the full k x k coefficient matrix a with a_ij = h_ij (i < j),
// a_ji = h_ij^q and a_ii = d_i in F_q, so evaluation is x . (a x^(q)).
struct HermitianForm {
  FieldPtr F;
  std::size_t k = 0;
  std::vector<Fel> a;  // k*k, row-major

  Fel h(std::size_t i, std::size_t j) const { return a[i * k + j]; }  // i < j
  Fel d(std::size_t i) const { return a[i * k + i]; }
};

inline Fel evaluate_form(const HermitianForm& H, std::span<const Fel> x) {
  if (x.size() != H.k) throw error("point length mismatch in form evaluation");
  const Field& F = *H.F;
  Fel acc = 0;
  for (std::size_t i = 0; i < H.k; ++i) {
    if (x[i] == 0) continue;
    Fel row = 0;
    const Fel* ai = H.a.data() + i * H.k;
    for (std::size_t j = 0; j < H.k; ++j) {
      if (x[j] == 0) continue;
      row = F.add(row, F.mul(ai[j], F.frobenius(x[j])));
    }
    acc = F.add(acc, F.mul(x[i], row));
  }
  if (!F.in_subfield(acc)) throw verify_error("Hermitian form value left F_q");
  return acc;
}

// left-kernel coordinates (i,j) row-major  ->  form, via h_ij = e v_ij + v_ji
inline HermitianForm form_from_coords(FieldPtr F, std::size_t k,
                                      std::span<const Fel> v) {
  if (v.size() != k * k) throw error("coordinate length mismatch");
  const Field& f = *F;
  const Fel e = f.e();
  HermitianForm H{F, k, std::vector<Fel>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) {
    if (!f.in_subfield(v[i * k + i]))
      throw error("diagonal coordinate outside F_q");
    H.a[i * k + i] = v[i * k + i];
    for (std::size_t j = i + 1; j < k; ++j) {
      Fel hij = f.add(f.mul(e, v[i * k + j]), v[j * k + i]);
      H.a[i * k + j] = hij;
      H.a[j * k + i] = f.frobenius(hij);
    }
  }
  return H;
}

// inverse conversion: v_ij = (h_ij - h_ij^q) / (e - e^q), v_ji = h_ij - e v_ij
inline std::vector<Fel> form_coords(const HermitianForm& H) {
  const Field& F = *H.F;
  const Fel e = F.e();
  const Fel de = F.sub(e, F.frobenius(e));
  std::vector<Fel> v(H.k * H.k, 0);
  for (std::size_t i = 0; i < H.k; ++i) {
    v[i * H.k + i] = H.d(i);
    for (std::size_t j = i + 1; j < H.k; ++j) {
      Fel hij = H.h(i, j);
      Fel vij = F.div(F.sub(hij, F.frobenius(hij)), de);
      Fel vji = F.sub(hij, F.mul(e, vij));
      if (!F.in_subfield(vij) || !F.in_subfield(vji))
        throw verify_error("form coordinates left F_q");
      v[i * H.k + j] = vij;
      v[j * H.k + i] = vji;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// projective points

struct PointSet {
  FieldPtr F;
  std::size_t k = 0;
  std::vector<std::vector<Fel>> pts;  // canonical: first nonzero coordinate 1
};

inline std::vector<Fel> canonical_point(const Field& F, std::vector<Fel> x) {
  std::size_t lead = 0;
  while (lead < x.size() && x[lead] == 0) ++lead;
  if (lead == x.size()) throw error("the zero vector is not a projective point");
  Fel iv = F.inv(x[lead]);
  if (iv != 1)
    for (auto& c : x) c = F.mul(c, iv);
  return x;
}

inline PointSet columns_as_points(const LinearCode& C) {
  if (!is_projective(C))
    throw error("code is not projective (dual distance below 3)");
  PointSet X{C.F, C.k, {}};
  X.pts.reserve(C.n);
  for (std::size_t j = 0; j < C.n; ++j)
    X.pts.push_back(canonical_point(*C.F, C.gen.col(j)));
  return X;
}

inline Matrix point_matrix(const PointSet& X) {
  Matrix G(X.F, X.k, X.pts.size());
  for (std::size_t j = 0; j < X.pts.size(); ++j)
    for (std::size_t i = 0; i < X.k; ++i) G.at(i, j) = X.pts[j][i];
  return G;
}

// Basis of the space of Hermitian forms vanishing on X, as the left kernel
// of M over F_q; size is k^2 - rank M.
inline std::vector<HermitianForm> hf_basis(const PointSet& X) {
  Matrix M = build_M(point_matrix(X));
  Matrix K = left_kernel(M);
  std::vector<HermitianForm> out;
  out.reserve(K.rows());
  for (std::size_t i = 0; i < K.rows(); ++i) {
    HermitianForm H = form_from_coords(X.F, X.k, K.row(i));
    for (const auto& x : X.pts)
      if (evaluate_form(H, x) != 0)
        throw verify_error("basis form does not vanish on X");
    out.push_back(std::move(H));
  }
  return out;
}

inline std::uint64_t projective_point_count(const Field& F, std::size_t k) {
  std::uint64_t total = 0, block = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += block;
    block *= F.q2();
  }
  return total;  // (q^{2k} - 1) / (q^2 - 1)
}

// All points of PG(k-1, q^2) annihilating every form, in canonical
// enumeration order (leading-one position, then remaining coordinates in
// value order).  Short-circuits on the first nonzero form value.
inline PointSet common_zeros(std::span<const HermitianForm> forms, std::size_t k,
                             FieldPtr F, const RunConfig& cfg = {}) {
  if (k == 0) throw error("common_zeros requires k >= 1");
  const std::uint64_t total = projective_point_count(*F, k);
  if (total > cfg.cap_points)
    throw cap_exceeded("projective point count exceeds the point cap");
  const Field& f = *F;
  const std::uint32_t Q = f.q2();

  // block b = points with leading one at coordinate b
  std::vector<std::uint64_t> block_begin(k + 1, 0);
  {
    std::uint64_t sz = 1;
    for (std::size_t i = k; i-- > 0;) {
      block_begin[i] = sz;
      sz *= Q;
    }
    // block i spans sz_i = Q^{k-1-i} points; convert to prefix offsets
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t s = block_begin[i];
      block_begin[i] = off;
      off += s;
    }
    block_begin[k] = off;
  }

  unsigned workers = detail::effective_workers(cfg.workers);
  std::vector<std::vector<std::vector<Fel>>> found(workers);
  detail::parallel_ranges(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    std::vector<Fel> x(k), xq(k);
    for (std::uint64_t idx = b; idx < e; ++idx) {
      std::size_t lead = std::upper_bound(block_begin.begin(), block_begin.end(), idx)
                         - block_begin.begin() - 1;
      std::uint64_t rest = idx - block_begin[lead];
      for (std::size_t i = 0; i < lead; ++i) x[i] = 0;
      x[lead] = 1;
      for (std::size_t i = k; i-- > lead + 1;) {
        x[i] = Fel(rest % Q);
        rest /= Q;
      }
      for (std::size_t i = 0; i < k; ++i) xq[i] = f.frobenius(x[i]);
      bool zero = true;
      for (const auto& H : forms) {
        Fel acc = 0;
        for (std::size_t i = lead; i < k; ++i) {
          if (x[i] == 0) continue;
          Fel row = 0;
          const Fel* ai = H.a.data() + i * k;
          for (std::size_t j = lead; j < k; ++j) {
            if (xq[j] == 0) continue;
            row = f.add(row, f.mul(ai[j], xq[j]));
          }
          acc = f.add(acc, f.mul(x[i], row));
        }
        if (acc != 0) { zero = false; break; }
      }
      if (zero) found[w].push_back(x);
    }
  });
  PointSet Z{std::move(F), k, {}};
  for (auto& fw : found)
    for (auto& p : fw) Z.pts.push_back(std::move(p));
  return Z;
}

// ---------------------------------------------------------------------------
// conditions, extension, classification

inline int conditions_imposed(const LinearCode& C) {
  return (int)C.n - (int)puncture_code(C).dim();
}

// dim P(C) = n - k^2 + dim HF(X), with the two sides run through genuinely
// different routes (T-splitting vs the left kernel of M).
inline bool dim_check(const LinearCode& C) {
  std::size_t pdim = puncture_code_oracle(C).dim();
  std::size_t hdim = hf_basis(columns_as_points(C)).size();
  return (long long)pdim ==
         (long long)C.n - (long long)(C.k * C.k) + (long long)hdim;
}

struct Extension {
  std::vector<Fel> point;
  LinearCode code;
};

struct ExtendResult {
  bool applicable = false;  // false when dim P(C) > 0 already
  std::vector<Extension> extensions;
};

inline ExtendResult extend(const LinearCode& C, const RunConfig& cfg = {}) {
  if (puncture_code(C).dim() > 0) return {false, {}};
  PointSet X = columns_as_points(C);
  auto forms = hf_basis(X);
  PointSet Z = common_zeros(forms, C.k, C.F, cfg);
  std::vector<std::vector<Fel>> xs = X.pts;
  std::sort(xs.begin(), xs.end());
  ExtendResult out{true, {}};
  for (auto& z : Z.pts) {
    if (std::binary_search(xs.begin(), xs.end(), z)) continue;
    Matrix gen(C.F, C.k, C.n + 1);
    for (std::size_t i = 0; i < C.k; ++i) {
      for (std::size_t j = 0; j < C.n; ++j) gen.at(i, j) = C.gen.at(i, j);
      gen.at(i, C.n) = z[i];
    }
    LinearCode ext = from_generator(std::move(gen));
    if (puncture_code(ext).dim() != 1)
      throw verify_error("extension does not have puncture dimension 1");
    out.extensions.push_back({z, std::move(ext)});
  }
  return out;
}

enum class Classification { TRUNCATES, EXTENDS, NO_EXTENSION, LARGE_N };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::TRUNCATES:    return "TRUNCATES";
    case Classification::EXTENDS:      return "EXTENDS";
    case Classification::NO_EXTENSION: return "NO_EXTENSION";
    case Classification::LARGE_N:     return "LARGE_N";
  }
  return "?";
}

inline Classification classify(const LinearCode& C, const RunConfig& cfg = {}) {
  if (!is_projective(C))
    throw error("code is not projective (dual distance below 3)");
  if (C.n > C.k * C.k) return Classification::LARGE_N;
  if (puncture_code(C).dim() > 0) return Classification::TRUNCATES;
  PointSet X = columns_as_points(C);
  PointSet Z = common_zeros(hf_basis(X), C.k, C.F, cfg);
  return Z.pts.size() > X.pts.size() ? Classification::EXTENDS
                                     : Classification::NO_EXTENSION;
}

}  // namespace hsoc
