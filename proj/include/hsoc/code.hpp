#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>

#include "hsoc/matrix.hpp"
#include "hsoc/parallel.hpp"
#include "hsoc/poly.hpp"

namespace hsoc {

// A linear code over F_{q^2} given by a full-rank generator matrix.
// Dimension 0 is a first-class value (gen has zero rows).
struct LinearCode {
  FieldPtr F;
  std::size_t n = 0, k = 0;
  Matrix gen;
};

inline LinearCode zero_code(FieldPtr F, std::size_t n) {
  if (n == 0) throw error("code length must be positive");
  Matrix g(F, 0, n);
  return {std::move(F), n, 0, std::move(g)};
}

inline LinearCode from_generator(Matrix rows) {
  if (!rows.field()) throw error("generator has no field");
  if (rows.cols() == 0) throw error("code length must be positive");
  std::size_t k = rows.rows();
  if (rank(rows) != k) throw error("generator rows are not independent");
  return {rows.field(), rows.cols(), k, std::move(rows)};
}

struct CyclicSpec {
  std::size_t n = 0;
  std::vector<Fel> g;  // ascending coefficients, must divide x^n - 1
};

// Generator rows are the shifts g, xg, ..., x^{n-deg(g)-1} g with coordinate
// i holding the coefficient of x^i.  reverse_coordinates flips to the
// reversed-coefficient convention (coordinate i <-> x^{n-1-i}).
inline LinearCode cyclic_code(FieldPtr F, const CyclicSpec& spec,
                              bool reverse_coordinates = false) {
  std::vector<Fel> g = spec.g;
  poly_trim(g);
  if (g.empty()) throw error("cyclic generator polynomial is zero");
  const std::size_t n = spec.n, deg = g.size() - 1;
  if (deg >= n) throw error("cyclic generator degree must be below n");
  auto [quo, rem] = poly_divmod(*F, poly_xn_minus_1(*F, n), g);
  if (!rem.empty()) throw error("generator polynomial does not divide x^n - 1");
  Matrix gen(F, n - deg, n);
  for (std::size_t t = 0; t < n - deg; ++t)
    for (std::size_t i = 0; i <= deg; ++i) {
      std::size_t c = t + i;
      gen.at(t, reverse_coordinates ? n - 1 - c : c) = g[i];
    }
  return from_generator(std::move(gen));
}

inline LinearCode dual(const LinearCode& C) {
  Matrix K = right_kernel(C.gen);
  if (K.rows() == 0) return zero_code(C.F, C.n);
  return {C.F, C.n, K.rows(), std::move(K)};
}

inline Matrix frobenius_entrywise(const Matrix& A) {
  Matrix B = A;
  const Field& F = *A.field();
  for (std::size_t i = 0; i < B.rows(); ++i)
    for (std::size_t j = 0; j < B.cols(); ++j) B.at(i, j) = F.frobenius(B.at(i, j));
  return B;
}

// v is in the dual iff v^q is in the Hermitian dual, so conjugating a dual
// basis coordinatewise generates C^{perp_h}.
inline LinearCode hermitian_dual(const LinearCode& C) {
  LinearCode D = dual(C);
  D.gen = frobenius_entrywise(D.gen);
  return D;
}

inline LinearCode truncate(const LinearCode& C, std::vector<std::size_t> support) {
  if (support.empty()) throw error("truncation support is empty");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  if (support.back() >= C.n) throw error("truncation support out of range");
  Matrix rows(C.F, C.k, support.size());
  for (std::size_t i = 0; i < C.k; ++i)
    for (std::size_t j = 0; j < support.size(); ++j)
      rows.at(i, j) = C.gen.at(i, support[j]);
  // the restriction can lose rank; re-reduce to an independent generator
  auto [R, piv] = rref(rows);
  Matrix gen(C.F, piv.size(), support.size());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j) gen.at(i, j) = R.at(i, j);
  if (gen.rows() == 0) return zero_code(C.F, support.size());
  return {C.F, support.size(), gen.rows(), std::move(gen)};
}

inline LinearCode scale(const LinearCode& C, std::span<const Fel> theta) {
  if (theta.size() != C.n) throw error("scaling vector length mismatch");
  const Field& F = *C.F;
  Matrix gen = C.gen;
  for (std::size_t j = 0; j < C.n; ++j) {
    if (theta[j] == 0) throw error("scaling entry is zero");
    for (std::size_t i = 0; i < C.k; ++i)
      gen.at(i, j) = F.mul(gen.at(i, j), theta[j]);
  }
  return {C.F, C.n, C.k, std::move(gen)};
}

inline bool is_hermitian_self_orthogonal(const LinearCode& C) {
  const Field& F = *C.F;
  for (std::size_t i = 0; i < C.k; ++i)
    for (std::size_t j = 0; j < C.k; ++j) {
      Fel s = 0;
      for (std::size_t l = 0; l < C.n; ++l)
        s = F.add(s, F.mul(C.gen.at(i, l), F.frobenius(C.gen.at(j, l))));
      if (s != 0) return false;
    }
  return true;
}

// dual distance >= 3: no zero column and no two projectively equal columns
inline bool is_projective(const LinearCode& C) {
  const Field& F = *C.F;
  std::vector<std::vector<Fel>> cols;
  cols.reserve(C.n);
  for (std::size_t j = 0; j < C.n; ++j) {
    auto c = C.gen.col(j);
    std::size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    if (lead == c.size()) return false;
    Fel iv = F.inv(c[lead]);
    for (auto& x : c) x = F.mul(x, iv);
    cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

inline bool codes_equal(const LinearCode& A, const LinearCode& B) {
  return A.n == B.n && A.k == B.k && same_row_space(A.gen, B.gen);
}

// ---------------------------------------------------------------------------
// enumeration engine

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp,
                                 std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Walks the words sum_j digit_j * row_j for digit vectors in [begin, end),
// little-endian base `alphabet`; digits index field values directly, so
// alphabet == q restricts messages to the subfield.  Consecutive indices
// differ in a few low digits, so each step is a handful of row updates.
template <class Visit>
void scan_words(const Matrix& gen, std::uint32_t alphabet, std::uint64_t begin,
                std::uint64_t end, Visit&& visit) {
  const Field& F = *gen.field();
  const std::size_t k = gen.rows(), n = gen.cols();
  if (begin >= end) return;
  if (k == 0) {
    std::vector<Fel> z(n, 0);
    if (begin == 0) visit(std::uint64_t{0}, std::span<const Fel>(z));
    return;
  }
  // step[j][a]: delta row when digit j moves from value a to a+1 (mod alphabet)
  std::vector<std::vector<Fel>> step(k);
  for (std::size_t j = 0; j < k; ++j) {
    step[j].assign(std::size_t(alphabet) * n, 0);
    for (std::uint32_t a = 0; a < alphabet; ++a) {
      Fel delta = F.sub(Fel((a + 1) % alphabet), Fel(a));
      for (std::size_t l = 0; l < n; ++l)
        step[j][std::size_t(a) * n + l] = F.mul(delta, gen.at(j, l));
    }
  }
  std::vector<std::uint32_t> dig(k, 0);
  {
    std::uint64_t m = begin;
    for (std::size_t j = 0; j < k; ++j) { dig[j] = std::uint32_t(m % alphabet); m /= alphabet; }
  }
  std::vector<Fel> word(n, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (dig[j] == 0) continue;
    for (std::size_t l = 0; l < n; ++l)
      word[l] = F.add(word[l], F.mul(Fel(dig[j]), gen.at(j, l)));
  }
  for (std::uint64_t idx = begin;; ++idx) {
    visit(idx, std::span<const Fel>(word));
    if (idx + 1 == end) break;
    std::size_t j = 0;
    while (true) {
      std::uint32_t a = dig[j];
      const Fel* d = step[j].data() + std::size_t(a) * n;
      for (std::size_t l = 0; l < n; ++l) word[l] = F.add(word[l], d[l]);
      if (a + 1 == alphabet) { dig[j] = 0; ++j; }
      else { dig[j] = a + 1; break; }
    }
  }
}

inline int hamming_weight(std::span<const Fel> v) {
  int w = 0;
  for (Fel x : v) w += x != 0;
  return w;
}

}  // namespace detail

inline std::map<int, std::uint64_t> weight_distribution(const LinearCode& C,
                                                        const RunConfig& cfg = {}) {
  const std::uint64_t total =
      detail::checked_pow(C.F->q2(), C.k, cfg.cap_words);
  if (total > cfg.cap_words)
    throw cap_exceeded("weight distribution: q^(2k) exceeds the word cap");
  unsigned workers = detail::effective_workers(cfg.workers);
  std::vector<std::vector<std::uint64_t>> acc(workers,
                                              std::vector<std::uint64_t>(C.n + 1, 0));
  detail::parallel_ranges(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    auto& counts = acc[w];
    detail::scan_words(C.gen, C.F->q2(), b, e,
                       [&](std::uint64_t, std::span<const Fel> word) {
                         ++counts[detail::hamming_weight(word)];
                       });
  });
  std::map<int, std::uint64_t> out;
  for (std::size_t wt = 0; wt <= C.n; ++wt) {
    std::uint64_t c = 0;
    for (auto& a : acc) c += a[wt];
    if (c) out[(int)wt] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// minimal column dependencies
//
// A minimal dependent column set of H is one every proper subset of which is
// independent; its relation vector is unique up to scale and has full
// support, so these sets are exactly the supports of the minimal-support
// codewords of the code checked by H.  The searches below do iterative
// deepening over the subset size with an incremental echelon form.

namespace detail {

struct Dependency {
  std::vector<std::size_t> support;  // ascending column indices
  std::vector<Fel> coeffs;           // relation, normalised to leading 1
};

class DepSearcher {
 public:
  DepSearcher(const Matrix& H, int w)
      : F_(*H.field()), m_(H.rows()), n_(H.cols()), w_(w) {
    cols_.resize(n_);
    for (std::size_t c = 0; c < n_; ++c) cols_[c] = H.col(c);
    ech_.assign(std::size_t(w) * m_, 0);
    pos_.assign(w, 0);
    combo_.assign(std::size_t(w) * w, 0);
    chosen_.assign(w, 0);
    cur_.assign(m_, 0);
    alpha_.assign(w, 0);
  }

  // emit(dep) -> false to stop the search
  template <class Emit>
  void run(std::size_t first_begin, std::size_t first_end, Emit&& emit) {
    stop_ = false;
    for (std::size_t c = first_begin; c < first_end && !stop_; ++c) descend(0, c, emit);
  }

 private:
  template <class Emit>
  void descend(int depth, std::size_t c, Emit& emit) {
    // reduce column c against the echelon rows above this depth
    std::copy(cols_[c].begin(), cols_[c].end(), cur_.begin());
    for (int i = 0; i < depth; ++i) {
      Fel f = cur_[pos_[i]];
      alpha_[i] = f;
      if (f == 0) continue;
      const Fel* row = ech_.data() + std::size_t(i) * m_;
      for (std::size_t l = 0; l < m_; ++l) cur_[l] = F_.sub(cur_[l], F_.mul(f, row[l]));
    }
    std::size_t lead = 0;
    while (lead < m_ && cur_[lead] == 0) ++lead;

    if (lead == m_) {
      // dependent: minimal sets are only reported at the target size, and
      // only when every reduction coefficient is active
      if (depth != w_ - 1) return;
      Dependency dep;
      dep.support.assign(chosen_.begin(), chosen_.begin() + depth);
      dep.support.push_back(c);
      dep.coeffs.assign(depth + 1, 0);
      // column c = sum_i alpha_i ech_i with ech_i = sum_j combo[i][j] col_j
      for (int j = 0; j < depth; ++j) {
        Fel s = 0;
        for (int i = j; i < depth; ++i)
          s = F_.add(s, F_.mul(alpha_[i], combo_[std::size_t(i) * w_ + j]));
        dep.coeffs[j] = s;
      }
      dep.coeffs[depth] = F_.neg(1);
      for (Fel x : dep.coeffs)
        if (x == 0) return;  // a proper subset is already dependent
      Fel norm = F_.inv(dep.coeffs[0]);
      for (auto& x : dep.coeffs) x = F_.mul(x, norm);
      if (!emit(dep)) stop_ = true;
      return;
    }
    if (depth == w_ - 1) return;

    // extend the echelon form and recurse
    chosen_[depth] = c;
    pos_[depth] = lead;
    Fel piv_inv = F_.inv(cur_[lead]);
    Fel* row = ech_.data() + std::size_t(depth) * m_;
    for (std::size_t l = 0; l < m_; ++l) row[l] = F_.mul(cur_[l], piv_inv);
    Fel* cb = combo_.data() + std::size_t(depth) * w_;
    std::fill(cb, cb + w_, 0);
    for (int j = 0; j < depth; ++j) {
      Fel s = 0;
      for (int i = j; i < depth; ++i)
        s = F_.add(s, F_.mul(alpha_[i], combo_[std::size_t(i) * w_ + j]));
      cb[j] = F_.mul(F_.neg(s), piv_inv);
    }
    cb[depth] = piv_inv;
    // alpha_ entries are consumed before any recursion, so children may
    // clobber them freely
    for (std::size_t nc = c + 1; nc + (w_ - depth - 2) < n_ && !stop_; ++nc)
      descend(depth + 1, nc, emit);
  }

  const Field& F_;
  std::size_t m_, n_;
  int w_;
  std::vector<std::vector<Fel>> cols_;
  std::vector<Fel> ech_, combo_, cur_, alpha_;
  std::vector<std::size_t> pos_, chosen_;
  bool stop_ = false;
};

// All minimal dependencies among exactly w columns, in lexicographic
// support order.
inline std::vector<Dependency> dependencies_exact(const Matrix& H, int w,
                                                  unsigned workers) {
  if (w < 1) return {};
  const std::size_t n = H.cols();
  if (std::size_t(w) > n) return {};
  workers = effective_workers(workers);
  std::size_t top = n - std::size_t(w - 1);
  unsigned parts = workers > 1 && top > 1 ? std::min<std::size_t>(workers, top) : 1;
  std::vector<std::vector<Dependency>> found(parts);
  parallel_ranges(top, parts, [&](unsigned part, std::uint64_t b, std::uint64_t e) {
    DepSearcher s(H, w);
    s.run(b, e, [&](const Dependency& d) {
      found[part].push_back(d);
      return true;
    });
  });
  std::vector<Dependency> out;
  for (auto& f : found)
    for (auto& d : f) out.push_back(std::move(d));
  return out;
}

// Smallest w <= wmax (starting at wmin) admitting a minimal dependency that
// `accept` approves; deterministic: returns the lexicographically first
// accepted dependency at that w.
inline std::optional<std::pair<int, Dependency>> min_dependency(
    const Matrix& H, int wmin, int wmax, unsigned workers,
    const std::function<bool(const Dependency&)>& accept = nullptr) {
  const std::size_t n = H.cols();
  workers = effective_workers(workers);
  for (int w = std::max(1, wmin); w <= wmax && std::size_t(w) <= n; ++w) {
    std::size_t top = n - std::size_t(w - 1);
    unsigned parts = workers > 1 && top > 1 ? std::min<std::size_t>(workers, top) : 1;
    std::vector<std::optional<Dependency>> first(parts);
    parallel_ranges(top, parts, [&](unsigned part, std::uint64_t b, std::uint64_t e) {
      DepSearcher s(H, w);
      s.run(b, e, [&](const Dependency& d) {
        if (accept && !accept(d)) return true;
        first[part] = d;
        return false;  // ranges scan supports in lex order; first hit wins
      });
    });
    for (auto& f : first)
      if (f) return std::make_pair(w, std::move(*f));
  }
  return std::nullopt;
}

// Iterative deepening until the first size with any dependency at all;
// returns that size together with the complete list at that size.
inline std::optional<std::pair<int, std::vector<Dependency>>>
first_level_dependencies(const Matrix& H, int wmax, unsigned workers) {
  for (int w = 1; w <= wmax && std::size_t(w) <= H.cols(); ++w) {
    auto deps = dependencies_exact(H, w, workers);
    if (!deps.empty()) return std::make_pair(w, std::move(deps));
  }
  return std::nullopt;
}

}  // namespace detail

// Minimum distance as the least number of linearly dependent columns of a
// parity check matrix (a generator of the dual); intended for codes whose
// dual has small dimension.
inline int min_distance_via_columns(const LinearCode& C, const RunConfig& cfg = {}) {
  if (C.k == 0) throw error("minimum distance of the zero code is undefined");
  Matrix H = dual(C).gen;  // k == n leaves an empty parity check: distance 1
  if (H.rows() == 0) return 1;
  auto hit = detail::min_dependency(H, 1, cfg.cap_subset, cfg.workers);
  if (!hit)
    throw cap_exceeded("no column dependency found up to the subset cap " +
                       std::to_string(cfg.cap_subset));
  return hit->first;
}

inline int min_distance(const LinearCode& C, const RunConfig& cfg = {}) {
  if (C.k == 0) throw error("minimum distance of the zero code is undefined");
  const std::uint64_t total = detail::checked_pow(C.F->q2(), C.k, cfg.cap_words);
  if (total > cfg.cap_words) return min_distance_via_columns(C, cfg);
  unsigned workers = detail::effective_workers(cfg.workers);
  std::vector<int> best(workers, (int)C.n + 1);
  detail::parallel_ranges(total, workers, [&](unsigned w, std::uint64_t b, std::uint64_t e) {
    int local = (int)C.n + 1;
    detail::scan_words(C.gen, C.F->q2(), b, e,
                       [&](std::uint64_t idx, std::span<const Fel> word) {
                         if (idx == 0) return;
                         int wt = detail::hamming_weight(word);
                         if (wt < local) local = wt;
                       });
    best[w] = local;
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace hsoc
