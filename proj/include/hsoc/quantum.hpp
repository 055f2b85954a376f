#pragma once

#include "hsoc/hermitian.hpp"

namespace hsoc {

// Stabilizer code parameters [[n, k, d]]_q derived from a Hermitian
// self-orthogonal classical code.
struct QuantumParams {
  std::size_t n = 0;
  std::size_t k = 0;     // n - 2 * dim of the classical code
  int d = 0;
  unsigned q = 0;        // local dimension = subfield order
  int singleton_gap = 0; // n - 2(d-1) - k, never negative
  bool self_dual = false;
};

// Truncate C to the support of a puncture word and rescale coordinate l by
// some theta with theta^{q+1} = lambda_l; the result is Hermitian
// self-orthogonal by construction and verified before returning.
inline LinearCode truncation_from_word(const LinearCode& C,
                                       std::span<const Fel> lambda) {
  if (lambda.size() != C.n) throw error("puncture word length mismatch");
  const Field& F = *C.F;
  std::vector<std::size_t> support;
  std::vector<Fel> theta;
  for (std::size_t l = 0; l < C.n; ++l) {
    if (lambda[l] == 0) continue;
    if (!F.in_subfield(lambda[l]))
      throw error("puncture word entry outside F_q");
    support.push_back(l);
    theta.push_back(F.norm_preimage(lambda[l]));
  }
  if (support.empty()) throw error("puncture word has weight zero");
  LinearCode T = scale(truncate(C, support), theta);
  if (!is_hermitian_self_orthogonal(T))
    throw verify_error("scaled truncation is not Hermitian self-orthogonal");
  return T;
}

inline LinearCode truncation_from_word(const LinearCode& C, const PunctureWord& w) {
  return truncation_from_word(C, std::span<const Fel>(w.lambda));
}

namespace detail {

// Conjugating a dual word coordinatewise lands it in the Hermitian dual, so
// d(C^{perp_h} \ C) is the least w admitting a minimal dependency among w
// columns of the generator whose conjugated relation avoids C.  Subspaces of
// the excluded set are closed under the moves used in the minimality
// argument, so scanning minimal dependencies in increasing size is exact.
inline std::optional<int> hermitian_coset_distance(const LinearCode& C,
                                                   const RunConfig& cfg,
                                                   int wmin = 1) {
  const Field& F = *C.F;
  SpanChecker in_code(C.gen);
  auto accept = [&](const Dependency& dep) {
    std::vector<Fel> v(C.n, 0);
    for (std::size_t t = 0; t < dep.support.size(); ++t)
      v[dep.support[t]] = F.frobenius(dep.coeffs[t]);
    return !in_code.contains(v);
  };
  auto hit = min_dependency(C.gen, wmin, cfg.cap_subset, cfg.workers, accept);
  if (!hit) return std::nullopt;
  return hit->first;
}

}  // namespace detail

inline QuantumParams quantum_params(const LinearCode& Ct, const RunConfig& cfg = {}) {
  if (!is_hermitian_self_orthogonal(Ct))
    throw error("quantum parameters need a Hermitian self-orthogonal code");
  QuantumParams out;
  out.n = Ct.n;
  out.k = Ct.n - 2 * Ct.k;
  out.q = Ct.F->q();
  out.self_dual = (2 * Ct.k == Ct.n);
  if (out.self_dual) {
    LinearCode hd = hermitian_dual(Ct);
    if (!codes_equal(hd, Ct))
      throw verify_error("k = n/2 but the code is not equal to its Hermitian dual");
    out.d = min_distance(Ct, cfg);
  } else {
    auto d = detail::hermitian_coset_distance(Ct, cfg);
    if (!d)
      throw cap_exceeded("quantum distance not found within the subset cap");
    out.d = *d;
  }
  out.singleton_gap = (int)out.n - 2 * (out.d - 1) - (int)out.k;
  if (out.singleton_gap < 0)
    throw verify_error("quantum Singleton bound violated; computation is wrong");
  return out;
}

struct SurveyRow {
  int weight = 0;               // truncation length
  PunctureWord word;            // emitted puncture word
  std::size_t trunc_dim = 0;    // dimension of the classical truncation
  QuantumParams params;
  bool self_orthogonal = false; // re-verified on the emitted truncation
  std::uint32_t words_checked = 1;
};

namespace detail {

// Shared dependency pool over the source generator: for truncations that
// keep the full dimension k, the dual of the truncation inherits exactly
// the weight-d0 words of C-perp supported inside it (d0 = dual distance of
// C), so one sweep serves every such row.
struct SurveyEngine {
  const LinearCode& C;
  const RunConfig& cfg;
  std::optional<std::pair<int, std::vector<Dependency>>> pool;
  bool pool_built = false;

  QuantumParams params_for(const PunctureWord& word, const LinearCode& Ct) {
    const Field& F = *C.F;
    if (2 * Ct.k == Ct.n || Ct.k < C.k) return quantum_params(Ct, cfg);
    if (!pool_built) {
      pool = first_level_dependencies(C.gen, cfg.cap_subset, cfg.workers);
      pool_built = true;
    }
    if (!pool) return quantum_params(Ct, cfg);

    std::vector<std::size_t> pos(C.n, C.n);
    std::vector<Fel> theta;
    {
      std::size_t t = 0;
      for (std::size_t l = 0; l < C.n; ++l)
        if (word.lambda[l] != 0) {
          pos[l] = t++;
          theta.push_back(F.norm_preimage(word.lambda[l]));
        }
    }
    SpanChecker in_code(Ct.gen);
    const int d0 = pool->first;
    std::optional<int> d;
    for (const auto& dep : pool->second) {
      bool inside = true;
      for (auto c : dep.support)
        if (pos[c] == C.n) { inside = false; break; }
      if (!inside) continue;
      // dependency of the scaled restricted columns: coefficients divide
      // by the column scalings; conjugate to land in the Hermitian dual
      std::vector<Fel> v(Ct.n, 0);
      for (std::size_t t = 0; t < dep.support.size(); ++t) {
        std::size_t j = pos[dep.support[t]];
        v[j] = F.frobenius(F.div(dep.coeffs[t], theta[j]));
      }
      if (!in_code.contains(v)) { d = d0; break; }
    }
    if (!d) {
      d = hermitian_coset_distance(Ct, cfg, d0 + 1);
      if (!d) throw cap_exceeded("quantum distance not found within the subset cap");
    }
    QuantumParams qp;
    qp.n = Ct.n;
    qp.k = Ct.n - 2 * Ct.k;
    qp.q = F.q();
    qp.self_dual = false;
    qp.d = *d;
    qp.singleton_gap = (int)qp.n - 2 * (qp.d - 1) - (int)qp.k;
    if (qp.singleton_gap < 0)
      throw verify_error("quantum Singleton bound violated; computation is wrong");
    return qp;
  }
};

}  // namespace detail

// One row per nonzero weight occurring in P(C), ascending.  The emitted
// word is the lexicographically least of its weight; words_per_weight > 1
// additionally checks up to that many words per weight (in enumeration
// order, distances can differ between words) and keeps the best distance.
inline std::vector<SurveyRow> quantum_survey(const LinearCode& C,
                                             const RunConfig& cfg = {},
                                             std::uint32_t words_per_weight = 1) {
  if (words_per_weight == 0) words_per_weight = 1;
  PunctureCode P = puncture_code(C);
  if (P.dim() == 0) return {};
  PunctureWeights W = weight_set(P, cfg);

  std::map<int, std::vector<PunctureWord>> candidates;
  for (const auto& [wt, word] : W.representative)
    if (wt > 0) candidates[wt].push_back(word);
  if (words_per_weight > 1) {
    detail::scan_words(P.basis, P.F->q(), 0,
                       detail::checked_pow(P.F->q(), P.dim(), cfg.cap_words),
                       [&](std::uint64_t, std::span<const Fel> w) {
                         int wt = detail::hamming_weight(w);
                         if (wt == 0) return;
                         auto& list = candidates[wt];
                         if (list.size() >= words_per_weight) return;
                         std::vector<Fel> lam(w.begin(), w.end());
                         if (lam != list.front().lambda)
                           list.push_back(PunctureWord{std::move(lam), wt});
                       });
  }

  detail::SurveyEngine engine{C, cfg, {}, false};
  std::vector<SurveyRow> rows;
  for (auto& [wt, words] : candidates) {
    std::optional<SurveyRow> best;
    for (auto& word : words) {
      SurveyRow row;
      row.weight = wt;
      LinearCode Ct = truncation_from_word(C, word);
      row.trunc_dim = Ct.k;
      row.self_orthogonal = is_hermitian_self_orthogonal(Ct);
      row.params = engine.params_for(word, Ct);
      row.word = std::move(word);
      row.words_checked = (std::uint32_t)words.size();
      if (!best || row.params.d > best->params.d) best = std::move(row);
    }
    rows.push_back(std::move(*best));
  }
  return rows;
}

}  // namespace hsoc
