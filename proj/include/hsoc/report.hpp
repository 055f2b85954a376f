#pragma once

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "hsoc/io.hpp"
#include "hsoc/quantum.hpp"

namespace hsoc {

using json = nlohmann::json;

// The structured (JSON) reports below are a stable schema: key names and
// value encodings are frozen so downstream tooling can diff reports.
// Elements and points are rendered with format_element.

inline json field_json(const Field& F) {
  json j;
  j["p"] = F.p();
  j["h"] = F.h();
  j["q"] = F.q();
  j["q2"] = F.q2();
  if (F.h() > 1) {
    std::ostringstream os;
    const auto& mq = F.spec().modq;
    bool first = true;
    for (std::size_t i = mq.size(); i-- > 0;) {
      if (mq[i] == 0) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) { os << mq[i]; continue; }
      if (mq[i] != 1) os << mq[i] << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
    j["modq"] = os.str();
  } else {
    j["modq"] = nullptr;
  }
  {
    std::string line = field_line_string(F);
    auto pos = line.find("mod2=\"");
    std::string m2 = line.substr(pos + 6);
    m2.pop_back();
    j["mod2"] = m2;
  }
  return j;
}

inline json words_json(const Field& F, const std::vector<std::vector<Fel>>& words) {
  json arr = json::array();
  for (const auto& w : words) {
    json jw = json::array();
    for (Fel x : w) jw.push_back(format_element(F, x));
    arr.push_back(std::move(jw));
  }
  return arr;
}

inline json word_json(const Field& F, std::span<const Fel> w) {
  json jw = json::array();
  for (Fel x : w) jw.push_back(format_element(F, x));
  return jw;
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeResult {
  std::size_t n = 0, k = 0;
  bool projective = false;
  std::optional<int> dual_distance;
  std::string dual_distance_status;  // ok | cap_exceeded
  std::size_t rank_m = 0;
  std::size_t puncture_dim = 0;
  std::optional<std::size_t> hf_dim;           // projective codes only
  std::optional<int> conditions;               // n - dim P(C)
  std::optional<bool> dim_identity_ok;
  std::optional<Classification> classification;
  std::string classification_status;           // ok | cap_exceeded | not_projective
};

inline AnalyzeResult run_analyze(const LinearCode& C, const RunConfig& cfg) {
  AnalyzeResult r;
  r.n = C.n;
  r.k = C.k;
  r.projective = is_projective(C);
  try {
    LinearCode D = dual(C);
    if (D.k) {
      r.dual_distance = min_distance(D, cfg);
      r.dual_distance_status = "ok";
    } else {
      r.dual_distance_status = "undefined";  // k = n, the dual is zero
    }
  } catch (const cap_exceeded&) {
    r.dual_distance_status = "cap_exceeded";
  }
  PunctureCode P = puncture_code(C);
  r.puncture_dim = P.dim();
  r.rank_m = C.n - P.dim();
  if (r.projective) {
    r.hf_dim = hf_basis(columns_as_points(C)).size();
    r.conditions = conditions_imposed(C);
    r.dim_identity_ok = dim_check(C);
    if (!*r.dim_identity_ok)
      throw verify_error("puncture/Hermitian-form dimension identity failed");
    try {
      r.classification = classify(C, cfg);
      r.classification_status = "ok";
    } catch (const cap_exceeded&) {
      // distinguishing EXTENDS from NO_EXTENSION needs the zero enumeration
      r.classification_status = "cap_exceeded";
    }
  } else {
    r.classification_status = "not_projective";
  }
  return r;
}

inline json to_json(const AnalyzeResult& r, const Field& F, const std::string& input) {
  json j;
  j["command"] = "analyze";
  j["input"] = input;
  j["field"] = field_json(F);
  j["n"] = r.n;
  j["k"] = r.k;
  j["projective"] = r.projective;
  j["dual_distance"] = r.dual_distance ? json(*r.dual_distance) : json(nullptr);
  j["dual_distance_status"] = r.dual_distance_status;
  j["rank_m"] = r.rank_m;
  j["puncture_dim"] = r.puncture_dim;
  j["hf_dim"] = r.hf_dim ? json(*r.hf_dim) : json(nullptr);
  j["conditions_imposed"] = r.conditions ? json(*r.conditions) : json(nullptr);
  j["dim_identity_ok"] = r.dim_identity_ok ? json(*r.dim_identity_ok) : json(nullptr);
  j["classification"] =
      r.classification ? json(to_string(*r.classification)) : json(nullptr);
  j["classification_status"] = r.classification_status;
  return j;
}

inline void print_human(std::ostream& os, const AnalyzeResult& r, const Field& F) {
  os << "code: [" << r.n << "," << r.k << "] over GF(" << F.q2() << ")  (q = "
     << F.q() << ")\n";
  os << "projective: " << (r.projective ? "yes" : "no") << "\n";
  if (r.dual_distance) os << "dual distance: " << *r.dual_distance << "\n";
  else os << "dual distance: not computed (" << r.dual_distance_status << ")\n";
  os << "rank M(G): " << r.rank_m << "\n";
  os << "dim P(C): " << r.puncture_dim << "\n";
  if (r.hf_dim) os << "dim HF(X): " << *r.hf_dim << "\n";
  if (r.conditions) os << "conditions imposed: " << *r.conditions << "\n";
  if (r.dim_identity_ok)
    os << "dimension identity: " << (*r.dim_identity_ok ? "ok" : "FAILED") << "\n";
  if (r.classification)
    os << "classification: " << to_string(*r.classification) << "\n";
  else
    os << "classification: not determined (" << r.classification_status << ")\n";
}

// ---------------------------------------------------------------------------
// puncture

struct PunctureResult {
  PunctureCode P;
  std::optional<PunctureWeights> weights;  // missing when over cap
};

inline PunctureResult run_puncture(const LinearCode& C, const RunConfig& cfg) {
  PunctureResult r{puncture_code(C), {}};
  r.weights = weight_set(r.P, cfg);  // cap_exceeded propagates
  return r;
}

inline json to_json(const PunctureResult& r, const Field& F, const std::string& input) {
  json j;
  j["command"] = "puncture";
  j["input"] = input;
  j["field"] = field_json(F);
  j["n"] = r.P.n;
  j["dim"] = r.P.dim();
  json basis = json::array();
  for (std::size_t i = 0; i < r.P.basis.rows(); ++i)
    basis.push_back(word_json(F, r.P.basis.row(i)));
  j["basis"] = std::move(basis);
  json weights = json::array();
  if (r.weights)
    for (const auto& [wt, count] : r.weights->count) {
      json e;
      e["weight"] = wt;
      e["count"] = count;
      e["word"] = word_json(F, r.weights->representative.at(wt).lambda);
      weights.push_back(std::move(e));
    }
  j["weights"] = std::move(weights);
  return j;
}

inline void print_human(std::ostream& os, const PunctureResult& r, const Field& F) {
  os << "dim P(C) = " << r.P.dim() << " over GF(" << F.q() << ")\n";
  for (std::size_t i = 0; i < r.P.basis.rows(); ++i) {
    os << "  basis[" << i << "] =";
    for (Fel x : r.P.basis.row(i)) os << " " << format_element(F, x);
    os << "\n";
  }
  if (r.weights) {
    os << "weights (over all q^dim words):\n";
    for (const auto& [wt, count] : r.weights->count)
      os << "  weight " << std::setw(3) << wt << ": " << count << " word(s)\n";
  }
}

// ---------------------------------------------------------------------------
// zeros

struct ZerosResult {
  std::size_t hf_dim = 0;
  PointSet X;
  PointSet zeros;
  bool contains_columns = false;
};

inline ZerosResult run_zeros(const LinearCode& C, const RunConfig& cfg) {
  ZerosResult r;
  r.X = columns_as_points(C);
  auto forms = hf_basis(r.X);
  r.hf_dim = forms.size();
  r.zeros = common_zeros(forms, C.k, C.F, cfg);
  std::vector<std::vector<Fel>> zs = r.zeros.pts;
  std::sort(zs.begin(), zs.end());
  r.contains_columns = true;
  for (const auto& x : r.X.pts)
    if (!std::binary_search(zs.begin(), zs.end(), x)) r.contains_columns = false;
  return r;
}

inline json to_json(const ZerosResult& r, const Field& F, const std::string& input) {
  json j;
  j["command"] = "zeros";
  j["input"] = input;
  j["field"] = field_json(F);
  j["hf_dim"] = r.hf_dim;
  j["count"] = r.zeros.pts.size();
  j["points"] = words_json(F, r.zeros.pts);
  j["contains_columns"] = r.contains_columns;
  return j;
}

inline void print_human(std::ostream& os, const ZerosResult& r, const Field& F) {
  os << "dim HF(X) = " << r.hf_dim << "\n";
  os << "common zeros: " << r.zeros.pts.size() << " point(s), X has "
     << r.X.pts.size() << "\n";
  for (const auto& p : r.zeros.pts) {
    os << "  (";
    for (std::size_t i = 0; i < p.size(); ++i)
      os << (i ? "," : "") << format_element(F, p[i]);
    os << ")\n";
  }
}

// ---------------------------------------------------------------------------
// extend

inline json to_json(const ExtendResult& r, const Field& F, const std::string& input) {
  json j;
  j["command"] = "extend";
  j["input"] = input;
  j["field"] = field_json(F);
  j["applicable"] = r.applicable;
  json exts = json::array();
  for (const auto& e : r.extensions) {
    json je;
    je["point"] = word_json(F, e.point);
    je["n"] = e.code.n;
    je["k"] = e.code.k;
    je["puncture_dim"] = 1;
    je["hermitian_self_orthogonal"] = is_hermitian_self_orthogonal(e.code);
    exts.push_back(std::move(je));
  }
  j["extensions"] = std::move(exts);
  return j;
}

inline void print_human(std::ostream& os, const ExtendResult& r, const Field& F) {
  if (!r.applicable) {
    os << "not applicable: dim P(C) > 0, the code already truncates\n";
    return;
  }
  if (r.extensions.empty()) {
    os << "no extension: the common zeros are exactly the columns\n";
    return;
  }
  os << r.extensions.size() << " extension point(s):\n";
  for (const auto& e : r.extensions) {
    os << "  (";
    for (std::size_t i = 0; i < e.point.size(); ++i)
      os << (i ? "," : "") << format_element(F, e.point[i]);
    os << ")  ->  [" << e.code.n << "," << e.code.k << "], dim P = 1";
    if (is_hermitian_self_orthogonal(e.code)) os << ", Hermitian self-orthogonal";
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// quantum

inline json to_json(const std::vector<SurveyRow>& rows, const Field& F,
                    const std::string& input) {
  json j;
  j["command"] = "quantum";
  j["input"] = input;
  j["field"] = field_json(F);
  json arr = json::array();
  for (const auto& r : rows) {
    json e;
    e["weight"] = r.weight;
    e["n"] = r.params.n;
    e["k"] = r.params.k;
    e["d"] = r.params.d;
    e["q"] = r.params.q;
    e["singleton_gap"] = r.params.singleton_gap;
    e["self_dual"] = r.params.self_dual;
    e["classical_dim"] = r.trunc_dim;
    e["self_orthogonal_verified"] = r.self_orthogonal;
    e["words_checked"] = r.words_checked;
    e["word"] = word_json(F, r.word.lambda);
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  return j;
}

inline void print_human(std::ostream& os, const std::vector<SurveyRow>& rows,
                        const Field&) {
  if (rows.empty()) {
    os << "no truncations: dim P(C) = 0\n";
    return;
  }
  for (const auto& r : rows)
    os << "weight " << std::setw(3) << r.weight << "  ->  [[" << r.params.n << ","
       << r.params.k << "," << r.params.d << "]]_" << r.params.q
       << "  (classical [" << r.params.n << "," << r.trunc_dim << "], gap "
       << r.params.singleton_gap << (r.params.self_dual ? ", self-dual" : "")
       << (r.self_orthogonal ? "" : ", NOT SELF-ORTHOGONAL") << ")\n";
}

}  // namespace hsoc
