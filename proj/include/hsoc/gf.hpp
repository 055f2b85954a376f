#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "hsoc/config.hpp"

namespace hsoc {

// Element of the tower F_p < F_q < F_{q^2}, stored as a value index.
// An index v < q^2 encodes the pair (v % q, v / q) = a0 + a1*e with
// a0, a1 in F_q, and an index u < q encodes the polynomial
// sum u_i y^i in the digits u_i of u base p.  The subfield F_q is
// therefore exactly the indices below q.
using Fel = std::uint16_t;

struct FieldSpec {
  unsigned p = 2;
  unsigned h = 1;
  // monic irreducible of degree h over F_p defining F_q, ascending
  // coefficients (size h+1); empty selects the default (h == 1 needs none)
  std::vector<unsigned> modq;
  // monic irreducible quadratic over F_q defining F_{q^2}, ascending
  // coefficients as F_q value indices (size 3); empty selects the default
  std::vector<Fel> mod2;

  bool operator==(const FieldSpec&) const = default;
};

namespace detail {

inline bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- polynomial arithmetic over F_p on digit vectors, ascending coeffs ---

inline void fp_trim(std::vector<unsigned>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<unsigned> fp_mul(const std::vector<unsigned>& a,
                                    const std::vector<unsigned>& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  std::vector<unsigned> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  fp_trim(c);
  return c;
}

inline std::vector<unsigned> fp_mod(std::vector<unsigned> a,
                                    const std::vector<unsigned>& f, unsigned p) {
  // f monic
  while (a.size() >= f.size()) {
    unsigned lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - f.size();
      for (std::size_t i = 0; i < f.size(); ++i)
        a[shift + i] = (a[shift + i] + (p - 1) * lead % p * f[i]) % p;
    }
    a.pop_back();
    fp_trim(a);
    if (a.size() < f.size()) break;
  }
  fp_trim(a);
  return a;
}

inline bool fp_is_irreducible(const std::vector<unsigned>& f, unsigned p) {
  // trial division by every monic polynomial of degree 1..deg(f)/2
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::vector<unsigned> g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (fp_mod(f, g, p).empty()) return false;
      // next candidate: odometer over the low d coefficients
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Arithmetic in F_q = F_p[y]/(modq) on packed digit indices.  Slow and
// allocation happy, but it only runs while fields and parsers bootstrap.
struct Subfield {
  unsigned p = 2, h = 1;
  std::uint32_t q = 2;
  std::vector<unsigned> modq;  // size h+1 when h > 1, empty otherwise

  std::vector<unsigned> digits(std::uint32_t v) const {
    std::vector<unsigned> d(h);
    for (unsigned i = 0; i < h; ++i) { d[i] = v % p; v /= p; }
    return d;
  }
  std::uint32_t pack(const std::vector<unsigned>& d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i] % p;
    return v;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < h; ++i) da[i] = (da[i] + db[i]) % p;
    return pack(da);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto da = digits(a);
    for (unsigned i = 0; i < h; ++i) da[i] = (p - da[i]) % p;
    return pack(da);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (h == 1) return (a * b) % p;
    auto c = fp_mul(digits(a), digits(b), p);
    c = fp_mod(std::move(c), modq, p);
    c.resize(h, 0);
    return pack(c);
  }
  std::uint32_t pow(std::uint32_t a, unsigned long long e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw error("division by zero in F_q");
    return pow(a, q - 2);
  }
};

inline std::uint32_t poly_order(const std::vector<unsigned>& elem,
                                const Subfield& sf) {
  // multiplicative order of a packed element, 0 if elem == 0
  std::uint32_t v = sf.pack(elem);
  if (v == 0) return 0;
  std::uint32_t cur = v, ord = 1;
  while (cur != 1) {
    cur = sf.mul(cur, v);
    if (++ord > sf.q) return 0;  // not a unit of finite order (cannot happen)
  }
  return ord;
}

inline std::vector<unsigned> default_modq(unsigned p, unsigned h) {
  // lexicographically least (by descending-degree coefficient tuple) monic
  // irreducible of degree h over F_p whose root generates F_q^*
  std::vector<unsigned> f(h + 1, 0);
  f[h] = 1;
  Subfield sf{p, h, 1, {}};
  sf.q = 1;
  for (unsigned i = 0; i < h; ++i) sf.q *= p;
  while (true) {
    if (f[0] != 0 && fp_is_irreducible(f, p)) {
      sf.modq = f;
      std::vector<unsigned> y(h, 0);
      if (h >= 2) y[1] = 1;
      if (poly_order(y, sf) == sf.q - 1) return f;
    }
    // next candidate ordered by (a_{h-1}, ..., a_0), low coefficient fastest
    std::size_t i = 0;
    while (true) {
      if (++f[i] < p) break;
      f[i] = 0;
      if (++i == h) throw error("no primitive polynomial found");  // unreachable
    }
  }
}

inline Subfield make_subfield(unsigned p, unsigned h,
                              std::vector<unsigned> modq) {
  if (!is_prime(p)) throw error("p = " + std::to_string(p) + " is not prime");
  if (h < 1) throw error("extension degree h must be at least 1");
  Subfield sf{p, h, 1, {}};
  for (unsigned i = 0; i < h; ++i) {
    if (sf.q > (1u << 16) / p) throw error("subfield order overflows the table cap");
    sf.q *= p;
  }
  if (h == 1) {
    if (!modq.empty()) throw error("modq is only meaningful for h > 1");
    return sf;
  }
  if (modq.empty()) modq = default_modq(p, h);
  for (auto& c : modq) c %= p;
  if (modq.size() != h + 1 || modq[h] != 1)
    throw error("modq must be monic of degree h");
  if (!fp_is_irreducible(modq, p))
    throw error("modq is reducible over F_p");
  sf.modq = std::move(modq);
  return sf;
}

}  // namespace detail

// The field tower.  Immutable after construction; every operation below is a
// pure table lookup (or a couple of them), so Field values can be shared
// freely across threads.
class Field {
 public:
  static std::shared_ptr<const Field> make(const FieldSpec& spec,
                                           std::uint32_t q2_cap = 1u << 16) {
    auto f = std::shared_ptr<Field>(new Field);
    f->build(spec, q2_cap);
    return f;
  }
  static std::shared_ptr<const Field> make(unsigned p, unsigned h = 1,
                                           std::uint32_t q2_cap = 1u << 16) {
    return make(FieldSpec{p, h, {}, {}}, q2_cap);
  }

  unsigned p() const { return sf_.p; }
  unsigned h() const { return sf_.h; }
  std::uint32_t q() const { return q_; }
  std::uint32_t q2() const { return q2_; }
  Fel e() const { return e_; }
  const FieldSpec& spec() const { return spec_; }

  bool same_rep(const Field& o) const { return this == &o || spec_ == o.spec_; }

  bool in_subfield(Fel a) const { return a < q_; }

  Fel add(Fel a, Fel b) const {
    if (!add_full_.empty()) return add_full_[std::size_t(a) * q2_ + b];
    return Fel(addq_[std::size_t(lo_[a]) * q_ + lo_[b]] +
               q_ * addq_[std::size_t(hi_[a]) * q_ + hi_[b]]);
  }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel sub(Fel a, Fel b) const { return add(a, neg_[b]); }
  Fel mul(Fel a, Fel b) const {
    if (!mul_full_.empty()) return mul_full_[std::size_t(a) * q2_ + b];
    if (a == 0 || b == 0) return 0;
    return alog_[std::size_t(log_[a]) + log_[b]];
  }
  Fel inv(Fel a) const {
    if (a == 0) throw error("inversion of zero");
    return inv_[a];
  }
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }

  Fel pow(Fel a, long long m) const {
    if (a == 0) {
      if (m == 0) return 1;
      if (m < 0) throw error("inversion of zero");
      return 0;
    }
    const long long ord = q2_ - 1;
    long long r = (long long)(log_[a]) % ord * ((m % ord + ord) % ord) % ord;
    return alog_[r];
  }

  // x -> x^q, the conjugation fixing exactly F_q
  Fel frobenius(Fel a) const { return frob_[a]; }
  // x -> x^{q+1}, always lands in F_q
  Fel norm(Fel a) const { return norm_[a]; }

  // some theta with theta^{q+1} == lambda, for nonzero lambda in F_q
  Fel norm_preimage(Fel lambda) const {
    if (lambda == 0) throw error("norm_preimage of zero");
    if (!in_subfield(lambda)) throw error("norm_preimage argument is not in F_q");
    return npre_[lambda];
  }

  Fel from_int(long long t) const {
    long long r = t % (long long)sf_.p;
    if (r < 0) r += sf_.p;
    return Fel(r);
  }

  // pair access: a = lo + hi*e with lo, hi in F_q
  Fel lo(Fel a) const { return lo_[a]; }
  Fel hi(Fel a) const { return hi_[a]; }
  Fel compose(Fel lo, Fel hi) const { return Fel(lo + q_ * hi); }
  // generator y of F_q over F_p (h > 1 only)
  Fel subfield_gen() const {
    if (sf_.h == 1) throw error("F_q has no proper generator when h = 1");
    return Fel(sf_.p);
  }
  std::vector<unsigned> prime_digits(Fel sub) const { return sf_.digits(sub); }

  std::vector<Fel> enumerate_field() const {
    std::vector<Fel> v(q2_);
    for (std::uint32_t i = 0; i < q2_; ++i) v[i] = Fel(i);
    return v;
  }
  std::vector<Fel> enumerate_subfield() const {
    std::vector<Fel> v(q_);
    for (std::uint32_t i = 0; i < q_; ++i) v[i] = Fel(i);
    return v;
  }

 private:
  Field() = default;

  void build(const FieldSpec& spec, std::uint32_t q2_cap) {
    if (q2_cap > (1u << 16)) throw error("field table cap above 2^16 is unsupported");
    sf_ = detail::make_subfield(spec.p, spec.h, spec.modq);
    q_ = sf_.q;
    if ((std::uint64_t)q_ * q_ > q2_cap)
      throw error("q^2 = " + std::to_string((std::uint64_t)q_ * q_) +
                  " exceeds the table cap " + std::to_string(q2_cap));
    q2_ = q_ * q_;

    std::vector<Fel> mod2 = spec.mod2;
    if (mod2.empty()) mod2 = default_mod2();
    if (mod2.size() != 3 || mod2[2] != 1)
      throw error("mod2 must be monic of degree 2");
    for (Fel c : mod2)
      if (c >= q_) throw error("mod2 coefficients must lie in F_q");
    for (std::uint32_t a = 0; a < q_; ++a)  // degree 2: no roots <=> irreducible
      if (sf_.add(sf_.mul(a, a), sf_.add(sf_.mul(mod2[1], a), mod2[0])) == 0)
        throw error("mod2 is reducible over F_q");
    mod2_ = mod2;
    red0_ = Fel(sf_.neg(mod2[0]));  // e^2 = red1*e + red0
    red1_ = Fel(sf_.neg(mod2[1]));
    e_ = Fel(q_);

    spec_ = FieldSpec{sf_.p, sf_.h, sf_.modq, mod2_};

    build_tables();
    self_check();
  }

  // raw multiply on (lo, hi) pairs, used before the log tables exist
  Fel raw_mul(Fel a, Fel b) const {
    std::uint32_t a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
    std::uint32_t t = sf_.mul(a1, b1);
    std::uint32_t c0 = sf_.add(sf_.mul(a0, b0), sf_.mul(t, red0_));
    std::uint32_t c1 = sf_.add(sf_.add(sf_.mul(a0, b1), sf_.mul(a1, b0)),
                               sf_.mul(t, red1_));
    return Fel(c0 + q_ * c1);
  }

  std::uint32_t raw_order(Fel v) const {
    if (v == 0) return 0;
    Fel cur = v;
    std::uint32_t ord = 1;
    while (cur != 1) {
      cur = raw_mul(cur, v);
      if (++ord > q2_) return 0;
    }
    return ord;
  }

  std::vector<Fel> default_mod2() const {
    // GF(4) and GF(9) default to e^2 = e + 1, i.e. x^2 - x - 1
    if (sf_.h == 1 && (sf_.p == 2 || sf_.p == 3)) {
      Fel m = Fel(sf_.neg(1));
      return {m, m, 1};
    }
    // otherwise: least (a1, a0) with x^2 + a1 x + a0 irreducible and primitive
    for (std::uint32_t a1 = 0; a1 < q_; ++a1)
      for (std::uint32_t a0 = 0; a0 < q_; ++a0) {
        bool irr = true;
        for (std::uint32_t x = 0; x < q_ && irr; ++x)
          if (sf_.add(sf_.mul(x, x), sf_.add(sf_.mul(a1, x), a0)) == 0) irr = false;
        if (!irr) continue;
        // order of the root e: e^2 = -a1 e - a0
        Fel r0 = Fel(sf_.neg(a0)), r1 = Fel(sf_.neg(a1));
        Fel cur = Fel(q_);  // e
        std::uint32_t ord = 1;
        while (cur != 1) {
          std::uint32_t c0 = cur % q_, c1 = cur / q_;
          // cur *= e
          std::uint32_t n0 = sf_.mul(c1, r0);
          std::uint32_t n1 = sf_.add(c0, sf_.mul(c1, r1));
          cur = Fel(n0 + q_ * n1);
          if (++ord > q2_) break;
        }
        if (ord == q2_ - 1) return {Fel(a0), Fel(a1), 1};
      }
    throw error("no primitive quadratic found over F_q");  // unreachable
  }

  void build_tables() {
    lo_.resize(q2_);
    hi_.resize(q2_);
    for (std::uint32_t v = 0; v < q2_; ++v) { lo_[v] = Fel(v % q_); hi_[v] = Fel(v / q_); }

    addq_.resize((std::size_t)q_ * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        addq_[(std::size_t)a * q_ + b] = Fel(sf_.add(a, b));

    neg_.resize(q2_);
    for (std::uint32_t v = 0; v < q2_; ++v)
      neg_[v] = Fel(sf_.neg(v % q_) + q_ * sf_.neg(v / q_));

    // multiplicative generator: try e first, then scan
    Fel gen = 0;
    if (raw_order(e_) == q2_ - 1) gen = e_;
    else
      for (std::uint32_t v = 2; v < q2_; ++v)
        if (raw_order(Fel(v)) == q2_ - 1) { gen = Fel(v); break; }
    if (gen == 0) throw error("no multiplicative generator found");  // unreachable

    const std::uint32_t m = q2_ - 1;
    alog_.assign(2 * m, 0);
    log_.assign(q2_, 0);
    Fel cur = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      alog_[i] = cur;
      alog_[i + m] = cur;
      if (log_[cur] != 0 || (cur == 1 && i != 0))
        throw verify_error("generator order check failed");
      log_[cur] = Fel(i);
      cur = raw_mul(cur, gen);
    }
    if (cur != 1) throw verify_error("generator does not close the cycle");

    inv_.resize(q2_);
    inv_[0] = 0;
    for (std::uint32_t v = 1; v < q2_; ++v)
      inv_[v] = alog_[(m - log_[v]) % m];

    frob_.resize(q2_);
    norm_.resize(q2_);
    frob_[0] = 0;
    norm_[0] = 0;
    for (std::uint32_t v = 1; v < q2_; ++v) {
      frob_[v] = alog_[(std::size_t)log_[v] * q_ % m];
      norm_[v] = alog_[(std::size_t)log_[v] * (q_ + 1) % m];
    }

    npre_.assign(q_, 0);
    for (std::uint32_t v = 1; v < q2_; ++v) {
      Fel nv = norm_[v];
      if (nv != 0 && npre_[nv] == 0) npre_[nv] = Fel(v);
    }

    if (q2_ <= kDirectCap) {
      add_full_.resize((std::size_t)q2_ * q2_);
      mul_full_.resize((std::size_t)q2_ * q2_);
      for (std::uint32_t a = 0; a < q2_; ++a)
        for (std::uint32_t b = 0; b < q2_; ++b) {
          add_full_[(std::size_t)a * q2_ + b] =
              Fel(addq_[(std::size_t)lo_[a] * q_ + lo_[b]] +
                  q_ * addq_[(std::size_t)hi_[a] * q_ + hi_[b]]);
          mul_full_[(std::size_t)a * q2_ + b] =
              (a == 0 || b == 0) ? Fel(0) : alog_[std::size_t(log_[a]) + log_[b]];
        }
    }
  }

  void self_check() const {
    if (frobenius(e_) == e_) throw verify_error("e lies in F_q");
    std::uint32_t fixed = 0;
    std::vector<std::uint32_t> hits(q_, 0);
    for (std::uint32_t v = 0; v < q2_; ++v) {
      if (frob_[frob_[v]] != v) throw verify_error("frobenius is not an involution");
      bool fix = frob_[v] == v;
      if (fix != (v < q_)) throw verify_error("frobenius fixed field mismatch");
      fixed += fix;
      if (norm_[v] >= q_) throw verify_error("norm left the subfield");
      if (v != 0) ++hits[norm_[v]];
    }
    if (fixed != q_) throw verify_error("fixed field has wrong size");
    for (std::uint32_t l = 1; l < q_; ++l) {
      if (hits[l] != q_ + 1) throw verify_error("norm fibre has wrong size");
      if (norm_[npre_[l]] != l) throw verify_error("norm preimage table broken");
    }
  }

  static constexpr std::uint32_t kDirectCap = 1024;  // full q^2 x q^2 tables below this

  detail::Subfield sf_;
  std::uint32_t q_ = 0, q2_ = 0;
  Fel e_ = 0, red0_ = 0, red1_ = 0;
  std::vector<Fel> mod2_;
  FieldSpec spec_;

  std::vector<Fel> lo_, hi_, addq_, neg_, inv_, frob_, norm_, npre_;
  std::vector<Fel> alog_, log_;
  std::vector<Fel> add_full_, mul_full_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace hsoc
