#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace hsoc;
using test::el;

namespace {

// repeated squaring straight off the defining relation, independent of the
// log tables
Fel pow_by_squaring(const Field& F, Fel a, unsigned long long m) {
  Fel r = 1;
  while (m) {
    if (m & 1) r = F.mul(r, a);
    a = F.mul(a, a);
    m >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("F_4 arithmetic pinned by the defining relation", "[gf]") {
  auto F = test::f4();
  REQUIRE(F->q() == 2);
  REQUIRE(F->q2() == 4);
  Fel e = F->e();
  CHECK(F->mul(e, e) == el(F, "1+e"));
  CHECK(F->frobenius(e) == el(F, "1+e"));
  CHECK(F->norm(e) == 1);
  CHECK(F->norm(0) == 0);
  for (Fel a : F->enumerate_field()) {
    CHECK(F->mul(a, 1) == a);
    CHECK(F->add(a, 0) == a);
  }
}

TEST_CASE("F_9 powers of e against a repeated-squaring oracle", "[gf]") {
  auto F = test::f9();
  Fel e = F->e();
  CHECK(F->mul(e, e) == el(F, "1+e"));
  CHECK(pow_by_squaring(*F, e, 4) == 2);
  CHECK(F->pow(e, 4) == 2);
  CHECK(F->frobenius(e) == pow_by_squaring(*F, e, 3));
  CHECK(F->frobenius(e) == el(F, "1+2*e"));
  CHECK(F->norm(e) == 2);
  for (Fel a : F->enumerate_field())
    for (long long m : {0LL, 1LL, 2LL, 5LL, 8LL, 13LL})
      CHECK(F->pow(a, m) == pow_by_squaring(*F, a, m));
}

TEST_CASE("frobenius is a field automorphism of order two", "[gf]") {
  for (auto F : {test::f4(), test::f9(), Field::make(2, 2)}) {
    auto all = F->enumerate_field();
    std::size_t fixed = 0;
    for (Fel a : all) {
      CHECK(F->frobenius(F->frobenius(a)) == a);
      if (F->frobenius(a) == a) {
        ++fixed;
        CHECK(F->in_subfield(a));
      }
      for (Fel b : all) {
        CHECK(F->frobenius(F->mul(a, b)) == F->mul(F->frobenius(a), F->frobenius(b)));
        CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      }
    }
    CHECK(fixed == F->q());
    CHECK(F->frobenius(F->e()) != F->e());
  }
}

TEST_CASE("subfield is closed under arithmetic", "[gf]") {
  for (auto F : {test::f9(), Field::make(2, 2)}) {
    for (Fel a : F->enumerate_subfield())
      for (Fel b : F->enumerate_subfield()) {
        CHECK(F->in_subfield(F->add(a, b)));
        CHECK(F->in_subfield(F->mul(a, b)));
        if (b != 0) CHECK(F->in_subfield(F->div(a, b)));
      }
  }
}

TEST_CASE("norm maps onto F_q with fibres of size q+1", "[gf]") {
  for (auto F : {test::f4(), test::f9(), Field::make(2, 2), Field::make(5, 1)}) {
    std::map<Fel, int> hits;
    for (Fel a : F->enumerate_field()) {
      Fel n = F->norm(a);
      CHECK(F->in_subfield(n));
      CHECK(F->frobenius(n) == n);
      if (a != 0) ++hits[n];
    }
    for (Fel l : F->enumerate_subfield())
      if (l != 0) CHECK(hits[l] == (int)F->q() + 1);
    CHECK(hits.count(0) == 0);
  }
}

TEST_CASE("norm_preimage inverts the norm", "[gf]") {
  auto F9 = test::f9();
  CHECK(F9->norm(F9->norm_preimage(1)) == 1);
  CHECK(F9->norm(F9->norm_preimage(2)) == 2);
  CHECK_THROWS_AS(F9->norm_preimage(0), error);
  CHECK_THROWS_AS(F9->norm_preimage(F9->e()), error);
  // lambda = 1 always admits theta = 1
  CHECK(F9->norm(1) == 1);
}

TEST_CASE("field enumeration is deterministic with zero first", "[gf]") {
  auto F = test::f4();
  auto all = F->enumerate_field();
  REQUIRE(all.size() == 4);
  CHECK(all[0] == 0);
  CHECK(all[1] == 1);
  CHECK(all[2] == F->e());
  CHECK(all[3] == el(F, "1+e"));
  auto sub = F->enumerate_subfield();
  REQUIRE(sub.size() == 2);
  CHECK(sub[0] == 0);
  CHECK(sub[1] == 1);
  CHECK(test::f9()->enumerate_field().size() == 9);
}

TEST_CASE("inverses and the zero-inversion error", "[gf]") {
  for (auto F : {test::f4(), test::f9(), Field::make(2, 3)}) {
    CHECK_THROWS_AS(F->inv(0), error);
    for (Fel a : F->enumerate_field())
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
  }
}

TEST_CASE("from_int reduces modulo p", "[gf]") {
  auto F = test::f9();
  CHECK(F->from_int(5) == 2);
  CHECK(F->from_int(-1) == 2);
  CHECK(F->from_int(3) == 0);
  CHECK(test::f4()->from_int(2) == 0);
}

TEST_CASE("modulus overrides and construction errors", "[gf]") {
  // alternative representation of F_9: x^2 + x + 2, e^2 = -e - 2 = 2e + 1
  FieldSpec spec;
  spec.p = 3;
  spec.mod2 = {2, 1, 1};
  auto F = Field::make(spec);
  CHECK(F->mul(F->e(), F->e()) == el(F, "1+2*e"));

  FieldSpec bad;
  bad.p = 3;
  bad.mod2 = {Fel(test::f9()->neg(1)), 0, 1};  // x^2 - 1 = (x-1)(x+1)
  CHECK_THROWS_AS(Field::make(bad), error);

  CHECK_THROWS_AS(Field::make(4, 1), error);    // p not prime
  CHECK_THROWS_AS(Field::make(257, 1), error);  // q^2 above the table cap
  CHECK_THROWS_AS(Field::make(2, 0), error);

  FieldSpec badq;
  badq.p = 2;
  badq.h = 2;
  badq.modq = {0, 1, 1};  // y^2 + y = y(y+1)
  CHECK_THROWS_AS(Field::make(badq), error);
}

TEST_CASE("tower fields with h > 1 expose y and stay consistent", "[gf]") {
  auto F16 = Field::make(2, 2);  // F_4 inside F_16
  REQUIRE(F16->q() == 4);
  REQUIRE(F16->q2() == 16);
  Fel y = F16->subfield_gen();
  CHECK(F16->in_subfield(y));
  CHECK(F16->frobenius(y) == y);
  // y generates F_4^*: y^2 = y + 1 under the default primitive modulus
  CHECK(F16->mul(y, y) == F16->add(y, 1));
  CHECK_THROWS_AS(test::f4()->subfield_gen(), error);
}
