#include <doctest.h>

#include <algorithm>
#include <vector>

#include "prmqc/error.hpp"
#include "prmqc/field.hpp"

using namespace prmqc;

namespace {

const std::vector<int> kSmallOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64, 67, 71, 73, 79, 81};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::PreconditionViolated;
}

}  // namespace

TEST_CASE("default moduli") {
  CHECK(Field::make(2, 1)->modulus() == std::vector<int>{0, 1});
  CHECK(Field::make(2, 2)->modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field::make(3, 2)->modulus() == std::vector<int>{2, 1, 1});
  CHECK(Field::make(2, 4)->modulus_string() == "1,1,0,0,1");
  const auto f = Field::of_order(256);
  CHECK(f->q() == 256);
  CHECK(f->p() == 2);
  CHECK(f->k() == 8);
}

TEST_CASE("user modulus") {
  const auto f = Field::make(3, 2, std::vector<int>{1, 0, 1});
  CHECK(f->q() == 9);
  CHECK(f->modulus_string() == "1,0,1");
  CHECK(code_of([] { Field::make(2, 2, std::vector<int>{1, 0, 1}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { Field::make(2, 2, std::vector<int>{1, 1, 2}); }) == Errc::ReducibleModulus);
  CHECK(code_of([] { Field::make(4, 1); }) == Errc::NonPrimeP);
  CHECK(code_of([] { Field::make(2, 9); }) == Errc::UnsupportedFieldSize);
  CHECK(code_of([] { Field::of_order(6); }) == Errc::NonPrimeP);
}

TEST_CASE("small arithmetic facts") {
  const auto f4 = Field::of_order(4);
  const Elem w = 2;  // class of x
  CHECK(f4->mul(w, w) == 3);
  CHECK(f4->frobenius(w, 2) == 3);
  const auto f3 = Field::of_order(3);
  CHECK(f3->inv(2) == 2);
  CHECK(code_of([&] { f3->inv(0); }) == Errc::ZeroInverse);
  CHECK(code_of([&] { f4->frobenius(1, 3); }) == Errc::InvalidSubfieldSize);
}

TEST_CASE("field axioms hold exhaustively") {
  for (int q : kSmallOrders) {
    CAPTURE(q);
    const auto f = Field::of_order(q);
    bool ok = true;
    for (int a = 0; a < q && ok; ++a) {
      const Elem ea = static_cast<Elem>(a);
      ok = ok && f->add(ea, 0) == ea && f->mul(ea, 1) == ea && f->add(ea, f->neg(ea)) == 0;
      if (a != 0) ok = ok && f->mul(ea, f->inv(ea)) == 1 && f->pow(ea, q - 1) == 1;
      for (int b = 0; b < q && ok; ++b) {
        const Elem eb = static_cast<Elem>(b);
        ok = ok && f->add(ea, eb) == f->add(eb, ea) && f->mul(ea, eb) == f->mul(eb, ea);
        for (int c = 0; c < q && ok; ++c) {
          const Elem ec = static_cast<Elem>(c);
          ok = ok && f->add(f->add(ea, eb), ec) == f->add(ea, f->add(eb, ec));
          ok = ok && f->mul(f->mul(ea, eb), ec) == f->mul(ea, f->mul(eb, ec));
          ok = ok && f->mul(ea, f->add(eb, ec)) == f->add(f->mul(ea, eb), f->mul(ea, ec));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (int q : kSmallOrders) {
    const auto f = Field::of_order(q);
    std::vector<bool> seen(q, false);
    Elem x = 1;
    for (int i = 0; i < q - 1; ++i) {
      seen[x] = true;
      x = f->mul(x, f->primitive());
    }
    CHECK(x == 1);
    CHECK(std::count(seen.begin(), seen.end(), true) == q - 1);
  }
}

TEST_CASE("frobenius is an automorphism fixing exactly the subfield") {
  for (int q : kSmallOrders) {
    const auto f = Field::of_order(q);
    for (int j = 1; j <= f->k(); ++j) {
      if (f->k() % j != 0) continue;
      int q0 = 1;
      for (int i = 0; i < j; ++i) q0 *= f->p();
      CAPTURE(q);
      CAPTURE(q0);
      int fixed = 0;
      bool hom = true;
      for (int a = 0; a < q; ++a) {
        const Elem ea = static_cast<Elem>(a);
        if (f->frobenius(ea, q0) == ea) ++fixed;
        CHECK(f->in_subfield(ea, q0) == (f->frobenius(ea, q0) == ea));
        for (int b = 0; b < q && hom; ++b) {
          const Elem eb = static_cast<Elem>(b);
          hom = f->frobenius(f->add(ea, eb), q0) == f->add(f->frobenius(ea, q0), f->frobenius(eb, q0)) &&
                f->frobenius(f->mul(ea, eb), q0) == f->mul(f->frobenius(ea, q0), f->frobenius(eb, q0));
        }
      }
      CHECK(hom);
      CHECK(fixed == q0);
    }
  }
  const auto f16 = Field::of_order(16);
  for (int a = 0; a < 16; ++a) CHECK(f16->frobenius(f16->frobenius(static_cast<Elem>(a), 4), 4) == a);
}

TEST_CASE("power sums agree with direct summation") {
  for (int q : kSmallOrders) {
    const auto f = Field::of_order(q);
    for (int gamma = 0; gamma <= 2 * (q - 1); ++gamma) {
      Elem direct = 0;
      for (int z = 0; z < q; ++z) direct = f->add(direct, gamma == 0 ? Elem{1} : f->pow(static_cast<Elem>(z), gamma));
      CHECK(power_sum(f, gamma).value() == direct);
    }
  }
  const auto f3 = Field::of_order(3);
  CHECK(power_sum(f3, 0).value() == 0);
  CHECK(power_sum(f3, 2).value() == 2);
  CHECK(power_sum(Field::of_order(4), 1).value() == 0);
}

TEST_CASE("subfield embeddings are ring homomorphisms") {
  const std::vector<int> orders = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256};
  for (int Q : orders) {
    const auto big = Field::of_order(Q);
    for (int q : orders) {
      const auto sub = Field::of_order(q);
      if (sub->p() != big->p() || big->k() % sub->k() != 0) {
        if (q < Q || sub->p() != big->p()) CHECK_THROWS_AS(SubfieldEmbedding(sub, big), Error);
        continue;
      }
      CAPTURE(q);
      CAPTURE(Q);
      const SubfieldEmbedding emb(sub, big);
      bool ok = emb(0) == 0 && emb(1) == 1;
      for (int a = 0; a < q && ok; ++a) {
        const Elem ea = static_cast<Elem>(a);
        ok = big->in_subfield(emb(ea), q) && emb.preimage(emb(ea)) == ea;
        for (int b = 0; b < q && ok; ++b) {
          const Elem eb = static_cast<Elem>(b);
          ok = emb(sub->add(ea, eb)) == big->add(emb(ea), emb(eb)) && emb(sub->mul(ea, eb)) == big->mul(emb(ea), emb(eb));
        }
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("embedded GF(4) generator satisfies its minimal polynomial") {
  const auto f4 = Field::of_order(4);
  const auto f16 = Field::of_order(16);
  const FieldElement w = embed_subfield(FieldElement(f4, 2), f16);
  CHECK((w * w + w + FieldElement(f16, 1)).value() == 0);
  CHECK(embed_subfield(FieldElement(Field::of_order(2), 1), f4).value() == 1);
}

TEST_CASE("field elements check their field") {
  const auto f4 = Field::of_order(4);
  const auto f8 = Field::of_order(8);
  CHECK(code_of([&] { (void)(FieldElement(f4, 1) + FieldElement(f8, 1)); }) == Errc::FieldMismatch);
  CHECK((FieldElement(f4, 2).pow(3)).value() == 1);
  CHECK(FieldElement(f4, 3).rep() == std::vector<int>{1, 1});
}

TEST_CASE("rootless monic polynomials") {
  CHECK(find_rootless_monic(*Field::of_order(2), 2) == Poly{1, 1, 1});
  CHECK(code_of([] { find_rootless_monic(*Field::of_order(5), 1); }) == Errc::DegreeTooSmall);
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    const auto f = Field::of_order(q);
    for (int deg = 2; deg <= 4; ++deg) {
      CAPTURE(q);
      CAPTURE(deg);
      const Poly t = find_rootless_monic(*f, deg);
      REQUIRE(t.size() == static_cast<std::size_t>(deg + 1));
      CHECK(t.back() == 1);
      CHECK(poly::is_irreducible(*f, t));
      for (int z = 0; z < q; ++z) CHECK(poly::eval(*f, t, static_cast<Elem>(z)) != 0);
    }
  }
  CHECK(find_rootless_monic(*Field::of_order(8), 2) == find_rootless_monic(*Field::of_order(8), 2));
}
