#include <gtest/gtest.h>

#include "superw/enveloping.hpp"
#include "superw/general_linear.hpp"
#include "superw/linalg.hpp"
#include "superw/serialize.hpp"
#include "superw/tensor.hpp"
#include "support.hpp"

using namespace superw;
using namespace superw::testing;

namespace {

GeneralLinear make_gl(std::size_t even, std::size_t odd) {
  std::vector<Parity> p(even, Parity::even);
  p.insert(p.end(), odd, Parity::odd);
  return GeneralLinear(IndexUniverse::numbered(p));
}

std::shared_ptr<const EnvelopingAlgebra> natural_uea(const GeneralLinear& gl) {
  return std::make_shared<const EnvelopingAlgebra>(gl.lie_ptr(), GeneratorOrder::natural(gl.dimension()));
}

}  // namespace

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(parse_scalar("6/4"), Scalar(3, 2));
  EXPECT_EQ(to_string(parse_scalar("-6/4")), "-3/2");
  EXPECT_EQ(to_string(Scalar(5)), "5");
  EXPECT_THROW(parse_scalar("x"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
}

TEST(Parity, SignsAndSums) {
  EXPECT_EQ(Parity::odd + Parity::odd, Parity::even);
  EXPECT_EQ(Parity::odd + Parity::even, Parity::odd);
  EXPECT_EQ(koszul_sign(Parity::odd, Parity::odd), -1);
  EXPECT_EQ(koszul_sign(Parity::odd, Parity::even), 1);
  EXPECT_EQ(parity_sign(Parity::odd), -1);
  EXPECT_EQ(parity_sign(Parity::even), 1);
}

TEST(LinearCombination, DropsZeroCoefficients) {
  LieElement x = LieElement::term(3, 2);
  x.add(3, -2);
  EXPECT_TRUE(x.is_zero());
  x.add(1, 5);
  x -= LieElement::term(1, 5);
  EXPECT_EQ(x.size(), 0u);
  EXPECT_EQ((LieElement::term(2) * Scalar(0)).size(), 0u);
  EXPECT_EQ(LieElement::term(2, 4).coefficient(2), 4);
  EXPECT_EQ(LieElement::term(2, 4).coefficient(7), 0);
}

TEST(GeneralLinear, BracketMatchesMatrixSupercommutator) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 4)));
    const Parity px = random_parity(rng), py = random_parity(rng);
    const LieElement x = random_lie(rng, gl.lie(), px), y = random_lie(rng, gl.lie(), py);
    const LieElement expected = from_dense(gl, super_commutator(dense(gl, x), dense(gl, y), px, py));
    ASSERT_EQ(gl.lie().bracket(x, y), expected);
  }
}

TEST(GeneralLinear, BasisParitiesAndLabels) {
  const GeneralLinear gl = make_gl(2, 1);
  EXPECT_EQ(gl.dimension(), 9u);
  EXPECT_EQ(gl.lie().parity(gl.generator(0, 1)), Parity::even);
  EXPECT_EQ(gl.lie().parity(gl.generator(0, 2)), Parity::odd);
  EXPECT_EQ(gl.lie().parity(gl.generator(2, 2)), Parity::even);
  EXPECT_EQ(gl.lie().label(gl.generator(1, 2)).row, "2");
  EXPECT_EQ(gl.lie().label(gl.generator(1, 2)).col, "3");
  const BasisElement b = gl.basis(gl.generator(2, 0));
  EXPECT_EQ(b.row.ordinal, 2u);
  EXPECT_EQ(b.parity(), Parity::odd);
  EXPECT_EQ(gl.generator(b), gl.generator(2, 0));
  EXPECT_THROW(gl.generator(3, 0), std::out_of_range);
  const BasisElement foreign{{0, Parity::odd}, {1, Parity::even}};
  EXPECT_THROW(gl.generator(foreign), std::invalid_argument);
  EXPECT_THROW(gl.bracket_basis(foreign, b), std::invalid_argument);
}

TEST(GeneralLinear, BracketBasisFormula) {
  const GeneralLinear gl = make_gl(1, 1);
  // [e_12, e_21] = e_11 + e_22 for odd e_12, e_21
  const LieElement expected = LieElement::term(gl.generator(0, 0)) + LieElement::term(gl.generator(1, 1));
  EXPECT_EQ(gl.bracket_basis(gl.basis(gl.generator(0, 1)), gl.basis(gl.generator(1, 0))), expected);
  // [e_11, e_12] = e_12
  EXPECT_EQ(gl.bracket_basis(gl.basis(gl.generator(0, 0)), gl.basis(gl.generator(0, 1))),
            LieElement::term(gl.generator(0, 1)));
}

TEST(GeneralLinear, SuperJacobiRandomized) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 4)));
    const auto& L = gl.lie();
    const Parity px = random_parity(rng), py = random_parity(rng), pz = random_parity(rng);
    const LieElement x = random_lie(rng, L, px), y = random_lie(rng, L, py), z = random_lie(rng, L, pz);
    const LieElement lhs = L.bracket(x, L.bracket(y, z));
    const LieElement rhs = L.bracket(L.bracket(x, y), z) + L.bracket(y, L.bracket(x, z)) * Scalar(koszul_sign(px, py));
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(GeneralLinear, IdentityIsCentral) {
  const GeneralLinear gl = make_gl(2, 1);
  for (GenId g = 0; g < gl.dimension(); ++g) EXPECT_TRUE(gl.lie().bracket(gl.identity(), LieElement::term(g)).is_zero());
}

TEST(Forms, SupertraceFormMatchesMatrixSupertrace) {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto parities = random_parities(rng, 1, 4);
    GeneralLinear gl(IndexUniverse::numbered(parities));
    const LieElement x = random_lie(rng, gl.lie(), random_parity(rng));
    const LieElement y = random_lie(rng, gl.lie(), random_parity(rng));
    ASSERT_EQ(gl.str_form(x, y), supertrace(product(dense(gl, x), dense(gl, y)), parities));
  }
}

TEST(Forms, KillingFormMatchesClosedForm) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const auto parities = random_parities(rng, 1, 4);
    GeneralLinear gl(IndexUniverse::numbered(parities));
    long M = 0, N = 0;
    for (Parity p : parities) (is_odd(p) ? N : M) += 1;
    const LieElement x = random_lie(rng, gl.lie(), random_parity(rng));
    const LieElement y = random_lie(rng, gl.lie(), random_parity(rng));
    const DenseMatrix X = dense(gl, x), Y = dense(gl, y);
    const Scalar expected =
        2 * (M - N) * supertrace(product(X, Y), parities) - 2 * supertrace(X, parities) * supertrace(Y, parities);
    ASSERT_EQ(gl.killing_form(x, y), expected);
  }
}

TEST(Forms, GramRanks) {
  for (auto [even, odd] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    const GeneralLinear gl = make_gl(even, odd);
    const auto str_gram = gram_matrix(gl, &GeneralLinear::str_form);
    const auto kill_gram = gram_matrix(gl, &GeneralLinear::killing_form);
    EXPECT_EQ(matrix_rank(str_gram), gl.dimension());
    EXPECT_EQ(rational_rank(str_gram), gl.dimension());
    // the identity is in the radical of the Killing form on gl
    const std::size_t expected_killing = even == odd ? 1 : gl.dimension() - 1;
    EXPECT_EQ(matrix_rank(kill_gram), expected_killing) << even << "|" << odd;
    EXPECT_EQ(rational_rank(kill_gram), expected_killing);
  }
}

TEST(Linalg, BareissMatchesRationalElimination) {
  Rng rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 6));
    const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 6));
    DenseMatrix m(rows, std::vector<Scalar>(cols));
    for (auto& row : m)
      for (auto& v : row) v = uniform(rng, 0, 2) == 0 ? Scalar(0) : Scalar(uniform(rng, -4, 4), uniform(rng, 1, 3));
    // force some dependent rows
    if (rows > 2) m[rows - 1] = m[0];
    ASSERT_EQ(matrix_rank(m), rational_rank(m));
  }
  EXPECT_EQ(matrix_rank({}), 0u);
  EXPECT_TRUE(is_zero_matrix(DenseMatrix(2, std::vector<Scalar>(2, 0))));
  EXPECT_THROW(matrix_multiply(DenseMatrix(2, std::vector<Scalar>(3)), DenseMatrix(2, std::vector<Scalar>(2))),
               std::invalid_argument);
}

TEST(Linalg, SpanRankMatchesCoordinates) {
  Rng rng(16);
  const GeneralLinear gl = make_gl(2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LieElement> xs;
    for (int k = uniform(rng, 1, 8); k > 0; --k) xs.push_back(random_lie(rng, gl.lie(), random_parity(rng), 2));
    xs.push_back(xs.front() * Scalar(3, 7) + xs.back());
    ASSERT_EQ(span_rank(xs), rational_rank(coordinates(xs)));
  }
}

TEST(Enveloping, GeneratorOrderValidation) {
  EXPECT_THROW(GeneratorOrder({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(GeneratorOrder({0, 2}), std::invalid_argument);
  const GeneratorOrder order = GeneratorOrder::by_key(4, [](GenId g) { return -static_cast<int>(g); });
  EXPECT_EQ(order.ascending(), (std::vector<GenId>{3, 2, 1, 0}));
  EXPECT_EQ(order.letter(3), 0);
  EXPECT_EQ(order.generator(3), 0u);
}

TEST(Enveloping, OddSquares) {
  const GeneralLinear gl = make_gl(1, 1);
  const auto u = natural_uea(gl);
  const GenId x = gl.generator(0, 1);
  const std::vector<GenId> word{x, x};
  EXPECT_TRUE(u->normal_form(word).is_zero());

  // odd x with [x,x] = 2z, z central: x^2 = z
  const LieSuperalgebra clifford({Parity::odd, Parity::even}, {{"x", ""}, {"z", ""}}, [](GenId a, GenId b) {
    return a == 0 && b == 0 ? std::vector<StructureTerm>{{1, 2}} : std::vector<StructureTerm>{};
  });
  auto lie = std::make_shared<const LieSuperalgebra>(clifford);
  const EnvelopingAlgebra v(lie, GeneratorOrder::natural(2));
  const std::vector<GenId> xx{0, 0};
  EXPECT_EQ(v.normal_form(xx), v.generator(1));
  for (auto strategy : {RewriteStrategy::leftmost_descent, RewriteStrategy::rightmost_descent})
    EXPECT_EQ(v.normal_form(xx, strategy), v.generator(1));
}

TEST(Enveloping, SupercommutatorOfGeneratorsIsTheBracket) {
  const GeneralLinear gl = make_gl(2, 1);
  const auto u = natural_uea(gl);
  for (GenId a = 0; a < gl.dimension(); ++a)
    for (GenId b = 0; b < gl.dimension(); ++b)
      ASSERT_EQ(u->supercommutator(u->generator(a), u->generator(b)),
                u->embed(gl.lie().bracket(LieElement::term(a), LieElement::term(b))));
}

TEST(Enveloping, InhomogeneousSupercommutatorThrows) {
  const GeneralLinear gl = make_gl(1, 1);
  const auto u = natural_uea(gl);
  const UEAElement mixed = u->generator(gl.generator(0, 0)) + u->generator(gl.generator(0, 1));
  EXPECT_THROW(u->supercommutator(mixed, mixed), std::invalid_argument);
  EXPECT_FALSE(u->parity(mixed).has_value());
}

TEST(Enveloping, MonomialHelpers) {
  const GeneralLinear gl = make_gl(1, 1);
  const auto u = natural_uea(gl);
  const std::vector<GenId> sorted{0, 0, 3};
  const PBWMonomial m = u->monomial(sorted);
  EXPECT_EQ(u->generators(m), sorted);
  const std::vector<GenId> unsorted{3, 0};
  EXPECT_THROW(u->monomial(unsorted), std::invalid_argument);
  const std::vector<GenId> bad{9};
  EXPECT_THROW(u->normal_form(bad), std::out_of_range);
}

TEST(Enveloping, RewriteStrategiesAgree) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 3)));
    const auto u = std::make_shared<const EnvelopingAlgebra>(
        gl.lie_ptr(), GeneratorOrder::by_key(gl.dimension(), [&](GenId g) { return (g * 7919u) % 13u; }));
    const auto word = random_word(rng, gl.dimension(), 5);
    const UEAElement a = u->normal_form(word, RewriteStrategy::insertion);
    ASSERT_EQ(a, u->normal_form(word, RewriteStrategy::leftmost_descent));
    ASSERT_EQ(a, u->normal_form(word, RewriteStrategy::rightmost_descent));
  }
}

TEST(Enveloping, MultiplicationIsAssociative) {
  Rng rng(18);
  for (int trial = 0; trial < 100; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 3)));
    const auto u = natural_uea(gl);
    const UEAElement x = random_uea(rng, *u, random_parity(rng));
    const UEAElement y = random_uea(rng, *u, random_parity(rng));
    const UEAElement z = random_uea(rng, *u, random_parity(rng));
    ASSERT_EQ(u->multiply(u->multiply(x, y), z), u->multiply(x, u->multiply(y, z)));
  }
}

TEST(Tensor, KoszulSign) {
  const GeneralLinear gl = make_gl(1, 1);
  const auto u = natural_uea(gl);
  const TensorPowerAlgebra t(u, 2);
  const UEAElement x = u->generator(gl.generator(0, 1));  // odd
  const UEAElement y = u->generator(gl.generator(1, 0));  // odd
  const TensorElement one_x = t.embed(1, x), y_one = t.embed(0, y);
  // (1 (x) x)(y (x) 1) = -(y (x) x) and (y (x) 1)(1 (x) x) = y (x) x
  EXPECT_EQ(t.multiply(one_x, y_one), -t.multiply(y_one, one_x));
  const TensorMonomial mono{y.begin()->first, x.begin()->first};
  EXPECT_EQ(t.multiply(y_one, one_x), TensorElement::term(mono));
  EXPECT_THROW(t.embed(2, x), std::out_of_range);
  EXPECT_THROW(t.multiply(TensorElement::term(TensorMonomial(3)), t.one()), std::invalid_argument);
  EXPECT_THROW(TensorPowerAlgebra(u, 0), std::invalid_argument);
}

TEST(Tensor, MatchesDirectSumModel) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 2)));
    const auto u = natural_uea(gl);
    const TensorPowerAlgebra t(u, static_cast<std::size_t>(uniform(rng, 1, 3)));
    const DirectSumModel model(gl.lie(), t.factors());
    const TensorElement x = random_tensor(rng, t, random_parity(rng));
    const TensorElement y = random_tensor(rng, t, random_parity(rng));
    ASSERT_EQ(model.from_tensor(t.multiply(x, y)),
              model.algebra->multiply(model.from_tensor(x), model.from_tensor(y)));
  }
}

TEST(Tensor, Associative) {
  Rng rng(20);
  for (int trial = 0; trial < 50; ++trial) {
    GeneralLinear gl(IndexUniverse::numbered(random_parities(rng, 1, 2)));
    const TensorPowerAlgebra t(natural_uea(gl), 2);
    const TensorElement x = random_tensor(rng, t, random_parity(rng));
    const TensorElement y = random_tensor(rng, t, random_parity(rng));
    const TensorElement z = random_tensor(rng, t, random_parity(rng));
    ASSERT_EQ(t.multiply(t.multiply(x, y), z), t.multiply(x, t.multiply(y, z)));
  }
}

TEST(Serialize, RoundTrips) {
  Rng rng(21);
  const GeneralLinear gl = make_gl(1, 2);
  const auto u = natural_uea(gl);
  const TensorPowerAlgebra t(u, 2);
  for (int trial = 0; trial < 30; ++trial) {
    UEAElement x = random_uea(rng, *u, random_parity(rng)) * Scalar(1, 3);
    const json jx = to_json(x, *u);
    EXPECT_EQ(uea_from_json(jx, *u), x);
    EXPECT_EQ(uea_from_json(json::parse(jx.dump()), *u), x);
    const TensorElement y = random_tensor(rng, t, random_parity(rng));
    EXPECT_EQ(tensor_from_json(to_json(y, t), t), y);
  }
  const json bad = {{"terms", {{{"monomial", {{"9", "1", 1}}}, {"num", "1"}, {"den", "1"}}}}};
  EXPECT_THROW(uea_from_json(bad, *u), std::invalid_argument);
  const json lie = to_json(LieElement::term(gl.generator(0, 1), -2), gl.lie());
  EXPECT_EQ(lie["terms"][0]["row"], "1");
  EXPECT_EQ(lie["terms"][0]["col"], "2");
  EXPECT_EQ(lie["terms"][0]["num"], "-2");
}
