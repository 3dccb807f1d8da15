#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "algebroid/catalog.hpp"
#include "algebroid/presentation_io.hpp"
#include "algebroid/reproduce.hpp"

using namespace algd;

TEST_CASE("presentation files round-trip through the writer and reader") {
  for (const char* name : {"malgrange:2", "pair_groupoid", "split"}) {
    HopfPtr H = make_example(name).hopf;
    std::string text = write_presentation(H);
    HopfPtr back = read_presentation(text);
    CHECK(back->total->vars() == H->total->vars());
    CHECK(back->base->vars() == H->base->vars());
    AxiomReport rep = check_axioms(back);
    INFO(name, "\n", text, rep.summary());
    CHECK(rep.all_pass());
    for (int v = 0; v < H->total->nvars(); ++v) {
      CHECK(back->counit.images()[v].str() == H->counit.images()[v].str());
      CHECK(back->tensor().str(back->delta_var(v)) == H->tensor().str(H->delta_var(v)));
    }
  }
}

TEST_CASE("tensor expression parsing follows the (x) format") {
  HopfPtr H = catalog::malgrange(2);
  const AlgebraPtr& T = H->total;
  TensorExpr e = parse_tensor_expr("y2 (x) y1 + y1^2 (x) y2", T);
  REQUIRE(e.size() == 2);
  RingElement acc = RingElement::zero(H->tensor().model());
  for (const auto& [l, r] : e) acc += H->tensor().tensor(l, r);
  CHECK(acc == H->delta_var(T->var_index_checked("y2")));

  TensorExpr neg = parse_tensor_expr("-y2 (x) y1", T);
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].first == -RingElement::variable(T, "y2"));

  CHECK_THROWS_AS(parse_tensor_expr("y2 * y1", T), algebra_error);
  CHECK_THROWS_AS(parse_tensor_expr("y2 (x) y1 (x) y0", T), algebra_error);
}

TEST_CASE("a hand-written presentation file builds and verifies") {
  // the multiplicative-line pair groupoid over Q[u, uinv]
  std::string text = R"(
# comments are allowed
[base]
name = A
vars = u, uinv
inverse_pairs = u:uinv

[total]
name = H
vars = ul, ulinv, ur, urinv
inverse_pairs = ul:ulinv, ur:urinv

[source]
u = ul
uinv = ulinv

[target]
u = ur
uinv = urinv

[counit]
ul = u
ulinv = uinv
ur = u
urinv = uinv

[coproduct]
ul = ul (x) 1
ulinv = ulinv (x) 1
ur = 1 (x) ur
urinv = 1 (x) urinv

[antipode]
ul = ur
ulinv = urinv
ur = ul
urinv = ulinv
)";
  HopfPtr H = read_presentation(text);
  AxiomReport rep = check_axioms(H);
  INFO(rep.summary());
  CHECK(rep.all_pass());
}

TEST_CASE("catalog registry exposes every bundled example") {
  for (const char* spec : {"pair_groupoid", "split", "malgrange:2", "malgrange_quotient",
                           "gl2_plane", "group_algebra:3", "weyl_lr", "quotient_lr"}) {
    ExampleObject o = make_example(spec);
    switch (o.kind) {
      case ExampleObject::Kind::Hopf:
        CHECK(o.hopf != nullptr);
        break;
      case ExampleObject::Kind::Split:
        CHECK(o.split.split != nullptr);
        break;
      case ExampleObject::Kind::LR:
        CHECK(check_lie_rinehart(o.lr).all_pass());
        break;
      case ExampleObject::Kind::Finite:
        CHECK(check_finite_cocomm(o.finite).all_pass());
        break;
    }
  }
  CHECK_THROWS_AS(make_example("no_such_example"), algebra_error);
  CHECK_THROWS_AS(make_morphism("no_such_morphism"), algebra_error);
}

TEST_CASE("axiom report JSON is well-formed") {
  HopfPtr H = catalog::malgrange(1);
  AxiomReport rep = check_axioms(H);
  auto j = nlohmann::json::parse(axiom_report_to_json(rep, H->name));
  CHECK(j["all_pass"] == true);
  CHECK(j["checks"].size() == rep.checks.size());
}
