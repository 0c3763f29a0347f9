#include <tcplan/core/error.hpp>
#include <tcplan/core/path.hpp>
#include <tcplan/core/quaternion.hpp>
#include <tcplan/core/retraction.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace tcplan;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("constant and linear paths") {
  const Vector x = vec({1, 2, 3});
  const Path c = constant_path(x);
  for (double t : {0.0, 0.3, 1.0}) CHECK(c(t) == x);
  const Path l = linear_path(vec({0, 0}), vec({2, 4}));
  CHECK(l(0.25) == vec({0.5, 1.0}));
  CHECK(l.kind() == SegmentKind::Linear);
  CHECK_THROWS_AS(l(1.5), InvalidInput);
  CHECK_THROWS_AS(l(-1e-9), InvalidInput);
  CHECK_THROWS_AS(linear_path(vec({0}), vec({0, 1})), InvalidInput);
}

TEST_CASE("normalized linear and great arc paths stay on the sphere") {
  const Path n = normalized_linear_path(vec({1, 0}), vec({0, 1}));
  CHECK((n(0.5) - vec({1, 1}) / std::sqrt(2.0)).norm() <= 1e-15);
  for (int i = 0; i <= 10; ++i) CHECK(std::abs(n(i / 10.0).norm() - 1.0) <= 1e-15);
  CHECK_THROWS_AS(normalized_linear_path(vec({1, 0}), vec({-1, 0})), ContractViolation);

  const Path g = great_arc_path(vec({1, 0, 0, 0}), vec({0, 1, 0, 0}));
  CHECK((g(1.0 / 3.0) - vec({std::cos(std::numbers::pi / 6), std::sin(std::numbers::pi / 6), 0, 0})).norm() <=
        1e-15);
  CHECK_THROWS_AS(great_arc_path(vec({1, 0}), vec({1, 1})), InvalidInput);
}

TEST_CASE("concatenation joins agree and later segments own the joint") {
  const Path a = linear_path(vec({0}), vec({1}));
  const Path b = linear_path(vec({1}), vec({3}));
  const Path ab = path_concat(a, b);
  CHECK(ab.breakpoints() == std::vector<double>{0.5});
  CHECK(ab(0.25)(0) == doctest::Approx(0.5));
  CHECK(ab(0.75)(0) == doctest::Approx(2.0));
  CHECK(std::abs(ab(0.5)(0) - ab.eval_left(0.5)(0)) <= 1e-9);

  const Path x = constant_path(vec({2, 2}));
  const Path xx = path_concat(x, x);
  for (double t : {0.0, 0.4, 0.5, 1.0}) CHECK(xx(t) == vec({2, 2}));

  CHECK_THROWS_AS(path_concat(a, linear_path(vec({1.1}), vec({0}))), ContractViolation);
  CHECK_NOTHROW(path_concat(a, linear_path(vec({1.0 + 1e-10}), vec({0}))));

  // A jump within tolerance is visible from the two sides.
  const Path j = path_concat(a, linear_path(vec({1.0 + 5e-10}), vec({0})));
  CHECK(j(0.5)(0) == 1.0 + 5e-10);
  CHECK(j.eval_left(0.5)(0) == 1.0);
}

TEST_CASE("concatenation with explicit breakpoints") {
  const Path p = concat({linear_path(vec({0}), vec({1})), linear_path(vec({1}), vec({2})),
                         linear_path(vec({2}), vec({3}))},
                        {0.2, 0.9});
  CHECK(p(0.1)(0) == doctest::Approx(0.5));
  CHECK(p(0.55)(0) == doctest::Approx(1.5));
  CHECK(p(0.95)(0) == doctest::Approx(2.5));
  CHECK(p.breakpoints() == std::vector<double>{0.2, 0.9});
  CHECK_THROWS_AS(concat({constant_path(vec({0})), constant_path(vec({0}))}, {1.0}), InvalidInput);
}

TEST_CASE("reparametrization matches direct evaluation") {
  const Path s = normalized_linear_path(vec({1, 0}), vec({0, 1}));
  // Middle third of a three-leg path runs s(3t - 1).
  const Path legs = concat({constant_path(s(0.0)), s, constant_path(s(1.0))});
  for (int i = 0; i <= 20; ++i) {
    const double t = 1.0 / 3.0 + i / 60.0;
    CHECK((legs(t) - s(std::min(1.0, 3 * t - 1))).norm() <= 1e-12);
  }
  const Path half = reparametrize(s, 0.25, 0.75);
  CHECK((half(0.5) - s(0.5)).norm() <= 1e-15);
  CHECK((half(1.0) - s(0.75)).norm() <= 1e-15);
}

TEST_CASE("reverse is an involution and flips joint ownership") {
  const Path a = linear_path(vec({0}), vec({1}));
  const Path b = linear_path(vec({1 + 5e-10}), vec({4}));
  const Path ab = path_concat(a, b);
  const Path rr = path_reverse(path_reverse(ab));
  for (int i = 0; i <= 40; ++i) CHECK((rr(i / 40.0) - ab(i / 40.0)).norm() <= 1e-12);
  const Path r = path_reverse(ab);
  CHECK(r(0.0)(0) == 4.0);
  CHECK(r(1.0)(0) == 0.0);
  CHECK(r(0.5)(0) == ab.eval_left(0.5)(0));
  CHECK(r.eval_left(0.5)(0) == ab(0.5)(0));
}

TEST_CASE("products evaluate factorwise") {
  const Path a = linear_path(vec({0}), vec({1}));
  const Path b = normalized_linear_path(vec({1, 0}), vec({0, 1}));
  const Path p = path_product(a, b);
  CHECK(p.dim() == 3);
  for (double t : {0.0, 0.3, 0.7, 1.0}) {
    const Vector v = p(t);
    CHECK(v(0) == a(t)(0));
    CHECK(v.tail(2) == b(t));
  }
  const Path q = path_product(path_concat(a, path_reverse(a)), b);
  CHECK(q.breakpoints() == std::vector<double>{0.5});
}

TEST_CASE("eval_into writes into a caller buffer") {
  const Path p = path_product(linear_path(vec({0, 0}), vec({1, 1})), constant_path(vec({5})));
  Vector buf(3);
  p.eval_into(0.5, buf);
  CHECK(buf == vec({0.5, 0.5, 5}));
}

TEST_CASE("rescale path scales configurations by the thickening factor") {
  const Vector c = vec({0, 0, 6, 0});
  const Path h = rescale_path(constant_path(c), 2, 1.0, 0.0, 1.0);
  CHECK(h.kind() == SegmentKind::ScalarRescale);
  CHECK(h(0.0) == c);
  CHECK((h(0.5) - vec({0, 0, 8, 0})).norm() <= 1e-14);
  CHECK((h(1.0) - vec({0, 0, 10, 0})).norm() <= 1e-14);
  Matrix m = Eigen::Map<const Matrix>(h(0.3).data(), 2, 2);
  CHECK(chi(m) == doctest::Approx(3.0 + 2 * 0.3));
}

TEST_CASE("group translation right-multiplies quaternion paths") {
  const Eigen::Vector4d g(0, 0, 1, 0);
  const Path base = great_arc_path(vec({1, 0, 0, 0}), vec({0, 1, 0, 0}));
  const Path t = group_translate_path(base, g);
  for (double s : {0.0, 0.4, 1.0}) {
    const Eigen::Vector4d b = base(s);
    CHECK((t(s) - quat_product(b, g)).norm() <= 1e-15);
  }
}

TEST_CASE("rigid rotation turns u towards w") {
  Matrix pts(2, 2);
  pts << 0, 2, 0, 0;
  const Path p = rigid_rotation_path(pts, vec({1, 0}), vec({0, 1}), std::numbers::pi);
  CHECK((p(0.5) - vec({0, 0, 0, 2})).norm() <= 1e-14);
  CHECK((p(1.0) - vec({0, 0, -2, 0})).norm() <= 1e-14);
  for (int i = 0; i <= 10; ++i) {
    const Vector v = p(i / 10.0);
    CHECK((v.segment(2, 2) - v.head(2)).norm() == doctest::Approx(2.0));
  }
}

TEST_CASE("segment kinds have names") {
  CHECK(std::string(to_string(SegmentKind::ChartContraction)) == "chart-contraction");
}
